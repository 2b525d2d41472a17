// Copyright 2026 The kacgal Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kacgal/kac.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kacgal/error.hpp"

namespace kacgal {

std::vector<Labeling> enumerate_component(const AffineComponent& c) {
  std::vector<Labeling> out;
  Labeling cur(c.vertex_count(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == cur.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v * c.marks[i] <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v * c.marks[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, 2);
  return out;
}

std::vector<Labeling> enumerate_kac(const std::vector<AffineComponent>& comps) {
  std::vector<Labeling> out{Labeling{}};
  for (const AffineComponent& c : comps) {
    std::vector<Labeling> part = enumerate_component(c);
    std::vector<Labeling> next;
    next.reserve(out.size() * part.size());
    for (const Labeling& a : out)
      for (const Labeling& b : part) {
        Labeling l = a;
        l.insert(l.end(), b.begin(), b.end());
        next.push_back(std::move(l));
      }
    out = std::move(next);
  }
  return out;
}

Labeling act(const Permutation& pi, const Labeling& p) {
  Labeling r(p.size());
  for (std::size_t b = 0; b < p.size(); ++b) r[pi[b]] = p[b];
  return r;
}

std::vector<std::vector<Labeling>> orbits(const std::vector<Labeling>& set,
                                          const std::vector<Permutation>& gens) {
  std::map<Labeling, std::size_t> index;
  for (std::size_t i = 0; i < set.size(); ++i) index.emplace(set[i], i);
  std::vector<std::size_t> parent(set.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < set.size(); ++i)
    for (const Permutation& g : gens) {
      auto it = index.find(act(g, set[i]));
      if (it == index.end()) fail_internal("labeling set is not stable under the group");
      std::size_t a = find(i);
      std::size_t b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<Labeling>> groups;
  for (std::size_t i = 0; i < set.size(); ++i) groups[find(i)].push_back(set[i]);
  std::vector<std::vector<Labeling>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool congruent(const Labeling& p, const Labeling& q, const RestrictedData& rd) {
  RatVec d = rd.finite_part(p) - rd.finite_part(q);
  for (const RatVec& lambda : rd.x0_mod_q0_reps)
    if (!is_integer(dot(lambda, d))) return false;
  return true;
}

Cocycle cocycle(const Labeling& p, const Labeling& q, const RestrictedData& rd) {
  if (!congruent(p, q, rd)) fail_validation("labeling fails the congruence condition");
  Cocycle c;
  c.nu = rd.finite_part(p) - rd.finite_part(q);
  if (!rd.X0v.contains(c.nu)) fail_internal("cocycle cocharacter outside X0v");
  c.nu_mod2 = rd.X0v_mod2.coordinates(c.nu);
  for (const RatVec& lambda : rd.X0.basis()) {
    Rat s = dot(lambda, c.nu);
    if (!is_integer(s)) fail_internal("character pairs non-integrally with a cocharacter");
    c.signs.push_back(mpz_even_p(s.get_num_mpz_t()) ? 1 : -1);
  }
  return c;
}

H1Result h1(const RestrictedData& rd) {
  H1Result r;
  std::vector<Labeling> all = enumerate_kac(rd.full.comps);
  r.total = all.size();
  std::vector<Labeling> kept;
  for (const Labeling& p : all)
    if (congruent(p, rd.q, rd)) kept.push_back(p);
  r.filtered = kept.size();
  for (auto& orbit : orbits(kept, rd.f0_permutations)) {
    CohClass c;
    c.representative = orbit.front();
    c.neutral = std::binary_search(orbit.begin(), orbit.end(), rd.q);
    c.cocycle = cocycle(c.representative, rd.q, rd);
    c.orbit = std::move(orbit);
    r.classes.push_back(std::move(c));
  }
  std::stable_partition(r.classes.begin(), r.classes.end(),
                        [](const CohClass& c) { return c.neutral; });
  if (r.classes.empty() || !r.classes.front().neutral)
    fail_internal("base labeling missing from its own class list");
  return r;
}

H1Result h1(const GroupSpec& spec, const BuildOptions& options) {
  return h1(restricted_data(spec, options));
}

std::vector<InnerForm> inner_forms(const RestrictedData& rd) {
  std::vector<InnerForm> out;
  for (auto& orbit : orbits(enumerate_kac(rd.full.comps), rd.c0_permutations)) {
    InnerForm f;
    f.representative = orbit.front();
    f.orbit = std::move(orbit);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace kacgal
