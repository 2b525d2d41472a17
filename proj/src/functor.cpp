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

#include "kacgal/functor.hpp"

#include <algorithm>
#include <set>

#include "kacgal/error.hpp"

namespace kacgal {

namespace {

const CohClass& class_of(const H1Result& r, const Labeling& p) {
  for (const CohClass& c : r.classes)
    if (std::binary_search(c.orbit.begin(), c.orbit.end(), p)) return c;
  fail_internal("labeling has no class on the target side");
}

bool same_diagram(const GroupSpec& a, const GroupSpec& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    const ComponentSpec& x = a.components[k];
    const ComponentSpec& y = b.components[k];
    if (!(x.type == y.type) || x.kind != y.kind || x.tau != y.tau) return false;
  }
  return true;
}

}  // namespace

TwistMap twist(const GroupSpec& spec, const std::vector<std::vector<int>>& q_prime) {
  GroupSpec rebased = spec;
  rebased.q = q_prime;
  RestrictedData target = restricted_data(spec);
  RestrictedData source = restricted_data(rebased);
  if (!congruent(source.q, target.q, target))
    fail_validation("base labeling fails the congruence condition with q");
  H1Result hs = h1(source);
  H1Result ht = h1(target);
  TwistMap m;
  m.source_base = source.q;
  m.target_base = target.q;
  for (const CohClass& c : hs.classes) {
    const CohClass& t = class_of(ht, c.representative);
    m.rows.push_back({c.representative, t.representative, c.neutral, t.neutral});
  }
  return m;
}

PushforwardMap pushforward(const GroupSpec& source, const GroupSpec& target) {
  if (!same_diagram(source, target))
    fail_validation("push-forward needs the same diagram and tau on both sides");
  if (source.q != target.q) fail_validation("push-forward needs the same base labeling");
  RestrictedData rs = restricted_data(source);
  RestrictedData rt = restricted_data(target);
  for (const RatVec& v : rs.full.f_vectors)
    if (!rt.full.cocharacter.contains(v)) fail_validation("F is not contained in F'");
  H1Result hs = h1(rs);
  H1Result ht = h1(rt);
  PushforwardMap m;
  std::set<Labeling> hit;
  for (const CohClass& c : hs.classes) {
    const CohClass& t = class_of(ht, c.representative);
    for (const Labeling& p : c.orbit)
      if (class_of(ht, p).representative != t.representative)
        fail_internal("push-forward is not constant on a class");
    m.rows.push_back({c.representative, t.representative, c.neutral, t.neutral});
    hit.insert(t.representative);
  }
  for (const CohClass& t : ht.classes)
    if (!hit.count(t.representative)) m.missed.push_back(t.representative);
  return m;
}

}  // namespace kacgal
