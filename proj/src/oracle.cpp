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

#include "kacgal/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "kacgal/error.hpp"

namespace kacgal {

std::size_t oracle_rank_bound() {
  const char* env = std::getenv("KACGAL_ORACLE_RANK_BOUND");
  if (!env) return kDefaultOracleRankBound;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) return kDefaultOracleRankBound;
  return static_cast<std::size_t>(v);
}

std::vector<RatMat> reflection_set(const RestrictedData& rd) {
  const FullData& fd = rd.full;
  std::vector<RatMat> out;
  for (std::size_t k = 0; k < rd.dim; ++k) {
    int r = rd.reps[k];
    RatVec coroot(fd.dim);
    for (std::size_t i = 0; i < fd.dim; ++i) {
      coroot[i] = fd.cartan[i][r];
      if (fd.tau[r] != r) coroot[i] += fd.cartan[i][fd.tau[r]];
    }
    RatVec cy = rd.coweight_restriction * coroot;
    Rat scale = Rat(2) / cy[k];
    RatMat s = identity_mat(rd.dim);
    for (std::size_t i = 0; i < rd.dim; ++i) s[i][k] -= scale * cy[i];
    out.push_back(std::move(s));
  }
  return out;
}

OracleResult brute_h1(const RestrictedData& rd, std::size_t rank_bound) {
  if (rd.dim > rank_bound) fail_validation("oracle rank bound exceeded");
  OracleResult res;
  RatVec zeta = rd.finite_part(rd.q);
  res.base = Rat(1, 2) * zeta;
  std::vector<RatMat> refl = reflection_set(rd);
  for (const RatMat& s : refl)
    if (!rd.X0v.contains(s * zeta - zeta))
      fail_internal("base point is not Weyl-stable modulo X0v");

  FinAbQuotient cosets = quotient(rd.X0v.scaled(Rat(1, 2)), rd.Xt0v);
  std::set<RatVec> points;
  for (const RatVec& e : cosets.elements()) points.insert(rd.Xt0v.reduce(res.base + e));
  if (Int(points.size()) != cosets.order()) fail_internal("point set has the wrong size");
  res.point_count = points.size();

  std::map<RatVec, std::size_t> seen;
  for (const RatVec& start : points) {
    if (seen.count(start)) continue;
    std::size_t id = res.orbits.size();
    res.orbits.emplace_back();
    std::deque<RatVec> queue{start};
    seen[start] = id;
    while (!queue.empty()) {
      RatVec x = queue.front();
      queue.pop_front();
      res.orbits[id].push_back(x);
      for (const RatMat& s : refl) {
        RatVec y = rd.Xt0v.reduce(s * x);
        if (!points.count(y)) fail_internal("reflection leaves the point set");
        if (seen.emplace(y, id).second) queue.push_back(y);
      }
    }
  }
  for (auto& o : res.orbits) std::sort(o.begin(), o.end());
  return res;
}

OracleResult brute_h1(const RestrictedData& rd) {
  return brute_h1(rd, oracle_rank_bound());
}

RatVec labeling_point(const RestrictedData& rd, const Labeling& p) {
  return rd.Xt0v.reduce(Rat(1, 2) * rd.finite_part(p));
}

MatchReport match_classes(const H1Result& kac, const RestrictedData& rd,
                          const OracleResult& oracle) {
  MatchReport rep;
  auto problem = [&](const std::string& s) {
    rep.ok = false;
    rep.problems.push_back(s);
  };
  std::map<RatVec, std::size_t> where;
  for (std::size_t i = 0; i < oracle.orbits.size(); ++i)
    for (const RatVec& x : oracle.orbits[i]) where[x] = i;
  if (kac.classes.size() != oracle.orbits.size())
    problem("class count mismatch: kac " + std::to_string(kac.classes.size()) +
            ", oracle " + std::to_string(oracle.orbits.size()));
  std::map<std::size_t, std::size_t> owner;
  for (std::size_t c = 0; c < kac.classes.size(); ++c) {
    std::set<std::size_t> hit;
    for (const Labeling& p : kac.classes[c].orbit) {
      auto it = where.find(labeling_point(rd, p));
      if (it == where.end()) {
        problem("class " + std::to_string(c) + " has a point outside the oracle set");
        continue;
      }
      hit.insert(it->second);
    }
    if (hit.size() > 1) problem("class " + std::to_string(c) + " meets several oracle orbits");
    if (hit.empty()) continue;
    auto [it, fresh] = owner.emplace(*hit.begin(), c);
    if (!fresh)
      problem("classes " + std::to_string(it->second) + " and " + std::to_string(c) +
              " share oracle orbit " + std::to_string(*hit.begin()));
  }
  return rep;
}

Comparison compare_with_oracle(const RestrictedData& rd, std::size_t rank_bound) {
  Comparison c;
  c.oracle = brute_h1(rd, rank_bound);
  try {
    c.kac = h1(rd);
  } catch (const InternalError& e) {
    c.match.ok = false;
    c.match.problems.push_back(std::string("kac computation failed: ") + e.what());
    return c;
  }
  c.match = match_classes(c.kac, rd, c.oracle);
  return c;
}

}  // namespace kacgal
