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

// Brute-force H^1: orbits of the restricted Weyl group on half-lattice
// points modulo the projected cocharacter lattice. Uses no marks, alcoves
// or diagram automorphisms.

#ifndef KACGAL_ORACLE_HPP_
#define KACGAL_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "kacgal/groupspec.hpp"
#include "kacgal/kac.hpp"

namespace kacgal {

inline constexpr std::size_t kDefaultOracleRankBound = 8;

// KACGAL_ORACLE_RANK_BOUND if set to a positive integer, else the default.
std::size_t oracle_rank_bound();

// Simple reflections of the restricted root system on restricted coweight
// coordinates, rebuilt from the full Cartan matrix, tau and the reps.
std::vector<RatMat> reflection_set(const RestrictedData& rd);

struct OracleResult {
  RatVec base;                              // zeta / 2
  std::size_t point_count = 0;
  std::vector<std::vector<RatVec>> orbits;  // canonical points, sorted
};

OracleResult brute_h1(const RestrictedData& rd, std::size_t rank_bound);
OracleResult brute_h1(const RestrictedData& rd);

// Canonical point mod Xt0v of p's half-barycentre.
RatVec labeling_point(const RestrictedData& rd, const Labeling& p);

struct MatchReport {
  bool ok = true;
  std::vector<std::string> problems;
};

MatchReport match_classes(const H1Result& kac, const RestrictedData& rd,
                          const OracleResult& oracle);

struct Comparison {
  H1Result kac;
  OracleResult oracle;
  MatchReport match;
};

// runs both sides; an internal failure on the Kac side counts as a mismatch
Comparison compare_with_oracle(const RestrictedData& rd, std::size_t rank_bound);

}  // namespace kacgal

#endif  // KACGAL_ORACLE_HPP_
