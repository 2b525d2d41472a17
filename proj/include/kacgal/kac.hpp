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

// Kac labelings, the congruence filter and the classes of H^1.

#ifndef KACGAL_KAC_HPP_
#define KACGAL_KAC_HPP_

#include <cstddef>
#include <vector>

#include "kacgal/groupspec.hpp"

namespace kacgal {

// Solutions of sum m_b p_b = 2 on one component, lexicographic order.
std::vector<Labeling> enumerate_component(const AffineComponent& c);
// Cartesian product over components, lexicographic order.
std::vector<Labeling> enumerate_kac(const std::vector<AffineComponent>& comps);

// (pi . p)_{pi(b)} = p_b
Labeling act(const Permutation& pi, const Labeling& p);

// Orbits of the group generated by gens inside set (which must be stable).
// Each orbit is sorted; orbits are ordered by their first element.
std::vector<std::vector<Labeling>> orbits(const std::vector<Labeling>& set,
                                          const std::vector<Permutation>& gens);

bool congruent(const Labeling& p, const Labeling& q, const RestrictedData& rd);

struct Cocycle {
  RatVec nu;              // restricted fundamental coweight coordinates
  IntVec nu_mod2;         // class in X0v / 2 X0v, Smith coordinates
  std::vector<int> signs; // (-1)^<lambda_j, nu> over the basis of X0
};

Cocycle cocycle(const Labeling& p, const Labeling& q, const RestrictedData& rd);

struct CohClass {
  Labeling representative;
  std::vector<Labeling> orbit;
  Cocycle cocycle;
  bool neutral = false;
};

struct H1Result {
  std::vector<CohClass> classes;
  std::size_t total = 0;
  std::size_t filtered = 0;
};

H1Result h1(const RestrictedData& rd);
H1Result h1(const GroupSpec& spec, const BuildOptions& options = {});

struct InnerForm {
  Labeling representative;
  std::vector<Labeling> orbit;
};

std::vector<InnerForm> inner_forms(const RestrictedData& rd);

}  // namespace kacgal

#endif  // KACGAL_KAC_HPP_
