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

// The data (D, F, tau, q) of a semisimple real group and its restricted
// lattices.

#ifndef KACGAL_GROUPSPEC_HPP_
#define KACGAL_GROUPSPEC_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "kacgal/lattice.hpp"
#include "kacgal/rational.hpp"
#include "kacgal/rootdata.hpp"

namespace kacgal {

// Labels on all affine vertices, components concatenated, vertex 0 first.
using Labeling = std::vector<int>;

struct ComponentSpec {
  SimpleType type;
  PairKind kind = PairKind::Inner;
  std::optional<Permutation> tau;  // 0-based, outer kind only
};

// mult * omega_index^v on one component; index is 1-based and runs over
// 1..2l for a swap component.
struct CoweightTerm {
  std::size_t component = 0;
  int index = 1;
  Int mult = 1;
};

struct FGenerator {
  std::vector<CoweightTerm> terms;
  std::optional<RatVec> vector;  // full fundamental coweight coordinates
};

struct GroupSpec {
  std::vector<ComponentSpec> components;
  std::vector<FGenerator> F;
  std::vector<std::vector<int>> q;  // per component
};

struct BuildOptions {
  RepChoice choice = RepChoice::Lowest;
  bool corrupt_marks = false;
};

struct FullData {
  std::vector<AffineComponent> comps;
  std::vector<std::size_t> offset;  // first coordinate of each component
  std::size_t dim = 0;
  RatMat cartan;
  Permutation tau;
  std::vector<RatVec> f_vectors;
  Lattice coroot;      // Q^v, fundamental coweight coordinates
  Lattice cocharacter; // X^v
  Lattice coweight;    // P^v
  Lattice root;        // Q, simple root coordinates
  Lattice character;   // X
  Lattice weight;      // P
};

struct RestrictedData {
  GroupSpec spec;
  FullData full;
  std::vector<std::size_t> offset;         // restricted coordinates
  std::vector<std::size_t> vertex_offset;  // affine vertices in a Labeling
  std::size_t dim = 0;
  std::size_t vertex_count = 0;
  std::vector<int> reps;  // global full index per restricted coordinate
  std::vector<bool> moved;
  RatMat coweight_restriction;  // dim x full.dim
  RatMat weight_restriction;

  Lattice X0v;   // (X^v)^tau
  Lattice Xt0v;  // projection of X^v
  Lattice Qt0v;
  Lattice Pt0v;
  Lattice Q0v;   // (Q^v)^tau
  Lattice Q0;
  Lattice X0;
  Lattice P0;
  FinAbQuotient F0;  // Xt0v / Qt0v
  FinAbQuotient C0;  // Pt0v / Qt0v
  FinAbQuotient X0v_mod2;
  FinAbQuotient X0_mod_Q0;
  std::vector<RatVec> x0_mod_q0_reps;
  std::vector<Permutation> f0_permutations;  // one per F0 generator
  std::vector<Permutation> c0_permutations;  // one per C0 generator
  Labeling q;

  std::vector<int> flat_marks() const;
  // Restricted coordinates of the finite part of p.
  RatVec finite_part(const Labeling& p) const;
};

// Throws ValidationError naming the violated condition.
void validate(const GroupSpec& spec, const BuildOptions& options = {});
FullData full_data(const GroupSpec& spec, const BuildOptions& options = {});
RestrictedData restricted_data(const GroupSpec& spec, const BuildOptions& options = {});

// Vertex permutation of the coset of y in Pt0v / Qt0v.
Permutation coset_permutation(const RestrictedData& rd, const RatVec& y);
std::vector<Permutation> f0_action(const RestrictedData& rd);

// Vector of a generator in full fundamental coweight coordinates.
RatVec generator_vector(const FullData& fd, const FGenerator& g);

}  // namespace kacgal

#endif  // KACGAL_GROUPSPEC_HPP_
