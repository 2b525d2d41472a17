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

// Integer lattices inside rational vector spaces.
//
// A Lattice stores its basis as rows in Hermite normal form over a common
// denominator, so two lattices are equal iff their bases compare equal.

#ifndef KACGAL_LATTICE_HPP_
#define KACGAL_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kacgal/rational.hpp"

namespace kacgal {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Row Hermite normal form: upper echelon, positive pivots, entries above a
// pivot reduced into [0, pivot). Zero rows are dropped.
IntMat hermite_normal_form(IntMat m);

struct SmithForm {
  IntVec diagonal;  // d_1 | d_2 | ... , all positive
  IntMat v;         // column transform: U M V = diag
  IntMat v_inv;
};
// Smith form of a nonsingular square integer matrix.
SmithForm smith_normal_form(IntMat m);

class Lattice {
 public:
  Lattice() = default;
  static Lattice span(const std::vector<RatVec>& vectors, std::size_t dim);
  static Lattice standard(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const RatMat& basis() const { return basis_; }

  bool contains(const RatVec& v) const;
  // Rational coefficients of v in the basis, or nullopt outside the span.
  std::optional<RatVec> coordinates(const RatVec& v) const;
  // Canonical representative of v + L: pivot coordinates land in [0, pivot).
  RatVec reduce(const RatVec& v) const;
  Lattice scaled(const Rat& s) const;
  bool is_sublattice_of(const Lattice& other) const;

  bool operator==(const Lattice& other) const = default;

 private:
  std::size_t dim_ = 0;
  RatMat basis_;
  std::vector<std::size_t> pivots_;
};

// Image of L under v -> m * v.
Lattice image(const Lattice& l, const RatMat& m);
// {x in L : m * x = 0}.
Lattice intersect_kernel(const Lattice& l, const RatMat& m);
// {x : <x, v> in Z for all v in L} with <x, v> = x^T g v. L must be full rank.
Lattice dual_lattice(const Lattice& l, const RatMat& pairing);
Lattice dual_lattice(const Lattice& l);

struct TauProjection {
  Lattice fixed;
  Lattice projected;
};
// tau: involution on the ambient space; coords: map from the tau-fixed
// subspace to its own coordinates. Both results are in those coordinates.
TauProjection project_tau(const Lattice& l, const RatMat& tau,
                          const RatMat& coords);

class FinAbQuotient {
 public:
  FinAbQuotient() = default;
  FinAbQuotient(const Lattice& big, const Lattice& small);

  // Nontrivial invariant factors only, d_1 | d_2 | ...
  const IntVec& invariant_factors() const { return factors_; }
  // Lift of the i-th cyclic generator, reduced modulo the small lattice.
  const std::vector<RatVec>& generator_lifts() const { return lifts_; }
  Int order() const;
  // Coordinates of x in the big lattice, entry i reduced mod factor i.
  IntVec coordinates(const RatVec& x) const;
  RatVec element(const IntVec& coords) const;
  // All cosets, canonical representatives, mixed-radix order.
  std::vector<RatVec> elements() const;
  const Lattice& big() const { return big_; }
  const Lattice& small() const { return small_; }

 private:
  Lattice big_;
  Lattice small_;
  IntVec factors_;
  std::vector<RatVec> lifts_;
  IntMat v_;              // big-basis coordinates -> adapted coordinates
  std::size_t skip_ = 0;  // number of leading unit factors
};

FinAbQuotient quotient(const Lattice& big, const Lattice& small);

}  // namespace kacgal

#endif  // KACGAL_LATTICE_HPP_
