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

// Simple root systems and affine (possibly twisted) Dynkin diagrams.
//
// Numbering: Bourbaki for A-D, F4 and G2. For E_n the chain is 1..n-1 and
// vertex n hangs off vertex n-3. Vertex 0 is always the affine vertex.
//
// Coordinates: coweights in the fundamental coweight basis, weights in the
// simple root basis, so the pairing is a dot product. Restricted data uses
// the same convention over the representatives of the tau-orbits.

#ifndef KACGAL_ROOTDATA_HPP_
#define KACGAL_ROOTDATA_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kacgal/rational.hpp"

namespace kacgal {

enum class Series { A, B, C, D, E, F, G };

struct SimpleType {
  Series series = Series::A;
  int rank = 1;

  static SimpleType make(Series series, int rank);
  // "E7", "a3", "D4".
  static SimpleType parse(const std::string& text);
  std::string name() const;
  bool operator==(const SimpleType&) const = default;
};

enum class PairKind { Inner, Outer, Swap };

std::string to_string(PairKind kind);
PairKind parse_kind(const std::string& text);

// Which member of a tau-orbit stands for the orbit.
enum class RepChoice { Lowest, Highest };

using Permutation = std::vector<int>;

IntMatrix cartan_matrix(const SimpleType& t);
// Columns are the fundamental coweights in the simple coroot basis.
RatMat fundamental_coweights(const SimpleType& t);
// The nontrivial diagram involution (0-based image list), if unique.
std::optional<Permutation> default_involution(const SimpleType& t);
bool admits_outer(const SimpleType& t);

// Positive roots of the root system with Cartan matrix a (a_ij = <a_i, a_j^v>),
// in simple root coordinates, sorted by height.
std::vector<RatVec> positive_roots(const RatMat& a);
// Squared lengths of simple roots, longest normalized to 2 per component.
RatVec root_norms(const RatMat& a);
RatVec highest_root(const RatMat& a);
RatVec highest_short_root(const RatMat& a);

struct Edge {
  int v = 0;
  int w = 0;
  int bond = 1;
  int arrow_to = -1;  // shorter end, -1 if the ends have equal length
};

struct AffineComponent {
  PairKind kind = PairKind::Inner;
  SimpleType base;
  std::size_t full_rank = 0;        // rank of the unrestricted diagram
  Permutation tau;                  // involution of the unrestricted diagram
  std::vector<int> reps;            // restricted vertex i <-> reps[i]
  std::vector<bool> moved;          // per restricted vertex
  RatMat full_cartan;               // full_rank x full_rank
  RatMat restricted_cartan;         // <abar_i, c_j>
  RatMat effective_cartan;          // 2 <abar_i, c_j> / <abar_j, c_j>
  RatMat restricted_simple_roots;   // rows: orbit indicator vectors
  RatVec affine_root_coeffs;        // abar_0 in the abar_i basis
  std::vector<int> marks;           // vertex 0 first
  RatMat affine_cartan;             // 2 (b_i, b_j) / (b_j, b_j), vertices 0..l
  std::vector<Edge> edges;

  std::size_t rank() const { return reps.size(); }
  std::size_t vertex_count() const { return reps.size() + 1; }
  int m0() const { return marks.front(); }
  std::string label() const;
};

// tau is only consulted for Outer; it defaults to default_involution.
AffineComponent build_affine(PairKind kind, const SimpleType& base,
                             const std::optional<Permutation>& tau = std::nullopt,
                             RepChoice choice = RepChoice::Lowest);

// Built-in affine root of the twisted diagrams, standard involution only.
RatVec twisted_affine_root_table(const SimpleType& base);

std::vector<Permutation> diagram_automorphisms(const AffineComponent& c);

// Alcove geometry; points y are in restricted fundamental coweight
// coordinates of one component.
RatVec barycentric(const AffineComponent& c, const RatVec& y);
RatVec alcove_vertex(const AffineComponent& c, int vertex);
RatVec reflect(const AffineComponent& c, int vertex, const RatVec& y);
RatVec reduce_to_alcove(const AffineComponent& c, const RatVec& y);
// Vertices whose alcove vertex lies in the projected coweight lattice,
// vertex 0 first.
std::vector<int> special_vertices(const AffineComponent& c);
// Reduced word (finite vertex indices) of the longest element of the
// parabolic subgroup on the finite vertices in j.
std::vector<int> longest_word(const AffineComponent& c, const std::vector<int>& j);
// Letters applied in order, word[0] first.
RatVec apply_word(const AffineComponent& c, const std::vector<int>& word, const RatVec& y);
RatVec apply_longest(const AffineComponent& c, const std::vector<int>& j,
                     const RatVec& y);

// Permutation induced by x -> w_nu w_0 x + nu; nu must be a special alcove
// vertex (the zero vertex gives the identity).
Permutation coset_action(const AffineComponent& c, const RatVec& nu);

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse_perm(const Permutation& p);
// All elements of the group generated by gens, identity first.
std::vector<Permutation> group_closure(const std::vector<Permutation>& gens,
                                       std::size_t n);

}  // namespace kacgal

#endif  // KACGAL_ROOTDATA_HPP_
