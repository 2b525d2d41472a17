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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "kacgal/error.hpp"
#include "kacgal/groupspec.hpp"
#include "kacgal/kac.hpp"
#include "test_util.hpp"

namespace kacgal {
namespace {

using namespace kacgal::testing;

std::string validation_message(const GroupSpec& s) {
  try {
    restricted_data(s);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

std::vector<GroupSpec> sample_specs() {
  std::vector<GroupSpec> out;
  out.push_back(simple("E7", PairKind::Inner, {}, e7q(1)));
  out.push_back(simple("E7", PairKind::Inner, {coweight(0, 1)}, e7q(6)));
  out.push_back(simple("A3", PairKind::Inner, {coweight(0, 2)}, {2, 0, 0, 0}));
  out.push_back(simple("A5", PairKind::Outer, {coweight(0, 3)}, {1, 0, 0, 0}));
  out.push_back(simple("D6", PairKind::Inner, {coweight(0, 5), coweight(0, 1)}, {2, 0, 0, 0, 0, 0, 0}));
  out.push_back(simple("D5", PairKind::Outer, {coweight(0, 4)}, {1, 0, 0, 0, 0}));
  out.push_back(simple("A2", PairKind::Swap, {}, {1, 0, 0}));
  out.push_back(simple("B3", PairKind::Inner, {coweight(0, 1)}, {0, 0, 1, 0}));
  out.push_back(simple("C3", PairKind::Inner, {coweight(0, 3)}, {1, 0, 0, 1}));
  out.push_back(simple("E6", PairKind::Outer, {}, {1, 0, 0, 0, 0}));
  out.push_back(fixture("e7_sl3h_even"));
  out.push_back(fixture("e7_sl4h_odd"));
  return out;
}

TEST(GroupSpec, ValidateExamples) {
  EXPECT_NO_THROW(validate(simple("E7", PairKind::Inner, {coweight(0, 1)}, e7q(6))));
  EXPECT_NO_THROW(validate(simple("A1", PairKind::Inner, {}, {1, 1})));
  EXPECT_EQ(validation_message(simple("A1", PairKind::Inner, {}, {1, 0})),
            "mark equation violated on component 0");
}

TEST(GroupSpec, ValidationErrors) {
  EXPECT_EQ(validation_message(simple("A2", PairKind::Inner, {}, {2, 0})), "q has wrong length on component 0");
  FGenerator half;
  half.vector = RatVec{make_rat(1, 2), make_rat(0)};
  EXPECT_EQ(validation_message(simple("A2", PairKind::Inner, {half}, {2, 0, 0})),
            "F-generator not in P∨ (generator 0)");
  GroupSpec d4 = simple("D4", PairKind::Outer, {coweight(0, 3)}, {1, 0, 0, 0});
  d4.components[0].tau = Permutation{0, 1, 3, 2};
  EXPECT_EQ(validation_message(d4), "tau does not preserve F");
  GroupSpec inner_tau = simple("A3", PairKind::Inner, {}, {2, 0, 0, 0});
  inner_tau.components[0].tau = Permutation{2, 1, 0};
  EXPECT_NE(validation_message(inner_tau).find("tau is not compatible with kind"), std::string::npos);
  GroupSpec bad_comp = simple("A1", PairKind::Inner, {coweight(3, 1)}, {2, 0});
  EXPECT_FALSE(validation_message(bad_comp).empty());
}

TEST(GroupSpec, LatticeChains) {
  for (const GroupSpec& s : sample_specs()) {
    RestrictedData rd = restricted_data(s);
    const FullData& fd = rd.full;
    EXPECT_TRUE(fd.coroot.is_sublattice_of(fd.cocharacter));
    EXPECT_TRUE(fd.cocharacter.is_sublattice_of(fd.coweight));
    EXPECT_TRUE(fd.root.is_sublattice_of(fd.character));
    EXPECT_TRUE(fd.character.is_sublattice_of(fd.weight));
    EXPECT_TRUE(rd.X0v.is_sublattice_of(rd.Xt0v));
    EXPECT_TRUE(rd.Xt0v.is_sublattice_of(rd.X0v.scaled(make_rat(1, 2))));
    EXPECT_TRUE(rd.Qt0v.is_sublattice_of(rd.Xt0v));
    EXPECT_TRUE(rd.Q0.is_sublattice_of(rd.X0));
    EXPECT_EQ(rd.C0.order() % rd.F0.order(), 0);
    // X and X^v are dual to each other
    for (const RatVec& x : fd.character.basis())
      for (const RatVec& y : fd.cocharacter.basis()) EXPECT_TRUE(is_integer(dot(x, y)));
    for (const RatVec& x : rd.X0.basis())
      for (const RatVec& y : rd.X0v.basis()) EXPECT_TRUE(is_integer(dot(x, y)));
  }
}

TEST(GroupSpec, TrivialInvolution) {
  RestrictedData rd = restricted_data(simple("E7", PairKind::Inner, {coweight(0, 1)}, e7q(1)));
  EXPECT_EQ(rd.Xt0v, rd.X0v);
  EXPECT_EQ(rd.Qt0v, rd.Q0v);
  EXPECT_EQ(rd.F0.order(), 2);
  EXPECT_EQ(rd.C0.order(), 2);
  EXPECT_EQ(rd.X0, rd.Q0);
  RestrictedData sc = restricted_data(simple("E7", PairKind::Inner, {}, e7q(1)));
  EXPECT_EQ(sc.F0.order(), 1);
  EXPECT_TRUE(sc.f0_permutations.empty());
  EXPECT_EQ(sc.X0_mod_Q0.order(), 2);
}

TEST(GroupSpec, SwapPair) {
  RestrictedData rd = restricted_data(simple("A1", PairKind::Swap, {}, {1, 0}));
  EXPECT_EQ(rd.dim, 1u);
  EXPECT_EQ(rd.Qt0v, rd.Q0v.scaled(make_rat(1, 2)));
  EXPECT_EQ(rd.C0.order(), 2);
  // the restricted coweight lattice is half the coweight lattice of one factor
  EXPECT_EQ(rd.Pt0v, Lattice::standard(1).scaled(make_rat(1, 2)));
}

TEST(GroupSpec, ProductFixtureCharacterGroup) {
  for (int m : {3, 4, 5}) {
    SCOPED_TRACE(m);
    RestrictedData rd = restricted_data(fixture("e7_sl" + std::to_string(m) + "h_even"));
    ASSERT_EQ(rd.dim, 7u + m);
    EXPECT_EQ(rd.X0_mod_Q0.order(), 2);
    EXPECT_EQ(rd.F0.order(), 2);
    RatVec lambda = zero_vec(rd.dim);
    for (int i : {1, 3, 7}) lambda[i - 1] = make_rat(1, 2);
    if (m % 2 == 1) lambda[7 + m - 1] = make_rat(1, 2);
    EXPECT_TRUE(rd.X0.contains(lambda));
    EXPECT_FALSE(rd.Q0.contains(lambda));
  }
}

TEST(GroupSpec, HalfSpinActsByVerticalReflection) {
  for (int l : {4, 6, 8, 12}) {
    std::vector<int> q(l + 1, 0);
    q[0] = 2;
    RestrictedData rd = restricted_data(simple("D" + std::to_string(l), PairKind::Inner, {coweight(0, l - 1)}, q));
    ASSERT_EQ(rd.f0_permutations.size(), 1u);
    const Permutation& p = rd.f0_permutations[0];
    EXPECT_EQ(p[0], l - 1);
    EXPECT_EQ(p[1], l);
    for (int i = 2; i <= l - 2; ++i) EXPECT_EQ(p[i], l - i);
    Permutation id(p.size());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_EQ(compose(p, p), id);
  }
}

TEST(GroupSpec, ProductFixtureActsOnBothDiagrams) {
  RestrictedData rd = restricted_data(fixture("e7_sl3h_even"));
  ASSERT_EQ(rd.f0_permutations.size(), 1u);
  const Permutation& p = rd.f0_permutations[0];
  std::size_t off = rd.vertex_offset[1];
  for (std::size_t k = 0; k < 2; ++k) {
    const AffineComponent& c = rd.full.comps[k];
    Permutation local;
    for (std::size_t v = 0; v < c.vertex_count(); ++v)
      local.push_back(p[rd.vertex_offset[k] + v] - static_cast<int>(rd.vertex_offset[k]));
    auto autos = diagram_automorphisms(c);
    EXPECT_EQ(autos.size(), 2u);
    EXPECT_TRUE(std::find(autos.begin(), autos.end(), local) != autos.end());
    Permutation id(local.size());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_NE(local, id);
  }
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[off], static_cast<int>(off) + 1);
}

TEST(GroupSpec, AdjointActsSimplyTransitivelyOnMarkOneVertices) {
  for (const char* t : {"A3", "A4", "D4", "D5", "D6", "E6", "E7", "B3", "C3"}) {
    SimpleType st = SimpleType::parse(t);
    std::vector<FGenerator> all;
    for (int i = 1; i <= st.rank; ++i) all.push_back(coweight(0, i));
    std::vector<int> q(st.rank + 1, 0);
    q[0] = 2;
    RestrictedData rd = restricted_data(simple(t, PairKind::Inner, all, q));
    auto g = group_closure(rd.f0_permutations, rd.vertex_count);
    std::set<int> orbit;
    for (const Permutation& p : g) orbit.insert(p[0]);
    std::set<int> ones;
    auto marks = rd.flat_marks();
    for (std::size_t v = 0; v < marks.size(); ++v)
      if (marks[v] == 1) ones.insert(static_cast<int>(v));
    EXPECT_EQ(orbit, ones) << t;
    EXPECT_EQ(g.size(), ones.size()) << t;
  }
}

TEST(GroupSpec, F0ActionIsHomomorphism) {
  for (const GroupSpec& s : sample_specs()) {
    RestrictedData rd = restricted_data(s);
    auto elems = rd.C0.elements();
    for (const RatVec& x : elems)
      for (const RatVec& y : elems)
        EXPECT_EQ(coset_permutation(rd, x + y), compose(coset_permutation(rd, x), coset_permutation(rd, y)));
    auto fe = rd.F0.elements();
    std::set<Permutation> from_elements;
    for (const RatVec& x : fe) from_elements.insert(coset_permutation(rd, x));
    auto closure = group_closure(rd.f0_permutations, rd.vertex_count);
    EXPECT_EQ(from_elements, std::set<Permutation>(closure.begin(), closure.end()));
  }
}

TEST(GroupSpec, CongruenceIsBasisIndependent) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coin(-2, 2);
  for (const GroupSpec& s : sample_specs()) {
    RestrictedData rd = restricted_data(s);
    RatMat b = rd.Q0.basis();
    // random unimodular change of basis
    RatMat changed = b;
    for (int step = 0; step < 12 && b.size() > 1; ++step) {
      std::size_t i = rng() % b.size(), j = rng() % b.size();
      if (i == j) continue;
      changed[i] = changed[i] + Rat(coin(rng)) * changed[j];
    }
    EXPECT_EQ(Lattice::span(changed, rd.dim), rd.Q0);
    std::vector<RatVec> reps;
    for (const RatVec& l : rd.x0_mod_q0_reps) {
      RatVec r = l;
      for (const RatVec& c : changed) r = r + Rat(coin(rng)) * c;
      reps.push_back(r);
    }
    RestrictedData shifted = rd;
    shifted.x0_mod_q0_reps = reps;
    for (const Labeling& p : enumerate_kac(rd.full.comps))
      EXPECT_EQ(congruent(p, rd.q, rd), congruent(p, rd.q, shifted));
  }
}

TEST(GroupSpec, RepresentativeChoiceInvariance) {
  for (const GroupSpec& s : sample_specs()) {
    BuildOptions hi;
    hi.choice = RepChoice::Highest;
    RestrictedData a = restricted_data(s);
    RestrictedData b = restricted_data(s, hi);
    EXPECT_EQ(a.flat_marks(), b.flat_marks());
    EXPECT_EQ(a.X0v, b.X0v);
    EXPECT_EQ(a.Xt0v, b.Xt0v);
    EXPECT_EQ(a.X0, b.X0);
    EXPECT_EQ(a.f0_permutations, b.f0_permutations);
  }
}

}  // namespace
}  // namespace kacgal
