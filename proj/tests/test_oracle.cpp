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

#include <cstdlib>
#include <set>

#include "kacgal/error.hpp"
#include "kacgal/oracle.hpp"
#include "test_util.hpp"

namespace kacgal {
namespace {

using namespace kacgal::testing;

std::size_t group_order(const std::vector<RatMat>& gens, std::size_t n) {
  std::set<RatMat> seen = {identity_mat(n)};
  std::vector<RatMat> todo = {identity_mat(n)};
  while (!todo.empty()) {
    RatMat x = todo.back();
    todo.pop_back();
    for (const RatMat& g : gens) {
      RatMat y = g * x;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

TEST(Oracle, SmallExamples) {
  EXPECT_EQ(brute_h1(restricted_data(simple("A1", PairKind::Inner, {}, {2, 0})), 8).orbits.size(), 2u);
  EXPECT_EQ(brute_h1(restricted_data(simple("A1", PairKind::Inner, {coweight(0, 1)}, {2, 0})), 8).orbits.size(), 2u);
  EXPECT_EQ(brute_h1(restricted_data(simple("A1", PairKind::Inner, {}, {1, 1})), 8).orbits.size(), 1u);
  OracleResult e7 = brute_h1(restricted_data(simple("E7", PairKind::Inner, {}, e7q(1))), 8);
  EXPECT_EQ(e7.orbits.size(), 4u);
  EXPECT_EQ(e7.point_count, 128u);
}

TEST(Oracle, PointSetSizeIsLatticeIndex) {
  for (const char* name : {"su2", "pgl2r", "spin_7", "so_8", "halfspin_d8_odd", "e7_adjoint", "e7_sl3h_even"}) {
    RestrictedData rd = restricted_data(fixture(name));
    OracleResult o = brute_h1(rd, 12);
    EXPECT_EQ(Int(o.point_count), quotient(rd.X0v.scaled(make_rat(1, 2)), rd.Xt0v).order()) << name;
    std::size_t total = 0;
    for (const auto& orb : o.orbits) total += orb.size();
    EXPECT_EQ(total, o.point_count);
  }
}

TEST(Oracle, ReflectionsGenerateTheRestrictedWeylGroup) {
  struct Case {
    const char* type;
    PairKind kind;
    std::size_t order;
  };
  std::vector<Case> cases = {
      {"A1", PairKind::Inner, 2},    {"A2", PairKind::Inner, 6},     {"A3", PairKind::Inner, 24},
      {"A4", PairKind::Inner, 120},  {"B2", PairKind::Inner, 8},     {"B3", PairKind::Inner, 48},
      {"B4", PairKind::Inner, 384},  {"C3", PairKind::Inner, 48},    {"C4", PairKind::Inner, 384},
      {"D4", PairKind::Inner, 192},  {"F4", PairKind::Inner, 1152},  {"G2", PairKind::Inner, 12},
      {"A2", PairKind::Outer, 2},    {"A3", PairKind::Outer, 8},     {"A4", PairKind::Outer, 8},
      {"A5", PairKind::Outer, 48},   {"D5", PairKind::Outer, 384},   {"E6", PairKind::Outer, 1152},
      {"A3", PairKind::Swap, 24},    {"B2", PairKind::Swap, 8},      {"G2", PairKind::Swap, 12}};
  for (const Case& c : cases) {
    GroupSpec s;
    s.components = {comp(c.type, c.kind)};
    s.q = {first_labels(build_affine(c.kind, s.components[0].type))};
    RestrictedData rd = restricted_data(s);
    auto refl = reflection_set(rd);
    for (const RatMat& r : refl) {
      EXPECT_EQ(r * r, identity_mat(rd.dim));
      for (const RatVec& b : rd.X0v.basis()) EXPECT_TRUE(rd.X0v.contains(r * b));
      for (const RatVec& b : rd.Xt0v.basis()) EXPECT_TRUE(rd.Xt0v.contains(r * b));
      for (const RatVec& b : rd.Qt0v.basis()) EXPECT_TRUE(rd.Qt0v.contains(r * b));
    }
    EXPECT_EQ(group_order(refl, rd.dim), c.order) << c.type << " " << to_string(c.kind);
  }
  GroupSpec d4;
  d4.components = {comp("D4", PairKind::Outer)};
  d4.components[0].tau = Permutation{0, 1, 3, 2};
  d4.q = {{1, 0, 0, 0}};
  RestrictedData rd = restricted_data(d4);
  EXPECT_EQ(group_order(reflection_set(rd), rd.dim), 48u);
}

TEST(Oracle, MatchesKacOnSmallSpecs) {
  for (const ComponentSpec& cs : admissible_components(1, 3)) {
    GroupSpec base;
    base.components = {cs};
    for (const auto& f : all_subgroups(base)) {
      base.F = f;
      for (const GroupSpec& s : with_every_base(base)) {
        RestrictedData rd = restricted_data(s);
        MatchReport m = match_classes(h1(rd), rd, brute_h1(rd, 8));
        EXPECT_TRUE(m.ok) << cs.type.name() << (m.problems.empty() ? "" : ": " + m.problems.front());
      }
    }
  }
}

TEST(Oracle, CorruptedMarksAreCaught) {
  BuildOptions bad;
  bad.corrupt_marks = true;
  for (const char* name : {"e7_q1", "so_8", "spin_7", "su2", "e7_adjoint"}) {
    GroupSpec s = fixture(name);
    RestrictedData rd = restricted_data(s, bad);
    MatchReport m = compare_with_oracle(rd, 8).match;
    EXPECT_FALSE(m.ok) << name;
    EXPECT_FALSE(m.problems.empty()) << name;
  }
}

TEST(Oracle, DistinguishesIsogenousGroups) {
  RestrictedData sc = restricted_data(simple("A1", PairKind::Inner, {}, {2, 0}));
  RestrictedData ad = restricted_data(simple("A1", PairKind::Inner, {coweight(0, 1)}, {2, 0}));
  H1Result hs = h1(sc), ha = h1(ad);
  OracleResult os = brute_h1(sc, 8), oa = brute_h1(ad, 8);
  EXPECT_EQ(hs.classes.size(), 2u);
  EXPECT_EQ(ha.classes.size(), 2u);
  EXPECT_TRUE(match_classes(hs, sc, os).ok);
  EXPECT_TRUE(match_classes(ha, ad, oa).ok);
  EXPECT_FALSE(match_classes(hs, sc, oa).ok);
  EXPECT_NE(os.orbits, oa.orbits);
}

TEST(Oracle, RankBound) {
  RestrictedData a9 = restricted_data(simple("A9", PairKind::Inner, {}, one_hot(10, 0, 2)));
  try {
    brute_h1(a9, 8);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "oracle rank bound exceeded");
  }
  EXPECT_EQ(brute_h1(a9, 9).orbits.size(), h1(a9).classes.size());
  unsetenv("KACGAL_ORACLE_RANK_BOUND");
  EXPECT_EQ(oracle_rank_bound(), kDefaultOracleRankBound);
  setenv("KACGAL_ORACLE_RANK_BOUND", "11", 1);
  EXPECT_EQ(oracle_rank_bound(), 11u);
  unsetenv("KACGAL_ORACLE_RANK_BOUND");
}

}  // namespace
}  // namespace kacgal
