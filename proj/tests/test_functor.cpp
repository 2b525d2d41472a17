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

#include <map>
#include <random>
#include <set>

#include "kacgal/error.hpp"
#include "kacgal/functor.hpp"
#include "kacgal/oracle.hpp"
#include "test_util.hpp"

namespace kacgal {
namespace {

using namespace kacgal::testing;

std::map<Labeling, Labeling> as_map(const std::vector<MapRow>& rows) {
  std::map<Labeling, Labeling> m;
  for (const MapRow& r : rows) m[r.source] = r.target;
  return m;
}

void expect_neutral_to_neutral(const std::vector<MapRow>& rows) {
  int neutral = 0;
  for (const MapRow& r : rows)
    if (r.source_neutral) {
      ++neutral;
      EXPECT_TRUE(r.target_neutral);
    }
  EXPECT_EQ(neutral, 1);
}

TEST(Twist, IdentityWhenBaseUnchanged) {
  GroupSpec s = simple("E7", PairKind::Inner, {}, e7q(1));
  TwistMap m = twist(s, s.q);
  EXPECT_EQ(m.rows.size(), 4u);
  for (const MapRow& r : m.rows) {
    EXPECT_EQ(r.source, r.target);
    EXPECT_EQ(r.source_neutral, r.target_neutral);
  }
}

TEST(Twist, E7EvenLabelings) {
  GroupSpec s = simple("E7", PairKind::Inner, {}, e7q(1));
  TwistMap m = twist(s, {e7q(5)});
  ASSERT_EQ(m.rows.size(), 4u);
  std::set<Labeling> targets;
  for (const MapRow& r : m.rows) {
    targets.insert(r.target);
    if (r.source_neutral) {
      EXPECT_EQ(r.source, e7q(5));
      EXPECT_EQ(r.target, e7q(5));
      EXPECT_FALSE(r.target_neutral);
    }
  }
  EXPECT_EQ(targets.size(), 4u);
  EXPECT_THROW(twist(s, {e7q(6)}), ValidationError);
}

TEST(Twist, RoundTripOnRandomPairs) {
  std::mt19937 rng(2026);
  std::vector<GroupSpec> bases = {
      simple("E7", PairKind::Inner, {}, e7q(1)),
      simple("E7", PairKind::Inner, {coweight(0, 1)}, e7q(1)),
      simple("D6", PairKind::Inner, {coweight(0, 5)}, one_hot(7, 0, 2)),
      simple("D5", PairKind::Inner, {}, one_hot(6, 0, 2)),
      simple("A5", PairKind::Outer, {coweight(0, 3)}, one_hot(4, 0)),
      simple("A3", PairKind::Inner, {coweight(0, 2)}, one_hot(4, 0, 2)),
      simple("B4", PairKind::Inner, {}, one_hot(5, 0, 2)),
      simple("A2", PairKind::Swap, {}, one_hot(3, 0)),
      fixture("e7_sl3h_even"),
      fixture("e7_sl5h_odd")};
  int done = 0;
  int attempts = 0;
  while (done < 200 && attempts < 5000) {
    ++attempts;
    GroupSpec s = bases[rng() % bases.size()];
    auto specs = with_every_base(s);
    GroupSpec a = specs[rng() % specs.size()];
    GroupSpec b = specs[rng() % specs.size()];
    RestrictedData ra = restricted_data(a);
    if (!congruent(restricted_data(b).q, ra.q, ra)) continue;
    TwistMap there = twist(a, b.q);  // classes for base b -> classes for base a
    TwistMap back = twist(b, a.q);   // classes for base a -> classes for base b
    auto f = as_map(there.rows);
    auto g = as_map(back.rows);
    ASSERT_EQ(f.size(), g.size());
    std::set<Labeling> image;
    for (const auto& [src, dst] : f) {
      image.insert(dst);
      ASSERT_TRUE(g.count(dst));
      EXPECT_EQ(g[dst], src);
    }
    EXPECT_EQ(image.size(), f.size());
    ++done;
  }
  EXPECT_EQ(done, 200);
}

TEST(Pushforward, IdentityWhenFUnchanged) {
  GroupSpec s = simple("D6", PairKind::Inner, {coweight(0, 5)}, one_hot(7, 0, 2));
  PushforwardMap m = pushforward(s, s);
  for (const MapRow& r : m.rows) EXPECT_EQ(r.source, r.target);
  EXPECT_TRUE(m.missed.empty());
  expect_neutral_to_neutral(m.rows);
}

TEST(Pushforward, E7SimplyConnectedToAdjoint) {
  GroupSpec sc = simple("E7", PairKind::Inner, {}, e7q(1));
  GroupSpec ad = simple("E7", PairKind::Inner, {coweight(0, 1)}, e7q(1));
  PushforwardMap m = pushforward(sc, ad);
  ASSERT_EQ(m.rows.size(), 4u);
  auto f = as_map(m.rows);
  EXPECT_EQ(f[e7q(1)], f[e7q(2)]);
  EXPECT_EQ(f[e7q(4)], f[e7q(5)]);
  EXPECT_NE(f[e7q(1)], f[e7q(4)]);
  EXPECT_EQ(m.missed.size(), 2u);
  std::set<Labeling> missed(m.missed.begin(), m.missed.end());
  EXPECT_EQ(missed, (std::set<Labeling>{e7q(3), e7q(6)}));
  expect_neutral_to_neutral(m.rows);
}

TEST(Pushforward, SpinToSOFibersMatchOracle) {
  GroupSpec spin = simple("D4", PairKind::Inner, {}, one_hot(5, 0, 2));
  GroupSpec so = simple("D4", PairKind::Inner, {coweight(0, 1)}, one_hot(5, 0, 2));
  PushforwardMap m = pushforward(spin, so);
  RestrictedData rs = restricted_data(spin), rt = restricted_data(so);
  std::size_t src = brute_h1(rs, 8).orbits.size();
  std::size_t dst = brute_h1(rt, 8).orbits.size();
  EXPECT_EQ(m.rows.size(), src);
  std::set<Labeling> image;
  for (const MapRow& r : m.rows) image.insert(r.target);
  EXPECT_EQ(image.size() + m.missed.size(), dst);
  expect_neutral_to_neutral(m.rows);
}

TEST(Pushforward, Errors) {
  GroupSpec sc = simple("E7", PairKind::Inner, {}, e7q(1));
  GroupSpec ad = simple("E7", PairKind::Inner, {coweight(0, 1)}, e7q(1));
  EXPECT_THROW(pushforward(ad, sc), ValidationError);
  GroupSpec other_q = simple("E7", PairKind::Inner, {coweight(0, 1)}, e7q(2));
  EXPECT_THROW(pushforward(sc, other_q), ValidationError);
  GroupSpec other_type = simple("E6", PairKind::Inner, {}, one_hot(7, 0, 2));
  EXPECT_THROW(pushforward(sc, other_type), ValidationError);
}

void check_chain(const std::string& type, const std::vector<FGenerator>& mid,
                 const std::vector<FGenerator>& top) {
  int rank = SimpleType::parse(type).rank;
  for (const GroupSpec& s0 : with_every_base(simple(type, PairKind::Inner, {}, one_hot(rank + 1, 0, 2)))) {
    GroupSpec s1 = s0, s2 = s0;
    s1.F = mid;
    s2.F = top;
    PushforwardMap a = pushforward(s0, s1);
    PushforwardMap b = pushforward(s1, s2);
    PushforwardMap c = pushforward(s0, s2);
    auto fa = as_map(a.rows), fb = as_map(b.rows), fc = as_map(c.rows);
    for (const auto& [x, y] : fa) {
      ASSERT_TRUE(fb.count(y));
      EXPECT_EQ(fb[y], fc[x]) << type;
    }
    for (const auto* m : {&a, &b, &c}) expect_neutral_to_neutral(m->rows);
  }
}

TEST(Pushforward, CompositionOnChains) {
  std::vector<FGenerator> a3_all = {coweight(0, 1)};
  check_chain("A3", {coweight(0, 2)}, a3_all);
  std::vector<FGenerator> d4_all = {coweight(0, 1), coweight(0, 3)};
  check_chain("D4", {coweight(0, 1)}, d4_all);
  check_chain("D4", {coweight(0, 3)}, d4_all);
}

}  // namespace
}  // namespace kacgal
