// Copyright 2026 The Shortlist Authors.
//
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

#include <catch2/catch_amalgamated.hpp>

#include "shortlist/matchoid.hpp"
#include "shortlist/matroid.hpp"
#include "shortlist/validate.hpp"
#include "test_support.hpp"

using namespace shortlist;

namespace {

MatchoidOracle single_matroid_matchoid(const MatroidOracle& m) {
  std::vector<ItemId> ground(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) ground[i] = static_cast<ItemId>(i);
  std::vector<MatchoidOracle::Member> members;
  members.push_back(MatchoidOracle::Member{m, ground});
  return MatchoidOracle(m.n(), std::move(members), 1, m.rank());
}

// Two partition matroids sharing item 0: M1 over {0,1} and M2 over {0,2},
// both one part with cap 1.
MatchoidOracle overlapping_pair() {
  std::vector<MatchoidOracle::Member> members;
  members.push_back(MatchoidOracle::Member{
      MatroidOracle::partition({0, 0}, {1}), {0, 1}});
  members.push_back(MatchoidOracle::Member{
      MatroidOracle::partition({0, 0}, {1}), {0, 2}});
  return MatchoidOracle(3, std::move(members), 2, 2);
}

}  // namespace

TEST_CASE("uniform and partition membership") {
  const MatroidOracle uni = MatroidOracle::uniform(5, 2);
  CHECK(uni.independent({0, 3}));
  CHECK_FALSE(uni.independent({0, 1, 2}));
  CHECK(uni.rank() == 2);

  // Parts {a, b | c} with caps 1/1: a=0, b=1 share part 0; c=2 in part 1.
  const MatroidOracle part = MatroidOracle::partition({0, 0, 1}, {1, 1});
  CHECK(part.independent({0, 2}));
  CHECK_FALSE(part.independent({0, 1}));
  CHECK(part.rank() == 2);
  CHECK_THROWS_AS(part.independent({7}), std::domain_error);
}

TEST_CASE("matroid axioms hold for the shipped kinds") {
  const auto uni = MatroidOracle::uniform(6, 3);
  const auto part = MatroidOracle::partition({0, 0, 1, 1, 2, 2}, {1, 2, 1});
  for (const MatroidOracle* m : {&uni, &part}) {
    const auto report = check_matroid_axioms_fn(
        [&](const ItemSet& s) { return m->independent_probe(s); }, m->n());
    CHECK(report.ok());
  }
}

TEST_CASE("matchoid independence is the conjunction of its matroids") {
  const MatchoidOracle spec = overlapping_pair();
  CHECK(spec.independent({0}));        // fine in both
  CHECK(spec.independent({1, 2}));
  CHECK_FALSE(spec.independent({0, 1}));  // violates M1
  CHECK_FALSE(spec.independent({0, 2}));  // violates M2
  CHECK(spec.p() == 2);
}

TEST_CASE("swap against a uniform matroid") {
  const ValueOracle f = ValueOracle::modular({1.0, 2.0, 3.0});
  const MatroidOracle m = MatroidOracle::uniform(3, 2);
  SECTION("full set evicts the cheapest member") {
    const ItemSet s{0, 1};
    const MatroidSwap sw = swap_matroid(f, m, 2, s, f.probe(s));
    REQUIRE_FALSE(sw.blocked);
    REQUIRE(sw.removal.has_value());
    CHECK(*sw.removal == 0);  // keep {1,2} worth 5
    CHECK(sw.gain == 2.0);    // (2+3) - (1+2)
  }
  SECTION("room left means no removal and plain marginal gain") {
    const ItemSet s{0};
    const MatroidSwap sw = swap_matroid(f, m, 2, s, f.probe(s));
    CHECK_FALSE(sw.blocked);
    CHECK_FALSE(sw.removal.has_value());
    CHECK(sw.gain == 3.0);
  }
}

TEST_CASE("swap against a partition matroid picks the only feasible fix") {
  const ValueOracle f = ValueOracle::modular({1.0, 2.0, 3.0});
  // a=0 and b=1 share part 0 (cap 1); c=2 alone in part 1.
  const MatroidOracle m = MatroidOracle::partition({0, 0, 1}, {1, 1});
  const ItemSet s{0, 2};
  const MatroidSwap sw = swap_matroid(f, m, 1, s, f.probe(s));
  REQUIRE_FALSE(sw.blocked);
  CHECK(*sw.removal == 0);  // only removing a restores feasibility
  CHECK(sw.gain == 1.0);
}

TEST_CASE("a losing swap is reported with its negative gain") {
  const ValueOracle f = ValueOracle::modular({5.0, 3.0});
  const MatroidOracle m = MatroidOracle::uniform(2, 1);
  const ItemSet s{0};
  const MatroidSwap sw = swap_matroid(f, m, 1, s, f.probe(s));
  REQUIRE_FALSE(sw.blocked);
  CHECK(sw.gain == -2.0);
}

TEST_CASE("blocked insertion surfaces as the -inf sentinel") {
  const ValueOracle f = ValueOracle::modular({1.0});
  const MatroidOracle m = MatroidOracle::uniform(1, 0);
  const ItemSet s;
  CHECK(g_matroid(f, m, 0, s, 0.0) == kBlockedGain);
}

TEST_CASE("swap preconditions") {
  const ValueOracle f = ValueOracle::modular({1.0, 2.0, 3.0});
  const MatroidOracle m = MatroidOracle::uniform(3, 1);
  CHECK_THROWS_AS(swap_matroid(f, m, 0, ItemSet{0}, 1.0), std::logic_error);
  CHECK_THROWS_AS(swap_matroid(f, m, 2, ItemSet{0, 1}, 3.0),
                  std::logic_error);  // S itself dependent
}

TEST_CASE("matroid swap gain dominates every feasible single swap") {
  Rng rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 6;
    const ValueOracle f = testing::random_coverage(n, 9, 2, rng);
    const MatroidOracle m =
        trial % 2 == 0
            ? MatroidOracle::uniform(n, 2 + trial % 3)
            : MatroidOracle::partition({0, 0, 1, 1, 2, 2}, {1, 1, 2});
    // Grow a random independent set, then compare against brute force.
    ItemSet s;
    for (ItemId x = 0; x < n; ++x)
      if (rng.below(2) && m.independent_probe(s.with(x))) s.insert(x);
    for (ItemId e = 0; e < n; ++e) {
      if (s.contains(e)) continue;
      const double f_s = f.probe(s);
      const MatroidSwap sw = swap_matroid(f, m, e, s, f_s);
      const auto brute = testing::brute_best_swap(
          f, [&](const ItemSet& c) { return m.independent_probe(c); }, e, s,
          1);
      if (sw.blocked) {
        CHECK_FALSE(brute.feasible);
        continue;
      }
      CHECK(sw.gain == brute.best_value - f_s);
      ItemSet applied = s.with(e);
      if (sw.removal) applied.erase(*sw.removal);
      CHECK(m.independent_probe(applied));
    }
  }
}

TEST_CASE("omega lists exactly the single removals that restore a matroid") {
  const MatchoidOracle spec = overlapping_pair();
  SECTION("forced removal") {
    const auto w = spec.omega(0, 1, ItemSet{0});  // insert b while a held
    CHECK_FALSE(w.no_removal_needed);
    CHECK(w.candidates == std::vector<ItemId>{0});
  }
  SECTION("already independent") {
    const auto w = spec.omega(0, 1, ItemSet{2});  // M1 sees only {} + b
    CHECK(w.no_removal_needed);
  }
  SECTION("rank-one uniform member lists its only holder") {
    std::vector<MatchoidOracle::Member> members;
    members.push_back(MatchoidOracle::Member{
        MatroidOracle::uniform(2, 1), {0, 1}});
    const MatchoidOracle one(2, std::move(members), 1, 1);
    const auto w = one.omega(0, 1, ItemSet{0});
    CHECK_FALSE(w.no_removal_needed);
    CHECK(w.candidates == std::vector<ItemId>{0});
  }
}

TEST_CASE("membership lists") {
  const MatchoidOracle spec = overlapping_pair();
  CHECK(spec.membership_list(0) == std::vector<std::uint16_t>{0, 1});
  CHECK(spec.membership_list(1) == std::vector<std::uint16_t>{0});
  CHECK(spec.membership_list(2) == std::vector<std::uint16_t>{1});
}

TEST_CASE("matchoid spec validation") {
  SECTION("item in no matroid is rejected") {
    std::vector<MatchoidOracle::Member> members;
    members.push_back(MatchoidOracle::Member{
        MatroidOracle::uniform(1, 1), {0}});
    CHECK_THROWS_AS(MatchoidOracle(2, std::move(members), 1, 1),
                    std::invalid_argument);
  }
  SECTION("declared p too small is rejected") {
    std::vector<MatchoidOracle::Member> members;
    members.push_back(MatchoidOracle::Member{
        MatroidOracle::uniform(1, 1), {0}});
    members.push_back(MatchoidOracle::Member{
        MatroidOracle::uniform(1, 1), {0}});
    CHECK_THROWS_AS(MatchoidOracle(1, std::move(members), 1, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("matchoid swap removes one item per violated matroid") {
  const MatchoidOracle spec = overlapping_pair();
  const ValueOracle f = ValueOracle::modular({10.0, 1.0, 2.0});
  const ItemSet s{1, 2};
  const MatchoidSwap sw = swap_matchoid(f, spec, 0, s, f.probe(s));
  REQUIRE_FALSE(sw.blocked);
  CHECK(sw.removals == std::vector<ItemId>{1, 2});  // both forced
  CHECK(sw.gain == 10.0 - 3.0);
  CHECK(spec.independent_probe(ItemSet{0}));
}

TEST_CASE("independent insertion keeps everything and gains the marginal") {
  const MatchoidOracle spec = overlapping_pair();
  const ValueOracle f = ValueOracle::modular({10.0, 1.0, 2.0});
  const MatchoidSwap sw = swap_matchoid(f, spec, 1, ItemSet{2}, 2.0);
  REQUIRE_FALSE(sw.blocked);
  CHECK(sw.removals.empty());
  CHECK(sw.gain == 1.0);
}

TEST_CASE("matchoid with a blocked member yields the sentinel") {
  std::vector<MatchoidOracle::Member> members;
  members.push_back(MatchoidOracle::Member{
      MatroidOracle::uniform(1, 0), {0}});
  const MatchoidOracle spec(1, std::move(members), 1, 0);
  const ValueOracle f = ValueOracle::modular({1.0});
  const MatchoidSwap sw = swap_matchoid(f, spec, 0, ItemSet{}, 0.0);
  CHECK(sw.blocked);
  CHECK(sw.gain == kBlockedGain);
}

TEST_CASE("single-matroid matchoid swap equals the matroid swap bitwise") {
  Rng rng(55);
  const std::size_t n = 6;
  const MatroidOracle m = MatroidOracle::partition({0, 0, 1, 1, 2, 2},
                                                   {1, 1, 1});
  const MatchoidOracle wrapped = single_matroid_matchoid(m);
  for (int trial = 0; trial < 40; ++trial) {
    const ValueOracle f = testing::random_coverage(n, 8, 2, rng);
    ItemSet s;
    for (ItemId x = 0; x < n; ++x)
      if (rng.below(2) && m.independent_probe(s.with(x))) s.insert(x);
    for (ItemId e = 0; e < n; ++e) {
      if (s.contains(e)) continue;
      const double f_s = f.probe(s);
      const MatroidSwap a = swap_matroid(f, m, e, s, f_s);
      const MatchoidSwap b = swap_matchoid(f, wrapped, e, s, f_s);
      REQUIRE(a.blocked == b.blocked);
      if (a.blocked) continue;
      CHECK(a.gain == b.gain);
      std::vector<ItemId> a_removals;
      if (a.removal) a_removals.push_back(*a.removal);
      CHECK(a_removals == b.removals);
    }
  }
}

TEST_CASE("matchoid swap matches brute force over removal subsets") {
  Rng rng(77);
  const MatchoidOracle spec = overlapping_pair();
  for (int trial = 0; trial < 25; ++trial) {
    const ValueOracle f = testing::random_coverage(3, 6, 2, rng);
    for (ItemId e = 0; e < 3; ++e) {
      ItemSet s;
      for (ItemId x = 0; x < 3; ++x)
        if (x != e && rng.below(2) && spec.independent_probe(s.with(x)))
          s.insert(x);
      const double f_s = f.probe(s);
      const MatchoidSwap sw = swap_matchoid(f, spec, e, s, f_s);
      const auto brute = testing::brute_best_swap(
          f, [&](const ItemSet& c) { return spec.independent_probe(c); }, e,
          s, spec.p());
      REQUIRE_FALSE(sw.blocked);  // this spec always has a fix
      REQUIRE(brute.feasible);
      CHECK(sw.gain == brute.best_value - f_s);
      CHECK(sw.removals.size() <= spec.p());
      ItemSet applied = s.with(e);
      for (ItemId r : sw.removals) applied.erase(r);
      CHECK(spec.independent_probe(applied));
    }
  }
}
