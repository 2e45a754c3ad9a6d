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
//
// Offline references: plain greedy (1-1/e for cardinality, 1/(p+1) for
// p-systems) and exhaustive exact optimization for small ground sets.

#ifndef SHORTLIST_BASELINES_HPP_
#define SHORTLIST_BASELINES_HPP_

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shortlist/item_set.hpp"
#include "shortlist/matchoid.hpp"
#include "shortlist/matroid.hpp"
#include "shortlist/value_oracle.hpp"

namespace shortlist {

// k rounds of best-marginal selection, ties to the lowest id.
inline ItemSet greedy_cardinality(const ValueOracle& f,
                                  const GroundSet& ground, std::size_t k) {
  ItemSet chosen;
  double f_chosen = 0.0;
  for (std::size_t round = 0; round < k && chosen.size() < ground.n;
       ++round) {
    std::optional<ItemId> best;
    double best_gain = 0.0;
    for (ItemId x = 0; x < ground.n; ++x) {
      if (chosen.contains(x)) continue;
      const double gain = f.marginal(x, chosen, f_chosen);
      if (!best || gain > best_gain) {
        best = x;
        best_gain = gain;
      }
    }
    chosen.insert(*best);
    f_chosen += best_gain;
  }
  return chosen;
}

// Greedy over an independence system: keep adding the feasible item of best
// marginal until nothing can be added.
template <typename IndependentFn>
ItemSet greedy_independent_fn(const ValueOracle& f, const GroundSet& ground,
                              const IndependentFn& feasible) {
  ItemSet chosen;
  double f_chosen = 0.0;
  for (;;) {
    std::optional<ItemId> best;
    double best_gain = 0.0;
    for (ItemId x = 0; x < ground.n; ++x) {
      if (chosen.contains(x) || !feasible(chosen.with(x))) continue;
      const double gain = f.marginal(x, chosen, f_chosen);
      if (!best || gain > best_gain) {
        best = x;
        best_gain = gain;
      }
    }
    if (!best) return chosen;
    chosen.insert(*best);
    f_chosen += best_gain;
  }
}

inline ItemSet greedy_independent(const ValueOracle& f,
                                  const MatroidOracle& m,
                                  const GroundSet& ground) {
  return greedy_independent_fn(
      f, ground, [&](const ItemSet& s) { return m.independent_probe(s); });
}

inline ItemSet greedy_independent(const ValueOracle& f,
                                  const MatchoidOracle& spec,
                                  const GroundSet& ground) {
  return greedy_independent_fn(
      f, ground, [&](const ItemSet& s) { return spec.independent_probe(s); });
}

namespace detail {

constexpr std::size_t kExactLimit = 20;

// DFS over independent sets in ascending id order; downward closure makes
// the tree cover each independent set once. Monotone f lets us rely on some
// feasible set attaining the max, which the exhaustive scan finds directly.
template <typename FeasibleFn>
void exact_dfs(const ValueOracle& f, const GroundSet& ground,
               const FeasibleFn& feasible, ItemId next, ItemSet& current,
               double f_current, std::pair<ItemSet, double>& best) {
  if (f_current > best.second) best = {current, f_current};
  for (ItemId x = next; x < ground.n; ++x) {
    current.insert(x);
    if (feasible(current)) {
      exact_dfs(f, ground, feasible, x + 1, current, f.probe(current), best);
    }
    current.erase(x);
  }
}

template <typename FeasibleFn>
std::pair<ItemSet, double> exact_opt_fn(const ValueOracle& f,
                                        const GroundSet& ground,
                                        const FeasibleFn& feasible) {
  if (ground.n > kExactLimit)
    throw std::invalid_argument("exact_opt: ground set exceeds 20 items");
  ItemSet current;
  std::pair<ItemSet, double> best{ItemSet{}, f.probe(current)};
  exact_dfs(f, ground, feasible, 0, current, best.second, best);
  return best;
}

}  // namespace detail

inline std::pair<ItemSet, double> exact_opt_cardinality(
    const ValueOracle& f, const GroundSet& ground, std::size_t k) {
  return detail::exact_opt_fn(
      f, ground, [&](const ItemSet& s) { return s.size() <= k; });
}

inline std::pair<ItemSet, double> exact_opt(const ValueOracle& f,
                                            const MatroidOracle& m,
                                            const GroundSet& ground) {
  return detail::exact_opt_fn(
      f, ground, [&](const ItemSet& s) { return m.independent_probe(s); });
}

inline std::pair<ItemSet, double> exact_opt(const ValueOracle& f,
                                            const MatchoidOracle& spec,
                                            const GroundSet& ground) {
  return detail::exact_opt_fn(
      f, ground, [&](const ItemSet& s) { return spec.independent_probe(s); });
}

}  // namespace shortlist

#endif  // SHORTLIST_BASELINES_HPP_
