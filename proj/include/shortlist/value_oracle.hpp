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

#ifndef SHORTLIST_VALUE_ORACLE_HPP_
#define SHORTLIST_VALUE_ORACLE_HPP_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shortlist/hardness.hpp"
#include "shortlist/item_set.hpp"

namespace shortlist {

// Monotone submodular value oracle over dense item ids. Pure in its value;
// the query counter is the only mutable state, so runs either clone the
// oracle or snapshot the counter. evaluate() counts, probe() does not
// (instrumentation and test sweeps must not distort the query-complexity
// numbers the benchmark reports).
class ValueOracle {
 public:
  enum class Kind { kModular, kCoverage, kHardness };

  static ValueOracle modular(std::vector<double> weights) {
    ValueOracle o;
    o.kind_ = Kind::kModular;
    o.n_ = weights.size();
    o.weights_ = std::move(weights);
    return o;
  }

  // cover_sets[i] lists the universe elements item i covers; f(S) = |union|.
  static ValueOracle coverage(std::vector<std::vector<std::uint32_t>> sets) {
    ValueOracle o;
    o.kind_ = Kind::kCoverage;
    o.n_ = sets.size();
    o.cover_sets_ = std::move(sets);
    std::uint32_t hi = 0;
    for (const auto& cs : o.cover_sets_)
      for (std::uint32_t e : cs) hi = std::max(hi, e + 1);
    o.cover_universe_ = hi;
    return o;
  }

  static ValueOracle hardness(HardnessLayout layout) {
    layout.params.validate();
    ValueOracle o;
    o.kind_ = Kind::kHardness;
    o.n_ = layout.to_universe.size();
    o.hardness_ = std::move(layout);
    return o;
  }

  Kind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  GroundSet ground() const { return GroundSet{n_}; }

  double evaluate(const ItemSet& s) const {
    ++queries_;
    return raw(s);
  }

  // f(S+x) - f(S). Two oracle calls; the cached overload spends one. The
  // member shortcut spends none, and the counter reflects that.
  double marginal(ItemId x, const ItemSet& s) const {
    if (s.contains(x)) return 0.0;
    return evaluate(s.with(x)) - evaluate(s);
  }

  double marginal(ItemId x, const ItemSet& s, double f_s) const {
    if (s.contains(x)) return 0.0;
    return evaluate(s.with(x)) - f_s;
  }

  // Uncounted evaluation for instrumentation, validators and reporting.
  double probe(const ItemSet& s) const { return raw(s); }

  std::uint64_t query_count() const { return queries_; }
  void reset_query_count() const { queries_ = 0; }

  const HardnessLayout& hardness_layout() const {
    if (kind_ != Kind::kHardness)
      throw std::logic_error("oracle has no hardness layout");
    return hardness_;
  }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<std::uint32_t>>& cover_sets() const {
    return cover_sets_;
  }

 private:
  ValueOracle() = default;

  void check_ids(const ItemSet& s) const {
    for (ItemId x : s)
      if (x >= n_)
        throw std::domain_error("value oracle: unknown item id " +
                                std::to_string(x));
  }

  double raw(const ItemSet& s) const {
    check_ids(s);
    switch (kind_) {
      case Kind::kModular: {
        double v = 0.0;
        for (ItemId x : s) v += weights_[x];
        return v;
      }
      case Kind::kCoverage: {
        covered_.assign(cover_universe_, false);
        std::size_t count = 0;
        for (ItemId x : s)
          for (std::uint32_t e : cover_sets_[x])
            if (!covered_[e]) {
              covered_[e] = true;
              ++count;
            }
        return static_cast<double>(count);
      }
      case Kind::kHardness: {
        ItemSet universe_set;
        for (ItemId x : s) universe_set.insert(hardness_.to_universe[x]);
        return hardness_eval(hardness_.params, universe_set);
      }
    }
    throw std::logic_error("unreachable");
  }

  Kind kind_ = Kind::kModular;
  std::size_t n_ = 0;
  std::vector<double> weights_;
  std::vector<std::vector<std::uint32_t>> cover_sets_;
  std::uint32_t cover_universe_ = 0;
  HardnessLayout hardness_;
  mutable std::vector<bool> covered_;  // scratch for coverage evaluation
  mutable std::uint64_t queries_ = 0;
};

// Instance I_{l_star} of the adversarial family: exactly n items whose
// optimal budget-(k+1) value is 2k, attained by the planted T_{l_star}.
inline std::pair<GroundSet, ValueOracle> make_hardness_instance(
    std::size_t n, std::size_t k, std::size_t l_star, Rng& rng) {
  HardnessParams p{n, k, l_star};
  HardnessLayout layout = make_hardness_layout(p, rng);
  ValueOracle oracle = ValueOracle::hardness(std::move(layout));
  return {GroundSet{n}, std::move(oracle)};
}

}  // namespace shortlist

#endif  // SHORTLIST_VALUE_ORACLE_HPP_
