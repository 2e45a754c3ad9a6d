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

#ifndef SHORTLIST_MATROID_HPP_
#define SHORTLIST_MATROID_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shortlist/item_set.hpp"
#include "shortlist/value_oracle.hpp"

namespace shortlist {

// Independence oracle for uniform and partition matroids over dense item
// ids. Immutable after construction except the query counter; independent()
// counts, independent_probe() does not.
class MatroidOracle {
 public:
  enum class Kind { kUniform, kPartition };

  static MatroidOracle uniform(std::size_t n, std::size_t k) {
    MatroidOracle m;
    m.kind_ = Kind::kUniform;
    m.n_ = n;
    m.rank_ = std::min(n, k);
    m.uniform_k_ = k;
    return m;
  }

  // parts[i] is the part of item i; caps[p] bounds how many items of part p
  // an independent set may hold.
  static MatroidOracle partition(std::vector<std::uint32_t> parts,
                                 std::vector<std::size_t> caps) {
    MatroidOracle m;
    m.kind_ = Kind::kPartition;
    m.n_ = parts.size();
    m.parts_ = std::move(parts);
    m.caps_ = std::move(caps);
    std::vector<std::size_t> count(m.caps_.size(), 0);
    for (std::uint32_t p : m.parts_) {
      if (p >= m.caps_.size())
        throw std::invalid_argument("partition matroid: part without a cap");
      ++count[p];
    }
    m.rank_ = 0;
    for (std::size_t p = 0; p < m.caps_.size(); ++p)
      m.rank_ += std::min(m.caps_[p], count[p]);
    return m;
  }

  Kind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  std::size_t rank() const { return rank_; }

  bool independent(const ItemSet& s) const {
    ++queries_;
    return raw(s);
  }
  bool independent_probe(const ItemSet& s) const { return raw(s); }

  std::uint64_t query_count() const { return queries_; }
  void reset_query_count() const { queries_ = 0; }

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  const std::vector<std::size_t>& caps() const { return caps_; }
  std::size_t uniform_k() const { return uniform_k_; }

 private:
  MatroidOracle() = default;

  bool raw(const ItemSet& s) const {
    scratch_.assign(kind_ == Kind::kPartition ? caps_.size() : 0, 0);
    std::size_t total = 0;
    for (ItemId x : s) {
      if (x >= n_)
        throw std::domain_error("matroid oracle: unknown item id " +
                                std::to_string(x));
      ++total;
      if (kind_ == Kind::kPartition &&
          ++scratch_[parts_[x]] > caps_[parts_[x]])
        return false;
    }
    return kind_ == Kind::kUniform ? total <= uniform_k_ : true;
  }

  Kind kind_ = Kind::kUniform;
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::size_t uniform_k_ = 0;
  std::vector<std::uint32_t> parts_;
  std::vector<std::size_t> caps_;
  mutable std::vector<std::size_t> scratch_;
  mutable std::uint64_t queries_ = 0;
};

constexpr double kBlockedGain = -std::numeric_limits<double>::infinity();

// Outcome of the best single-swap insertion of e into S.
struct MatroidSwap {
  bool blocked = false;                // no single removal restores feasibility
  std::optional<ItemId> removal;       // empty: S+e already independent
  double gain = kBlockedGain;          // f(S+e-removal) - f(S)
};

// theta/g for a matroid: if S+e is independent no removal is needed and the
// gain is the plain marginal; otherwise the removal e' in S maximizing
// f(S+e-e') subject to independence is chosen, ties broken by lowest id.
// Preconditions: S independent, e not in S.
inline MatroidSwap swap_matroid(const ValueOracle& f, const MatroidOracle& m,
                                ItemId e, const ItemSet& s, double f_s) {
  if (s.contains(e)) throw std::logic_error("swap_matroid: e already in S");
  if (!m.independent_probe(s))
    throw std::logic_error("swap_matroid: S is not independent");

  const ItemSet s_plus = s.with(e);
  if (m.independent(s_plus)) {
    return {false, std::nullopt, f.evaluate(s_plus) - f_s};
  }
  MatroidSwap best;
  best.blocked = true;
  for (ItemId cand : s) {
    const ItemSet repl = s_plus.without(cand);
    if (!m.independent(repl)) continue;
    const double gain = f.evaluate(repl) - f_s;
    if (best.blocked || gain > best.gain) {
      best = {false, cand, gain};
    }
  }
  return best;
}

inline MatroidSwap theta_matroid(const ValueOracle& f, const MatroidOracle& m,
                                 ItemId e, const ItemSet& s, double f_s) {
  return swap_matroid(f, m, e, s, f_s);
}

// Gain of the best swap; -inf marks a blocked insertion so stream loops can
// feed it straight into an argmax.
inline double g_matroid(const ValueOracle& f, const MatroidOracle& m, ItemId e,
                        const ItemSet& s, double f_s) {
  return swap_matroid(f, m, e, s, f_s).gain;
}

}  // namespace shortlist

#endif  // SHORTLIST_MATROID_HPP_
