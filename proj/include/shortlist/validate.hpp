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
// Exhaustive validators for small ground sets. These are test/CLI utilities,
// not runtime checks.

#ifndef SHORTLIST_VALIDATE_HPP_
#define SHORTLIST_VALIDATE_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shortlist/item_set.hpp"
#include "shortlist/value_oracle.hpp"

namespace shortlist {

struct SubmodularityWitness {
  ItemSet base;      // S
  ItemId added = 0;  // x
  std::optional<ItemId> context;  // y, absent for a monotonicity violation
  double lhs = 0.0;  // delta(x | S)
  double rhs = 0.0;  // delta(x | S + y), or 0 for monotonicity
};

struct SubmodularityReport {
  bool ok = true;
  std::optional<SubmodularityWitness> witness;
};

namespace detail {
inline ItemSet set_from_mask(std::uint32_t mask, std::size_t n) {
  ItemSet s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1u << i)) s.insert(static_cast<ItemId>(i));
  return s;
}
}  // namespace detail

// Sweeps all (S, x, y) with x, y not in S and checks delta(x|S) >= 0 and
// delta(x|S) >= delta(x|S+y). Exhaustive, so the ground set is capped at 16
// items. Uses probe() so the sweep leaves query counters untouched.
template <typename F>
SubmodularityReport check_monotone_submodular_fn(const F& f, std::size_t n,
                                                 double tol = 1e-9) {
  if (n > 16)
    throw std::invalid_argument("check_monotone_submodular: ground set > 16");
  const std::uint32_t full = n >= 32 ? 0xffffffffu : (1u << n) - 1;
  std::vector<double> val(static_cast<std::size_t>(full) + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    val[mask] = f(detail::set_from_mask(mask, n));

  SubmodularityReport report;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    for (std::size_t x = 0; x < n; ++x) {
      if (mask & (1u << x)) continue;
      const double dx = val[mask | (1u << x)] - val[mask];
      if (dx < -tol) {
        report.ok = false;
        report.witness = SubmodularityWitness{
            detail::set_from_mask(mask, n), static_cast<ItemId>(x),
            std::nullopt, dx, 0.0};
        return report;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || (mask & (1u << y))) continue;
        const std::uint32_t with_y = mask | (1u << y);
        const double dxy = val[with_y | (1u << x)] - val[with_y];
        if (dx < dxy - tol) {
          report.ok = false;
          report.witness = SubmodularityWitness{
              detail::set_from_mask(mask, n), static_cast<ItemId>(x),
              static_cast<ItemId>(y), dx, dxy};
          return report;
        }
      }
    }
  }
  return report;
}

inline SubmodularityReport check_monotone_submodular(const ValueOracle& oracle,
                                                     const GroundSet& ground) {
  return check_monotone_submodular_fn(
      [&](const ItemSet& s) { return oracle.probe(s); }, ground.n);
}

struct MatroidAxiomReport {
  bool empty_independent = true;
  bool downward_closed = true;
  bool exchange = true;
  bool ok() const { return empty_independent && downward_closed && exchange; }
};

// Exhaustive matroid axiom check for |ground| <= 10 (2^10 subsets).
template <typename IndepFn>
MatroidAxiomReport check_matroid_axioms_fn(const IndepFn& indep,
                                           std::size_t n) {
  if (n > 10)
    throw std::invalid_argument("check_matroid_axioms: ground set > 10");
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> in(static_cast<std::size_t>(full) + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    in[mask] = indep(detail::set_from_mask(mask, n)) ? 1 : 0;

  MatroidAxiomReport r;
  r.empty_independent = in[0] != 0;
  for (std::uint32_t mask = 0; mask <= full && r.downward_closed; ++mask) {
    if (!in[mask]) continue;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask & (1u << i)) && !in[mask & ~(1u << i)]) {
        r.downward_closed = false;
        break;
      }
  }
  for (std::uint32_t a = 0; a <= full && r.exchange; ++a) {
    if (!in[a]) continue;
    for (std::uint32_t b = 0; b <= full && r.exchange; ++b) {
      if (!in[b] || __builtin_popcount(a) >= __builtin_popcount(b)) continue;
      bool extended = false;
      for (std::size_t i = 0; i < n && !extended; ++i)
        if ((b & (1u << i)) && !(a & (1u << i)) && in[a | (1u << i)])
          extended = true;
      if (!extended) r.exchange = false;
    }
  }
  return r;
}

}  // namespace shortlist

#endif  // SHORTLIST_VALIDATE_HPP_
