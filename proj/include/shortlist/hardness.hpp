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
// Adversarial instance family for budget k+1: a ground set of "special" items
// (type C, worth k each) and "plain" items (type D, worth 1 each), where the
// planted set T_l = {c^l} + its k-item block reaches value 2k while every
// other set of size <= k+1 stays strictly below. Value growth on plain items
// follows a dyadic staircase whose slope halves every k items.

#ifndef SHORTLIST_HARDNESS_HPP_
#define SHORTLIST_HARDNESS_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "shortlist/item_set.hpp"
#include "shortlist/rng.hpp"

namespace shortlist {

struct HardnessParams {
  std::size_t n = 0;       // instance size; 2k must divide n
  std::size_t k = 0;       // budget parameter; planted sets have size k+1
  std::size_t l_star = 1;  // which special item is present, 1-based in [1, L]

  std::size_t num_triples() const { return n / (2 * k); }  // L
  // The full ground set the value function is defined on: L items of type C
  // followed by n-1 items of type D.
  std::size_t universe_size() const { return num_triples() + n - 1; }

  void validate() const {
    if (k == 0 || n == 0) throw std::invalid_argument("hardness: n, k >= 1");
    if (n % (2 * k) != 0)
      throw std::invalid_argument("hardness: 2k must divide n");
    if (l_star < 1 || l_star > num_triples())
      throw std::invalid_argument("hardness: l_star out of [1, L]");
  }
};

// Piecewise-linear concave staircase
//   g(t) = k + k/2 + ... + k/2^{i-1} + (t - ik)/2^i,  i = floor(t/k).
// Computed as 2k - k*2^{1-i} + (t-ik)*2^{-i}: every term is dyadic, so the
// result is exact in binary64 for desk-scale arguments.
inline double hardness_g(std::uint64_t t, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("hardness_g: k >= 1");
  const std::uint64_t i = t / k;
  if (i == 0) return static_cast<double>(t);
  const int ie = i > 4000 ? 4000 : static_cast<int>(i);
  return 2.0 * static_cast<double>(k) -
         std::ldexp(static_cast<double>(k), 1 - ie) +
         std::ldexp(static_cast<double>(t - i * k), -ie);
}

// Value of a subset of the full ground set. Items with id < L are type C;
// the rest are type D. Case split:
//   |S & C| >= 2  ->  2k+1
//   |S & C| = 1   ->  min(2k+1, k + g(|S|-1))
//   |S & C| = 0   ->  1 + g(|S|-1)   (and f(empty) = 0)
// Restricted to any single instance (exactly one C item present) this is
// monotone submodular, f(T_l) = 2k, and f(S) <= 2k whenever |S| <= k+1.
inline double hardness_eval(const HardnessParams& p, const ItemSet& s) {
  p.validate();
  if (s.empty()) return 0.0;
  const std::size_t num_c_items = p.num_triples();
  std::size_t c_count = 0;
  for (ItemId x : s) {
    if (x >= p.universe_size())
      throw std::domain_error("hardness_eval: item id outside ground set");
    if (x < num_c_items) ++c_count;
  }
  const double two_k_plus_one = 2.0 * static_cast<double>(p.k) + 1.0;
  if (c_count >= 2) return two_k_plus_one;
  const double tail = hardness_g(s.size() - 1, p.k);
  if (c_count == 1)
    return std::min(two_k_plus_one, static_cast<double>(p.k) + tail);
  return 1.0 + tail;
}

// Layout of one instance: which instance-local ids play which role. Emitted
// with generated instances so adversarial tests can address named items.
struct HardnessLayout {
  HardnessParams params;
  std::vector<ItemId> to_universe;      // instance id -> ground-set id
  ItemId c_item = 0;                    // instance id of c^{l_star}
  std::vector<std::vector<ItemId>> blocks;  // instance ids of D^1..D^L
  std::vector<ItemId> filler;               // instance ids of leftover D items

  // The planted optimum T_{l_star} = {c} + its block.
  ItemSet planted_optimum() const {
    ItemSet t;
    t.insert(c_item);
    for (ItemId d : blocks[params.l_star - 1]) t.insert(d);
    return t;
  }
};

// Builds the instance I_{l_star}: all L blocks, every leftover D item, and
// the single special item c^{l_star} (exactly n items). Instance ids are a
// seeded permutation of the roles, so tests cannot depend on item order.
inline HardnessLayout make_hardness_layout(const HardnessParams& p, Rng& rng) {
  p.validate();
  const std::size_t num_c = p.num_triples();
  std::vector<ItemId> universe_ids;
  universe_ids.reserve(p.n);
  universe_ids.push_back(static_cast<ItemId>(p.l_star - 1));  // c^{l_star}
  for (std::size_t u = num_c; u < p.universe_size(); ++u)
    universe_ids.push_back(static_cast<ItemId>(u));  // every D item
  rng.shuffle(universe_ids);

  HardnessLayout layout;
  layout.params = p;
  layout.to_universe = universe_ids;
  layout.blocks.assign(num_c, {});
  for (std::size_t i = 0; i < universe_ids.size(); ++i) {
    const ItemId u = universe_ids[i];
    const ItemId inst = static_cast<ItemId>(i);
    if (u < num_c) {
      layout.c_item = inst;
    } else {
      const std::size_t d_index = u - num_c;
      if (d_index < num_c * p.k) {
        layout.blocks[d_index / p.k].push_back(inst);
      } else {
        layout.filler.push_back(inst);
      }
    }
  }
  return layout;
}

}  // namespace shortlist

#endif  // SHORTLIST_HARDNESS_HPP_
