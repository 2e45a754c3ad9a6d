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
// Random-order arrival simulation. The stream is cut into k*beta slots whose
// sizes come from throwing n balls into k*beta bins; consecutive runs of
// alpha*beta slots form windows. Slot and window indices are 1-based to
// mirror the algorithm descriptions; serialized forms are 0-based.

#ifndef SHORTLIST_STREAM_HPP_
#define SHORTLIST_STREAM_HPP_

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "shortlist/item_set.hpp"
#include "shortlist/rng.hpp"

namespace shortlist {

struct Window {
  std::size_t first_slot = 0;  // 1-based, inclusive
  std::size_t last_slot = 0;   // 1-based, inclusive
  std::size_t num_slots() const { return last_slot - first_slot + 1; }
};

struct Schedule {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t beta = 0;
  std::size_t alpha = 0;                  // 0 until group_windows runs
  std::vector<std::size_t> slot_sizes;    // X_1..X_{k*beta}
  std::vector<std::size_t> slot_offsets;  // prefix sums, size k*beta+1
  std::vector<Window> windows;

  std::size_t num_slots() const { return slot_sizes.size(); }
};

// Throws n balls uniformly into k*beta bins; bin loads become slot sizes.
// Empty slots are legal and iterate as zero items.
inline Schedule make_schedule(std::size_t n, std::size_t k, std::size_t beta,
                              Rng& rng) {
  if (n < 1 || k < 1 || beta < 1)
    throw std::invalid_argument("make_schedule: n, k, beta >= 1");
  const std::size_t slots = k * beta;
  Schedule sched;
  sched.n = n;
  sched.k = k;
  sched.beta = beta;
  sched.slot_sizes.assign(slots, 0);
  for (std::size_t ball = 0; ball < n; ++ball)
    ++sched.slot_sizes[rng.below(slots)];
  sched.slot_offsets.resize(slots + 1);
  sched.slot_offsets[0] = 0;
  for (std::size_t j = 0; j < slots; ++j)
    sched.slot_offsets[j + 1] = sched.slot_offsets[j] + sched.slot_sizes[j];
  return sched;
}

// Groups the k*beta slots into floor(k/alpha) windows of alpha*beta slots.
// When alpha does not divide k the trailing (k mod alpha)*beta slots form a
// final short window processed like any other.
inline Schedule group_windows(Schedule sched, std::size_t alpha) {
  if (alpha < 1) throw std::invalid_argument("group_windows: alpha >= 1");
  if (alpha > sched.k)
    throw std::invalid_argument("group_windows: alpha > k");
  sched.alpha = alpha;
  sched.windows.clear();
  const std::size_t per_window = alpha * sched.beta;
  std::size_t first = 1;
  while (first <= sched.num_slots()) {
    const std::size_t last =
        std::min(first + per_window - 1, sched.num_slots());
    sched.windows.push_back(Window{first, last});
    first = last + 1;
  }
  return sched;
}

// Arrival order plus the induced item -> slot map Y.
struct Configuration {
  std::vector<ItemId> order;       // arrival order of item ids
  std::vector<std::size_t> slot_of;  // item id -> 1-based slot index
};

inline Configuration permute_stream(const GroundSet& ground,
                                    const Schedule& sched, Rng& rng) {
  if (ground.n != sched.n)
    throw std::invalid_argument("permute_stream: ground/schedule mismatch");
  Configuration config;
  config.order.resize(ground.n);
  std::iota(config.order.begin(), config.order.end(), 0);
  rng.shuffle(config.order);
  config.slot_of.assign(ground.n, 0);
  for (std::size_t j = 0; j < sched.num_slots(); ++j)
    for (std::size_t pos = sched.slot_offsets[j];
         pos < sched.slot_offsets[j + 1]; ++pos)
      config.slot_of[config.order[pos]] = j + 1;
  return config;
}

// Items of 1-based slot j in arrival order.
inline std::span<const ItemId> slot_items(const Configuration& config,
                                          const Schedule& sched,
                                          std::size_t j) {
  if (j < 1 || j > sched.num_slots())
    throw std::out_of_range("slot_items: slot index out of range");
  return std::span<const ItemId>(config.order)
      .subspan(sched.slot_offsets[j - 1], sched.slot_sizes[j - 1]);
}

}  // namespace shortlist

#endif  // SHORTLIST_STREAM_HPP_
