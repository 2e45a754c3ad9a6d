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
// Select-if-it-improves subroutine: skip a delta-fraction warm-up, then
// record every strict improvement of the running maximum, capped at
// ceil(4*ln(2/delta)) selections. Returns the best recorded element, which
// equals the true stream maximum with probability >= 1 - delta on randomly
// ordered distinct values.

#ifndef SHORTLIST_ONLINE_MAX_HPP_
#define SHORTLIST_ONLINE_MAX_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shortlist/item_set.hpp"

namespace shortlist {

class OnlineMax {
 public:
  struct Entry {
    std::size_t index = 0;  // 1-based arrival index; 0 marks the warm start
    double value = 0.0;
    std::uint64_t tie_id = 0;
  };

  // n_announced: stream length N. delta in (0,1). Warm-up u = ceil(N*delta/2)
  // (selection allowed from arrival index u on); cap = ceil(4*ln(2/delta)).
  OnlineMax(std::size_t n_announced, double delta) : n_(n_announced) {
    if (!(delta > 0.0 && delta < 1.0))
      throw std::invalid_argument("online max: delta must be in (0,1)");
    warmup_ = static_cast<std::size_t>(
        std::ceil(static_cast<double>(n_announced) * delta / 2.0));
    cap_ = static_cast<std::size_t>(std::ceil(4.0 * std::log(2.0 / delta)));
  }

  // Injects a starting maximum (the best of the sampled shortlist R'). It is
  // selectable as a virtual index-0 result but never consumes the cap.
  void warm_start(double value, std::uint64_t tie_id) {
    if (position_ > 0)
      throw std::logic_error("online max: warm start after observations");
    warm_ = Entry{0, value, tie_id};
    max_value_ = value;
    max_tie_ = tie_id;
  }

  // Processes the next arrival; returns whether it was selected. Ties on
  // value are broken toward the lower tie_id, so equal values never count
  // as an improvement over an earlier equal arrival with a smaller id.
  bool observe(double value, std::uint64_t tie_id) {
    if (position_ >= n_)
      throw std::logic_error("online max: more observations than announced");
    ++position_;
    const bool improves = value > max_value_ ||
                          (value == max_value_ && tie_id < max_tie_);
    if (!improves) return false;
    max_value_ = value;
    max_tie_ = tie_id;
    if (position_ >= warmup_ && selections_.size() < cap_) {
      selections_.push_back(Entry{position_, value, tie_id});
      return true;
    }
    return false;
  }

  bool observe(double value) { return observe(value, position_); }

  // Best recorded element: the last selection (values increase along the
  // selection list), falling back to the warm start.
  std::optional<Entry> result() const {
    if (!selections_.empty()) return selections_.back();
    return warm_;
  }

  const std::vector<Entry>& selections() const { return selections_; }
  std::size_t selection_count() const { return selections_.size(); }
  std::size_t warmup() const { return warmup_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t warmup_;
  std::size_t cap_;
  std::size_t position_ = 0;
  // Running maximum, initialized to -inf so a blocked (-inf) arrival never
  // counts as an improvement.
  double max_value_ = -std::numeric_limits<double>::infinity();
  std::uint64_t max_tie_ = 0;
  std::optional<Entry> warm_;
  std::vector<Entry> selections_;
};

}  // namespace shortlist

#endif  // SHORTLIST_ONLINE_MAX_HPP_
