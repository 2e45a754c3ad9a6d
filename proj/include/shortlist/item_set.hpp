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

#ifndef SHORTLIST_ITEM_SET_HPP_
#define SHORTLIST_ITEM_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace shortlist {

using ItemId = std::uint32_t;

// Ground set of n items with dense ids 0..n-1.
struct GroundSet {
  std::size_t n = 0;
};

// Small set of item ids kept as a sorted unique vector. Solutions, layers and
// shortlists stay small (O_eps(k)), so contiguous storage beats node-based
// sets throughout.
class ItemSet {
 public:
  ItemSet() = default;
  ItemSet(std::initializer_list<ItemId> ids) : ids_(ids) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }
  static ItemSet of_sorted(std::vector<ItemId> sorted_unique) {
    ItemSet s;
    s.ids_ = std::move(sorted_unique);
    return s;
  }

  bool contains(ItemId x) const {
    return std::binary_search(ids_.begin(), ids_.end(), x);
  }

  // Returns false if x was already present.
  bool insert(ItemId x) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), x);
    if (it != ids_.end() && *it == x) return false;
    ids_.insert(it, x);
    return true;
  }

  bool erase(ItemId x) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), x);
    if (it == ids_.end() || *it != x) return false;
    ids_.erase(it);
    return true;
  }

  ItemSet with(ItemId x) const {
    ItemSet s = *this;
    s.insert(x);
    return s;
  }

  ItemSet without(ItemId x) const {
    ItemSet s = *this;
    s.erase(x);
    return s;
  }

  ItemSet set_minus(const ItemSet& other) const {
    ItemSet s;
    s.ids_.reserve(ids_.size());
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(s.ids_));
    return s;
  }

  ItemSet set_union(const ItemSet& other) const {
    ItemSet s;
    s.ids_.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(s.ids_));
    return s;
  }

  ItemSet set_intersect(const ItemSet& other) const {
    ItemSet s;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(s.ids_));
    return s;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  void clear() { ids_.clear(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<ItemId>& ids() const { return ids_; }

  friend bool operator==(const ItemSet&, const ItemSet&) = default;

 private:
  std::vector<ItemId> ids_;
};

}  // namespace shortlist

#endif  // SHORTLIST_ITEM_SET_HPP_
