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
// p-matchoid independence system: q matroids over overlapping ground
// subsets, each item in at most p of them; S is independent iff S meets
// every matroid's independence restricted to its ground.

#ifndef SHORTLIST_MATCHOID_HPP_
#define SHORTLIST_MATCHOID_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "shortlist/item_set.hpp"
#include "shortlist/matroid.hpp"
#include "shortlist/value_oracle.hpp"

namespace shortlist {

class MatchoidOracle {
 public:
  struct Member {
    MatroidOracle oracle;          // defined over local ids 0..|ground|-1
    std::vector<ItemId> ground;    // sorted global ids of N_l
  };

  // declared_p: the p this spec claims; construction fails if any item
  // belongs to more matroids. declared_k: size of the largest feasible set
  // (documented by the spec author; drives slot counts and bound formulas).
  MatchoidOracle(std::size_t n, std::vector<Member> members,
                 std::size_t declared_p, std::size_t declared_k)
      : n_(n), members_(std::move(members)), k_(declared_k) {
    membership_.assign(n_, {});
    for (std::size_t l = 0; l < members_.size(); ++l) {
      const auto& g = members_[l].ground;
      if (!std::is_sorted(g.begin(), g.end()))
        throw std::invalid_argument("matchoid: ground sets must be sorted");
      for (ItemId x : g) {
        if (x >= n_) throw std::invalid_argument("matchoid: id out of range");
        membership_[x].push_back(static_cast<std::uint16_t>(l));
      }
      if (members_[l].oracle.n() != g.size())
        throw std::invalid_argument(
            "matchoid: member oracle size != ground size");
    }
    p_ = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      if (membership_[x].empty())
        throw std::invalid_argument("matchoid: item " + std::to_string(x) +
                                    " belongs to no matroid");
      p_ = std::max(p_, membership_[x].size());
    }
    if (p_ > declared_p)
      throw std::invalid_argument("matchoid: declared p exceeded");
  }

  std::size_t n() const { return n_; }
  std::size_t q() const { return members_.size(); }
  std::size_t p() const { return p_; }
  std::size_t k() const { return k_; }
  // kappa = max matroid rank; the per-item swap cost is O(p*kappa + kappa^p).
  std::size_t kappa() const {
    std::size_t k = 0;
    for (const auto& m : members_) k = std::max(k, m.oracle.rank());
    return k;
  }
  const std::vector<Member>& members() const { return members_; }

  // Indices of the (<= p) matroids containing e, ascending.
  const std::vector<std::uint16_t>& membership_list(ItemId e) const {
    if (e >= n_) throw std::domain_error("matchoid: unknown item id");
    return membership_[e];
  }

  bool independent(const ItemSet& s) const {
    for (std::size_t l = 0; l < members_.size(); ++l)
      if (!member_independent(l, s, /*count=*/true)) return false;
    return true;
  }
  bool independent_probe(const ItemSet& s) const {
    for (std::size_t l = 0; l < members_.size(); ++l)
      if (!member_independent(l, s, /*count=*/false)) return false;
    return true;
  }

  // Total independence queries issued to member matroids.
  std::uint64_t query_count() const {
    std::uint64_t total = 0;
    for (const auto& m : members_) total += m.oracle.query_count();
    return total;
  }
  void reset_query_count() const {
    for (const auto& m : members_) m.oracle.reset_query_count();
  }

  // Omega_l(e, S): the members of S whose single removal makes S+e
  // independent in matroid l, plus whether no removal is needed at all.
  struct Omega {
    bool no_removal_needed = false;
    std::vector<ItemId> candidates;  // ascending global ids
  };

  Omega omega(std::size_t l, ItemId e, const ItemSet& s) const {
    const ItemSet local = project(l, s);
    const ItemId e_local = to_local(l, e);
    const ItemSet local_plus = local.with(e_local);
    Omega w;
    w.no_removal_needed = members_[l].oracle.independent(local_plus);
    for (ItemId cand : local)
      if (members_[l].oracle.independent(local_plus.without(cand)))
        w.candidates.push_back(members_[l].ground[cand]);
    return w;
  }

  ItemSet project(std::size_t l, const ItemSet& s) const {
    ItemSet local;
    for (ItemId x : s) {
      const auto& g = members_[l].ground;
      auto it = std::lower_bound(g.begin(), g.end(), x);
      if (it != g.end() && *it == x)
        local.insert(static_cast<ItemId>(it - g.begin()));
    }
    return local;
  }

 private:
  ItemId to_local(std::size_t l, ItemId x) const {
    const auto& g = members_[l].ground;
    auto it = std::lower_bound(g.begin(), g.end(), x);
    if (it == g.end() || *it != x)
      throw std::domain_error("matchoid: item not in this matroid's ground");
    return static_cast<ItemId>(it - g.begin());
  }

  bool member_independent(std::size_t l, const ItemSet& s, bool count) const {
    const ItemSet local = project(l, s);
    return count ? members_[l].oracle.independent(local)
                 : members_[l].oracle.independent_probe(local);
  }

  std::size_t n_ = 0;
  std::vector<Member> members_;
  std::vector<std::vector<std::uint16_t>> membership_;
  std::size_t p_ = 0;
  std::size_t k_ = 0;
};

// Outcome of the best multi-removal insertion of e into S.
struct MatchoidSwap {
  bool blocked = false;
  std::vector<ItemId> removals;  // sorted; |removals| <= p
  double gain = kBlockedGain;
};

// theta/g for a p-matchoid: enumerate the Cartesian product of per-matroid
// removal options Omega_{l_i}(e,S) over the <= p matroids containing e (each
// factor gains a "keep everything" option when S+e is already independent
// there), score every combination's union by f(S+e-union), and return the
// best. Ties go to the lexicographically smallest removal set, so with q=1
// this reproduces swap_matroid exactly.
inline MatchoidSwap swap_matchoid(const ValueOracle& f,
                                  const MatchoidOracle& spec, ItemId e,
                                  const ItemSet& s, double f_s) {
  if (s.contains(e)) throw std::logic_error("swap_matchoid: e already in S");
  if (!spec.independent_probe(s))
    throw std::logic_error("swap_matchoid: S is not independent");

  const auto& member_ids = spec.membership_list(e);
  constexpr ItemId kKeep = static_cast<ItemId>(-1);
  std::vector<std::vector<ItemId>> factors;
  factors.reserve(member_ids.size());
  for (std::uint16_t l : member_ids) {
    MatchoidOracle::Omega w = spec.omega(l, e, s);
    std::vector<ItemId> factor;
    if (w.no_removal_needed) factor.push_back(kKeep);
    factor.insert(factor.end(), w.candidates.begin(), w.candidates.end());
    if (factor.empty()) {
      MatchoidSwap blocked;
      blocked.blocked = true;
      return blocked;  // some matroid has no single-removal fix
    }
    factors.push_back(std::move(factor));
  }

  const ItemSet s_plus = s.with(e);
  std::map<std::vector<ItemId>, double> scored;  // removal union -> gain
  std::vector<std::size_t> pick(factors.size(), 0);
  MatchoidSwap best;
  best.blocked = true;
  for (;;) {
    ItemSet removal_union;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const ItemId r = factors[i][pick[i]];
      if (r != kKeep) removal_union.insert(r);
    }
    auto [it, fresh] = scored.try_emplace(removal_union.ids(), 0.0);
    if (fresh) {
      ItemSet candidate = s_plus;
      for (ItemId r : removal_union) candidate.erase(r);
      it->second = f.evaluate(candidate) - f_s;
    }
    const double gain = it->second;
    if (best.blocked || gain > best.gain ||
        (gain == best.gain &&
         std::lexicographical_compare(it->first.begin(), it->first.end(),
                                      best.removals.begin(),
                                      best.removals.end()))) {
      best = {false, it->first, gain};
    }
    std::size_t i = 0;
    while (i < factors.size() && ++pick[i] == factors[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == factors.size()) break;
  }
  return best;
}

inline MatchoidSwap theta_g_matchoid(const ValueOracle& f,
                                     const MatchoidOracle& spec, ItemId e,
                                     const ItemSet& s, double f_s) {
  return swap_matchoid(f, spec, e, s, f_s);
}

}  // namespace shortlist

#endif  // SHORTLIST_MATCHOID_HPP_
