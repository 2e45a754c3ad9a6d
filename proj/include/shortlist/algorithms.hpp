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
// Online shortlist algorithms over randomly ordered streams:
//  * cardinality: per window, a band of layered candidate sets H_1..H_L is
//    grown by per-slot online-max selections of the best marginal item;
//  * matroid / p-matchoid: a single independent set SH is improved by
//    swap insertions (best item vs. the eviction that keeps SH feasible).
// All selections stream through the select-if-it-improves subroutine; items
// it confirms enter the shortlist R, and the final solution is drawn from R.

#ifndef SHORTLIST_ALGORITHMS_HPP_
#define SHORTLIST_ALGORITHMS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shortlist/item_set.hpp"
#include "shortlist/matchoid.hpp"
#include "shortlist/matroid.hpp"
#include "shortlist/online_max.hpp"
#include "shortlist/params.hpp"
#include "shortlist/rng.hpp"
#include "shortlist/stream.hpp"
#include "shortlist/value_oracle.hpp"

namespace shortlist {

struct RunCounters {
  std::uint64_t value_queries = 0;
  std::uint64_t independence_queries = 0;
  std::uint64_t online_max_calls = 0;
  std::size_t shortlist_size = 0;
  // Max simultaneous live items: |S or SH| + sum |H_l| + |R| + live
  // online-max selections. The streaming claims bound this by O_eps(k).
  std::size_t buffer_high_water = 0;
  std::uint64_t invariant_violations = 0;
  std::uint64_t skipped_empty_ranges = 0;
};

struct TraceEvent {
  std::size_t window = 0;  // 1-based
  std::size_t slot = 0;    // 1-based global slot index
  int layer = -1;          // 1-based layer for cardinality, -1 for swap runs
  ItemId selected = 0;
  bool from_shortlist = false;  // winner was the sampled-shortlist warm start
  bool accepted = false;
  std::vector<ItemId> removed;
  double f_after = 0.0;
};

struct RunResult {
  ItemSet solution;
  std::vector<ItemId> shortlist;  // insertion order
  double solution_value = 0.0;    // probe(solution), not query-counted
  RunCounters counters;
  std::vector<TraceEvent> trace;
};

struct RunOptions {
  bool check_invariants = false;
  bool record_trace = false;
};

namespace detail {

class ShortlistBuffer {
 public:
  bool add(ItemId x) {
    if (!members_.insert(x)) return false;
    order_.push_back(x);
    return true;
  }
  bool contains(ItemId x) const { return members_.contains(x); }
  std::size_t size() const { return order_.size(); }
  const std::vector<ItemId>& order() const { return order_; }
  const ItemSet& set() const { return members_; }

 private:
  std::vector<ItemId> order_;
  ItemSet members_;
};

struct WarmCandidate {
  ItemId id = 0;
  double value = 0.0;
};

inline void track_best(std::optional<WarmCandidate>& best, ItemId id,
                       double value) {
  if (!best || value > best->value ||
      (value == best->value && id < best->id)) {
    best = WarmCandidate{id, value};
  }
}

inline void check_schedule(const Schedule& sched, const AlgParams& params,
                           const Configuration& config) {
  if (sched.windows.empty())
    throw std::invalid_argument("run: schedule has no windows (group first)");
  if (sched.k != params.k || sched.beta != params.beta ||
      sched.alpha != params.alpha)
    throw std::invalid_argument("run: schedule/params mismatch");
  if (config.order.size() != sched.n)
    throw std::invalid_argument("run: configuration/schedule mismatch");
}

}  // namespace detail

// Uniform size-k sample of S (all of S when |S| <= k) intersected with the
// shortlist R.
inline ItemSet finalize_cardinality(const ItemSet& s, const ItemSet& r,
                                    std::size_t k, Rng& rng) {
  ItemSet sampled;
  if (s.size() <= k) {
    sampled = s;
  } else {
    std::vector<ItemId> picked = rng.sample(s.ids(), k);
    std::sort(picked.begin(), picked.end());
    sampled = ItemSet::of_sorted(std::move(picked));
  }
  return sampled.set_intersect(r);
}

// Layered cardinality run. Per window the algorithm keeps sets H_0..H_L
// (H_l either empty or of size l). In each slot s it runs, for every layer l
// in the band U_s, one online-max over the slot's arrivals valued by their
// marginal over S + H_{l-1} (state at slot start), warm-started with the
// best marginal over a fresh 1/(k*beta) sample R' of the shortlist. At slot
// end, in ascending l, the guard
//     f(S + H_l) < f(S + H_{l-1} + m_l)
// promotes H_l to H_{l-1} + m_l; winners that came from the stream (and were
// online-max selections) enter R. Window end folds H_L into S; stream end
// returns a uniform k-sample of S intersected with R.
inline RunResult card_secretary_run(const ValueOracle& f,
                                    const AlgParams& params,
                                    const Schedule& sched,
                                    const Configuration& config, Rng& rng,
                                    const RunOptions& opts = {}) {
  detail::check_schedule(sched, params, config);
  const std::uint64_t value_q0 = f.query_count();
  const std::size_t layers = params.layer_cap;
  const double delta = params.online_max_delta();

  RunResult out;
  detail::ShortlistBuffer shortlist;
  ItemSet solution_pool;                  // S
  double f_pool = f.evaluate(solution_pool);

  // Per-layer state, reset each window: H[l], the union S + H[l], and the
  // cached value f(S + H[l]). Index 0 is the always-empty base layer.
  std::vector<ItemSet> layer(layers + 1);
  std::vector<ItemSet> layer_union(layers + 1);
  std::vector<double> layer_value(layers + 1);

  struct LayerPick {
    std::size_t level = 0;
    std::optional<OnlineMax::Entry> winner;
    std::size_t num_selected = 0;
  };

  for (std::size_t w = 0; w < sched.windows.size(); ++w) {
    for (std::size_t l = 0; l <= layers; ++l) {
      layer[l].clear();
      layer_union[l] = solution_pool;
      layer_value[l] = f_pool;
    }
    const Window& window = sched.windows[w];
    for (std::size_t js = window.first_slot; js <= window.last_slot; ++js) {
      const std::size_t s_local = js - window.first_slot + 1;
      const auto items = slot_items(config, sched, js);
      const LayerRange band =
          range_U(s_local, params.q, params.epsilon, layers);
      if (band.empty()) {
        ++out.counters.skipped_empty_ranges;
        continue;
      }

      // Selection phase: every layer's online-max sees the slot against the
      // layer state from the previous slot.
      std::vector<LayerPick> picks;
      std::size_t live_selections = 0;
      for (std::size_t l = band.lo; l <= band.hi; ++l) {
        ++out.counters.online_max_calls;
        const std::size_t sample_size =
            shortlist.size() / (params.k * params.beta);
        std::vector<ItemId> warm_pool =
            rng.sample(shortlist.order(), sample_size);
        std::optional<detail::WarmCandidate> warm;
        for (ItemId x : warm_pool) {
          detail::track_best(warm, x,
                             f.marginal(x, layer_union[l - 1],
                                        layer_value[l - 1]));
        }
        OnlineMax om(items.size(), delta);
        if (warm) om.warm_start(warm->value, warm->id);
        for (ItemId x : items) {
          om.observe(f.marginal(x, layer_union[l - 1], layer_value[l - 1]),
                     x);
        }
        live_selections += om.selection_count();
        picks.push_back(LayerPick{l, om.result(), om.selection_count()});
      }

      // Update phase. Candidates extend the slot-start layers (the state
      // the selections were measured against); the guard demands a strict
      // improvement of layer l and no drop below the current layer l-1, so
      // every accepted update keeps the layer chain monotone.
      const std::vector<ItemSet> prev_layer = layer;
      const std::vector<ItemSet> prev_union = layer_union;
      for (const LayerPick& pick : picks) {
        if (!pick.winner) continue;
        const std::size_t l = pick.level;
        const ItemId m = static_cast<ItemId>(pick.winner->tie_id);
        const bool from_shortlist = pick.winner->index == 0;
        if (prev_union[l - 1].contains(m)) continue;
        if (l > 1 && prev_layer[l - 1].size() != l - 1) continue;
        const ItemSet candidate = prev_union[l - 1].with(m);
        const double f_candidate = f.evaluate(candidate);
        const bool accepted = layer_value[l] < f_candidate &&
                              f_candidate >= layer_value[l - 1];
        if (accepted) {
          layer[l] = prev_layer[l - 1].with(m);
          layer_union[l] = candidate;
          layer_value[l] = f_candidate;
          if (!from_shortlist) shortlist.add(m);
          if (opts.check_invariants) {
            if (layer[l].size() != l) ++out.counters.invariant_violations;
            if (layer_value[l] < layer_value[l - 1])
              ++out.counters.invariant_violations;
          }
        }
        if (opts.record_trace) {
          out.trace.push_back(TraceEvent{w + 1, js, static_cast<int>(l), m,
                                         from_shortlist, accepted, {},
                                         layer_value[l]});
        }
      }

      std::size_t live = solution_pool.size() + shortlist.size() +
                         live_selections;
      for (std::size_t l = 1; l <= layers; ++l) live += layer[l].size();
      out.counters.buffer_high_water =
          std::max(out.counters.buffer_high_water, live);
    }
    // Fold the best built layer into S (every union contains S, so this
    // only grows the pool). Values are nondecreasing along the built prefix
    // at accept time, so this is normally the deepest layer; the cap L is a
    // high-probability upper bound that typically exceeds the deepest level
    // actually reached.
    std::size_t best = 0;
    for (std::size_t l = layers; l >= 1; --l) {
      if (!layer[l].empty() && layer_value[l] > layer_value[best]) best = l;
    }
    solution_pool = layer_union[best];
    f_pool = layer_value[best];
  }

  out.solution =
      finalize_cardinality(solution_pool, shortlist.set(), params.k, rng);
  out.solution_value = f.probe(out.solution);
  out.shortlist = shortlist.order();
  out.counters.shortlist_size = shortlist.size();
  out.counters.value_queries = f.query_count() - value_q0;
  return out;
}

namespace detail {

struct SwapChoice {
  bool blocked = true;
  std::vector<ItemId> removals;
  double gain = kBlockedGain;
  double f_after = 0.0;  // exact f(SH + e - removals) from the oracle
};

struct MatroidSystem {
  const MatroidOracle& oracle;
  SwapChoice swap(const ValueOracle& f, ItemId e, const ItemSet& sh,
                  double f_sh) const {
    const MatroidSwap sw = swap_matroid(f, oracle, e, sh, f_sh);
    SwapChoice c;
    c.blocked = sw.blocked;
    if (sw.blocked) return c;
    if (sw.removal) c.removals.push_back(*sw.removal);
    c.gain = sw.gain;
    c.f_after = f_sh + sw.gain;
    return c;
  }
  bool independent_probe(const ItemSet& s) const {
    return oracle.independent_probe(s);
  }
  std::uint64_t query_count() const { return oracle.query_count(); }
};

struct MatchoidSystem {
  const MatchoidOracle& oracle;
  SwapChoice swap(const ValueOracle& f, ItemId e, const ItemSet& sh,
                  double f_sh) const {
    const MatchoidSwap sw = swap_matchoid(f, oracle, e, sh, f_sh);
    SwapChoice c;
    c.blocked = sw.blocked;
    if (sw.blocked) return c;
    c.removals = sw.removals;
    c.gain = sw.gain;
    c.f_after = f_sh + sw.gain;
    return c;
  }
  bool independent_probe(const ItemSet& s) const {
    return oracle.independent_probe(s);
  }
  std::uint64_t query_count() const { return oracle.query_count(); }
};

// Shared swap loop: per slot, one online-max over swap gains g(x, SH),
// warm-started from the sampled shortlist; the slot winner m with eviction
// theta(m, SH) is applied when it strictly improves f(SH). Control flow is
// identical for matroids and matchoids, so a 1-matchoid run is
// trace-identical to the matroid run under a shared seed.
template <typename System>
RunResult swap_secretary_run(const ValueOracle& f, const System& system,
                             const AlgParams& params, const Schedule& sched,
                             const Configuration& config, Rng& rng,
                             const RunOptions& opts) {
  check_schedule(sched, params, config);
  const std::uint64_t value_q0 = f.query_count();
  const std::uint64_t indep_q0 = system.query_count();
  const double delta = params.online_max_delta();

  RunResult out;
  ShortlistBuffer shortlist;
  ItemSet hold;  // SH
  double f_hold = f.evaluate(hold);

  for (std::size_t w = 0; w < sched.windows.size(); ++w) {
    const Window& window = sched.windows[w];
    for (std::size_t js = window.first_slot; js <= window.last_slot; ++js) {
      const auto items = slot_items(config, sched, js);
      ++out.counters.online_max_calls;

      const std::size_t sample_size =
          shortlist.size() / (params.k * params.beta);
      std::vector<ItemId> warm_pool =
          rng.sample(shortlist.order(), sample_size);
      std::map<ItemId, SwapChoice> choices;
      std::optional<WarmCandidate> warm;
      for (ItemId x : warm_pool) {
        if (hold.contains(x)) continue;
        SwapChoice c = system.swap(f, x, hold, f_hold);
        if (c.blocked) continue;
        track_best(warm, x, c.gain);
        choices.emplace(x, std::move(c));
      }
      OnlineMax om(items.size(), delta);
      if (warm) om.warm_start(warm->value, warm->id);
      for (ItemId x : items) {
        SwapChoice c = system.swap(f, x, hold, f_hold);
        if (om.observe(c.gain, x)) choices.emplace(x, std::move(c));
      }

      const auto winner = om.result();
      if (winner && winner->value != kBlockedGain) {
        const ItemId m = static_cast<ItemId>(winner->tie_id);
        const SwapChoice& choice = choices.at(m);
        const bool accepted = choice.gain > 0.0;
        if (accepted) {
          hold.insert(m);
          for (ItemId r : choice.removals) hold.erase(r);
          f_hold = choice.f_after;
          if (winner->index > 0) shortlist.add(m);
        }
        if (opts.record_trace) {
          out.trace.push_back(TraceEvent{w + 1, js, -1, m,
                                         winner->index == 0, accepted,
                                         choice.removals, f_hold});
        }
      }
      if (opts.check_invariants && !system.independent_probe(hold))
        ++out.counters.invariant_violations;

      out.counters.buffer_high_water =
          std::max(out.counters.buffer_high_water,
                   hold.size() + shortlist.size() + om.selection_count());
    }
  }

  out.solution = hold.set_intersect(shortlist.set());
  out.solution_value = f.probe(out.solution);
  out.shortlist = shortlist.order();
  out.counters.shortlist_size = shortlist.size();
  out.counters.value_queries = f.query_count() - value_q0;
  out.counters.independence_queries = system.query_count() - indep_q0;
  return out;
}

}  // namespace detail

// Swap run under a single matroid. The schedule is normally one (k, beta)
// window (alpha = k); multi-window schedules are accepted for
// experimentation and process identically with SH carried across windows.
inline RunResult matroid_secretary_run(const ValueOracle& f,
                                       const MatroidOracle& matroid,
                                       const AlgParams& params,
                                       const Schedule& sched,
                                       const Configuration& config, Rng& rng,
                                       const RunOptions& opts = {}) {
  return detail::swap_secretary_run(
      f, detail::MatroidSystem{matroid}, params, sched, config, rng, opts);
}

// Swap run under a p-matchoid; evictions are sets of up to p items.
inline RunResult matchoid_secretary_run(const ValueOracle& f,
                                        const MatchoidOracle& spec,
                                        const AlgParams& params,
                                        const Schedule& sched,
                                        const Configuration& config, Rng& rng,
                                        const RunOptions& opts = {}) {
  return detail::swap_secretary_run(
      f, detail::MatchoidSystem{spec}, params, sched, config, rng, opts);
}

}  // namespace shortlist

#endif  // SHORTLIST_ALGORITHMS_HPP_
