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

#ifndef SHORTLIST_PARAMS_HPP_
#define SHORTLIST_PARAMS_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace shortlist {

// Integer layer band processed at a slot, empty when lo > hi.
struct LayerRange {
  std::size_t lo = 1;
  std::size_t hi = 0;
  bool empty() const { return lo > hi; }
};

// Derived constants shared by the shortlist algorithms.
//   q       = 1 - (1 - 1/(k*beta))^k, the chance a slot is "active"
//   layer_cap L = ceil(q*alpha*beta + delta_{alpha*beta}), the top layer
//   online-max failure parameter delta = eps/2
//   sampled-shortlist fraction = 1/(k*beta)
struct AlgParams {
  std::size_t k = 0;
  double epsilon = 0.0;
  std::size_t alpha = 1;
  std::size_t beta = 1;
  double q = 0.0;
  std::size_t layer_cap = 1;

  double online_max_delta() const { return epsilon / 2.0; }
  std::size_t num_slots() const { return k * beta; }

  static double slot_half_width(double q, std::size_t s, double epsilon) {
    return 4.0 * std::sqrt(q * static_cast<double>(s) *
                           std::log(1.0 / epsilon));
  }

  // alpha defaults to ceil(1/eps^2) and beta to ceil(1/eps); both can be
  // overridden (0 = use default). The cardinality run requires
  // alpha + 4*sqrt(alpha*log(1/eps)) <= k, which bounds eps away from 0 for
  // small k; enforce_window_guard=false lifts that check for degenerate
  // configurations (k = 1 admits no epsilon at all) where the run is still
  // well defined, just outside the guarantee regime.
  static AlgParams cardinality(std::size_t k, double epsilon,
                               std::size_t alpha = 0, std::size_t beta = 0,
                               bool enforce_window_guard = true) {
    AlgParams p = common(k, epsilon, beta);
    p.alpha =
        alpha != 0
            ? alpha
            : static_cast<std::size_t>(std::ceil(1.0 / (epsilon * epsilon)));
    if (p.alpha < 1 || p.alpha > k)
      throw std::invalid_argument("params: need 1 <= alpha <= k");
    const double a = static_cast<double>(p.alpha);
    if (enforce_window_guard &&
        a + 4.0 * std::sqrt(a * std::log(1.0 / epsilon)) >
            static_cast<double>(k) + 1e-12)
      throw std::invalid_argument(
          "params: alpha + 4*sqrt(alpha*log(1/eps)) must be <= k");
    p.finalize_layer_cap();
    return p;
  }

  // Swap-based runs use a single (k, beta) window: alpha = k, no layer band.
  static AlgParams swap(std::size_t k, double epsilon, std::size_t beta = 0,
                        std::size_t alpha = 0) {
    AlgParams p = common(k, epsilon, beta);
    p.alpha = alpha != 0 ? alpha : k;
    if (p.alpha < 1 || p.alpha > k)
      throw std::invalid_argument("params: need 1 <= alpha <= k");
    p.finalize_layer_cap();
    return p;
  }

 private:
  static AlgParams common(std::size_t k, double epsilon, std::size_t beta) {
    if (k < 1) throw std::invalid_argument("params: k >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
      throw std::invalid_argument("params: epsilon must be in (0,1)");
    AlgParams p;
    p.k = k;
    p.epsilon = epsilon;
    p.beta = beta != 0
                 ? beta
                 : static_cast<std::size_t>(std::ceil(1.0 / epsilon));
    if (p.beta < 1) throw std::invalid_argument("params: beta >= 1");
    const double kb = static_cast<double>(p.k * p.beta);
    p.q = 1.0 - std::pow(1.0 - 1.0 / kb, static_cast<double>(k));
    return p;
  }

  void finalize_layer_cap() {
    const double s = static_cast<double>(alpha * beta);
    layer_cap = static_cast<std::size_t>(
        std::ceil(q * s + slot_half_width(q, alpha * beta, epsilon)));
    if (layer_cap < 1) layer_cap = 1;
  }
};

// Band of layers processed at (1-based, within-window) slot s:
//   (q*s - delta_s, q*s + delta_s),  delta_s = 4*sqrt(q*s*log(1/eps)),
// clamped to [1, layer_cap]. May be empty after clamping (tiny s with large
// eps); callers skip such slots.
inline LayerRange range_U(std::size_t s, double q, double epsilon,
                          std::size_t layer_cap) {
  if (s < 1) throw std::invalid_argument("range_U: s >= 1");
  const double center = q * static_cast<double>(s);
  const double half = AlgParams::slot_half_width(q, s, epsilon);
  const double lo_real = std::ceil(center - half);
  const double hi_real = std::floor(center + half);
  LayerRange r;
  r.lo = lo_real < 1.0 ? 1 : static_cast<std::size_t>(lo_real);
  r.hi = hi_real < 0.0 ? 0
                       : std::min(layer_cap,
                                  static_cast<std::size_t>(hi_real));
  return r;
}

}  // namespace shortlist

#endif  // SHORTLIST_PARAMS_HPP_
