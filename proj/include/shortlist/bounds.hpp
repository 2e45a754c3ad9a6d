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
// Closed-form evaluators for the guarantee chains and shortlist-size caps.
// Natural log throughout.

#ifndef SHORTLIST_BOUNDS_HPP_
#define SHORTLIST_BOUNDS_HPP_

#include <cmath>
#include <stdexcept>

namespace shortlist {

// One guarantee chain: recursion_bound >= exponential_bound always, and the
// asymptotic asymptotic_target is what they approach for large parameters.
// theta is the analysis-side success-probability multiplier (default 1-eps);
// it is reported, not folded into the bounds.
struct BoundReport {
  double q = 0.0;
  double recursion_bound = 0.0;
  double exponential_bound = 0.0;
  double asymptotic_target = 0.0;
  double theta = 1.0;
};

inline double slot_activity_q(std::size_t k, std::size_t beta) {
  if (k < 1 || beta < 1) throw std::invalid_argument("bounds: k, beta >= 1");
  const double kb = static_cast<double>(k * beta);
  return 1.0 - std::pow(1.0 - 1.0 / kb, static_cast<double>(k));
}

// Cardinality chain: 1-(1-q/k)^{k*beta} >= 1-e^{-q*beta} -> 1-1/e - eps.
inline BoundReport bound_cardinality(std::size_t k, std::size_t beta,
                                     double epsilon = 0.0) {
  BoundReport r;
  r.q = slot_activity_q(k, beta);
  const double kd = static_cast<double>(k);
  const double m = static_cast<double>(k * beta);
  r.recursion_bound = 1.0 - std::pow(1.0 - r.q / kd, m);
  r.exponential_bound =
      1.0 - std::exp(-r.q * static_cast<double>(beta));
  r.asymptotic_target = 1.0 - std::exp(-1.0) - epsilon;
  r.theta = 1.0 - epsilon;
  return r;
}

// Matroid chain: (1/2)(1-(1-2q/k)^{k*beta}) >= (1/2)(1-e^{-2q*beta}).
inline BoundReport bound_matroid(std::size_t k, std::size_t beta,
                                 double epsilon = 0.0) {
  BoundReport r;
  r.q = slot_activity_q(k, beta);
  const double kd = static_cast<double>(k);
  const double m = static_cast<double>(k * beta);
  r.recursion_bound = 0.5 * (1.0 - std::pow(1.0 - 2.0 * r.q / kd, m));
  r.exponential_bound =
      0.5 * (1.0 - std::exp(-2.0 * r.q * static_cast<double>(beta)));
  r.asymptotic_target = 0.5 * (1.0 - std::exp(-2.0) - epsilon);
  r.theta = 1.0 - epsilon;
  return r;
}

// Matchoid target 1/(p+1) * (1 - e^{-(p+1)} - eps); p = 1 coincides with the
// matroid chain target.
inline double bound_matchoid(std::size_t p, double epsilon = 0.0) {
  if (p < 1) throw std::invalid_argument("bounds: p >= 1");
  const double pd = static_cast<double>(p);
  return (1.0 - std::exp(-(pd + 1.0)) - epsilon) / (pd + 1.0);
}

struct ShortlistCaps {
  double cardinality = 0.0;  // 16*k*sqrt(alpha*ln(1/eps)) * beta * ln(2/eps)
  double matroid = 0.0;      // 4*k*beta*ln(2/eps), matchoid runs share it
};

inline ShortlistCaps shortlist_caps(std::size_t k, std::size_t alpha,
                                    std::size_t beta, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("bounds: epsilon must be in (0,1)");
  const double kd = static_cast<double>(k);
  const double bd = static_cast<double>(beta);
  const double log_inv = std::log(1.0 / epsilon);
  const double log_two = std::log(2.0 / epsilon);
  ShortlistCaps caps;
  caps.cardinality =
      16.0 * kd * std::sqrt(static_cast<double>(alpha) * log_inv) * bd *
      log_two;
  caps.matroid = 4.0 * kd * bd * log_two;
  return caps;
}

}  // namespace shortlist

#endif  // SHORTLIST_BOUNDS_HPP_
