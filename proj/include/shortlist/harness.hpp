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
// Experiment harness: seeded trial execution, offline baselines, metric
// aggregation, CSV/JSON output. Identical configs produce byte-identical
// output apart from the wall-time column.

#ifndef SHORTLIST_HARNESS_HPP_
#define SHORTLIST_HARNESS_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "shortlist/algorithms.hpp"
#include "shortlist/baselines.hpp"
#include "shortlist/bounds.hpp"
#include "shortlist/io.hpp"

namespace shortlist {

struct ExperimentConfig {
  // Instance: either a file or a named generator with size n.
  std::string instance_file;
  std::string generator;  // modular | coverage | hardness
  std::size_t n = 0;
  std::size_t coverage_universe = 0;  // 0: 2n
  std::size_t coverage_set_size = 0;  // 0: 4
  std::size_t hardness_l_star = 1;

  std::string algorithm = "cardinality";  // cardinality | matroid | matchoid
  std::string constraint_file;  // matroid/matchoid JSON; empty: uniform(k)
  std::size_t k = 1;
  double epsilon = 0.5;
  std::size_t alpha = 0;  // 0: algorithm default
  std::size_t beta = 0;   // 0: ceil(1/eps)
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::string out_path;        // empty: stdout
  std::string format = "csv";  // csv | json
};

inline ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  if (j.contains("instance")) {
    const Json& inst = j["instance"];
    if (inst.contains("file")) c.instance_file = inst["file"];
    if (inst.contains("generator")) {
      const Json& gen = inst["generator"];
      c.generator = gen.at("kind").get<std::string>();
      c.n = gen.value("n", std::size_t{0});
      c.coverage_universe = gen.value("universe", std::size_t{0});
      c.coverage_set_size = gen.value("set_size", std::size_t{0});
      c.hardness_l_star = gen.value("l_star", std::size_t{1});
    }
  }
  c.algorithm = j.value("algorithm", c.algorithm);
  c.constraint_file = j.value("constraint_file", c.constraint_file);
  c.k = j.value("k", c.k);
  c.epsilon = j.value("epsilon", c.epsilon);
  c.alpha = j.value("alpha", c.alpha);
  c.beta = j.value("beta", c.beta);
  c.trials = j.value("trials", c.trials);
  c.seed = j.value("seed", c.seed);
  c.out_path = j.value("out", c.out_path);
  c.format = j.value("format", c.format);
  return c;
}

struct TrialMetrics {
  std::size_t trial = 0;
  double alg_value = 0.0;
  double greedy_value = 0.0;
  double exact_value = std::nan("");  // NaN when n > 20
  double ratio_greedy = std::nan("");
  double ratio_exact = std::nan("");
  std::size_t shortlist_size = 0;
  double cap = 0.0;
  std::uint64_t value_queries = 0;
  std::uint64_t indep_queries = 0;
  std::size_t buffer_hwm = 0;
  double ms = 0.0;
};

// Per-metric aggregate across trials.
struct Aggregate {
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct ExperimentSummary {
  Aggregate alg_value, greedy_value, exact_value, ratio_greedy, ratio_exact,
      shortlist_size, cap, value_queries, indep_queries, buffer_hwm, ms;
};

struct ExperimentTable {
  std::vector<TrialMetrics> rows;
  TrialMetrics mean;  // the CSV summary row; trial field unused
  ExperimentSummary summary;
};

namespace detail {

inline ValueOracle build_instance(const ExperimentConfig& c) {
  if (!c.instance_file.empty())
    return instance_from_json(load_json_file(c.instance_file));
  if (c.n == 0) throw std::invalid_argument("config: instance size n == 0");
  Rng rng = Rng::stream(c.seed, 0x1a57a9cULL);
  if (c.generator == "modular") {
    std::vector<double> weights(c.n);
    for (double& w : weights) w = rng.real();
    return ValueOracle::modular(std::move(weights));
  }
  if (c.generator == "coverage") {
    const std::size_t universe =
        c.coverage_universe != 0 ? c.coverage_universe : 2 * c.n;
    const std::size_t set_size =
        c.coverage_set_size != 0 ? c.coverage_set_size : 4;
    std::vector<std::vector<std::uint32_t>> sets(c.n);
    for (auto& s : sets) {
      ItemSet chosen;
      while (chosen.size() < std::min(set_size, universe))
        chosen.insert(static_cast<ItemId>(rng.below(universe)));
      s.assign(chosen.begin(), chosen.end());
    }
    return ValueOracle::coverage(std::move(sets));
  }
  if (c.generator == "hardness") {
    return make_hardness_instance(c.n, c.k, c.hardness_l_star, rng).second;
  }
  throw std::invalid_argument("config: unknown generator '" + c.generator +
                              "'");
}

inline std::size_t thread_budget(std::size_t trials) {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SHORTLIST_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) hw = std::min<std::size_t>(hw, static_cast<std::size_t>(v));
  }
  return std::max<std::size_t>(1, std::min(hw, trials));
}

inline double safe_ratio(double num, double den) {
  if (!(den > 0.0)) return std::nan("");
  return num / den;
}

inline std::string fmt_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline ExperimentTable run_experiment(const ExperimentConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("config: trials >= 1");
  const ValueOracle master = detail::build_instance(config);
  const GroundSet ground = master.ground();
  const std::size_t n = ground.n;

  enum class Alg { kCardinality, kMatroid, kMatchoid };
  Alg alg;
  if (config.algorithm == "cardinality") alg = Alg::kCardinality;
  else if (config.algorithm == "matroid") alg = Alg::kMatroid;
  else if (config.algorithm == "matchoid") alg = Alg::kMatchoid;
  else
    throw std::invalid_argument("config: unknown algorithm '" +
                                config.algorithm + "'");

  std::optional<MatroidOracle> matroid;
  std::optional<MatchoidOracle> matchoid;
  std::size_t k = config.k;
  if (alg == Alg::kMatroid) {
    matroid = config.constraint_file.empty()
                  ? MatroidOracle::uniform(n, config.k)
                  : matroid_from_json(load_json_file(config.constraint_file),
                                      n);
    k = matroid->rank();
  } else if (alg == Alg::kMatchoid) {
    if (config.constraint_file.empty())
      throw std::invalid_argument("config: matchoid needs constraint_file");
    matchoid = matchoid_from_json(load_json_file(config.constraint_file), n);
    if (matchoid->k() != 0) k = matchoid->k();
  }
  if (k < 1) throw std::invalid_argument("config: k >= 1");

  const AlgParams params =
      alg == Alg::kCardinality
          ? AlgParams::cardinality(k, config.epsilon, config.alpha,
                                   config.beta)
          : AlgParams::swap(k, config.epsilon, config.beta, config.alpha);
  const ShortlistCaps caps =
      shortlist_caps(k, params.alpha, params.beta, params.epsilon);
  const double cap =
      alg == Alg::kCardinality ? caps.cardinality : caps.matroid;

  // Offline references are permutation-free; compute them once on clones so
  // the per-trial query counters stay clean.
  double greedy_value = 0.0;
  {
    ValueOracle f = master;
    switch (alg) {
      case Alg::kCardinality:
        greedy_value = f.probe(greedy_cardinality(f, ground, k));
        break;
      case Alg::kMatroid:
        greedy_value = f.probe(greedy_independent(f, *matroid, ground));
        break;
      case Alg::kMatchoid:
        greedy_value = f.probe(greedy_independent(f, *matchoid, ground));
        break;
    }
  }
  double exact_value = std::nan("");
  if (n <= 20) {
    ValueOracle f = master;
    switch (alg) {
      case Alg::kCardinality:
        exact_value = exact_opt_cardinality(f, ground, k).second;
        break;
      case Alg::kMatroid:
        exact_value = exact_opt(f, *matroid, ground).second;
        break;
      case Alg::kMatchoid:
        exact_value = exact_opt(f, *matchoid, ground).second;
        break;
    }
  }

  ExperimentTable table;
  table.rows.assign(config.trials, TrialMetrics{});
  const auto run_trial = [&](std::size_t t) {
    Rng rng = Rng::stream(config.seed, t);
    ValueOracle f = master;
    const auto t0 = std::chrono::steady_clock::now();
    Schedule sched = group_windows(
        make_schedule(n, params.k, params.beta, rng), params.alpha);
    Configuration stream_order = permute_stream(ground, sched, rng);
    RunResult result;
    switch (alg) {
      case Alg::kCardinality:
        result = card_secretary_run(f, params, sched, stream_order, rng);
        break;
      case Alg::kMatroid: {
        MatroidOracle m = *matroid;
        result = matroid_secretary_run(f, m, params, sched, stream_order,
                                       rng);
        break;
      }
      case Alg::kMatchoid: {
        MatchoidOracle m = *matchoid;
        result = matchoid_secretary_run(f, m, params, sched, stream_order,
                                        rng);
        break;
      }
    }
    const auto t1 = std::chrono::steady_clock::now();
    TrialMetrics& row = table.rows[t];
    row.trial = t;
    row.alg_value = result.solution_value;
    row.greedy_value = greedy_value;
    row.exact_value = exact_value;
    row.ratio_greedy = detail::safe_ratio(row.alg_value, greedy_value);
    row.ratio_exact = detail::safe_ratio(row.alg_value, exact_value);
    row.shortlist_size = result.counters.shortlist_size;
    row.cap = cap;
    row.value_queries = result.counters.value_queries;
    row.indep_queries = result.counters.independence_queries;
    row.buffer_hwm = result.counters.buffer_high_water;
    row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  };

  const std::size_t workers = detail::thread_budget(config.trials);
  if (workers <= 1) {
    for (std::size_t t = 0; t < config.trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t t = w; t < config.trials; t += workers)
          run_trial(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  const auto aggregate = [&](auto field) {
    Aggregate a;
    a.min = std::numeric_limits<double>::infinity();
    a.max = -a.min;
    const double count = static_cast<double>(table.rows.size());
    for (const TrialMetrics& r : table.rows) {
      const double v = static_cast<double>(field(r));
      a.mean += v / count;
      a.min = std::min(a.min, v);
      a.max = std::max(a.max, v);
    }
    for (const TrialMetrics& r : table.rows) {
      const double d = static_cast<double>(field(r)) - a.mean;
      a.stddev += d * d / count;
    }
    a.stddev = std::sqrt(a.stddev);
    return a;
  };
  ExperimentSummary& s = table.summary;
  s.alg_value = aggregate([](const TrialMetrics& r) { return r.alg_value; });
  s.greedy_value =
      aggregate([](const TrialMetrics& r) { return r.greedy_value; });
  s.exact_value =
      aggregate([](const TrialMetrics& r) { return r.exact_value; });
  s.ratio_greedy =
      aggregate([](const TrialMetrics& r) { return r.ratio_greedy; });
  s.ratio_exact =
      aggregate([](const TrialMetrics& r) { return r.ratio_exact; });
  s.shortlist_size =
      aggregate([](const TrialMetrics& r) { return r.shortlist_size; });
  s.cap = aggregate([](const TrialMetrics& r) { return r.cap; });
  s.value_queries =
      aggregate([](const TrialMetrics& r) { return r.value_queries; });
  s.indep_queries =
      aggregate([](const TrialMetrics& r) { return r.indep_queries; });
  s.buffer_hwm =
      aggregate([](const TrialMetrics& r) { return r.buffer_hwm; });
  s.ms = aggregate([](const TrialMetrics& r) { return r.ms; });

  TrialMetrics& mean = table.mean;
  mean.alg_value = s.alg_value.mean;
  mean.greedy_value = s.greedy_value.mean;
  mean.exact_value = s.exact_value.mean;
  mean.ratio_greedy = s.ratio_greedy.mean;
  mean.ratio_exact = s.ratio_exact.mean;
  mean.shortlist_size = static_cast<std::size_t>(s.shortlist_size.mean);
  mean.cap = s.cap.mean;
  mean.value_queries = static_cast<std::uint64_t>(s.value_queries.mean);
  mean.indep_queries = static_cast<std::uint64_t>(s.indep_queries.mean);
  mean.buffer_hwm = static_cast<std::size_t>(s.buffer_hwm.max);
  mean.ms = s.ms.mean;
  return table;
}

// CSV schema, bit-exact column order:
//   trial,alg_value,greedy_value,exact_value,ratio_greedy,ratio_exact,
//   shortlist_size,cap,value_queries,indep_queries,buffer_hwm,ms
// followed by one "mean" row (buffer_hwm column holds the max).
inline std::string to_csv(const ExperimentTable& table) {
  std::ostringstream out;
  out << "trial,alg_value,greedy_value,exact_value,ratio_greedy,ratio_exact,"
         "shortlist_size,cap,value_queries,indep_queries,buffer_hwm,ms\n";
  const auto emit = [&](const std::string& label, const TrialMetrics& r) {
    out << label << ',' << detail::fmt_double(r.alg_value) << ','
        << detail::fmt_double(r.greedy_value) << ','
        << detail::fmt_double(r.exact_value) << ','
        << detail::fmt_double(r.ratio_greedy) << ','
        << detail::fmt_double(r.ratio_exact) << ',' << r.shortlist_size
        << ',' << detail::fmt_double(r.cap) << ',' << r.value_queries << ','
        << r.indep_queries << ',' << r.buffer_hwm << ','
        << detail::fmt_double(r.ms) << '\n';
  };
  for (const TrialMetrics& r : table.rows) emit(std::to_string(r.trial), r);
  emit("mean", table.mean);
  return out.str();
}

inline Json to_json(const ExperimentTable& table) {
  const auto row_json = [](const TrialMetrics& r) {
    Json j;
    j["alg_value"] = r.alg_value;
    j["greedy_value"] = r.greedy_value;
    j["exact_value"] =
        std::isnan(r.exact_value) ? Json() : Json(r.exact_value);
    j["ratio_greedy"] =
        std::isnan(r.ratio_greedy) ? Json() : Json(r.ratio_greedy);
    j["ratio_exact"] =
        std::isnan(r.ratio_exact) ? Json() : Json(r.ratio_exact);
    j["shortlist_size"] = r.shortlist_size;
    j["cap"] = r.cap;
    j["value_queries"] = r.value_queries;
    j["indep_queries"] = r.indep_queries;
    j["buffer_hwm"] = r.buffer_hwm;
    j["ms"] = r.ms;
    return j;
  };
  const auto agg_json = [](const Aggregate& a) {
    Json j;
    j["mean"] = std::isnan(a.mean) ? Json() : Json(a.mean);
    j["stddev"] = std::isnan(a.stddev) ? Json() : Json(a.stddev);
    j["min"] = std::isnan(a.min) ? Json() : Json(a.min);
    j["max"] = std::isnan(a.max) ? Json() : Json(a.max);
    return j;
  };
  Json j;
  j["rows"] = Json::array();
  for (const TrialMetrics& r : table.rows) {
    Json row = row_json(r);
    row["trial"] = r.trial;
    j["rows"].push_back(row);
  }
  j["mean"] = row_json(table.mean);
  j["summary"] = {{"alg_value", agg_json(table.summary.alg_value)},
                  {"greedy_value", agg_json(table.summary.greedy_value)},
                  {"exact_value", agg_json(table.summary.exact_value)},
                  {"ratio_greedy", agg_json(table.summary.ratio_greedy)},
                  {"ratio_exact", agg_json(table.summary.ratio_exact)},
                  {"shortlist_size", agg_json(table.summary.shortlist_size)},
                  {"cap", agg_json(table.summary.cap)},
                  {"value_queries", agg_json(table.summary.value_queries)},
                  {"indep_queries", agg_json(table.summary.indep_queries)},
                  {"buffer_hwm", agg_json(table.summary.buffer_hwm)},
                  {"ms", agg_json(table.summary.ms)}};
  return j;
}

inline void write_output(const ExperimentTable& table,
                         const std::string& path, const std::string& format) {
  std::string body;
  if (format == "csv") {
    body = to_csv(table);
  } else if (format == "json") {
    body = to_json(table).dump(2);
    body.push_back('\n');
  } else {
    throw std::invalid_argument("unknown output format: " + format);
  }
  if (path.empty()) {
    std::fputs(body.c_str(), stdout);
  } else {
    write_text_file(path, body);
  }
}

}  // namespace shortlist

#endif  // SHORTLIST_HARNESS_HPP_
