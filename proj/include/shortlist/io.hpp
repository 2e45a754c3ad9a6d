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
// JSON file formats:
//   instance: {"kind":"modular","n":N,"weights":[..]}
//             {"kind":"coverage","n":N,"sets":[[elem..]..]}
//             {"kind":"hardness","n":N,"hardness":{"k":K,"l_star":L},
//              "layout":{...}}
//   matroid:  {"kind":"uniform","k":K}
//             {"kind":"partition","parts":[pid..],"caps":{"pid":cap,..}}
//   matchoid: {"matroids":[{"spec":{..},"ground":[ids..]}..],"p":P,"k":K}
//   schedule dump: {"slot_sizes":[..],"windows":[[lo,hi]..]}  (0-based)
//   trace dump: JSON lines {slot, layer, selected, accepted, removed, f_after}

#ifndef SHORTLIST_IO_HPP_
#define SHORTLIST_IO_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "shortlist/algorithms.hpp"
#include "shortlist/matchoid.hpp"
#include "shortlist/matroid.hpp"
#include "shortlist/stream.hpp"
#include "shortlist/value_oracle.hpp"

namespace shortlist {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

inline void write_text_file(const std::string& path,
                            const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << body;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline Json hardness_layout_json(const HardnessLayout& layout) {
  Json j;
  j["k"] = layout.params.k;
  j["l_star"] = layout.params.l_star;
  j["c_item"] = layout.c_item;
  j["blocks"] = layout.blocks;
  j["filler"] = layout.filler;
  return j;
}

inline Json instance_json(const ValueOracle& oracle) {
  Json j;
  j["n"] = oracle.n();
  switch (oracle.kind()) {
    case ValueOracle::Kind::kModular:
      j["kind"] = "modular";
      j["weights"] = oracle.weights();
      break;
    case ValueOracle::Kind::kCoverage:
      j["kind"] = "coverage";
      j["sets"] = oracle.cover_sets();
      break;
    case ValueOracle::Kind::kHardness: {
      const HardnessLayout& layout = oracle.hardness_layout();
      j["kind"] = "hardness";
      j["hardness"] = {{"k", layout.params.k},
                       {"l_star", layout.params.l_star}};
      j["layout"] = hardness_layout_json(layout);
      j["layout"]["to_universe"] = layout.to_universe;
      break;
    }
  }
  return j;
}

inline ValueOracle instance_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::size_t n = j.at("n").get<std::size_t>();
  if (kind == "modular") {
    auto weights = j.at("weights").get<std::vector<double>>();
    if (weights.size() != n)
      throw std::invalid_argument("modular instance: |weights| != n");
    return ValueOracle::modular(std::move(weights));
  }
  if (kind == "coverage") {
    auto sets = j.at("sets").get<std::vector<std::vector<std::uint32_t>>>();
    if (sets.size() != n)
      throw std::invalid_argument("coverage instance: |sets| != n");
    return ValueOracle::coverage(std::move(sets));
  }
  if (kind == "hardness") {
    HardnessParams p;
    p.n = n;
    p.k = j.at("hardness").at("k").get<std::size_t>();
    p.l_star = j.at("hardness").at("l_star").get<std::size_t>();
    if (j.contains("layout") && j["layout"].contains("to_universe")) {
      HardnessLayout layout;
      layout.params = p;
      layout.to_universe =
          j["layout"]["to_universe"].get<std::vector<ItemId>>();
      layout.c_item = j["layout"].at("c_item").get<ItemId>();
      layout.blocks =
          j["layout"].at("blocks").get<std::vector<std::vector<ItemId>>>();
      layout.filler = j["layout"].at("filler").get<std::vector<ItemId>>();
      return ValueOracle::hardness(std::move(layout));
    }
    Rng rng(0x5eedULL);  // identity-free layout when none is recorded
    return ValueOracle::hardness(make_hardness_layout(p, rng));
  }
  throw std::invalid_argument("unknown instance kind: " + kind);
}

inline Json matroid_json(const MatroidOracle& m) {
  Json j;
  if (m.kind() == MatroidOracle::Kind::kUniform) {
    j["kind"] = "uniform";
    j["k"] = m.uniform_k();
  } else {
    j["kind"] = "partition";
    j["parts"] = m.parts();
    Json caps = Json::object();
    for (std::size_t p = 0; p < m.caps().size(); ++p)
      caps[std::to_string(p)] = m.caps()[p];
    j["caps"] = caps;
  }
  return j;
}

// n binds the matroid to a concrete ground-set size (uniform specs carry no
// item list of their own).
inline MatroidOracle matroid_from_json(const Json& j, std::size_t n) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform") {
    return MatroidOracle::uniform(n, j.at("k").get<std::size_t>());
  }
  if (kind == "partition") {
    auto parts = j.at("parts").get<std::vector<std::uint32_t>>();
    if (parts.size() != n)
      throw std::invalid_argument("partition matroid: |parts| != n");
    std::uint32_t max_part = 0;
    for (std::uint32_t p : parts) max_part = std::max(max_part, p);
    std::vector<std::size_t> caps(max_part + 1, 0);
    for (const auto& [key, value] : j.at("caps").items())
      caps.at(std::stoul(key)) = value.get<std::size_t>();
    return MatroidOracle::partition(std::move(parts), std::move(caps));
  }
  throw std::invalid_argument("unknown matroid kind: " + kind);
}

inline MatchoidOracle matchoid_from_json(const Json& j, std::size_t n) {
  std::vector<MatchoidOracle::Member> members;
  for (const Json& mj : j.at("matroids")) {
    auto ground = mj.at("ground").get<std::vector<ItemId>>();
    std::sort(ground.begin(), ground.end());
    MatroidOracle oracle = matroid_from_json(mj.at("spec"), ground.size());
    members.push_back(MatchoidOracle::Member{std::move(oracle),
                                             std::move(ground)});
  }
  const std::size_t p = j.at("p").get<std::size_t>();
  const std::size_t k = j.value("k", std::size_t{0});
  return MatchoidOracle(n, std::move(members), p, k);
}

inline Json schedule_json(const Schedule& sched) {
  Json j;
  j["slot_sizes"] = sched.slot_sizes;
  Json windows = Json::array();
  for (const Window& w : sched.windows)
    windows.push_back({w.first_slot - 1, w.last_slot - 1});
  j["windows"] = windows;
  return j;
}

// One JSON object per line, for golden-trace comparisons.
inline std::string trace_jsonl(const std::vector<TraceEvent>& trace) {
  std::ostringstream out;
  for (const TraceEvent& e : trace) {
    Json j;
    j["window"] = e.window;
    j["slot"] = e.slot;
    if (e.layer >= 0) j["layer"] = e.layer; else j["layer"] = nullptr;
    j["selected"] = e.selected;
    j["from_shortlist"] = e.from_shortlist;
    j["accepted"] = e.accepted;
    j["removed"] = e.removed;
    j["f_after"] = e.f_after;
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace shortlist

#endif  // SHORTLIST_IO_HPP_
