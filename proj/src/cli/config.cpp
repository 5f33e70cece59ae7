// Copyright 2026 The qcomplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcx/cli/config.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "qcx/errors.hpp"

namespace qcx::cli {

namespace {

using nlohmann::json;

constexpr int kTableFirstN = 4;
constexpr int kNa = 0;  // "--" cell
using Row = std::array<int, 9>;

// Rows: fractal dimension, entanglement, SRE; N = 4..12.
constexpr Row kD2Rp = {20000, 15000, 10000, 5000, 4000, 3000, 2000, 1000, 500};
constexpr Row kD2Syk = {5000, 4000, 3000, 2000, 1000, 500, 100, kNa, kNa};
constexpr Row kSvnRpBulk = {5000, 4000, 3000, 2000, 1000, 800, 100, 30, kNa};
constexpr Row kSvnRpGs = {20000, 15000, 10000, 5000, 4000, 3000, 500, 100, 50};
constexpr Row kSvnPlrbm = {35000, 24000, 40000, 16000, 10000, 3000, 500, kNa, kNa};
constexpr Row kSvnSyk = {5000, 4000, 3000, 2000, 1000, 500, 100, kNa, kNa};
constexpr Row kM2RpBulk = {5000, 4000, 3000, 2000, 1000, 500, 80, kNa, kNa};
constexpr Row kM2RpGs = {20000, 15000, 10000, 5000, 4000, 1000, 200, 100, 50};
constexpr Row kM2Plrbm = {35000, 24000, 20000, 20000, 10000, 1500, kNa, kNa, kNa};
constexpr Row kM2Syk = {5000, 4000, 3000, 2000, 1000, 500, 100, kNa, kNa};

const Row* table_row(Model model, WindowKind window, MarkerId marker) {
  const bool gs = window == WindowKind::GROUND_STATE;
  switch (model) {
    case Model::RP:
      switch (marker) {
        case MarkerId::D2:
        case MarkerId::I2: return &kD2Rp;
        case MarkerId::SVN: return gs ? &kSvnRpGs : &kSvnRpBulk;
        case MarkerId::M2: return gs ? &kM2RpGs : &kM2RpBulk;
      }
      break;
    case Model::PLRBM:
      if (gs) return nullptr;
      switch (marker) {
        case MarkerId::D2:
        case MarkerId::I2: return &kD2Rp;
        case MarkerId::SVN: return &kSvnPlrbm;
        case MarkerId::M2: return &kM2Plrbm;
      }
      break;
    case Model::SYK4_ISING:
      switch (marker) {
        case MarkerId::D2:
        case MarkerId::I2: return &kD2Syk;
        case MarkerId::SVN: return &kSvnSyk;
        case MarkerId::M2: return &kM2Syk;
      }
      break;
    default: break;
  }
  return nullptr;
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ArgumentError(where + " must be a JSON object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.contains(key)) throw ArgumentError("unknown config key '" + key + "' in " + where);
  }
}

std::map<int, int> parse_size_map(const json& j, const std::string& where) {
  if (!j.is_object()) throw ArgumentError(where + " must map sizes to counts");
  std::map<int, int> out;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int size = 0;
    try {
      size = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw ArgumentError(where + ": '" + key + "' is not a size");
    out[size] = value.get<int>();
  }
  return out;
}

}  // namespace

std::string to_string(Profile profile) { return profile == Profile::DESK ? "desk" : "full"; }

Profile profile_from_string(std::string_view name) {
  if (name == "full") return Profile::FULL;
  if (name == "desk") return Profile::DESK;
  throw ArgumentError("unknown profile '" + std::string(name) + "' (expected full or desk)");
}

std::optional<int> tabulated_samples(Model model, WindowKind window, MarkerId marker, int n) {
  const Row* row = table_row(model, window, marker);
  if (row == nullptr || n < kTableFirstN || n >= kTableFirstN + static_cast<int>(row->size())) {
    return std::nullopt;
  }
  const int v = (*row)[static_cast<std::size_t>(n - kTableFirstN)];
  if (v == kNa) return std::nullopt;
  return v;
}

std::vector<double> linear_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) {
    throw ArgumentError("grid needs step > 0 and stop >= start");
  }
  const auto n = std::llround((stop - start) / step);
  std::vector<double> g;
  for (long long i = 0; i <= n; ++i) g.push_back(start + static_cast<double>(i) * step);
  return g;
}

std::vector<int> default_sizes(Model model) {
  switch (model) {
    case Model::RP:
    case Model::PLRBM: return {4, 5, 6, 7, 8, 9, 10, 11, 12};
    case Model::SYK4_ISING: return {8, 10, 12, 14, 16, 18, 20};
    default: return {6};
  }
}

std::vector<double> default_grid(Model model) {
  switch (model) {
    case Model::RP:
    case Model::PLRBM: return linear_grid(0.0, 3.0, 0.1);
    case Model::SYK4_ISING: return linear_grid(0.0, 1.0, 0.02);
    default: return {0.0};
  }
}

RunConfig parse_config(const json& j) {
  check_keys(j, {"model", "sizes", "grid", "window", "markers", "samples", "seed", "bandwidth",
                 "coupling_j", "coupling_g", "transform_cap", "profile", "workers", "out",
                 "pauli", "haar", "syk"},
             "config");
  RunConfig c;
  if (j.contains("model")) c.model = model_from_string(j.at("model").get<std::string>());
  if (j.contains("sizes")) c.sizes = j.at("sizes").get<std::vector<int>>();
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (g.is_array()) {
      c.grid = g.get<std::vector<double>>();
    } else {
      check_keys(g, {"start", "stop", "step"}, "grid");
      c.grid = linear_grid(g.at("start").get<double>(), g.at("stop").get<double>(),
                           g.at("step").get<double>());
    }
  }
  if (j.contains("window")) c.window = WindowSpec::parse(j.at("window").get<std::string>());
  if (j.contains("markers")) {
    c.markers = MarkerSelection{false, false, false, false};
    for (const auto& m : j.at("markers")) c.markers.set(marker_from_string(m.get<std::string>()), true);
  }
  if (j.contains("samples")) {
    const json& s = j.at("samples");
    if (s.is_number_integer()) {
      c.samples_all = s.get<int>();
    } else if (s.is_object()) {
      for (const auto& [key, value] : s.items()) {
        if (key == "default") {
          c.samples_all = value.get<int>();
        } else if (value.is_number_integer()) {
          c.samples_marker[marker_from_string(key)] = value.get<int>();
        } else {
          c.samples_table[marker_from_string(key)] = parse_size_map(value, "samples." + key);
        }
      }
    } else {
      throw ArgumentError("samples must be an integer or an object");
    }
  }
  c.base_seed = get_or<std::uint64_t>(j, "seed", c.base_seed);
  c.bandwidth = get_or(j, "bandwidth", c.bandwidth);
  c.coupling_j = get_or(j, "coupling_j", c.coupling_j);
  c.coupling_g = get_or(j, "coupling_g", c.coupling_g);
  c.transform_cap = get_or(j, "transform_cap", c.transform_cap);
  if (j.contains("profile")) c.profile = profile_from_string(j.at("profile").get<std::string>());
  c.workers = get_or(j, "workers", c.workers);
  if (j.contains("out")) c.out = j.at("out").get<std::string>();
  if (j.contains("pauli")) {
    const json& p = j.at("pauli");
    check_keys(p, {"reference", "samples", "bins"}, "pauli");
    if (p.contains("reference")) c.pauli_reference = p.at("reference").get<double>();
    c.pauli_samples = get_or(p, "samples", c.pauli_samples);
    c.histogram_bins = get_or(p, "bins", c.histogram_bins);
  }
  if (j.contains("haar")) {
    const json& h = j.at("haar");
    check_keys(h, {"sizes", "classes", "samples"}, "haar");
    if (h.contains("sizes")) c.haar_sizes = h.at("sizes").get<std::vector<int>>();
    if (h.contains("classes")) {
      c.haar_classes.clear();
      for (const auto& s : h.at("classes")) {
        c.haar_classes.push_back(symmetry_class_from_string(s.get<std::string>()));
      }
    }
    c.haar_samples = get_or(h, "samples", c.haar_samples);
  }
  if (j.contains("syk")) {
    const json& s = j.at("syk");
    check_keys(s, {"degeneracy_samples", "sre_grid", "degeneracy_tolerance"}, "syk");
    c.degeneracy_samples = get_or(s, "degeneracy_samples", c.degeneracy_samples);
    c.sre_grid = get_or(s, "sre_grid", c.sre_grid);
    if (s.contains("degeneracy_tolerance")) {
      c.degeneracy_tolerance = s.at("degeneracy_tolerance").get<double>();
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ArgumentError("config " + path.string() + ": " + e.what());
  }
  return parse_config(j);
}

SweepConfig resolve_sweep(const RunConfig& run, std::vector<std::string>& warnings) {
  SweepConfig s;
  s.model = run.model;
  s.window = run.window;
  s.markers = run.markers;
  s.base_seed = run.base_seed;
  s.bandwidth = run.bandwidth;
  s.coupling_j = run.coupling_j;
  s.coupling_g = run.coupling_g;
  s.transform_cap = run.transform_cap;
  s.grid = run.grid.empty() ? default_grid(run.model) : run.grid;
  for (int size : run.sizes.empty() ? default_sizes(run.model) : run.sizes) {
    if (run.profile == Profile::DESK && s.reported_n(size) > kDeskMaxQubits) {
      warnings.push_back("desk profile drops size " + std::to_string(size));
      continue;
    }
    s.sizes.push_back(size);
  }

  for (MarkerId id : s.markers.ids()) {
    for (int size : s.sizes) {
      int count = 0;
      const auto t = run.samples_table.find(id);
      const auto m = run.samples_marker.find(id);
      if (t != run.samples_table.end() && t->second.contains(size)) {
        count = t->second.at(size);
      } else if (m != run.samples_marker.end()) {
        count = m->second;
      } else if (run.samples_all) {
        count = *run.samples_all;
      } else {
        const int n = s.reported_n(size);
        std::optional<int> tab = tabulated_samples(s.model, s.window.kind, id, n);
        if (!tab) {
          for (int lower = n - 1; lower >= kTableFirstN && !tab; --lower) {
            tab = tabulated_samples(s.model, s.window.kind, id, lower);
            if (tab) {
              warnings.push_back("no tabulated sample count for " + to_string(id) + " at N=" +
                                 std::to_string(n) + "; using the N=" + std::to_string(lower) +
                                 " count " + std::to_string(*tab));
            }
          }
        }
        if (!tab) {
          throw ArgumentError("no default sample count for model " + to_string(s.model) +
                              ", window " + s.window.tag() + ", marker " + to_string(id) +
                              ", N=" + std::to_string(n) + "; set \"samples\" in the config");
        }
        count = *tab;
        if (run.profile == Profile::DESK) {
          count = std::max(kDeskMinimumSamples, count / kDeskDivisor);
        }
      }
      s.samples.set(id, size, count);
    }
  }
  s.validate();
  return s;
}

nlohmann::json sweep_to_json(const SweepConfig& c) {
  json j;
  j["model"] = to_string(c.model);
  j["sizes"] = c.sizes;
  j["grid"] = c.grid;
  j["window"] = c.window.tag();
  json markers = json::array();
  for (MarkerId id : c.markers.ids()) markers.push_back(to_string(id));
  j["markers"] = markers;
  json samples = json::object();
  for (MarkerId id : c.markers.ids()) {
    json per = json::object();
    for (int size : c.sizes) per[std::to_string(size)] = c.samples.count(id, size);
    samples[to_string(id)] = per;
  }
  j["samples"] = samples;
  j["seed"] = c.base_seed;
  j["bandwidth"] = c.bandwidth;
  j["coupling_j"] = c.coupling_j;
  j["coupling_g"] = c.coupling_g;
  j["transform_cap"] = c.transform_cap;
  return j;
}

SweepConfig sweep_from_json(const nlohmann::json& j) {
  SweepConfig c;
  c.model = model_from_string(j.at("model").get<std::string>());
  c.sizes = j.at("sizes").get<std::vector<int>>();
  c.grid = j.at("grid").get<std::vector<double>>();
  c.window = WindowSpec::parse(j.at("window").get<std::string>());
  c.markers = MarkerSelection{false, false, false, false};
  for (const auto& m : j.at("markers")) c.markers.set(marker_from_string(m.get<std::string>()), true);
  for (const auto& [name, per] : j.at("samples").items()) {
    for (const auto& [size, count] : parse_size_map(per, "samples." + name)) {
      c.samples.set(marker_from_string(name), size, count);
    }
  }
  c.base_seed = j.at("seed").get<std::uint64_t>();
  c.bandwidth = j.at("bandwidth").get<double>();
  c.coupling_j = j.at("coupling_j").get<double>();
  c.coupling_g = j.at("coupling_g").get<double>();
  c.transform_cap = j.at("transform_cap").get<int>();
  return c;
}

std::string config_hash(const SweepConfig& config) {
  const std::string text = sweep_to_json(config).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qcx::cli
