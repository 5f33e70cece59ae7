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

#include "qcx/cli/store.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>

#include "qcx/analysis/parallel.hpp"
#include "qcx/cli/config.hpp"
#include "qcx/errors.hpp"

#ifndef QCX_VERSION
#define QCX_VERSION "unknown"
#endif

namespace qcx::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t k = line.find(sep, start);
    out.push_back(line.substr(start, k == std::string_view::npos ? k : k - start));
    if (k == std::string_view::npos) return out;
    start = k + 1;
  }
}

bool parse_double(std::string_view s, double& out) {
  const std::string tmp(s);
  char* end = nullptr;
  out = std::strtod(tmp.c_str(), &end);
  return !tmp.empty() && end == tmp.c_str() + tmp.size();
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  const std::string tmp(s);
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(tmp.c_str(), &end, 10);
  if (tmp.empty() || tmp[0] == '-' || end != tmp.c_str() + tmp.size() || errno != 0) return false;
  out = static_cast<Int>(v);
  return true;
}

int size_of_reported(const SweepConfig& config, int n) {
  return config.model == Model::SYK4_ISING ? 2 * n : n;
}

std::string row_prefix(const SweepConfig& config, int size, std::size_t param_index,
                       std::size_t sample_index, std::uint64_t seed, MarkerId marker) {
  std::string s = to_string(config.model);
  s += ',';
  s += std::to_string(config.reported_n(size));
  s += ',';
  s += format_double(config.grid[param_index]);
  s += ',';
  s += std::to_string(sample_index);
  s += ',';
  s += std::to_string(seed);
  s += ',';
  s += config.window.tag();
  s += ',';
  s += to_string(marker);
  s += ',';
  return s;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StoreError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Byte offset just past the last complete task in `text`, and that task count.
std::pair<std::size_t, std::size_t> committed_prefix(const SweepConfig& config,
                                                      const std::vector<RealizationTask>& tasks,
                                                      std::string_view text) {
  const std::string header = std::string(kMarkersHeader) + "\n";
  if (text.substr(0, header.size()) != header) return {0, 0};
  std::size_t pos = header.size();
  std::size_t done = 0;
  for (const RealizationTask& t : tasks) {
    std::size_t p = pos;
    bool ok = true;
    for (MarkerId id : t.markers.ids()) {
      const std::size_t eol = text.find('\n', p);
      if (eol == std::string_view::npos) {
        ok = false;
        break;
      }
      const std::string_view line = text.substr(p, eol - p);
      const std::string prefix =
          row_prefix(config, t.size, t.param_index, t.sample_index, t.seed, id);
      double v = 0.0;
      if (line.substr(0, prefix.size()) != prefix || !parse_double(line.substr(prefix.size()), v)) {
        ok = false;
        break;
      }
      p = eol + 1;
    }
    if (!ok) break;
    pos = p;
    ++done;
  }
  return {pos, done};
}

json completion_map(const SweepConfig& config, const std::vector<RealizationTask>& tasks,
                     std::size_t done) {
  std::map<int, std::pair<std::size_t, std::size_t>> per;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& [d, total] = per[config.reported_n(tasks[i].size)];
    ++total;
    if (i < done) ++d;
  }
  json j = json::object();
  for (const auto& [n, c] : per) j[std::to_string(n)] = {{"done", c.first}, {"total", c.second}};
  return j;
}

void write_manifest(const fs::path& dir, const SweepConfig& config, const std::string& command,
                    const std::vector<RealizationTask>& tasks, std::size_t done) {
  json m;
  m["format"] = 1;
  m["command"] = command;
  m["code_version"] = QCX_VERSION;
  m["config_hash"] = config_hash(config);
  m["config"] = sweep_to_json(config);
  m["tasks_total"] = tasks.size();
  m["tasks_completed"] = done;
  m["completion"] = completion_map(config, tasks, done);
  m["complete"] = done == tasks.size();
  write_file_atomic(dir / kManifestFile, m.dump(2) + "\n");
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const fs::path& path, std::string_view text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StoreError("cannot write " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw StoreError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw StoreError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::string marker_row_line(const SweepConfig& config, const MarkerRow& row) {
  return row_prefix(config, row.size, row.param_index, row.sample_index, row.seed, row.marker) +
         format_double(row.value) + "\n";
}

std::vector<MarkerRow> parse_marker_rows(const SweepConfig& config, std::string_view text) {
  std::map<double, std::size_t> index_of;
  for (std::size_t i = 0; i < config.grid.size(); ++i) index_of[config.grid[i]] = i;
  const auto lines = split(text, '\n');
  if (lines.empty() || lines[0] != kMarkersHeader) throw StoreError("markers.csv: bad header");
  std::vector<MarkerRow> rows;
  const std::string model = to_string(config.model);
  const std::string window = config.window.tag();
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k].empty() && k + 1 == lines.size()) break;
    const auto f = split(lines[k], ',');
    const std::string where = "markers.csv line " + std::to_string(k + 1);
    if (f.size() != 8) throw StoreError(where + ": expected 8 fields");
    if (f[0] != model || f[5] != window) throw StoreError(where + ": row from another run");
    MarkerRow r;
    int n = 0;
    double control = 0.0;
    if (!parse_int(f[1], n) || !parse_double(f[2], control) || !parse_int(f[3], r.sample_index) ||
        !parse_int(f[4], r.seed) || !parse_double(f[7], r.value)) {
      throw StoreError(where + ": malformed number");
    }
    const auto it = index_of.find(control);
    if (it == index_of.end()) throw StoreError(where + ": control value not on the grid");
    r.size = size_of_reported(config, n);
    r.param_index = it->second;
    try {
      r.marker = marker_from_string(f[6]);
    } catch (const std::exception&) {
      throw StoreError(where + ": unknown marker");
    }
    rows.push_back(r);
  }
  return rows;
}

std::string curves_csv(const std::map<CurveKey, SweepCurve>& curves) {
  std::string s(kCurvesHeader);
  s += '\n';
  for (const auto& [key, c] : curves) {
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      s += to_string(c.model) + ',' + std::to_string(c.n_qubits) + ',' + to_string(c.marker) +
           ',' + format_double(c.grid[i]) + ',' + format_double(c.mean[i]) + ',' +
           format_double(c.std_error[i]) + ',' + std::to_string(c.n_samples[i]) + '\n';
    }
  }
  return s;
}

std::map<CurveKey, SweepCurve> parse_curves_csv(std::string_view text) {
  const auto lines = split(text, '\n');
  if (lines.empty() || lines[0] != kCurvesHeader) throw StoreError("curves.csv: bad header");
  std::map<CurveKey, SweepCurve> out;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k].empty() && k + 1 == lines.size()) break;
    const auto f = split(lines[k], ',');
    const std::string where = "curves.csv line " + std::to_string(k + 1);
    if (f.size() != 7) throw StoreError(where + ": expected 7 fields");
    int n = 0, count = 0;
    double x = 0, mean = 0, se = 0;
    if (!parse_int(f[1], n) || !parse_double(f[3], x) || !parse_double(f[4], mean) ||
        !parse_double(f[5], se) || !parse_int(f[6], count)) {
      throw StoreError(where + ": malformed number");
    }
    const MarkerId marker = marker_from_string(f[2]);
    SweepCurve& c = out[{marker, n}];
    c.model = model_from_string(f[0]);
    c.marker = marker;
    c.n_qubits = n;
    c.grid.push_back(x);
    c.mean.push_back(mean);
    c.std_error.push_back(se);
    c.n_samples.push_back(count);
  }
  return out;
}

SweepRunResult run_store_sweep(const SweepConfig& config, const fs::path& dir,
                               const SweepRunOptions& options) {
  const auto log = [&](const std::string& msg) {
    if (options.log) options.log(msg);
  };
  const std::vector<RealizationTask> tasks = enumerate_tasks(config);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw StoreError("cannot create output directory " + dir.string() + ": " + ec.message());
  }
  const fs::path markers = dir / kMarkersFile;
  const fs::path manifest = dir / kManifestFile;

  SweepRunResult result;
  result.total_tasks = tasks.size();
  if (options.resume && fs::exists(manifest)) {
    const json m = json::parse(read_text(manifest));
    const std::string want = config_hash(config);
    if (m.value("config_hash", std::string()) != want) {
      throw StoreError("config hash mismatch: store " + dir.string() + " was written with " +
                       m.value("config_hash", std::string("?")) + ", current config is " + want);
    }
    if (fs::exists(markers)) {
      const std::string text = read_text(markers);
      const auto [offset, done] = committed_prefix(config, tasks, text);
      if (offset == 0) {
        log("markers.csv has no usable header; starting over");
      } else {
        if (offset < text.size()) {
          log("dropping " + std::to_string(text.size() - offset) +
              " bytes of incomplete rows at the end of markers.csv");
        }
        fs::resize_file(markers, offset);
        result.skipped_tasks = done;
      }
    }
  } else if (options.resume) {
    log("no manifest in " + dir.string() + "; starting a fresh run");
  }
  fs::remove(dir / kCurvesFile, ec);
  if (result.skipped_tasks == 0) {
    write_file_atomic(markers, std::string(kMarkersHeader) + "\n");
  } else {
    log("resuming after " + std::to_string(result.skipped_tasks) + " of " +
        std::to_string(tasks.size()) + " tasks");
  }
  write_manifest(dir, config, options.command, tasks, result.skipped_tasks);

  std::FILE* out = std::fopen(markers.c_str(), "ab");
  if (out == nullptr) throw StoreError("cannot append to " + markers.string());
  const std::size_t first = result.skipped_tasks;
  const std::size_t remaining = tasks.size() - first;
  const std::size_t limit = options.stop_after ? std::min(*options.stop_after, remaining) : remaining;
  using clock = std::chrono::steady_clock;
  auto last_flush = clock::now();
  std::size_t written = 0;
  try {
    written = run_ordered(
        limit, options.workers,
        [&](std::size_t i) { return compute_realization(config, tasks[first + i]); },
        [&](std::size_t i, const MarkerRecord& rec) {
          std::string chunk;
          for (const MarkerRow& row : rows_of(tasks[first + i], rec)) {
            chunk += marker_row_line(config, row);
          }
          if (std::fwrite(chunk.data(), 1, chunk.size(), out) != chunk.size()) {
            throw StoreError("write failed for " + markers.string());
          }
          const auto now = clock::now();
          if (now - last_flush > std::chrono::seconds(10)) {
            std::fflush(out);
            write_manifest(dir, config, options.command, tasks, first + i + 1);
            log(options.command + ": " + std::to_string(first + i + 1) + "/" +
                std::to_string(tasks.size()) + " tasks");
            last_flush = now;
          }
          return true;
        });
  } catch (...) {
    std::fclose(out);
    throw;
  }
  if (std::fclose(out) != 0) throw StoreError("cannot close " + markers.string());
  result.computed_tasks = written;
  const std::size_t done = first + written;
  write_manifest(dir, config, options.command, tasks, done);
  result.complete = done == tasks.size();
  if (!result.complete) {
    log(options.command + ": stopped after " + std::to_string(done) + "/" +
        std::to_string(tasks.size()) + " tasks; rerun with --resume to finish");
    return result;
  }
  result.curves = aggregate(config, parse_marker_rows(config, read_text(markers)));
  write_file_atomic(dir / kCurvesFile, curves_csv(result.curves));
  return result;
}

std::map<CurveKey, SweepCurve> write_store(const SweepConfig& config, const fs::path& dir,
                                           std::vector<MarkerRow> rows,
                                           const std::string& command) {
  const std::vector<RealizationTask> tasks = enumerate_tasks(config);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw StoreError("cannot create output directory " + dir.string() + ": " + ec.message());
  }
  std::sort(rows.begin(), rows.end(), [](const MarkerRow& a, const MarkerRow& b) {
    return std::tie(a.size, a.param_index, a.sample_index, a.marker) <
           std::tie(b.size, b.param_index, b.sample_index, b.marker);
  });
  std::string text(kMarkersHeader);
  text += '\n';
  for (const MarkerRow& r : rows) text += marker_row_line(config, r);
  write_file_atomic(dir / kMarkersFile, text);
  auto curves = aggregate(config, std::move(rows));
  write_file_atomic(dir / kCurvesFile, curves_csv(curves));
  write_manifest(dir, config, command, tasks, tasks.size());
  return curves;
}

StoreContents read_store(const fs::path& dir) {
  StoreContents s;
  try {
    s.manifest = json::parse(read_text(dir / kManifestFile));
    s.config = sweep_from_json(s.manifest.at("config"));
  } catch (const json::exception& e) {
    throw StoreError("bad manifest in " + dir.string() + ": " + e.what());
  }
  s.rows = parse_marker_rows(s.config, read_text(dir / kMarkersFile));
  return s;
}

}  // namespace qcx::cli
