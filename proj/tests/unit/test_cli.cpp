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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qcx/cli/commands.hpp"
#include "qcx/cli/config.hpp"
#include "qcx/cli/store.hpp"
#include "qcx/errors.hpp"

namespace qcx::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qcx_test_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.find(needle) != std::string::npos) ++n;
  }
  return n;
}

RunConfig small_run(const fs::path& out) {
  RunConfig r;
  r.model = Model::RP;
  r.sizes = {3, 4};
  r.grid = linear_grid(0.0, 3.0, 0.5);
  r.samples_all = 4;
  r.out = out;
  return r;
}

// ---- sample tables ----

TEST(SampleTables, SpotChecks) {
  EXPECT_EQ(tabulated_samples(Model::RP, WindowKind::GROUND_STATE, MarkerId::M2, 12), 50);
  EXPECT_EQ(tabulated_samples(Model::PLRBM, WindowKind::CENTRAL_FRACTION, MarkerId::SVN, 6), 40000);
  EXPECT_EQ(tabulated_samples(Model::RP, WindowKind::CENTRAL_FRACTION, MarkerId::D2, 4), 20000);
  EXPECT_EQ(tabulated_samples(Model::RP, WindowKind::CENTRAL_FRACTION, MarkerId::M2, 8), 1000);
  EXPECT_EQ(tabulated_samples(Model::RP, WindowKind::CENTRAL_FRACTION, MarkerId::SVN, 11), 30);
  EXPECT_EQ(tabulated_samples(Model::SYK4_ISING, WindowKind::GROUND_STATE, MarkerId::D2, 10), 100);
  EXPECT_EQ(tabulated_samples(Model::RP, WindowKind::CENTRAL_FRACTION, MarkerId::I2, 9), 3000);
}

TEST(SampleTables, MissingCells) {
  EXPECT_FALSE(tabulated_samples(Model::RP, WindowKind::CENTRAL_FRACTION, MarkerId::SVN, 12));
  EXPECT_FALSE(tabulated_samples(Model::PLRBM, WindowKind::CENTRAL_FRACTION, MarkerId::M2, 10));
  EXPECT_FALSE(tabulated_samples(Model::PLRBM, WindowKind::GROUND_STATE, MarkerId::D2, 6));
  EXPECT_FALSE(tabulated_samples(Model::GUE, WindowKind::CENTRAL_FRACTION, MarkerId::D2, 6));
  EXPECT_FALSE(tabulated_samples(Model::RP, WindowKind::CENTRAL_FRACTION, MarkerId::D2, 3));
  EXPECT_FALSE(tabulated_samples(Model::RP, WindowKind::CENTRAL_FRACTION, MarkerId::D2, 13));
}

TEST(ResolveSweep, FullProfileUsesTables) {
  RunConfig r;
  r.model = Model::RP;
  std::vector<std::string> warnings;
  const SweepConfig c = resolve_sweep(r, warnings);
  EXPECT_EQ(c.sizes, (std::vector<int>{4, 5, 6, 7, 8, 9, 10, 11, 12}));
  EXPECT_EQ(c.grid.size(), 31u);
  EXPECT_EQ(c.samples.count(MarkerId::D2, 4), 20000);
  EXPECT_EQ(c.samples.count(MarkerId::M2, 8), 1000);
  // "--" cells borrow the nearest smaller tabulated size, with a warning.
  EXPECT_EQ(c.samples.count(MarkerId::SVN, 12), 30);
  EXPECT_EQ(c.samples.count(MarkerId::M2, 11), 80);
  EXPECT_EQ(c.samples.count(MarkerId::M2, 12), 80);
  EXPECT_EQ(warnings.size(), 3u);
}

TEST(ResolveSweep, DeskProfile) {
  RunConfig r;
  r.model = Model::RP;
  r.profile = Profile::DESK;
  std::vector<std::string> warnings;
  const SweepConfig c = resolve_sweep(r, warnings);
  EXPECT_EQ(c.sizes.back(), 10);
  EXPECT_EQ(c.samples.count(MarkerId::D2, 4), 2000);
  EXPECT_EQ(c.samples.count(MarkerId::M2, 10), 30);
  EXPECT_EQ(c.samples.count(MarkerId::SVN, 10), 30);
  EXPECT_EQ(c.samples.count(MarkerId::M2, 8), 100);
}

TEST(ResolveSweep, DeskProfileCapsSykByQubits) {
  RunConfig r;
  r.model = Model::SYK4_ISING;
  r.window = WindowSpec::ground_state();
  r.profile = Profile::DESK;
  std::vector<std::string> warnings;
  const SweepConfig c = resolve_sweep(r, warnings);
  EXPECT_EQ(c.sizes, (std::vector<int>{8, 10, 12, 14, 16, 18, 20}));
  EXPECT_EQ(c.samples.count(MarkerId::D2, 8), 500);
  EXPECT_EQ(c.grid.size(), 51u);
}

TEST(ResolveSweep, ExplicitCountsWin) {
  RunConfig r;
  r.model = Model::RP;
  r.sizes = {4, 6};
  r.samples_marker[MarkerId::M2] = 7;
  r.samples_table[MarkerId::M2][6] = 9;
  r.profile = Profile::DESK;
  std::vector<std::string> warnings;
  const SweepConfig c = resolve_sweep(r, warnings);
  EXPECT_EQ(c.samples.count(MarkerId::M2, 4), 7);
  EXPECT_EQ(c.samples.count(MarkerId::M2, 6), 9);
  EXPECT_EQ(c.samples.count(MarkerId::D2, 6), 1000);
}

TEST(ResolveSweep, NoTableNoCount) {
  RunConfig r;
  r.model = Model::GUE;
  std::vector<std::string> warnings;
  EXPECT_THROW(resolve_sweep(r, warnings), ArgumentError);
  r.samples_all = 1;
  EXPECT_THROW(resolve_sweep(r, warnings), ArgumentError);
}

// ---- config file ----

TEST(Config, ParsesDocumentedSchema) {
  const json j = json::parse(R"({
    "model": "PLRBM", "sizes": [4, 5], "grid": {"start": 0, "stop": 1, "step": 0.25},
    "window": "lower:3", "markers": ["D2", "I2"],
    "samples": {"default": 12, "I2": 5, "D2": {"5": 8}},
    "seed": 99, "bandwidth": 2.0, "profile": "desk", "workers": 3, "out": "x",
    "pauli": {"reference": 1.5, "samples": 4, "bins": 51},
    "haar": {"sizes": [4, 6], "classes": ["GOE"], "samples": 100},
    "syk": {"degeneracy_samples": 3, "sre_grid": 50, "degeneracy_tolerance": 1e-6}
  })");
  const RunConfig r = parse_config(j);
  EXPECT_EQ(r.model, Model::PLRBM);
  EXPECT_EQ(r.grid, (std::vector<double>{0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(r.window.tag(), "lower:3");
  EXPECT_TRUE(r.markers.i2);
  EXPECT_FALSE(r.markers.m2);
  EXPECT_EQ(r.base_seed, 99u);
  EXPECT_EQ(r.profile, Profile::DESK);
  EXPECT_EQ(r.haar_classes, (std::vector<SymmetryClass>{SymmetryClass::GOE}));
  EXPECT_EQ(*r.degeneracy_tolerance, 1e-6);
  std::vector<std::string> warnings;
  const SweepConfig c = resolve_sweep(r, warnings);
  EXPECT_EQ(c.samples.count(MarkerId::D2, 4), 12);
  EXPECT_EQ(c.samples.count(MarkerId::D2, 5), 8);
  EXPECT_EQ(c.samples.count(MarkerId::I2, 4), 5);
  EXPECT_EQ(c.bandwidth, 2.0);
}

TEST(Config, RejectsUnknownKeys) {
  EXPECT_THROW(parse_config(json::parse(R"({"modle": "RP"})")), ArgumentError);
  EXPECT_THROW(parse_config(json::parse(R"({"haar": {"size": [4]}})")), ArgumentError);
  EXPECT_THROW(parse_config(json::parse(R"({"samples": {"D2": {"four": 3}}})")), ArgumentError);
  EXPECT_THROW(parse_config(json::parse(R"({"profile": "laptop"})")), ArgumentError);
}

TEST(Config, LinearGridHasNoDrift) {
  const auto g = linear_grid(0.0, 3.0, 0.1);
  ASSERT_EQ(g.size(), 31u);
  EXPECT_EQ(g[30], 30 * 0.1);
  EXPECT_THROW(linear_grid(0, 1, 0), ArgumentError);
}

TEST(Config, CanonicalJsonRoundTripAndHash) {
  std::vector<std::string> warnings;
  RunConfig r = small_run("unused");
  r.markers.i2 = true;
  r.samples_table[MarkerId::D2][4] = 6;
  const SweepConfig c = resolve_sweep(r, warnings);
  const SweepConfig back = sweep_from_json(json::parse(sweep_to_json(c).dump()));
  EXPECT_EQ(sweep_to_json(back), sweep_to_json(c));
  EXPECT_EQ(config_hash(back), config_hash(c));
  EXPECT_EQ(config_hash(c).size(), 16u);
  SweepConfig other = c;
  other.base_seed += 1;
  EXPECT_NE(config_hash(other), config_hash(c));
}

// ---- CSV ----

TEST(Csv, DoublesRoundTrip) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng) * std::pow(10.0, i % 20 - 10);
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  }
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Csv, CurvesRoundTrip) {
  std::vector<std::string> warnings;
  const SweepConfig c = resolve_sweep(small_run("unused"), warnings);
  const auto curves = sweep(c);
  const auto back = parse_curves_csv(curves_csv(curves));
  ASSERT_EQ(back.size(), curves.size());
  for (const auto& [key, curve] : curves) {
    const SweepCurve& b = back.at(key);
    EXPECT_EQ(b.model, curve.model);
    EXPECT_EQ(b.grid, curve.grid);
    EXPECT_EQ(b.mean, curve.mean);
    EXPECT_EQ(b.std_error, curve.std_error);
    EXPECT_EQ(b.n_samples, curve.n_samples);
  }
}

TEST(Csv, MarkerRowsRoundTrip) {
  std::vector<std::string> warnings;
  const SweepConfig c = resolve_sweep(small_run("unused"), warnings);
  const auto rows = sweep_rows(c);
  std::string text(kMarkersHeader);
  text += '\n';
  for (const auto& r : rows) text += marker_row_line(c, r);
  const auto back = parse_marker_rows(c, text);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].size, rows[i].size);
    EXPECT_EQ(back[i].param_index, rows[i].param_index);
    EXPECT_EQ(back[i].sample_index, rows[i].sample_index);
    EXPECT_EQ(back[i].seed, rows[i].seed);
    EXPECT_EQ(back[i].marker, rows[i].marker);
    EXPECT_EQ(back[i].value, rows[i].value);
  }
  EXPECT_THROW(parse_marker_rows(c, "bad header\n"), StoreError);
  EXPECT_THROW(parse_marker_rows(c, text + "RP,3,0.25,0,1,central:0.2,D2,0.5\n"), StoreError);
}

// ---- store ----

TEST(Store, RowAccounting) {
  const fs::path dir = scratch("rows");
  RunConfig r = small_run(dir);
  r.sizes = {4, 6};
  r.grid = linear_grid(0.0, 3.0, 0.25);
  r.samples_all = 50;
  const SweepRunResult res = cmd_sweep(r);
  EXPECT_TRUE(res.complete);
  const std::string text = slurp(dir / kMarkersFile);
  EXPECT_EQ(text.substr(0, kMarkersHeader.size()), kMarkersHeader);
  for (const char* m : {",D2,", ",SVN,", ",M2,"}) EXPECT_EQ(count_lines(text, m), 2u * 13u * 50u);
  EXPECT_EQ(count_lines(text, ",I2,"), 0u);
  const std::string curves = slurp(dir / kCurvesFile);
  EXPECT_EQ(curves.substr(0, kCurvesHeader.size()), kCurvesHeader);
  EXPECT_EQ(count_lines(curves, "RP,"), 3u * 2u * 13u);
  const json m = json::parse(slurp(dir / kManifestFile));
  EXPECT_TRUE(m.at("complete").get<bool>());
  EXPECT_EQ(m.at("tasks_total").get<int>(), 2 * 13 * 50);
  EXPECT_EQ(m.at("completion").at("6").at("done").get<int>(), 13 * 50);
}

TEST(Store, ResumeOfCompleteRunComputesNothing) {
  const fs::path dir = scratch("idem");
  RunConfig r = small_run(dir);
  cmd_sweep(r);
  const std::string curves = slurp(dir / kCurvesFile);
  const std::string markers = slurp(dir / kMarkersFile);
  r.resume = true;
  const SweepRunResult again = cmd_sweep(r);
  EXPECT_EQ(again.computed_tasks, 0u);
  EXPECT_EQ(again.skipped_tasks, again.total_tasks);
  EXPECT_EQ(slurp(dir / kCurvesFile), curves);
  EXPECT_EQ(slurp(dir / kMarkersFile), markers);
}

TEST(Store, WorkerCountIsInvisible) {
  const fs::path a = scratch("w1"), b = scratch("w4");
  RunConfig r = small_run(a);
  r.workers = 1;
  cmd_sweep(r);
  r.out = b;
  r.workers = 4;
  cmd_sweep(r);
  EXPECT_EQ(slurp(a / kMarkersFile), slurp(b / kMarkersFile));
  EXPECT_EQ(slurp(a / kCurvesFile), slurp(b / kCurvesFile));
  EXPECT_EQ(slurp(a / kManifestFile), slurp(b / kManifestFile));
}

TEST(Store, InterruptedRunResumesByteForByte) {
  const fs::path full = scratch("full"), part = scratch("part");
  RunConfig r = small_run(full);
  cmd_sweep(r);
  r.out = part;
  r.workers = 3;
  for (std::size_t stop : {5u, 12u, 23u}) {  // new tasks per invocation
    CommandContext ctx;
    ctx.stop_after = stop;
    const SweepRunResult res = cmd_sweep(r, ctx);
    EXPECT_FALSE(res.complete);
    EXPECT_FALSE(fs::exists(part / kCurvesFile));
    // Simulate a kill in the middle of a row.
    std::ofstream(part / kMarkersFile, std::ios::app) << "RP,4,1.5,2,123,cen";
    r.resume = true;
  }
  const SweepRunResult res = cmd_sweep(r);
  EXPECT_TRUE(res.complete);
  EXPECT_EQ(res.skipped_tasks, 40u);
  EXPECT_EQ(slurp(part / kMarkersFile), slurp(full / kMarkersFile));
  EXPECT_EQ(slurp(part / kCurvesFile), slurp(full / kCurvesFile));
}

TEST(Store, ResumeWithOtherConfigAborts) {
  const fs::path dir = scratch("mismatch");
  RunConfig r = small_run(dir);
  CommandContext ctx;
  ctx.stop_after = 3;
  cmd_sweep(r, ctx);
  r.resume = true;
  r.base_seed = 5;
  EXPECT_THROW(cmd_sweep(r), StoreError);
}

TEST(Store, ResumeWithoutManifestStartsFresh) {
  const fs::path dir = scratch("fresh");
  RunConfig r = small_run(dir);
  r.resume = true;
  const SweepRunResult res = cmd_sweep(r);
  EXPECT_TRUE(res.complete);
  EXPECT_EQ(res.skipped_tasks, 0u);
}

TEST(Store, UnwritableOutput) {
  const fs::path file = scratch("plainfile");
  std::ofstream(file) << "x";
  RunConfig r = small_run(file / "sub");
  EXPECT_THROW(cmd_sweep(r), StoreError);
}

TEST(Store, RealizationFailureAbortsWithSeed) {
  const fs::path dir = scratch("fail");
  RunConfig r = small_run(dir);
  r.transform_cap = 3;  // the N=4 tasks exceed the SRE cap
  EXPECT_THROW(cmd_sweep(r), RealizationError);
}

// ---- analysis commands ----

SweepConfig synthetic_config(WindowSpec window, std::vector<int> sizes) {
  SweepConfig c;
  c.model = Model::RP;
  c.sizes = std::move(sizes);
  c.grid = linear_grid(0.0, 3.0, 0.05);
  c.window = window;
  c.markers = MarkerSelection{true, false, false, false};
  c.samples = SampleCounts::uniform(2);
  return c;
}

std::vector<MarkerRow> rows_from(const SweepConfig& c,
                                 const std::function<double(int, double)>& f) {
  std::vector<MarkerRow> rows;
  for (int n : c.sizes) {
    for (std::size_t p = 0; p < c.grid.size(); ++p) {
      for (std::size_t s = 0; s < 2; ++s) {
        const double v = f(n, c.grid[p]) + (s == 0 ? 0.25 : -0.25);
        rows.push_back({n, p, s, s, MarkerId::D2, v});
      }
    }
  }
  return rows;
}

TEST(Scaling, SyntheticGroundStoreRecoversQuadratic) {
  // Derivative -(x - L_N)^2 + K peaks at L_N = a + b/N + c/N^2.
  const double a = 1.3, b = 2.0, c = -3.0;
  const fs::path dir = scratch("scaling_gs");
  const SweepConfig cfg = synthetic_config(WindowSpec::ground_state(), {4, 5, 6, 8, 10, 12});
  write_store(cfg, dir, rows_from(cfg, [&](int n, double x) {
    const double loc = a + b / n + c / (double(n) * n);
    return -std::pow(x - loc, 3) / 3.0 + 100.0 * x;
  }));
  const json out = cmd_scaling(dir);
  ASSERT_EQ(out.at("results").size(), 1u);
  const json& t = out.at("results")[0].at("transition");
  EXPECT_EQ(t.at("branch"), "UNCONSTRAINED");
  EXPECT_NEAR(t.at("fit").at("a").get<double>(), a, 1e-9);
  EXPECT_NEAR(t.at("fit").at("b").get<double>(), b, 1e-7);
  EXPECT_NEAR(t.at("fit").at("c").get<double>(), c, 1e-6);
  EXPECT_TRUE(fs::exists(dir / kScalingFile));
}

TEST(Scaling, BulkStoreReportsBothBranches) {
  const fs::path dir = scratch("scaling_bulk");
  const SweepConfig cfg = synthetic_config(WindowSpec::central(0.2), {4, 6, 8, 10});
  write_store(cfg, dir, rows_from(cfg, [](int n, double x) {
    return -0.5 * std::sqrt(M_PI) * std::erf(std::sqrt(double(n)) * (x - 1.5));
  }));
  const json out = cmd_scaling(dir);
  const json& r = out.at("results")[0];
  EXPECT_EQ(r.at("pairs_first").size(), 3u);
  ASSERT_FALSE(r.at("first").is_null());
  ASSERT_FALSE(r.at("second").is_null());
  EXPECT_LT(r.at("first").at("transition").get<double>(), 1.5);
  EXPECT_GT(r.at("second").at("transition").get<double>(), 1.5);
  EXPECT_EQ(r.at("first").at("branch"), "FIRST");
  ScalingOptions only;
  only.marker = MarkerId::M2;
  EXPECT_THROW(cmd_scaling(dir, only), ArgumentError);
}

TEST(Scaling, IncompleteStoreRejected) {
  const fs::path dir = scratch("scaling_partial");
  CommandContext ctx;
  ctx.stop_after = 2;
  cmd_sweep(small_run(dir), ctx);
  EXPECT_THROW(cmd_scaling(dir), StoreError);
  EXPECT_THROW(cmd_selfavg(dir), StoreError);
}

TEST(SelfAvg, ReportsRatiosAndExponents) {
  const fs::path dir = scratch("selfavg");
  RunConfig r = small_run(dir);
  r.sizes = {3, 4, 5};
  r.grid = {0.0, 3.0};
  r.samples_all = 10;
  cmd_sweep(r);
  const json out = cmd_selfavg(dir);
  ASSERT_EQ(out.at("markers").size(), 3u);
  for (const json& m : out.at("markers")) {
    EXPECT_EQ(m.at("points").size(), 6u);
    EXPECT_EQ(m.at("beta").size(), 2u);
  }
  const std::string csv = slurp(dir / kSelfAvgCsvFile);
  EXPECT_EQ(csv.substr(0, kSelfAvgHeader.size()), kSelfAvgHeader);
  EXPECT_EQ(count_lines(csv, "RP,"), 18u);
}

TEST(PauliSpectrumCommand, FilesAndOrdering) {
  const fs::path dir = scratch("pauli");
  RunConfig r = small_run(dir);
  r.sizes = {3};
  r.grid = {0.0, 10.0};
  r.pauli_samples = 3;
  r.pauli_reference = 0.0;
  const json out = cmd_pauli_spectrum(r);
  const std::string spec = slurp(dir / kPauliSpectrumFile);
  EXPECT_EQ(spec.substr(0, kPauliSpectrumHeader.size()), kPauliSpectrumHeader);
  EXPECT_EQ(count_lines(spec, "RP,3,"), 2u * 64u);
  EXPECT_NE(spec.find("RP,3,0,0,0,III,"), std::string::npos);
  EXPECT_EQ(count_lines(slurp(dir / kHistogramFile), "RP,3,"), 2u * kDefaultHistogramBins);
  const json& spectra = out.at("spectra");
  ASSERT_EQ(spectra.size(), 2u);
  // Localized eigenstates are close to basis states: weight sits on {I,Z}^N.
  EXPECT_GT(spectra[1].at("diagonal_weight").get<double>(), 0.99);
  EXPECT_LT(spectra[0].at("diagonal_weight").get<double>(), 0.5);
}

TEST(PauliSpectrumCommand, TransformCap) {
  RunConfig r = small_run(scratch("pauli_cap"));
  r.sizes = {4};
  r.grid = {0.0};
  r.transform_cap = 3;
  EXPECT_THROW(cmd_pauli_spectrum(r), ResourceError);
}

TEST(HaarCheckCommand, SmallRun) {
  RunConfig r;
  r.out = scratch("haar");
  r.haar_sizes = {4};
  r.haar_samples = 400;
  const HaarCheckReport rep = cmd_haar_check(r);
  EXPECT_TRUE(rep.pass);
  std::map<std::string, double> m2;
  for (const json& row : rep.report.at("rows")) {
    if (row.at("marker") == "M2") m2[row.at("class")] = row.at("value").get<double>();
  }
  EXPECT_LT(m2.at("GOE"), m2.at("GUE"));
  EXPECT_TRUE(fs::exists(r.out / kHaarCheckFile));
}

TEST(SykCommand, DegeneracyReport) {
  RunConfig r;
  r.model = Model::SYK4_ISING;
  r.sizes = {8, 10};
  r.grid = {0.0, 0.5, 1.0};
  r.samples_all = 2;
  r.degeneracy_samples = 2;
  r.sre_grid = 20;
  r.out = scratch("syk");
  const json rep = cmd_syk(r);
  ASSERT_TRUE(rep.at("complete").get<bool>());
  const json& sizes = rep.at("sizes");
  ASSERT_EQ(sizes.size(), 2u);
  EXPECT_EQ(sizes[0].at("class"), "GOE");
  EXPECT_EQ(sizes[1].at("class"), "GUE");
  for (const json& s : sizes[0].at("lambda0")) EXPECT_EQ(s.at("multiplicity"), 1);
  for (const json& s : sizes[1].at("lambda0")) EXPECT_EQ(s.at("multiplicity"), 2);
  for (const json& e : sizes) {
    const int n = e.at("N").get<int>();
    for (const json& st : e.at("lambda1").at("parity_states")) {
      EXPECT_NEAR(st.at("D2").get<double>(), 1.0 / n, 1e-12);
      EXPECT_NEAR(st.at("M2").get<double>(), 0.0, 1e-12);
    }
  }
  EXPECT_NE(slurp(r.out / kMarkersFile).find("SYK4_ISING,5,0.5,"), std::string::npos);
  r.model = Model::RP;
  EXPECT_THROW(cmd_syk(r), ArgumentError);
}

}  // namespace
}  // namespace qcx::cli
