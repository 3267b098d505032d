// Copyright 2026 The scramble Authors
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


#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "scramble/error.hpp"
#include "scramble/io.hpp"

using namespace scramble;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Fresh scratch directory under the system temp path.
fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("scramble_unit_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

SimConfig small_config() {
  SimConfig c;
  c.n_sites = 3;
  c.t_max = 1.0;
  c.sample_every = 50;
  return c;
}

}  // namespace

TEST_CASE("defaults and overrides") {
  const SimConfig d = parse_config(std::nullopt, {});
  CHECK(d.n_sites == 8);
  CHECK(d.g == -1.05);
  CHECK(d.h == 0.5);
  CHECK(d.channel == ChannelKind::kNone);
  CHECK(d.dt == 0.005);
  CHECK(d.resolved_a_sites().size() == 8);

  const SimConfig o = parse_config(std::nullopt, {{"channel", "phase"}, {"gamma", "0.1"}, {"a_sites", "2,4"}});
  CHECK(o.channel == ChannelKind::kPhase);
  CHECK(o.gamma == 0.1);
  CHECK(o.resolved_a_sites() == std::vector<int>{2, 4});
}

TEST_CASE("config text with comments and errors") {
  const SimConfig c = parse_config_text("# header\nn_sites = 5\n\nt_max=2  # trailing\ngammas = 0.1, 0.2\n");
  CHECK(c.n_sites == 5);
  CHECK(c.t_max == 2.0);
  CHECK(c.gammas == std::vector<double>{0.1, 0.2});

  CHECK_THROWS_WITH_AS(parse_config_text("n_sites=4\nbogus=1\n"), doctest::Contains("line 2"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("n_sites\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("gamma=abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("channel=sideways\n"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(std::nullopt, {{"n_sites", "13"}}), "n_sites out of range [1,12]", ConfigError);
  CHECK_THROWS_AS(parse_config(std::nullopt, {{"n_sites", "4"}, {"b_site", "5"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(std::nullopt, {{"dt", "0"}}), ConfigError);
  CHECK_THROWS_AS(parse_config(fs::path("/nonexistent/scramble.cfg"), {}), ConfigError);
}

TEST_CASE("snapshot round-trips through the parser") {
  SimConfig c = small_config();
  c.channel = ChannelKind::kDepolarizing;
  c.gamma = 0.13;
  c.gammas = {0.05, 0.1};
  std::string text;
  for (const auto& [k, v] : c.snapshot()) text += k + "=" + v + "\n";
  const SimConfig back = parse_config_text(text);
  CHECK(back.snapshot() == c.snapshot());
  CHECK(c.snapshot().size() == 14);
}

TEST_CASE("number formatting") {
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(kInvalidValue) == "NA");
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("grid CSV layout and round trip") {
  const fs::path dir = scratch("csv");
  HeatmapSeries s({0.0, 0.5}, {2, 1}, "demo");
  s.config = {{"n_sites", "2"}};
  s.at(0, 0) = 0.25;
  s.at(0, 1) = 1.0;
  s.at(1, 0) = kInvalidValue;
  s.at(1, 1) = -0.5;
  write_grid_csv(s, dir / "g.csv");
  const auto lines = lines_of(slurp(dir / "g.csv"));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "# config: n_sites=2 series=demo");
  CHECK(lines[1] == "t,site,value");
  CHECK(lines[2] == "0,1,1");
  CHECK(lines[3] == "0,2,0.25");
  CHECK(lines[4] == "0.5,1,-0.5");
  CHECK(lines[5] == "0.5,2,NA");

  const HeatmapSeries back = read_grid_csv(dir / "g.csv");
  CHECK(back.label == "demo");
  CHECK(back.sites == std::vector<int>{1, 2});
  CHECK(back.at(0, 1) == 0.25);
  CHECK(std::isnan(back.at(1, 1)));
  CHECK_FALSE(fs::exists(dir / "g.csv.tmp"));

  HeatmapSeries bad = s;
  bad.values.pop_back();
  CHECK_THROWS_AS(write_grid_csv(bad, dir / "bad.csv"), InvalidArgument);
  bad = s;
  bad.at(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(write_grid_csv(bad, dir / "bad.csv"), InvalidArgument);
}

TEST_CASE("series and table CSV") {
  const fs::path dir = scratch("series");
  Series1D s;
  s.x_name = "t";
  s.y_name = "norm";
  s.x = {0.0, 1.0};
  s.y = {1.0, 0.5};
  s.label = "n";
  write_series_csv(s, dir / "s.csv");
  CHECK(lines_of(slurp(dir / "s.csv")) == std::vector<std::string>{"# config: series=n", "t,norm", "0,1", "1,0.5"});
  write_table_csv({"a", "b"}, {{"1", "2"}}, {}, dir / "t.csv");
  CHECK(lines_of(slurp(dir / "t.csv")).back() == "1,2");
  CHECK_THROWS_AS(write_table_csv({"a", "b"}, {{"1"}}, {}, dir / "t.csv"), InvalidArgument);
}

TEST_CASE("SVG output is deterministic and marks invalid cells") {
  HeatmapSeries s({0.0, 1.0}, {1, 2}, "demo");
  s.values = {1.0, 0.5, kInvalidValue, 0.0};
  const std::string a = heatmap_svg(s);
  CHECK(a == heatmap_svg(s));
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("#bbbbbb") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);

  LinePlot p;
  p.title = "fit";
  p.log_x = p.log_y = true;
  Series1D pts;
  pts.x = {0.05, 0.1, 0.2};
  pts.y = {4.0, 3.0, 2.0};
  pts.label = "width";
  p.points.push_back(pts);
  CHECK(line_plot_svg(p) == line_plot_svg(p));
}

TEST_CASE("hashing") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const fs::path dir = scratch("hash");
  write_file_atomic(dir / "x", "abc");
  CHECK(sha256_file(dir / "x") == sha256_hex("abc"));
}

TEST_CASE("runner writes only inside its output directory and reruns identically") {
  const fs::path dir = scratch("runner");
  std::ostringstream log;
  RunOptions opt;
  opt.subcommand = "otoc-heatmap";
  opt.config = small_config();
  opt.out_dir = dir / "a";
  opt.svg = true;
  const RunManifest m = run_subcommand(opt, log);
  CHECK(m.outputs.size() == 6);
  for (const auto& [name, hash] : m.outputs) {
    CHECK(fs::exists(opt.out_dir / name));
    CHECK(sha256_file(opt.out_dir / name) == hash);
  }
  CHECK(fs::exists(opt.out_dir / "manifest.txt"));
  std::size_t entries = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++entries;
  }
  CHECK(entries == 1);

  opt.out_dir = dir / "b";
  const RunManifest again = run_subcommand(opt, log);
  REQUIRE(again.outputs.size() == m.outputs.size());
  for (std::size_t k = 0; k < m.outputs.size(); ++k) CHECK(again.outputs[k] == m.outputs[k]);

  opt.subcommand = "nonsense";
  CHECK_THROWS_AS(run_subcommand(opt, log), ConfigError);
}

TEST_CASE("validation suite passes at small size") {
  const auto checks = run_validation_suite(small_config());
  CHECK(checks.size() > 30);
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("manifest text lists outputs and results") {
  RunManifest m;
  m.subcommand = "powerlaw";
  m.config = {{"n_sites", "4"}};
  m.version = "1.0.0";
  m.outputs = {{"powerlaw.csv", "ab"}};
  m.results = {{"alpha", "0.4"}};
  const std::string t = manifest_text(m);
  CHECK(t.find("powerlaw.csv") != std::string::npos);
  CHECK(t.find("alpha") != std::string::npos);
  CHECK(t == manifest_text(m));
}
