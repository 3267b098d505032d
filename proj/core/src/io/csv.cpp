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


#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "scramble/error.hpp"
#include "scramble/io.hpp"

namespace scramble {
namespace {

std::string config_line(const ConfigSnapshot& config, const std::string& label) {
  std::string line = "# config:";
  for (const auto& [k, v] : config) line += " " + k + "=" + v;
  if (!label.empty()) line += " series=" + label;
  return line + "\n";
}

double parse_cell(const std::string& s, const std::filesystem::path& path, int lineno) {
  if (s == "NA") return kInvalidValue;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument(path.string() + ":" + std::to_string(lineno) + ": bad number '" + s + "'");
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "NA";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

void write_grid_csv(const HeatmapSeries& series, const std::filesystem::path& path) {
  series.validate();
  std::vector<std::size_t> order(series.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return series.sites[a] < series.sites[b]; });
  std::string text = config_line(series.config, series.label);
  text += "t,site,value\n";
  for (std::size_t ti = 0; ti < series.rows(); ++ti) {
    const std::string t = format_real(series.times[ti]);
    for (std::size_t si : order) {
      text += t + "," + std::to_string(series.sites[si]) + "," + format_real(series.at(ti, si)) + "\n";
    }
  }
  write_file_atomic(path, text);
}

void write_series_csv(const Series1D& series, const std::filesystem::path& path) {
  series.validate();
  std::string text = config_line(series.config, series.label);
  text += series.x_name + "," + series.y_name + "\n";
  for (std::size_t k = 0; k < series.x.size(); ++k) {
    text += format_real(series.x[k]) + "," + format_real(series.y[k]) + "\n";
  }
  write_file_atomic(path, text);
}

void write_table_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows, const ConfigSnapshot& config,
                     const std::filesystem::path& path) {
  auto join = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t k = 0; k < cells.size(); ++k) s += (k ? "," : "") + cells[k];
    return s + "\n";
  };
  std::string text = config_line(config, "");
  text += join(header);
  for (const auto& r : rows) {
    if (r.size() != header.size()) throw InvalidArgument("write_table_csv: ragged row");
    text += join(r);
  }
  write_file_atomic(path, text);
}

HeatmapSeries read_grid_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path.string() + "'");
  HeatmapSeries out;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  std::vector<std::tuple<double, int, double>> cells;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("# config:", 0) == 0) {
      std::istringstream ss(line.substr(9));
      std::string tok;
      while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        if (tok.substr(0, eq) == "series") {
          out.label = tok.substr(eq + 1);
        } else {
          out.config.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
        }
      }
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "t,site,value") {
        throw InvalidArgument(path.string() + ":" + std::to_string(lineno) + ": expected header t,site,value");
      }
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    std::string t, s, v;
    if (!std::getline(ss, t, ',') || !std::getline(ss, s, ',') || !std::getline(ss, v)) {
      throw InvalidArgument(path.string() + ":" + std::to_string(lineno) + ": expected 3 fields");
    }
    cells.emplace_back(parse_cell(t, path, lineno), static_cast<int>(parse_cell(s, path, lineno)),
                       parse_cell(v, path, lineno));
  }
  std::map<double, std::size_t> tindex;
  std::map<int, std::size_t> sindex;
  for (const auto& [t, s, v] : cells) {
    tindex.emplace(t, 0);
    sindex.emplace(s, 0);
  }
  for (auto& [t, k] : tindex) {
    k = out.times.size();
    out.times.push_back(t);
  }
  for (auto& [s, k] : sindex) {
    k = out.sites.size();
    out.sites.push_back(s);
  }
  out.values.assign(out.times.size() * out.sites.size(), kInvalidValue);
  for (const auto& [t, s, v] : cells) out.at(tindex[t], sindex[s]) = v;
  return out;
}

}  // namespace scramble
