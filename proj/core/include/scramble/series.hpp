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


#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace scramble {

/// Ordered key/value pairs describing the run that produced a series.
using ConfigSnapshot = std::vector<std::pair<std::string, std::string>>;

inline constexpr double kInvalidValue = std::numeric_limits<double>::quiet_NaN();

/// A scalar on a (time x site) grid. Invalid cells hold NaN.
struct HeatmapSeries {
  std::vector<double> times;
  std::vector<int> sites;
  /// Row-major: values[ti * sites.size() + si].
  std::vector<double> values;
  std::string label;
  ConfigSnapshot config;

  HeatmapSeries() = default;
  HeatmapSeries(std::vector<double> t, std::vector<int> s, std::string name);

  std::size_t rows() const { return times.size(); }
  std::size_t cols() const { return sites.size(); }

  double& at(std::size_t ti, std::size_t si) { return values[ti * sites.size() + si]; }
  double at(std::size_t ti, std::size_t si) const { return values[ti * sites.size() + si]; }

  /// Column index of `site`; throws InvalidArgument when absent.
  std::size_t site_index(int site) const;

  /// Values of one site over time.
  std::vector<double> column(int site) const;

  /// Linear interpolation in t for one site. Returns NaN outside [t0, t_end]
  /// or when a bracketing cell is invalid.
  double interpolate(int site, double t) const;

  /// Throws InvalidArgument on a shape mismatch, non-increasing times, or
  /// infinite values.
  void validate() const;
};

/// A 1-D series such as (gamma, width) or (t, norm).
struct Series1D {
  std::string x_name;
  std::string y_name;
  std::vector<double> x;
  std::vector<double> y;
  std::string label;
  ConfigSnapshot config;

  void validate() const;
};

}  // namespace scramble
