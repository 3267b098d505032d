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


#include "scramble/series.hpp"

#include <algorithm>
#include <cmath>

#include "scramble/error.hpp"

namespace scramble {

HeatmapSeries::HeatmapSeries(std::vector<double> t, std::vector<int> s, std::string name)
    : times(std::move(t)), sites(std::move(s)), label(std::move(name)) {
  values.assign(times.size() * sites.size(), kInvalidValue);
}

std::size_t HeatmapSeries::site_index(int site) const {
  const auto it = std::find(sites.begin(), sites.end(), site);
  if (it == sites.end()) {
    throw InvalidArgument("site " + std::to_string(site) + " is not in series '" + label + "'");
  }
  return static_cast<std::size_t>(it - sites.begin());
}

std::vector<double> HeatmapSeries::column(int site) const {
  const std::size_t si = site_index(site);
  std::vector<double> out(rows());
  for (std::size_t ti = 0; ti < rows(); ++ti) out[ti] = at(ti, si);
  return out;
}

double HeatmapSeries::interpolate(int site, double t) const {
  const std::size_t si = site_index(site);
  if (times.empty() || t < times.front() || t > times.back()) return kInvalidValue;
  const auto hi = std::lower_bound(times.begin(), times.end(), t);
  const auto k = static_cast<std::size_t>(hi - times.begin());
  if (times[k] == t) return at(k, si);
  const double t0 = times[k - 1], t1 = times[k];
  const double v0 = at(k - 1, si), v1 = at(k, si);
  return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

void HeatmapSeries::validate() const {
  if (values.size() != times.size() * sites.size()) {
    throw InvalidArgument("series '" + label + "': grid has " + std::to_string(values.size()) +
                          " cells, expected " + std::to_string(times.size() * sites.size()));
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) {
      throw InvalidArgument("series '" + label + "': times are not increasing");
    }
  }
  for (double v : values) {
    if (std::isinf(v)) throw InvalidArgument("series '" + label + "': infinite value");
  }
}

void Series1D::validate() const {
  if (x.size() != y.size()) {
    throw InvalidArgument("series '" + label + "': x and y lengths differ");
  }
}

}  // namespace scramble
