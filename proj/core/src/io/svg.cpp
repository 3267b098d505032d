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
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "scramble/error.hpp"
#include "scramble/io.hpp"

namespace scramble {
namespace {

constexpr std::array<std::array<int, 3>, 8> kViridis = {{
    {0x44, 0x01, 0x54},
    {0x46, 0x32, 0x7e},
    {0x36, 0x5c, 0x8d},
    {0x27, 0x7f, 0x8e},
    {0x1f, 0xa1, 0x87},
    {0x4a, 0xc1, 0x6d},
    {0xa0, 0xda, 0x39},
    {0xfd, 0xe7, 0x25},
}};

constexpr std::array<const char*, 6> kLineColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                    "#9467bd", "#ff7f0e", "#17becf"};

std::string fmt(const char* spec, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string num(double v) { return fmt("%.2f", v); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Colour for u in [0, 1].
std::string ramp(double u) {
  u = std::clamp(u, 0.0, 1.0) * (kViridis.size() - 1);
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(u), kViridis.size() - 2);
  const double f = u - static_cast<double>(k);
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c) {
    rgb[c] = static_cast<int>(std::lround(kViridis[k][c] + f * (kViridis[k + 1][c] - kViridis[k][c])));
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string text(double x, double y, const std::string& s, const char* anchor = "middle",
                 double rotate = 0.0) {
  std::string out = "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\"";
  if (rotate != 0.0) out += " transform=\"rotate(" + num(rotate) + " " + num(x) + " " + num(y) + ")\"";
  return out + ">" + escape(s) + "</text>\n";
}

std::string header(int w, int h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " +
         std::to_string(w) + " " + std::to_string(h) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string heatmap_svg(const HeatmapSeries& series) {
  series.validate();
  if (series.rows() == 0 || series.cols() == 0) throw InvalidArgument("heatmap_svg: empty grid");
  constexpr int kW = 640, kH = 480;
  constexpr double left = 60, right = 120, top = 40, bottom = 50;
  const double pw = kW - left - right, ph = kH - top - bottom;

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : series.values) {
    if (std::isnan(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!std::isfinite(lo)) lo = hi = 0.0;
  const double span = hi - lo;

  // Sites left to right in ascending order, time upward.
  std::vector<std::size_t> order(series.cols());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return series.sites[a] < series.sites[b]; });
  const double cw = pw / static_cast<double>(series.cols());
  const double t0 = series.times.front(), t1 = series.times.back();
  auto y_of = [&](double t) { return t1 > t0 ? top + ph * (1.0 - (t - t0) / (t1 - t0)) : top; };

  std::string out = header(kW, kH);
  out += text(kW / 2.0, 22, series.label);
  for (std::size_t ti = 0; ti < series.rows(); ++ti) {
    // Cell k spans the midpoints to its neighbours.
    const double ta = ti == 0 ? t0 : 0.5 * (series.times[ti - 1] + series.times[ti]);
    const double tb = ti + 1 == series.rows() ? t1 : 0.5 * (series.times[ti] + series.times[ti + 1]);
    const double ya = series.rows() == 1 ? top + ph : y_of(ta);
    const double yb = series.rows() == 1 ? top : y_of(tb);
    for (std::size_t c = 0; c < order.size(); ++c) {
      const double v = series.at(ti, order[c]);
      const std::string fill = std::isnan(v) ? "#bbbbbb" : ramp(span > 0 ? (v - lo) / span : 0.0);
      out += "<rect x=\"" + num(left + cw * c) + "\" y=\"" + num(yb) + "\" width=\"" + num(cw) +
             "\" height=\"" + num(ya - yb) + "\" fill=\"" + fill + "\" stroke=\"" + fill +
             "\" stroke-width=\"0.3\"/>\n";
    }
  }
  // Axes.
  out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" +
         num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t c = 0; c < order.size(); ++c) {
    out += text(left + cw * (c + 0.5), top + ph + 16, std::to_string(series.sites[order[c]]));
  }
  out += text(left + pw / 2, kH - 12, "site");
  for (int k = 0; k <= 4; ++k) {
    const double t = t0 + (t1 - t0) * k / 4.0;
    out += text(left - 6, y_of(t) + 4, fmt("%.3g", t), "end");
  }
  out += text(18, top + ph / 2, "t", "middle", -90);
  // Legend.
  const double lx = left + pw + 30, lw = 20;
  for (int k = 0; k < 64; ++k) {
    const double y = top + ph * (1.0 - (k + 1) / 64.0);
    out += "<rect x=\"" + num(lx) + "\" y=\"" + num(y) + "\" width=\"" + num(lw) + "\" height=\"" +
           num(ph / 64.0 + 0.5) + "\" fill=\"" + ramp(span > 0 ? k / 63.0 : 0.0) + "\"/>\n";
  }
  out += text(lx + lw + 4, top + 4, fmt("%.4g", hi), "start");
  out += text(lx + lw + 4, top + ph + 4, fmt("%.4g", lo), "start");
  out += "</svg>\n";
  return out;
}

void render_heatmap_svg(const HeatmapSeries& series, const std::filesystem::path& path) {
  write_file_atomic(path, heatmap_svg(series));
}

std::string line_plot_svg(const LinePlot& plot) {
  constexpr int kW = 640, kH = 480;
  constexpr double left = 70, right = 30, top = 40, bottom = 55;
  const double pw = kW - left - right, ph = kH - top - bottom;
  auto tx = [&](double v) { return plot.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return plot.log_y ? std::log10(v) : v; };
  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!plot.log_x || x > 0) && (!plot.log_y || y > 0);
  };

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  auto extend = [&](const Series1D& s) {
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (!usable(s.x[k], s.y[k])) continue;
      x0 = std::min(x0, tx(s.x[k]));
      x1 = std::max(x1, tx(s.x[k]));
      y0 = std::min(y0, ty(s.y[k]));
      y1 = std::max(y1, ty(s.y[k]));
    }
  };
  for (const auto& s : plot.points) extend(s);
  for (const auto& s : plot.lines) extend(s);
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x0 -= 0.5, x1 += 0.5;
  if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  const double padx = 0.04 * (x1 - x0), pady = 0.06 * (y1 - y0);
  x0 -= padx, x1 += padx, y0 -= pady, y1 += pady;
  auto px = [&](double v) { return left + pw * (tx(v) - x0) / (x1 - x0); };
  auto py = [&](double v) { return top + ph * (1.0 - (ty(v) - y0) / (y1 - y0)); };

  std::string out = header(kW, kH);
  out += text(kW / 2.0, 22, plot.title);
  out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" +
         num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double u = x0 + (x1 - x0) * k / 4.0;
    const double v = y0 + (y1 - y0) * k / 4.0;
    out += text(left + pw * k / 4.0, top + ph + 16, fmt("%.3g", plot.log_x ? std::pow(10.0, u) : u));
    out += text(left - 6, top + ph * (1.0 - k / 4.0) + 4, fmt("%.3g", plot.log_y ? std::pow(10.0, v) : v), "end");
  }
  out += text(left + pw / 2, kH - 14, plot.x_label + (plot.log_x ? " (log)" : ""));
  out += text(18, top + ph / 2, plot.y_label + (plot.log_y ? " (log)" : ""), "middle", -90);

  std::size_t colour = 0;
  double legend_y = top + 14;
  auto legend = [&](const std::string& label, const char* c) {
    if (label.empty()) return;
    out += text(left + pw - 22, legend_y, label, "end");
    out += "<rect x=\"" + num(left + pw - 18) + "\" y=\"" + num(legend_y - 9) +
           "\" width=\"10\" height=\"10\" fill=\"" + c + "\"/>\n";
    legend_y += 16;
  };
  for (const auto& s : plot.lines) {
    const char* c = kLineColors[colour++ % kLineColors.size()];
    std::string pts;
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (!usable(s.x[k], s.y[k])) continue;
      pts += (pts.empty() ? "" : " ") + num(px(s.x[k])) + "," + num(py(s.y[k]));
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(c) + "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    legend(s.label, c);
  }
  for (const auto& s : plot.points) {
    const char* c = kLineColors[colour++ % kLineColors.size()];
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (!usable(s.x[k], s.y[k])) continue;
      out += "<circle cx=\"" + num(px(s.x[k])) + "\" cy=\"" + num(py(s.y[k])) + "\" r=\"3.5\" fill=\"" + c + "\"/>\n";
    }
    legend(s.label, c);
  }
  out += "</svg>\n";
  return out;
}

void render_line_svg(const LinePlot& plot, const std::filesystem::path& path) {
  write_file_atomic(path, line_plot_svg(plot));
}

}  // namespace scramble
