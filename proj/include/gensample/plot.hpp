#pragma once

// Minimal SVG scatter plots: point-pattern realizations and the
// delta-versus-condition-number figure. Output is plain text built with
// fixed-precision formatting, so identical input gives identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gensample/error.hpp"
#include "gensample/geometry.hpp"

namespace gensample::plot {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

inline const char* color(std::size_t i) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  return kPalette[i % 6];
}

inline std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace detail

struct Axes {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  bool log_y = false;
  int width = 640;
  int height = 480;
  bool equal_aspect = false;
  // fixed ranges; NaN means "from data"
  double xmin = NAN, xmax = NAN, ymin = NAN, ymax = NAN;
};

/// One <circle> per data point; the legend uses <rect> swatches so marker
/// counts stay exact.
inline std::string scatter_svg(const std::vector<Series>& series, Axes ax, double radius = 2.5) {
  std::size_t total = 0;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw InvalidInput("scatter: x and y lengths differ");
    total += s.x.size();
  }
  if (total == 0) throw InvalidInput("scatter: nothing to plot");
  auto ty = [&](double v) { return ax.log_y ? std::log10(v) : v; };
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(ty(s.y[i]))) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, ty(s.y[i]));
      y1 = std::max(y1, ty(s.y[i]));
    }
  if (!std::isfinite(x0)) throw InvalidInput("scatter: no finite points");
  if (!std::isnan(ax.xmin)) x0 = ax.xmin;
  if (!std::isnan(ax.xmax)) x1 = ax.xmax;
  if (!std::isnan(ax.ymin)) y0 = ty(ax.ymin);
  if (!std::isnan(ax.ymax)) y1 = ty(ax.ymax);
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;
  if (std::isnan(ax.xmin)) {
    const double pad = 0.04 * (x1 - x0);
    x0 -= pad;
    x1 += pad;
  }
  if (std::isnan(ax.ymin)) {
    const double pad = 0.04 * (y1 - y0);
    y0 -= pad;
    y1 += pad;
  }
  const double left = 70, right = series.size() > 1 ? 130 : 20, top = 40, bottom = 55;
  double pw = ax.width - left - right, ph = ax.height - top - bottom;
  if (ax.equal_aspect) pw = ph = std::min(pw, ph);
  auto px = [&](double v) { return left + (v - x0) / (x1 - x0) * pw; };
  auto py = [&](double v) { return top + ph - (ty(v) - y0) / (y1 - y0) * ph; };

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(ax.width) + "\" height=\"" +
       std::to_string(ax.height) + "\" viewBox=\"0 0 " + std::to_string(ax.width) + " " +
       std::to_string(ax.height) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(ax.width) + "\" height=\"" + std::to_string(ax.height) +
       "\" fill=\"white\"/>\n";
  s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<text x=\"" + detail::num(left + pw / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
       detail::escape(ax.title) + "</text>\n";
  s += "<path d=\"M" + detail::num(left) + " " + detail::num(top) + " V" + detail::num(top + ph) + " H" +
       detail::num(left + pw) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = x0 + (x1 - x0) * i / 4.0, fy = y0 + (y1 - y0) * i / 4.0;
    const double sx = left + pw * i / 4.0, sy = top + ph - ph * i / 4.0;
    s += "<text x=\"" + detail::num(sx) + "\" y=\"" + detail::num(top + ph + 16) + "\" text-anchor=\"middle\">" +
         detail::tick(std::round(fx * 1000) / 1000) + "</text>\n";
    const double label = ax.log_y ? std::pow(10.0, fy) : fy;
    s += "<text x=\"" + detail::num(left - 6) + "\" y=\"" + detail::num(sy + 4) + "\" text-anchor=\"end\">" +
         detail::tick(std::round(label * 100) / 100) + "</text>\n";
  }
  s += "<text x=\"" + detail::num(left + pw / 2) + "\" y=\"" + detail::num(top + ph + 38) +
       "\" text-anchor=\"middle\">" + detail::escape(ax.xlabel) + "</text>\n";
  s += "<text x=\"18\" y=\"" + detail::num(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       detail::num(top + ph / 2) + ")\">" + detail::escape(ax.ylabel) + "</text>\n";
  s += "</g>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    s += "<g fill=\"" + std::string(detail::color(k)) + "\" fill-opacity=\"0.75\">\n";
    for (std::size_t i = 0; i < series[k].x.size(); ++i) {
      if (!std::isfinite(series[k].x[i]) || !std::isfinite(ty(series[k].y[i]))) continue;
      s += "<circle cx=\"" + detail::num(px(series[k].x[i])) + "\" cy=\"" + detail::num(py(series[k].y[i])) +
           "\" r=\"" + detail::num(radius) + "\"/>\n";
    }
    s += "</g>\n";
  }
  if (series.size() > 1) {
    s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
      const double ly = top + 10 + 20.0 * static_cast<double>(k);
      s += "<rect x=\"" + detail::num(left + pw + 15) + "\" y=\"" + detail::num(ly - 8) +
           "\" width=\"10\" height=\"10\" fill=\"" + detail::color(k) + "\"/>\n";
      s += "<text x=\"" + detail::num(left + pw + 31) + "\" y=\"" + detail::num(ly + 1) + "\">" +
           detail::escape(series[k].label) + "</text>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

/// Realization plot over the pattern's window.
inline std::string pattern_svg(const PointPattern& p, const std::string& title) {
  if (p.dimension() != 2) throw InvalidInput("pattern plot needs a 2D pattern");
  if (p.empty()) throw InvalidInput("pattern plot: empty pattern");
  Series s{"points", {}, {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    s.x.push_back(p.point(i)[0]);
    s.y.push_back(p.point(i)[1]);
  }
  const double h = p.window().half_side;
  Axes ax{title, "x", "y", false, 560, 560, true, -h, h, -h, h};
  return scatter_svg({s}, ax, p.size() > 1000 ? 1.2 : 2.5);
}

}  // namespace gensample::plot
