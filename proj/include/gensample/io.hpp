#pragma once

// Plain CSV reading and writing. Files written here never contain quotes or
// embedded commas, so the reader splits on ',' without a quoting layer.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gensample/error.hpp"
#include "gensample/geometry.hpp"

namespace gensample::io {

/// Shortest round-tripping text for a double; "inf", "-inf" and "nan" for
/// non-finite values.
inline std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw InvalidInput("not a number: '" + s + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw InvalidInput("missing CSV column '" + name + "'");
  }
};

inline Table read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput(path.string() + ": empty file");
  t.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != t.header.size()) throw InvalidInput(path.string() + ": ragged row");
    t.rows.push_back(std::move(cells));
  }
  return t;
}

inline std::string join(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  return s;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidInput("failed writing " + path.string());
}

inline std::string axis_header(int d) {
  if (d == 2) return "x,y";
  std::string h;
  for (int a = 0; a < d; ++a) h += (a ? ",x" : "x") + std::to_string(a + 1);
  return h;
}

/// Pattern CSV: header "x,y" (or x1..xd), one point per line.
inline std::string pattern_csv(const PointPattern& p) {
  std::string s = axis_header(p.dimension()) + "\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto pt = p.point(i);
    for (int a = 0; a < p.dimension(); ++a) s += (a ? "," : "") + fmt(pt[a]);
    s += '\n';
  }
  return s;
}

inline PointPattern read_pattern(const std::filesystem::path& path, const Window& window) {
  const Table t = read_csv(path);
  if (t.header.size() != static_cast<std::size_t>(window.dimension))
    throw InvalidInput(path.string() + ": expected " + std::to_string(window.dimension) + " coordinate columns");
  PointPattern p(window);
  std::vector<double> y(t.header.size());
  for (const auto& row : t.rows) {
    for (std::size_t a = 0; a < y.size(); ++a) y[a] = parse_double(row[a]);
    p.push_back(y);
  }
  p.validate();
  return p;
}

/// Weights CSV: the pattern columns followed by "weight".
inline std::string weights_csv(const WeightedScheme& s) {
  const int d = s.pattern.dimension();
  std::string out = axis_header(d) + ",weight\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto pt = s.pattern.point(i);
    for (int a = 0; a < d; ++a) out += fmt(pt[a]) + ",";
    out += fmt(s.weights[i]) + "\n";
  }
  return out;
}

inline WeightedScheme read_weights(const std::filesystem::path& path, const Window& window) {
  const Table t = read_csv(path);
  const auto d = static_cast<std::size_t>(window.dimension);
  if (t.header.size() != d + 1 || t.header.back() != "weight")
    throw InvalidInput(path.string() + ": expected coordinate columns then 'weight'");
  WeightedScheme s{PointPattern(window), {}, std::numeric_limits<double>::infinity()};
  std::vector<double> y(d);
  for (const auto& row : t.rows) {
    for (std::size_t a = 0; a < d; ++a) y[a] = parse_double(row[a]);
    s.pattern.push_back(y);
    s.weights.push_back(parse_double(row[d]));
  }
  s.pattern.validate();
  return s;
}

}  // namespace gensample::io
