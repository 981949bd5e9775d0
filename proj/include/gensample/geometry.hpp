#pragma once

// Observation windows, the two supported norms, point patterns and the
// grid-based Voronoi / inverse-density computations built on them.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gensample/error.hpp"

namespace gensample {

/// Centered box [-half_side, half_side]^dimension.
struct Window {
  double half_side = 64.0;
  int dimension = 2;

  Window() = default;
  Window(double half, int dim) : half_side(half), dimension(dim) {
    if (!(half > 0.0) || !std::isfinite(half)) throw InvalidInput("window half_side must be positive and finite");
    if (dim < 1) throw InvalidInput("window dimension must be >= 1");
  }

  double side() const { return 2.0 * half_side; }
  double volume() const { return std::pow(side(), dimension); }
  double bandwidth() const { return half_side; }

  bool contains(std::span<const double> y) const {
    for (double c : y)
      if (!(c >= -half_side && c <= half_side)) return false;
    return true;
  }

  Window dilated(double margin) const { return Window(half_side + margin, dimension); }

  friend bool operator==(const Window&, const Window&) = default;
};

/// Either the Euclidean norm or the norm of the polar set of E = [-s, s]^d,
/// which is s * (l1 norm).
struct NormSpec {
  enum class Kind { Euclidean, BoxPolar };
  Kind kind = Kind::BoxPolar;
  double s = 0.5;

  static NormSpec euclidean() { return {Kind::Euclidean, 1.0}; }
  static NormSpec box_polar(double half_side_of_e) {
    if (!(half_side_of_e > 0.0) || !std::isfinite(half_side_of_e))
      throw InvalidInput("box-polar norm needs a positive half side");
    return {Kind::BoxPolar, half_side_of_e};
  }

  /// c with norm(y) >= c * max_i |y_i|.
  double sup_norm_factor() const { return kind == Kind::Euclidean ? 1.0 : s; }

  std::string name() const { return kind == Kind::Euclidean ? "euclidean" : "polar"; }

  friend bool operator==(const NormSpec&, const NormSpec&) = default;
};

inline double norm_value(std::span<const double> y, const NormSpec& spec) {
  double acc = 0.0;
  if (spec.kind == NormSpec::Kind::Euclidean) {
    for (double c : y) {
      if (!std::isfinite(c)) throw InvalidInput("norm_value: non-finite coordinate");
      acc += c * c;
    }
    return std::sqrt(acc);
  }
  for (double c : y) {
    if (!std::isfinite(c)) throw InvalidInput("norm_value: non-finite coordinate");
    acc += std::abs(c);
  }
  return spec.s * acc;
}

namespace detail {

// Distance without the finiteness checks; callers validated the points.
inline double distance(const double* a, const double* b, int dim, const NormSpec& spec) {
  double acc = 0.0;
  if (spec.kind == NormSpec::Kind::Euclidean) {
    for (int i = 0; i < dim; ++i) {
      double t = a[i] - b[i];
      acc += t * t;
    }
    return std::sqrt(acc);
  }
  for (int i = 0; i < dim; ++i) acc += std::abs(a[i] - b[i]);
  return spec.s * acc;
}

}  // namespace detail

/// Finite set of distinct points inside a window, stored as a flat
/// coordinate array (point i occupies coords[i*dim, (i+1)*dim)).
class PointPattern {
 public:
  PointPattern() = default;
  explicit PointPattern(Window window) : window_(window) {}
  PointPattern(Window window, std::vector<double> coords) : window_(window), coords_(std::move(coords)) {
    if (coords_.size() % static_cast<std::size_t>(window_.dimension) != 0)
      throw InvalidInput("coordinate count is not a multiple of the dimension");
    validate();
  }

  int dimension() const { return window_.dimension; }
  const Window& window() const { return window_; }
  std::size_t size() const { return coords_.size() / static_cast<std::size_t>(window_.dimension); }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dimension()), static_cast<std::size_t>(dimension())};
  }
  const std::vector<double>& coords() const { return coords_; }

  /// Appends without re-running the duplicate check; samplers use this and
  /// call validate() once at the end.
  void push_back(std::span<const double> y) {
    if (static_cast<int>(y.size()) != dimension()) throw InvalidInput("point dimension mismatch");
    coords_.insert(coords_.end(), y.begin(), y.end());
  }

  void validate() const {
    const auto d = static_cast<std::size_t>(dimension());
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      auto y = point(i);
      for (double c : y)
        if (!std::isfinite(c)) throw InvalidInput("point " + std::to_string(i) + " has a non-finite coordinate");
      if (!window_.contains(y)) throw InvalidInput("point " + std::to_string(i) + " lies outside the window");
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    auto less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(coords_.begin() + a * d, coords_.begin() + (a + 1) * d,
                                          coords_.begin() + b * d, coords_.begin() + (b + 1) * d);
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t k = 1; k < n; ++k)
      if (std::equal(coords_.begin() + order[k] * d, coords_.begin() + (order[k] + 1) * d,
                     coords_.begin() + order[k - 1] * d))
        throw InvalidInput("duplicate points " + std::to_string(order[k - 1]) + " and " + std::to_string(order[k]));
  }

 private:
  Window window_;
  std::vector<double> coords_;
};

/// Pattern plus one positive area weight per point.
struct WeightedScheme {
  PointPattern pattern;
  std::vector<double> weights;
  /// Declared bound on |sum(weights) - |window||.
  double sum_tolerance = 0.0;

  std::size_t size() const { return pattern.size(); }
};

/// Bucket grid for nearest-point queries under either norm. Ties resolve
/// to the lowest point index.
class NearestIndex {
 public:
  NearestIndex(const PointPattern& pattern, const NormSpec& spec, double extent)
      : pattern_(&pattern), spec_(spec), dim_(pattern.dimension()) {
    if (pattern.empty()) throw InvalidInput("nearest-point index over an empty pattern");
    if (dim_ > kMaxDim) throw InvalidInput("nearest-point index supports dimension <= 8");
    const double n = static_cast<double>(pattern.size());
    per_axis_ = std::clamp(static_cast<int>(std::floor(std::pow(n, 1.0 / dim_))), 1, 2048);
    lo_ = -extent;
    bucket_side_ = 2.0 * extent / per_axis_;
    std::size_t total = 1;
    for (int a = 0; a < dim_; ++a) total *= static_cast<std::size_t>(per_axis_);
    start_.assign(total + 1, 0);
    std::vector<std::size_t> cell(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      cell[i] = flat(bucket_of(pattern.point(i).data()));
      ++start_[cell[i] + 1];
    }
    for (std::size_t b = 0; b < total; ++b) start_[b + 1] += start_[b];
    members_.resize(pattern.size());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < pattern.size(); ++i) members_[fill[cell[i]]++] = i;
  }

  struct Hit {
    std::size_t index;
    double distance;
  };

  /// Nearest pattern point to q, skipping `exclude` (pass size() for none).
  Hit nearest(const double* q, std::size_t exclude) const {
    const auto home = bucket_of(q);
    Hit best{exclude, std::numeric_limits<double>::infinity()};
    const double c = spec_.sup_norm_factor();
    Cell lo{}, hi{}, idx{};
    for (int ring = 0; ring <= per_axis_; ++ring) {
      if (ring >= 2 && best.distance < c * (ring - 1) * bucket_side_) break;
      bool any = false;
      for (int a = 0; a < dim_; ++a) {
        lo[a] = std::max(0, home[a] - ring);
        hi[a] = std::min(per_axis_ - 1, home[a] + ring);
        idx[a] = lo[a];
      }
      while (true) {
        int cheb = 0;
        for (int a = 0; a < dim_; ++a) cheb = std::max(cheb, std::abs(idx[a] - home[a]));
        if (cheb == ring) {
          any = true;
          const std::size_t b = flat(idx);
          for (std::size_t k = start_[b]; k < start_[b + 1]; ++k) {
            const std::size_t i = members_[k];
            if (i == exclude) continue;
            const double dist = detail::distance(q, pattern_->point(i).data(), dim_, spec_);
            if (dist < best.distance || (dist == best.distance && i < best.index)) best = {i, dist};
          }
        }
        int a = 0;
        for (; a < dim_; ++a) {
          if (++idx[a] <= hi[a]) break;
          idx[a] = lo[a];
        }
        if (a == dim_) break;
      }
      if (!any) break;
    }
    return best;
  }

 private:
  static constexpr int kMaxDim = 8;
  using Cell = std::array<int, kMaxDim>;

  Cell bucket_of(const double* q) const {
    Cell b{};
    for (int a = 0; a < dim_; ++a)
      b[a] = std::clamp(static_cast<int>(std::floor((q[a] - lo_) / bucket_side_)), 0, per_axis_ - 1);
    return b;
  }
  std::size_t flat(const Cell& b) const {
    std::size_t f = 0;
    for (int a = dim_ - 1; a >= 0; --a) f = f * static_cast<std::size_t>(per_axis_) + static_cast<std::size_t>(b[a]);
    return f;
  }

  const PointPattern* pattern_;
  NormSpec spec_;
  int dim_;
  int per_axis_ = 1;
  double lo_ = 0.0;
  double bucket_side_ = 1.0;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> members_;
};

/// Grid estimate of the inverse density together with the norm-diameter of
/// one grid cell, which bounds the gap to the true supremum.
struct DensityEstimate {
  double value = 0.0;
  double cell_diameter = 0.0;

  /// Conservative test of delta < threshold.
  bool certifies_below(double threshold) const { return value + cell_diameter < threshold; }
};

namespace detail {

inline double cell_diameter(const Window& window, const NormSpec& spec, int grid_res) {
  std::vector<double> diag(static_cast<std::size_t>(window.dimension), window.side() / grid_res);
  return norm_value(diag, spec);
}

inline double pattern_extent(const PointPattern& pattern, const Window& window) {
  return std::max(pattern.window().half_side, window.half_side);
}

}  // namespace detail

/// sup over the window of the distance to the nearest pattern point, taken
/// over the (grid_res+1)^d vertices of a uniform grid. Vertex grids nest
/// under dyadic refinement, so the estimate never decreases as grid_res
/// doubles.
inline DensityEstimate inverse_density(const PointPattern& pattern, const Window& window, const NormSpec& spec,
                                       int grid_res) {
  if (pattern.empty()) throw InvalidInput("inverse density of an empty pattern is infinite");
  if (grid_res < 2) throw InvalidInput("inverse_density: grid_res must be >= 2");
  if (window.dimension != pattern.dimension()) throw InvalidInput("inverse_density: dimension mismatch");
  const int d = window.dimension;
  const NearestIndex index(pattern, spec, detail::pattern_extent(pattern, window));
  const double h = window.side() / grid_res;
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> q(static_cast<std::size_t>(d));
  double worst = 0.0;
  while (true) {
    for (int a = 0; a < d; ++a) q[a] = -window.half_side + h * idx[a];
    worst = std::max(worst, index.nearest(q.data(), pattern.size()).distance);
    int a = 0;
    for (; a < d; ++a) {
      if (++idx[a] <= grid_res) break;
      idx[a] = 0;
    }
    if (a == d) break;
  }
  return {worst, detail::cell_diameter(window, spec, grid_res)};
}

/// Voronoi cell measures under `spec`, approximated by assigning each
/// of the grid_res^d cell centers to its nearest pattern point. A point that
/// wins no center (a close neighbour took them all) gets the 3^d cells around
/// it subdivided, 8 per axis per round, until it wins some. Weights are
/// integer counts of the finest subcell, so they partition the window exactly.
inline WeightedScheme voronoi_weights(const PointPattern& pattern, const Window& window, const NormSpec& spec,
                                      int grid_res) {
  if (pattern.empty()) throw InvalidInput("voronoi_weights: empty pattern");
  if (grid_res < 1) throw InvalidInput("voronoi_weights: grid_res must be positive");
  if (window.dimension != pattern.dimension()) throw InvalidInput("voronoi_weights: dimension mismatch");
  const int d = window.dimension;
  const std::size_t n = pattern.size();
  const NearestIndex index(pattern, spec, detail::pattern_extent(pattern, window));
  const double h = window.side() / grid_res;

  std::size_t cells = 1;
  for (int a = 0; a < d; ++a) cells *= static_cast<std::size_t>(grid_res);
  std::vector<std::uint32_t> owner(cells);
  std::vector<std::uint64_t> owned(n, 0);
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> q(static_cast<std::size_t>(d));
  for (std::size_t c = 0;; ++c) {
    for (int a = 0; a < d; ++a) q[a] = -window.half_side + h * (idx[a] + 0.5);
    const auto i = index.nearest(q.data(), n).index;
    owner[c] = static_cast<std::uint32_t>(i);
    ++owned[i];
    int a = 0;
    for (; a < d; ++a) {
      if (++idx[a] < grid_res) break;
      idx[a] = 0;
    }
    if (a == d) break;
  }

  auto ipow = [d](std::uint64_t b) {
    std::uint64_t r = 1;
    for (int a = 0; a < d; ++a) r *= b;
    return r;
  };
  std::map<std::size_t, std::uint64_t> refined;  // cell -> subdivisions per axis
  std::uint64_t finest = 1;
  std::vector<std::uint64_t> units = owned;
  std::vector<int> sub(static_cast<std::size_t>(d));

  auto tally = [&] {
    units = owned;
    for (auto& u : units) u *= ipow(finest);
    for (const auto& [c, s] : refined) {
      units[owner[c]] -= ipow(finest);
      std::size_t rest = c;
      for (int a = 0; a < d; ++a) {
        idx[a] = static_cast<int>(rest % static_cast<std::size_t>(grid_res));
        rest /= static_cast<std::size_t>(grid_res);
      }
      const double hs = h / static_cast<double>(s);
      const std::uint64_t w = ipow(finest / s);
      std::fill(sub.begin(), sub.end(), 0);
      while (true) {
        for (int a = 0; a < d; ++a) q[a] = -window.half_side + h * idx[a] + hs * (sub[a] + 0.5);
        units[index.nearest(q.data(), n).index] += w;
        int a = 0;
        for (; a < d; ++a) {
          if (++sub[a] < static_cast<int>(s)) break;
          sub[a] = 0;
        }
        if (a == d) break;
      }
    }
  };

  for (;;) {
    std::vector<std::size_t> starved;
    for (std::size_t i = 0; i < n; ++i)
      if (units[i] == 0) starved.push_back(i);
    if (starved.empty()) break;
    const double next = std::pow(8.0 * static_cast<double>(finest), d);
    if (finest >= 512 || next * static_cast<double>(cells) > 0x1p62)
      throw InvalidInput("voronoi_weights: grid too coarse, point " + std::to_string(starved.front()) +
                         " owns no cell");
    finest *= 8;
    for (std::size_t i : starved) {
      const auto pt = pattern.point(i);
      std::vector<int> home(static_cast<std::size_t>(d));
      for (int a = 0; a < d; ++a)
        home[a] = std::clamp(static_cast<int>(std::floor((pt[a] + window.half_side) / h)), 0, grid_res - 1);
      std::vector<int> off(static_cast<std::size_t>(d), -1);
      while (true) {
        std::size_t c = 0;
        bool inside = true;
        for (int a = d - 1; a >= 0; --a) {
          const int k = home[a] + off[a];
          inside = inside && k >= 0 && k < grid_res;
          c = c * static_cast<std::size_t>(grid_res) + static_cast<std::size_t>(std::clamp(k, 0, grid_res - 1));
        }
        if (inside) refined[c] = finest;
        int a = 0;
        for (; a < d; ++a) {
          if (++off[a] <= 1) break;
          off[a] = -1;
        }
        if (a == d) break;
      }
    }
    tally();
  }

  const double unit = std::pow(h, d) / static_cast<double>(ipow(finest));
  WeightedScheme scheme{pattern, std::vector<double>(n), 0.0};
  for (std::size_t i = 0; i < n; ++i) scheme.weights[i] = unit * static_cast<double>(units[i]);
  scheme.sum_tolerance = window.volume() * 1e-12;
  return scheme;
}

/// Unit weights, for the unweighted matrix variant.
inline WeightedScheme unit_weights(const PointPattern& pattern) {
  return {pattern, std::vector<double>(pattern.size(), 1.0), std::numeric_limits<double>::infinity()};
}

}  // namespace gensample
