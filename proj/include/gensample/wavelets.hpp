#pragma once

// Daubechies scaling functions on [-1/2, 1/2] with the Cohen-Daubechies-Vial
// edge correction, evaluated in the frequency domain.
//
// Fourier convention: f^(xi) = int f(x) exp(-2 pi i xi x) dx.
//
// The interior scaling function phi is centered on [1-p, p], i.e. filter
// entry h[j] multiplies phi(2x - k) with k = j + 1 - p. On the unit
// interval, per-axis index k in [0, 2^J) maps to
//   k <  p              left edge function k, anchored at the left end
//   p <= k < 2^J - p    2^{J/2} phi(2^J (x + 1/2) - k)
//   k >= 2^J - p        right edge function k - (2^J - p), anchored at the right end
// For Haar (p = 1) every index is an interior one.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "gensample/error.hpp"
#include "gensample/filter_tables.hpp"
#include "gensample/linalg.hpp"

namespace gensample {

using cplx = std::complex<double>;

inline constexpr int kDefaultDepth = 40;

struct DaubFilter {
  int p = 1;
  std::vector<double> h;

  /// Index k of h[0] in the refinement relation.
  int first_index() const { return 1 - p; }
};

namespace detail {

template <std::size_t N>
std::vector<double> to_vector(const std::array<double, N>& a) {
  return {a.begin(), a.end()};
}

inline void check_p(int p) {
  if (p < 1 || p > tables::kMaxVanishingMoments)
    throw InvalidInput("vanishing moments must be in 1.." + std::to_string(tables::kMaxVanishingMoments));
}

}  // namespace detail

inline DaubFilter daub_filter(int p) {
  detail::check_p(p);
  switch (p) {
    case 1: return {1, detail::to_vector(tables::kDaub1)};
    case 2: return {2, detail::to_vector(tables::kDaub2)};
    case 3: return {3, detail::to_vector(tables::kDaub3)};
    case 4: return {4, detail::to_vector(tables::kDaub4)};
    case 5: return {5, detail::to_vector(tables::kDaub5)};
    case 6: return {6, detail::to_vector(tables::kDaub6)};
    default: return {7, detail::to_vector(tables::kDaub7)};
  }
}

enum class Side { Left, Right };

/// Edge refinement for one side:
///   phiE(x) = sqrt2 * (edge * phiE(2x) + sum_c tail[:, c] * phi(2x - m_c))
/// with m_c = p + c on the left and m_c = c + 1 - 3p on the right.
struct EdgeFilter {
  int p = 0;
  std::vector<double> edge;  // p x p, row-major
  std::vector<double> tail;  // p x (2p - 1), row-major

  int tail_width() const { return 2 * p - 1; }
  double edge_at(int i, int j) const { return edge[static_cast<std::size_t>(i * p + j)]; }
  double tail_at(int i, int c) const { return tail[static_cast<std::size_t>(i * tail_width() + c)]; }

  /// Largest deviation of edge*edge^T + tail*tail^T from the identity.
  double gram_defect() const {
    double worst = 0.0;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        double acc = 0.0;
        for (int l = 0; l < p; ++l) acc += edge_at(i, l) * edge_at(j, l);
        for (int c = 0; c < tail_width(); ++c) acc += tail_at(i, c) * tail_at(j, c);
        worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
      }
    return worst;
  }
};

struct BoundaryFilters {
  int p = 1;
  EdgeFilter left;
  EdgeFilter right;

  bool empty() const { return p == 1; }
};

inline BoundaryFilters boundary_filters(int p) {
  detail::check_p(p);
  BoundaryFilters out;
  out.p = p;
  auto load = [p](auto const& e, auto const& t) { return EdgeFilter{p, detail::to_vector(e), detail::to_vector(t)}; };
  switch (p) {
    case 1: return out;
    case 2: out.left = load(tables::kLeftEdge2, tables::kLeftTail2); out.right = load(tables::kRightEdge2, tables::kRightTail2); break;
    case 3: out.left = load(tables::kLeftEdge3, tables::kLeftTail3); out.right = load(tables::kRightEdge3, tables::kRightTail3); break;
    case 4: out.left = load(tables::kLeftEdge4, tables::kLeftTail4); out.right = load(tables::kRightEdge4, tables::kRightTail4); break;
    case 5: out.left = load(tables::kLeftEdge5, tables::kLeftTail5); out.right = load(tables::kRightEdge5, tables::kRightTail5); break;
    case 6: out.left = load(tables::kLeftEdge6, tables::kLeftTail6); out.right = load(tables::kRightEdge6, tables::kRightTail6); break;
    default: out.left = load(tables::kLeftEdge7, tables::kLeftTail7); out.right = load(tables::kRightEdge7, tables::kRightTail7); break;
  }
  for (const EdgeFilter* e : {&out.left, &out.right})
    if (e->gram_defect() > 1e-8)
      throw NumericalError("edge filter table for p = " + std::to_string(p) + " fails its Gram identity");
  return out;
}

/// m0(xi) = 2^{-1/2} sum_k h_k exp(-2 pi i k xi); m0(0) = 1.
inline cplx lowpass_symbol(double xi, const DaubFilter& f) {
  cplx acc = 0.0;
  const int k0 = f.first_index();
  for (std::size_t j = 0; j < f.h.size(); ++j)
    acc += f.h[j] * std::polar(1.0, -2.0 * std::numbers::pi * (k0 + static_cast<int>(j)) * xi);
  return acc / std::numbers::sqrt2;
}

/// Truncated infinite product prod_{j=1..depth} m0(2^{-j} xi).
inline cplx fourier_interior(double xi, const DaubFilter& f, int depth = kDefaultDepth) {
  if (depth < 1) throw InvalidInput("fourier_interior: depth must be >= 1");
  cplx acc = 1.0;
  double arg = xi;
  for (int j = 1; j <= depth; ++j) {
    arg *= 0.5;
    acc *= lowpass_symbol(arg, f);
  }
  return acc;
}

inline cplx fourier_interior(double xi, int p, int depth = kDefaultDepth) {
  return fourier_interior(xi, daub_filter(p), depth);
}

/// Precomputed filters for one family; evaluates interior and edge
/// transforms.
class ScalingFamily {
 public:
  explicit ScalingFamily(int p, int depth = kDefaultDepth)
      : filter_(daub_filter(p)), edges_(boundary_filters(p)), depth_(depth) {
    if (depth < 1) throw InvalidInput("depth must be >= 1");
    if (!edges_.empty()) {
      left0_ = fixed_point(edges_.left);
      right0_ = fixed_point(edges_.right);
    }
  }

  int p() const { return filter_.p; }
  int depth() const { return depth_; }
  const DaubFilter& filter() const { return filter_; }
  const BoundaryFilters& edges() const { return edges_; }

  cplx interior(double xi) const { return fourier_interior(xi, filter_, depth_); }

  /// phi^(xi 2^{-l}) for l = 0..depth, each truncated after at least
  /// `depth` factors.
  std::vector<cplx> interior_dyadic(double xi) const {
    const int top = 2 * depth_;
    std::vector<cplx> sym(static_cast<std::size_t>(top) + 1);
    double arg = xi;
    for (int i = 1; i <= top; ++i) {
      arg *= 0.5;
      sym[static_cast<std::size_t>(i)] = lowpass_symbol(arg, filter_);
    }
    std::vector<cplx> suffix(static_cast<std::size_t>(top) + 1, cplx(1.0));
    for (int l = top - 1; l >= 0; --l)
      suffix[static_cast<std::size_t>(l)] = sym[static_cast<std::size_t>(l) + 1] * suffix[static_cast<std::size_t>(l) + 1];
    suffix.resize(static_cast<std::size_t>(depth_) + 1);
    return suffix;
  }

  /// All p edge transforms on one side at xi.
  std::vector<cplx> boundary(double xi, Side side) const {
    if (edges_.empty()) throw InvalidInput("Haar has no edge functions");
    return boundary(xi, side, interior_dyadic(xi));
  }

  std::vector<cplx> boundary(double xi, Side side, const std::vector<cplx>& dyadic) const {
    const EdgeFilter& e = side == Side::Left ? edges_.left : edges_.right;
    const int p = e.p;
    const int m0 = side == Side::Left ? p : 1 - 3 * p;
    std::vector<double> closure = side == Side::Left ? left0_ : right0_;
    std::vector<cplx> v(closure.begin(), closure.end()), next(static_cast<std::size_t>(p));
    std::vector<cplx> tailsum(static_cast<std::size_t>(p));
    std::vector<cplx> phase(static_cast<std::size_t>(e.tail_width()));
    for (int level = depth_ - 1; level >= 0; --level) {
      const double eta = std::ldexp(xi, -level);
      for (int c = 0; c < e.tail_width(); ++c)
        phase[static_cast<std::size_t>(c)] = std::polar(1.0, -std::numbers::pi * (m0 + c) * eta);
      const cplx half = dyadic[static_cast<std::size_t>(level) + 1];
      for (int i = 0; i < p; ++i) {
        cplx acc = 0.0;
        for (int j = 0; j < p; ++j) acc += e.edge_at(i, j) * v[static_cast<std::size_t>(j)];
        cplx t = 0.0;
        for (int c = 0; c < e.tail_width(); ++c) t += e.tail_at(i, c) * phase[static_cast<std::size_t>(c)];
        next[static_cast<std::size_t>(i)] = (acc + t * half) / std::numbers::sqrt2;
      }
      v.swap(next);
    }
    return v;
  }

  /// Edge transforms at 0: the solution of (I - edge/sqrt2) v = sum_c tail[:, c] / sqrt2.
  const std::vector<double>& boundary_at_zero(Side side) const { return side == Side::Left ? left0_ : right0_; }

 private:
  static std::vector<double> fixed_point(const EdgeFilter& e) {
    const int p = e.p;
    std::vector<double> a(static_cast<std::size_t>(p * p)), b(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
      double t = 0.0;
      for (int c = 0; c < e.tail_width(); ++c) t += e.tail_at(i, c);
      b[static_cast<std::size_t>(i)] = t / std::numbers::sqrt2;
      for (int j = 0; j < p; ++j)
        a[static_cast<std::size_t>(i * p + j)] = (i == j ? 1.0 : 0.0) - e.edge_at(i, j) / std::numbers::sqrt2;
    }
    std::vector<lapack_int> piv(static_cast<std::size_t>(p));
    const lapack_int info = LAPACKE_dgesv(LAPACK_ROW_MAJOR, p, 1, a.data(), p, piv.data(), b.data(), 1);
    if (info != 0) throw NumericalError("edge fixed-point system is singular; bad boundary filters");
    return b;
  }

  DaubFilter filter_;
  BoundaryFilters edges_;
  int depth_;
  std::vector<double> left0_;
  std::vector<double> right0_;
};

inline cplx fourier_boundary(double xi, int p, Side side, int index, int depth = kDefaultDepth) {
  if (p < 2) throw InvalidInput("fourier_boundary: edge functions exist for p >= 2");
  if (index < 0 || index >= p) throw InvalidInput("fourier_boundary: index out of range");
  return ScalingFamily(p, depth).boundary(xi, side)[static_cast<std::size_t>(index)];
}

/// Tensor basis of 4^J scaling functions on [-1/2, 1/2]^2.
struct ScalingBasis {
  int p = 1;
  int scale = 5;

  ScalingBasis() = default;
  ScalingBasis(int vanishing, int j) : p(vanishing), scale(j) {
    detail::check_p(p);
    if (j < 0 || j > 12) throw InvalidInput("scale J must be in 0..12");
    // Left and right edge functions live on [0, 2p-1] and [-(2p-1), 0]
    // (in units of 2^-J) and must not overlap.
    if (p > 1 && 2 * (2 * p - 1) > size_1d())
      throw InvalidInput("p = " + std::to_string(p) + " edge functions do not fit at scale " + std::to_string(j));
    if (2 * p > size_1d()) throw InvalidInput("2p must not exceed 2^J");
  }

  int size_1d() const { return 1 << scale; }
  std::size_t size() const { return static_cast<std::size_t>(size_1d()) * static_cast<std::size_t>(size_1d()); }
  std::string name() const { return p == 1 ? "haar" : "db" + std::to_string(p); }

  enum class Kind { Left, Interior, Right };
  Kind kind(int k) const {
    if (p == 1) return Kind::Interior;
    if (k < p) return Kind::Left;
    if (k >= size_1d() - p) return Kind::Right;
    return Kind::Interior;
  }
};

/// Per-axis factors: entry k is the 1D transform at xi of basis function k.
inline std::vector<cplx> axis_values(double xi, const ScalingBasis& basis, const ScalingFamily& family) {
  const int n = basis.size_1d();
  const double scale = std::ldexp(1.0, -basis.scale);
  const double amp = std::sqrt(scale);
  const double eta = xi * scale;
  std::vector<cplx> out(static_cast<std::size_t>(n));
  const std::vector<cplx> dyadic = family.interior_dyadic(eta);
  const cplx phi = dyadic[0];
  for (int k = 0; k < n; ++k) {
    if (basis.kind(k) != ScalingBasis::Kind::Interior) continue;
    out[static_cast<std::size_t>(k)] = amp * std::polar(1.0, -2.0 * std::numbers::pi * xi * (k * scale - 0.5)) * phi;
  }
  if (basis.p > 1) {
    const auto left = family.boundary(eta, Side::Left, dyadic);
    const auto right = family.boundary(eta, Side::Right, dyadic);
    const cplx lshift = amp * std::polar(1.0, std::numbers::pi * xi);
    const cplx rshift = amp * std::polar(1.0, -std::numbers::pi * xi);
    for (int j = 0; j < basis.p; ++j) {
      out[static_cast<std::size_t>(j)] = lshift * left[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(n - basis.p + j)] = rshift * right[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

/// Transform at xi = (xi1, xi2) of basis function (k1, k2).
inline cplx basis_fourier_2d(std::span<const double> xi, const ScalingBasis& basis, int k1, int k2,
                             int depth = kDefaultDepth) {
  if (xi.size() != 2) throw InvalidInput("basis_fourier_2d: frequency must be 2D");
  if (k1 < 0 || k2 < 0 || k1 >= basis.size_1d() || k2 >= basis.size_1d())
    throw InvalidInput("basis_fourier_2d: index out of range");
  const ScalingFamily family(basis.p, depth);
  return axis_values(xi[0], basis, family)[static_cast<std::size_t>(k1)] *
         axis_values(xi[1], basis, family)[static_cast<std::size_t>(k2)];
}

}  // namespace gensample
