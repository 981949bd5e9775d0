#pragma once

// Weighted change-of-basis matrix between Fourier samples and the scaling
// basis, its condition number, and the weighted least-squares
// reconstruction.
//
// Entry (n, k) is sqrt(mu_n) times the basis transform at xi_n. The frame
// vectors carry exp(+2 pi i xi x), so with the exp(-2 pi i xi x) transform
// convention no extra conjugation is needed.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gensample/error.hpp"
#include "gensample/geometry.hpp"
#include "gensample/linalg.hpp"
#include "gensample/wavelets.hpp"

namespace gensample {

struct ChangeOfBasisMatrix {
  linalg::CMatrix entries;  // N x M, column index k1 * 2^J + k2
  std::uint64_t scheme_hash = 0;
  std::string basis;
  bool weighted = true;

  std::size_t rows() const { return entries.rows; }
  std::size_t cols() const { return entries.cols; }
  bool underdetermined() const { return rows() < cols(); }
};

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace detail

inline std::uint64_t scheme_hash(const WeightedScheme& scheme) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  const auto& c = scheme.pattern.coords();
  h = detail::fnv1a(h, c.data(), c.size() * sizeof(double));
  return detail::fnv1a(h, scheme.weights.data(), scheme.weights.size() * sizeof(double));
}

inline ChangeOfBasisMatrix assemble(const WeightedScheme& scheme, const ScalingBasis& basis, bool weighted = true,
                                    int depth = kDefaultDepth) {
  if (scheme.pattern.dimension() != 2) throw InvalidInput("assemble: matrix assembly needs a 2D scheme");
  if (scheme.weights.size() != scheme.pattern.size()) throw InvalidInput("assemble: one weight per point required");
  const ScalingFamily family(basis.p, depth);
  const std::size_t n = scheme.pattern.size();
  const auto side = static_cast<std::size_t>(basis.size_1d());
  ChangeOfBasisMatrix out{linalg::CMatrix(n, basis.size()), scheme_hash(scheme), basis.name(), weighted};
  for (std::size_t row = 0; row < n; ++row) {
    const auto xi = scheme.pattern.point(row);
    const double mu = weighted ? scheme.weights[row] : 1.0;
    if (!(mu > 0.0)) throw InvalidInput("assemble: weights must be positive");
    const auto ax = axis_values(xi[0], basis, family);
    const auto ay = axis_values(xi[1], basis, family);
    const double amp = std::sqrt(mu);
    for (std::size_t k1 = 0; k1 < side; ++k1) {
      const cplx a = amp * ax[k1];
      for (std::size_t k2 = 0; k2 < side; ++k2) out.entries(row, k1 * side + k2) = a * ay[k2];
    }
  }
  return out;
}

inline ChangeOfBasisMatrix assemble(const PointPattern& pattern, const ScalingBasis& basis,
                                    int depth = kDefaultDepth) {
  return assemble(unit_weights(pattern), basis, false, depth);
}

enum class CondMethod {
  Svd,        // dense singular values of the N x M matrix
  Gram,       // eigenvalues of A^H A
  Auto,       // Gram, falling back to Svd when kappa exceeds 1e5
  Iterative,  // power iteration on A^H A and on its inverse
};

struct ConditionResult {
  double value = 1.0;  // +inf when numerically singular or underdetermined
  double sigma_max = 0.0;
  double sigma_min = 0.0;
  std::vector<double> singular_values;  // descending; empty for Iterative
  CondMethod method = CondMethod::Svd;
  bool underdetermined = false;

  bool infinite() const { return std::isinf(value); }
};

inline constexpr double kSingularRatio = 1e-30;

namespace detail {

inline void check_finite(const linalg::CMatrix& a) {
  for (const auto& z : a.data)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NumericalError("condition_number: matrix has non-finite entries");
}

inline ConditionResult from_singular(std::vector<double> s, CondMethod method) {
  ConditionResult r;
  r.method = method;
  if (s.empty()) throw InvalidInput("condition_number: empty matrix");
  r.sigma_max = s.front();
  r.sigma_min = s.back();
  r.value = (r.sigma_min < kSingularRatio * r.sigma_max || r.sigma_min <= 0.0)
                ? std::numeric_limits<double>::infinity()
                : r.sigma_max / r.sigma_min;
  r.singular_values = std::move(s);
  return r;
}

struct CglsResult {
  std::vector<cplx> x;
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

// Conjugate gradients on A^H A x = A^H b. Stops when |A^H r| falls below
// tol * |A^H b| or after max_iter iterations.
inline CglsResult cgls(const linalg::CMatrix& a, std::span<const cplx> b, double tol, int max_iter) {
  const std::size_t n = a.rows, m = a.cols;
  CglsResult out{std::vector<cplx>(m, cplx(0.0)), 0, 0.0, false};
  std::vector<cplx> r(b.begin(), b.end()), s(m), p(m), q(n);
  auto norm2 = [](const std::vector<cplx>& v) {
    double acc = 0.0;
    for (const auto& z : v) acc += std::norm(z);
    return acc;
  };
  const double bnorm = std::sqrt(norm2(r));
  linalg::gemv_adjoint(a, r.data(), s.data());
  double gamma = norm2(s);
  const double g0 = std::sqrt(gamma);
  if (g0 == 0.0) {
    out.converged = true;
    out.relative_residual = bnorm == 0.0 ? 0.0 : 1.0;
    return out;
  }
  p = s;
  while (out.iterations < max_iter) {
    linalg::gemv(a, p.data(), q.data());
    const double qq = norm2(q);
    if (qq == 0.0) break;
    const double alpha = gamma / qq;
    for (std::size_t i = 0; i < m; ++i) out.x[i] += alpha * p[i];
    for (std::size_t i = 0; i < n; ++i) r[i] -= alpha * q[i];
    linalg::gemv_adjoint(a, r.data(), s.data());
    const double gamma_new = norm2(s);
    ++out.iterations;
    if (std::sqrt(gamma_new) <= tol * g0) {
      out.converged = true;
      break;
    }
    const double beta = gamma_new / gamma;
    gamma = gamma_new;
    for (std::size_t i = 0; i < m; ++i) p[i] = s[i] + beta * p[i];
  }
  out.relative_residual = bnorm == 0.0 ? 0.0 : std::sqrt(norm2(r)) / bnorm;
  return out;
}

// Extreme eigenvalues of A^H A: power iteration for the top, inverse
// iteration (each solve by CG) for the bottom.
inline ConditionResult iterative_condition(const linalg::CMatrix& a, double rel_tol) {
  const std::size_t n = a.rows, m = a.cols;
  std::mt19937_64 gen(0x5EED);
  std::normal_distribution<double> gauss;
  auto random_unit = [&] {
    std::vector<cplx> v(m);
    double nn = 0.0;
    for (auto& z : v) {
      z = {gauss(gen), gauss(gen)};
      nn += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(nn);
    return v;
  };
  std::vector<cplx> v = random_unit(), av(n), w(m);
  double top = 0.0;
  for (int it = 0; it < 10000; ++it) {
    linalg::gemv(a, v.data(), av.data());
    linalg::gemv_adjoint(a, av.data(), w.data());
    double nw = 0.0;
    for (const auto& z : w) nw += std::norm(z);
    nw = std::sqrt(nw);
    const bool done = it > 0 && std::abs(nw - top) <= rel_tol * nw;
    top = nw;
    for (std::size_t i = 0; i < m; ++i) v[i] = w[i] / nw;
    if (done) break;
  }
  v = random_unit();
  double bottom_inv = 0.0;
  for (int it = 0; it < 1000; ++it) {
    // x = (A^H A)^{-1} v by CG on the normal operator
    std::vector<cplx> x(m, cplx(0.0)), r = v, pdir = v, q(m);
    double rr = 0.0;
    for (const auto& z : r) rr += std::norm(z);
    const double r0 = std::sqrt(rr);
    for (std::size_t k = 0; k < 20 * m && std::sqrt(rr) > 1e-12 * r0; ++k) {
      linalg::gemv(a, pdir.data(), av.data());
      linalg::gemv_adjoint(a, av.data(), q.data());
      cplx pq = 0.0;
      for (std::size_t i = 0; i < m; ++i) pq += std::conj(pdir[i]) * q[i];
      const double alpha = rr / pq.real();
      double rr_new = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        x[i] += alpha * pdir[i];
        r[i] -= alpha * q[i];
        rr_new += std::norm(r[i]);
      }
      const double beta = rr_new / rr;
      rr = rr_new;
      for (std::size_t i = 0; i < m; ++i) pdir[i] = r[i] + beta * pdir[i];
    }
    double nx = 0.0;
    for (const auto& z : x) nx += std::norm(z);
    nx = std::sqrt(nx);
    const bool done = it > 0 && std::abs(nx - bottom_inv) <= rel_tol * nx;
    bottom_inv = nx;
    for (std::size_t i = 0; i < m; ++i) v[i] = x[i] / nx;
    if (done) break;
  }
  ConditionResult r;
  r.method = CondMethod::Iterative;
  r.sigma_max = std::sqrt(top);
  r.sigma_min = bottom_inv > 0.0 ? std::sqrt(1.0 / bottom_inv) : 0.0;
  r.value = (r.sigma_min < kSingularRatio * r.sigma_max || r.sigma_min <= 0.0)
                ? std::numeric_limits<double>::infinity()
                : r.sigma_max / r.sigma_min;
  return r;
}

}  // namespace detail

inline ConditionResult condition_number(const linalg::CMatrix& a, CondMethod method = CondMethod::Svd,
                                        double iterative_tol = 1e-6) {
  detail::check_finite(a);
  if (a.rows < a.cols) {
    ConditionResult r;
    r.value = std::numeric_limits<double>::infinity();
    r.method = method;
    r.underdetermined = true;
    return r;
  }
  switch (method) {
    case CondMethod::Svd:
      return detail::from_singular(linalg::singular_values(a), CondMethod::Svd);
    case CondMethod::Iterative:
      return detail::iterative_condition(a, iterative_tol);
    case CondMethod::Gram:
    case CondMethod::Auto: {
      auto w = linalg::gram_eigenvalues(a);
      std::vector<double> s(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) s[i] = std::sqrt(std::max(0.0, w[w.size() - 1 - i]));
      auto r = detail::from_singular(std::move(s), CondMethod::Gram);
      // Gram eigenvalues lose relative accuracy like kappa^2 * eps.
      if (method == CondMethod::Auto && !(r.value < 1e5))
        return detail::from_singular(linalg::singular_values(a), CondMethod::Svd);
      return r;
    }
  }
  throw InvalidInput("unknown condition-number method");
}

inline ConditionResult condition_number(const ChangeOfBasisMatrix& m, CondMethod method = CondMethod::Svd) {
  return condition_number(m.entries, method);
}

struct Reconstruction {
  std::vector<cplx> coefficients;
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

/// argmin_c sum_n mu_n |samples_n - (B c)_n|^2 by CGLS on the weighted matrix.
inline Reconstruction reconstruct(std::span<const cplx> samples, const WeightedScheme& scheme,
                                  const ScalingBasis& basis, double tol = 1e-8) {
  if (samples.size() != scheme.size()) throw InvalidInput("reconstruct: one sample per scheme point required");
  const auto m = assemble(scheme, basis, true);
  std::vector<cplx> b(samples.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::sqrt(scheme.weights[i]) * samples[i];
  auto res = detail::cgls(m.entries, b, tol, 10 * static_cast<int>(m.cols()));
  return {std::move(res.x), res.iterations, res.relative_residual, res.converged};
}

/// Flat binary export: 8-byte magic "GSAMPMAT", uint32 N, uint32 M (little
/// endian), then N*M row-major (re, im) double pairs.
inline void write_matrix_binary(const ChangeOfBasisMatrix& m, const std::string& path) {
  static_assert(std::endian::native == std::endian::little, "binary export assumes a little-endian host");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open " + path);
  const char magic[8] = {'G', 'S', 'A', 'M', 'P', 'M', 'A', 'T'};
  const auto n = static_cast<std::uint32_t>(m.rows()), c = static_cast<std::uint32_t>(m.cols());
  out.write(magic, 8);
  out.write(reinterpret_cast<const char*>(&n), 4);
  out.write(reinterpret_cast<const char*>(&c), 4);
  std::vector<double> row(2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row[2 * j] = m.entries(i, j).real();
      row[2 * j + 1] = m.entries(i, j).imag();
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size() * sizeof(double)));
  }
  if (!out) throw InvalidInput("failed writing " + path);
}

inline linalg::CMatrix read_matrix_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  char magic[8];
  std::uint32_t n = 0, c = 0;
  in.read(magic, 8);
  in.read(reinterpret_cast<char*>(&n), 4);
  in.read(reinterpret_cast<char*>(&c), 4);
  if (!in || std::memcmp(magic, "GSAMPMAT", 8) != 0) throw InvalidInput(path + ": not a matrix file");
  linalg::CMatrix m(n, c);
  std::vector<double> row(2 * static_cast<std::size_t>(c));
  for (std::size_t i = 0; i < n; ++i) {
    in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size() * sizeof(double)));
    for (std::size_t j = 0; j < c; ++j) m(i, j) = {row[2 * j], row[2 * j + 1]};
  }
  if (!in) throw InvalidInput(path + ": truncated matrix file");
  return m;
}

}  // namespace gensample
