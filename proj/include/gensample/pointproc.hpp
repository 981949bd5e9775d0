#pragma once

// Binomial, stationary Poisson and power-exponential determinantal point
// processes on a centered box, plus nearest-neighbour summaries.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gensample/error.hpp"
#include "gensample/geometry.hpp"
#include "gensample/linalg.hpp"
#include "gensample/rng.hpp"

namespace gensample {

namespace detail {

template <class Rng>
double uniform01(Rng& rng) {
  if constexpr (requires { rng.uniform(); }) {
    return rng.uniform();
  } else {
    return std::generate_canonical<double, 53>(rng);
  }
}

template <class Rng>
void uniform_point(const Window& window, Rng& rng, double* out) {
  for (int a = 0; a < window.dimension; ++a) out[a] = -window.half_side + window.side() * uniform01(rng);
}

}  // namespace detail

template <class Rng>
PointPattern sample_binomial(std::size_t n, const Window& window, Rng& rng) {
  PointPattern pattern(window);
  std::vector<double> y(static_cast<std::size_t>(window.dimension));
  for (std::size_t i = 0; i < n; ++i) {
    detail::uniform_point(window, rng, y.data());
    pattern.push_back(y);
  }
  pattern.validate();
  return pattern;
}

inline constexpr double kMaxExpectedPoints = 1e8;

template <class Rng>
PointPattern sample_poisson(double rho, const Window& window, Rng& rng) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidInput("sample_poisson: intensity must be positive");
  const double mean = rho * window.volume();
  if (mean > kMaxExpectedPoints) throw InvalidInput("sample_poisson: more than 1e8 expected points");
  std::poisson_distribution<long long> count(mean);
  return sample_binomial(static_cast<std::size_t>(count(rng)), window, rng);
}

/// Power exponential DPP: intensity rho, shape nu, scale alpha <= alpha_max.
struct DppSpec {
  double rho = 0.25;
  double nu = 10.0;
  double alpha = 0.0;
  int dimension = 2;
};

inline double dpp_alpha_max(double rho, double nu, int d) {
  if (!(rho > 0.0) || !(nu > 0.0) || d < 1) throw InvalidInput("dpp_alpha_max: need rho, nu > 0 and d >= 1");
  const double dd = d;
  const double ratio = std::exp(std::lgamma(dd / nu + 1.0) - std::lgamma(dd / 2.0 + 1.0)) / rho;
  return std::sqrt(std::numbers::pi) * std::pow(ratio, 1.0 / dd);
}

/// Spectral density (alpha/alpha_max)^d exp(-|alpha x|^nu). It integrates
/// to rho and peaks at 1 when alpha = alpha_max.
inline double dpp_spectral_density(std::span<const double> x, const DppSpec& spec) {
  const double amax = dpp_alpha_max(spec.rho, spec.nu, spec.dimension);
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  const double scaled = spec.alpha * std::sqrt(r2);
  return std::pow(spec.alpha / amax, spec.dimension) * std::exp(-std::pow(scaled, spec.nu));
}

inline void validate_dpp(const DppSpec& spec) {
  if (!(spec.alpha > 0.0)) throw InvalidInput("dpp: alpha must be positive");
  const double amax = dpp_alpha_max(spec.rho, spec.nu, spec.dimension);
  const double peak = std::pow(spec.alpha / amax, spec.dimension);
  if (peak > 1.0 + 1e-12)
    throw InvalidInput("dpp does not exist: spectral density at 0 is " + std::to_string(peak) +
                       " > 1 (alpha exceeds alpha_max = " + std::to_string(amax) + ")");
}

struct DppOptions {
  /// Fraction of rho*|window| the truncated spectrum must retain.
  double retained_mass = 0.99;
  /// Largest per-axis frequency index considered before giving up.
  int max_truncation = 2000;
  std::size_t max_proposals_per_point = 1000000;
  /// Pending accepted directions folded into the basis at once.
  std::size_t refresh_every = 64;
  std::size_t proposal_block = 64;
};

/// Frequencies k / (2 * half_side), k in [-m, m]^d, with their spectral
/// weights; m is the smallest index keeping `retained_mass` of rho|window|.
struct DppSpectrum {
  int truncation = 0;
  std::vector<int> frequencies;  // flat, d per entry
  std::vector<double> eigenvalues;
  double retained = 0.0;
};

inline DppSpectrum dpp_spectrum(const DppSpec& spec, const Window& window, const DppOptions& opts = {}) {
  validate_dpp(spec);
  if (spec.dimension != window.dimension) throw InvalidInput("dpp: dimension mismatch with window");
  const int d = spec.dimension;
  const double period = window.side();
  const double target = opts.retained_mass * spec.rho * window.volume();
  std::vector<double> x(static_cast<std::size_t>(d));
  auto eigen_at = [&](const std::vector<int>& k) {
    for (int a = 0; a < d; ++a) x[a] = k[a] / period;
    return dpp_spectral_density(x, spec);
  };
  // Grow the cube shell by shell until enough spectral mass is retained.
  double total = 0.0;
  int m = -1;
  std::vector<int> k(static_cast<std::size_t>(d));
  while (total < target) {
    ++m;
    if (m > opts.max_truncation)
      throw NumericalError("dpp truncation retains only " + std::to_string(total) + " of " +
                           std::to_string(spec.rho * window.volume()) + "; increase max_truncation");
    std::fill(k.begin(), k.end(), -m);
    while (true) {
      int cheb = 0;
      for (int a = 0; a < d; ++a) cheb = std::max(cheb, std::abs(k[a]));
      if (cheb == m) total += eigen_at(k);
      int a = 0;
      for (; a < d; ++a) {
        if (++k[a] <= m) break;
        k[a] = -m;
      }
      if (a == d) break;
    }
  }
  DppSpectrum out;
  out.truncation = m;
  out.retained = total;
  std::fill(k.begin(), k.end(), -m);
  while (true) {
    out.frequencies.insert(out.frequencies.end(), k.begin(), k.end());
    out.eigenvalues.push_back(eigen_at(k));
    int a = d - 1;
    for (; a >= 0; --a) {
      if (++k[a] <= m) break;
      k[a] = -m;
    }
    if (a < 0) break;
  }
  return out;
}

namespace detail {

using linalg::cplx;

/// Sequential sampler for the projection DPP spanned by the selected
/// Fourier modes. The residual subspace is kept as an orthonormal basis U
/// (n x r) together with up to `refresh_every` pending unit directions W
/// (r x q, in U coordinates) that have already been removed. A uniform
/// proposal x with mode vector v(x) is accepted with probability
/// (|U^H v|^2 - |W^H U^H v|^2) / n.
class ProjectionSampler {
 public:
  ProjectionSampler(const Window& window, std::vector<int> modes, const DppOptions& opts)
      : window_(window), d_(window.dimension), modes_(std::move(modes)), opts_(opts) {
    n_ = modes_.size() / static_cast<std::size_t>(d_);
    for (int f : modes_) max_mode_ = std::max(max_mode_, std::abs(f));
  }

  template <class Rng>
  PointPattern run(Rng& rng) {
    PointPattern pattern(window_);
    if (n_ == 0) return pattern;
    r_ = n_;
    u_ = linalg::CMatrix::identity(n_);
    w_ = linalg::CMatrix(n_, opts_.refresh_every);
    q_ = 0;
    const std::size_t block = opts_.proposal_block;
    linalg::CMatrix v(n_, block), g(n_, block);
    std::vector<double> props(block * static_cast<std::size_t>(d_));
    std::vector<cplx> c(opts_.refresh_every), wv(n_);
    std::size_t remaining = n_;
    std::size_t tries = 0;
    const double envelope = static_cast<double>(n_);
    while (remaining > 0) {
      for (std::size_t j = 0; j < block; ++j) {
        uniform_point(window_, rng, props.data() + j * d_);
        fill_modes(props.data() + j * d_, v.col(j));
      }
      linalg::gemm_adjoint(r_, block, n_, u_.data.data(), n_, v.data.data(), n_, g.data.data(), n_);
      for (std::size_t j = 0; j < block && remaining > 0; ++j) {
        if (++tries > opts_.max_proposals_per_point)
          throw NumericalError("dpp rejection sampler exceeded proposal cap");
        const cplx* gj = g.col(j);
        double g2 = 0.0;
        for (std::size_t i = 0; i < r_; ++i) g2 += std::norm(gj[i]);
        double c2 = 0.0;
        for (std::size_t l = 0; l < q_; ++l) {
          cplx acc = 0.0;
          const cplx* wl = w_.col(l);
          for (std::size_t i = 0; i < r_; ++i) acc += std::conj(wl[i]) * gj[i];
          c[l] = acc;
          c2 += std::norm(acc);
        }
        const double density = std::max(0.0, g2 - c2);
        if (uniform01(rng) * envelope >= density) continue;
        pattern.push_back(std::span<const double>(props.data() + j * d_, static_cast<std::size_t>(d_)));
        --remaining;
        tries = 0;
        add_direction(gj, c.data(), wv.data(), std::sqrt(g2));
        if (q_ == opts_.refresh_every && remaining > 0) {
          refresh();
          break;  // remaining proposals were projected on the old basis
        }
      }
    }
    pattern.validate();
    return pattern;
  }

 private:
  void fill_modes(const double* x, cplx* out) {
    const std::size_t span = 2 * static_cast<std::size_t>(max_mode_) + 1;
    axis_.resize(span * static_cast<std::size_t>(d_));
    for (int a = 0; a < d_; ++a) {
      const double theta = 2.0 * std::numbers::pi * x[a] / window_.side();
      for (int k = -max_mode_; k <= max_mode_; ++k)
        axis_[a * span + static_cast<std::size_t>(k + max_mode_)] = std::polar(1.0, theta * k);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      cplx val = 1.0;
      for (int a = 0; a < d_; ++a)
        val *= axis_[a * span + static_cast<std::size_t>(modes_[i * d_ + a] + max_mode_)];
      out[i] = val;
    }
  }

  // Append the normalized component of g orthogonal to the pending set,
  // re-orthogonalizing once when cancellation is severe.
  void add_direction(const cplx* g, const cplx* c, cplx* w, double gnorm) {
    for (std::size_t i = 0; i < r_; ++i) w[i] = g[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t l = 0; l < q_; ++l) {
        const cplx* wl = w_.col(l);
        cplx coef = 0.0;
        if (pass == 0) {
          coef = c[l];
        } else {
          for (std::size_t i = 0; i < r_; ++i) coef += std::conj(wl[i]) * w[i];
        }
        for (std::size_t i = 0; i < r_; ++i) w[i] -= coef * wl[i];
      }
      double nw = 0.0;
      for (std::size_t i = 0; i < r_; ++i) nw += std::norm(w[i]);
      nw = std::sqrt(nw);
      if (pass == 1 || nw >= 1e-6 * gnorm) {
        if (!(nw > 0.0)) throw NumericalError("dpp sampler: accepted direction lies in the removed span");
        cplx* dst = w_.col(q_);
        for (std::size_t i = 0; i < r_; ++i) dst[i] = w[i] / nw;
        ++q_;
        return;
      }
    }
  }

  // U <- U * Q where Q completes the pending directions to a unitary basis;
  // the first q columns (the removed span) are dropped.
  void refresh() {
    const auto r = static_cast<lapack_int>(r_), q = static_cast<lapack_int>(q_), n = static_cast<lapack_int>(n_);
    std::vector<cplx> tau(q_);
    linalg::check_info(LAPACKE_zgeqrf(LAPACK_COL_MAJOR, r, q, w_.data.data(), n, tau.data()), "zgeqrf");
    linalg::check_info(LAPACKE_zunmqr(LAPACK_COL_MAJOR, 'R', 'N', n, r, q, w_.data.data(), n, tau.data(),
                                      u_.data.data(), n),
                       "zunmqr");
    std::copy(u_.data.begin() + static_cast<std::ptrdiff_t>(q_ * n_), u_.data.begin() + static_cast<std::ptrdiff_t>(r_ * n_),
              u_.data.begin());
    r_ -= q_;
    q_ = 0;
    std::fill(w_.data.begin(), w_.data.end(), cplx(0.0));
  }

  Window window_;
  int d_;
  std::vector<int> modes_;
  DppOptions opts_;
  std::size_t n_ = 0;
  int max_mode_ = 0;
  std::size_t r_ = 0;
  std::size_t q_ = 0;
  linalg::CMatrix u_;
  linalg::CMatrix w_;
  std::vector<cplx> axis_;
};

}  // namespace detail

/// One realization of the power exponential DPP on the window, using the
/// periodic Fourier approximation of the kernel: each mode k/(2*half_side)
/// is kept with probability equal to its spectral weight, then the
/// projection process on the kept modes is sampled point by point.
template <class Rng>
PointPattern sample_dpp(const DppSpec& spec, const Window& window, Rng& rng, const DppOptions& opts = {}) {
  const DppSpectrum spectrum = dpp_spectrum(spec, window, opts);
  const auto d = static_cast<std::size_t>(spec.dimension);
  std::vector<int> modes;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
    if (detail::uniform01(rng) < spectrum.eigenvalues[i])
      modes.insert(modes.end(), spectrum.frequencies.begin() + static_cast<std::ptrdiff_t>(i * d),
                   spectrum.frequencies.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
  detail::ProjectionSampler sampler(window, std::move(modes), opts);
  return sampler.run(rng);
}

struct NearestNeighborStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

inline std::vector<double> nn_distances(const PointPattern& pattern) {
  if (pattern.size() < 2) throw InvalidInput("nearest-neighbour distances need at least 2 points");
  const NearestIndex index(pattern, NormSpec::euclidean(), pattern.window().half_side);
  std::vector<double> out(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) out[i] = index.nearest(pattern.point(i).data(), i).distance;
  return out;
}

inline NearestNeighborStats nn_distance_stats(const PointPattern& pattern) {
  const auto dist = nn_distances(pattern);
  NearestNeighborStats s{0.0, dist.front(), dist.front()};
  for (double v : dist) {
    s.mean += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean /= static_cast<double>(dist.size());
  return s;
}

}  // namespace gensample
