#pragma once

// Lower bound on the probability that a homogeneous Poisson sample in a
// box has inverse density below 1/4, and a Monte Carlo check of it.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "gensample/error.hpp"
#include "gensample/geometry.hpp"
#include "gensample/pointproc.hpp"
#include "gensample/rng.hpp"

namespace gensample {

/// Volume of the Euclidean unit ball in R^d.
inline double unit_ball_volume(int d) {
  if (d < 1) throw InvalidInput("unit_ball_volume: d must be >= 1");
  return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(1.0 + 0.5 * d);
}

/// Surface area of the unit sphere S^{d-1}.
inline double unit_sphere_area(int d) {
  if (d < 1) throw InvalidInput("unit_sphere_area: d must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

/// Upper incomplete gamma Gamma(d, s) for integer d >= 1, by the recursion
/// Gamma(k, s) = (k-1) Gamma(k-1, s) + s^(k-1) e^-s.
inline double upper_incomplete_gamma(int d, double s) {
  if (d < 1) throw InvalidInput("upper_incomplete_gamma: d must be >= 1");
  if (!(s >= 0.0)) throw InvalidInput("upper_incomplete_gamma: s must be >= 0");
  const double e = std::exp(-s);
  double g = e;
  double power = 1.0;
  for (int k = 2; k <= d; ++k) {
    power *= s;
    g = (k - 1) * g + power * e;
  }
  return g;
}

/// Dimension-dependent factor of the random-simplex volume moment:
/// Gamma((d^2+1)/2)/Gamma(d^2/2) * (Gamma(d/2)/Gamma((d+1)/2))^d
///   * prod_{i=2}^{d} Gamma(i/2) / prod_{i=1}^{d-1} Gamma(i/2).
/// The two products telescope to Gamma(d/2)/Gamma(1/2).
inline double simplex_moment_factor(int d) {
  if (d < 1) throw InvalidInput("simplex_moment_factor: d must be >= 1");
  const double dd = d;
  if (d <= 10) {
    // numerator and denominator are accumulated in matching order so that
    // d = 1 gives exactly 1
    double num = std::tgamma(0.5 * (dd * dd + 1.0));
    double den = std::tgamma(0.5 * dd * dd);
    for (int i = 0; i < d; ++i) {
      num *= std::tgamma(0.5 * dd);
      den *= std::tgamma(0.5 * (dd + 1.0));
    }
    num *= std::tgamma(0.5 * dd);
    den *= std::tgamma(0.5);
    return num / den;
  }
  const double lg = std::lgamma(0.5 * (dd * dd + 1.0)) - std::lgamma(0.5 * dd * dd) +
                    dd * (std::lgamma(0.5 * dd) - std::lgamma(0.5 * (dd + 1.0))) + std::lgamma(0.5 * dd) -
                    std::lgamma(0.5);
  return std::exp(lg);
}

struct PoissonBound {
  double value = 0.0;            // may be negative, in which case it is vacuous
  double simplex_factor = 0.0;
  double incomplete_gamma = 0.0; // Gamma(d, rho omega_d 4^-d)
  double radial_integral = 0.0;  // Gamma(...) / (d (rho omega_d)^d)
  double volume_term = 0.0;      // rho^(d+1) |K|
};

/// 1 - rho^(d+1) |K| * simplex_factor(d) * Gamma(d, rho omega_d 4^-d) / (d (rho omega_d)^d)
inline PoissonBound poisson_density_bound(int d, double rho, double volume) {
  if (d < 1) throw InvalidInput("poisson bound: d must be >= 1");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidInput("poisson bound: rho must be positive");
  if (!(volume > 0.0) || !std::isfinite(volume)) throw InvalidInput("poisson bound: volume must be positive");
  PoissonBound b;
  const double rw = rho * unit_ball_volume(d);
  b.simplex_factor = simplex_moment_factor(d);
  b.incomplete_gamma = upper_incomplete_gamma(d, rw * std::pow(4.0, -d));
  b.radial_integral = b.incomplete_gamma / (d * std::pow(rw, d));
  b.volume_term = std::pow(rho, d + 1) * volume;
  b.value = 1.0 - b.volume_term * b.simplex_factor * b.radial_integral;
  return b;
}

struct McReplicate {
  std::size_t points = 0;
  double delta = 0.0;
  bool event = false;  // certified delta < 1/4
};

struct McEstimate {
  double frequency = 0.0;
  double std_error = 0.0;
  std::vector<McReplicate> replicates;
};

/// Frequency of the certified event delta(X, K) + cell diameter < 1/4, with
/// X Poisson(rho) on K dilated by 1/4 and delta measured in the Euclidean
/// norm on a vertex grid of K.
inline McEstimate mc_density_probability(int d, double rho, const Window& window, int replicates, int grid_res,
                                         std::uint64_t seed) {
  if (replicates < 1) throw InvalidInput("mc bound: need at least one replicate");
  if (window.dimension != d) throw InvalidInput("mc bound: window dimension mismatch");
  const Window sampling = window.dilated(0.25);
  const NormSpec norm = NormSpec::euclidean();
  McEstimate out;
  std::size_t hits = 0;
  for (int r = 0; r < replicates; ++r) {
    RngStream rng(seed, static_cast<std::uint64_t>(r));
    const PointPattern x = sample_poisson(rho, sampling, rng);
    McReplicate rep;
    rep.points = x.size();
    if (x.empty()) {
      rep.delta = std::numeric_limits<double>::infinity();
    } else {
      const auto est = inverse_density(x, window, norm, grid_res);
      rep.delta = est.value;
      rep.event = est.certifies_below(0.25);
    }
    hits += rep.event ? 1 : 0;
    out.replicates.push_back(rep);
  }
  const double n = replicates;
  out.frequency = static_cast<double>(hits) / n;
  out.std_error = std::sqrt(out.frequency * (1.0 - out.frequency) / n);
  return out;
}

}  // namespace gensample
