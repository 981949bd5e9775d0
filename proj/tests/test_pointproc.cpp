#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gensample/pointproc.hpp"
#include "gensample/rng.hpp"
#include "gensample/stats.hpp"

using namespace gensample;

TEST(RngStream, ReplaysAndSeparatesStreams) {
  RngStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  bool differ_c = false, differ_d = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    differ_c |= x != c();
    differ_d |= x != d();
  }
  EXPECT_TRUE(differ_c);
  EXPECT_TRUE(differ_d);
  static_assert(std::uniform_random_bit_generator<RngStream>);
}

TEST(RngStream, UniformMomentsLookRight) {
  RngStream r(1, 0);
  double s = 0.0, s2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    s += u;
    s2 += u * u;
  }
  EXPECT_NEAR(s / n, 0.5, 4e-3);
  EXPECT_NEAR(s2 / n, 1.0 / 3.0, 4e-3);
}

TEST(Binomial, ExactCountInsideWindow) {
  const Window w(64.0, 2);
  RngStream rng(5, 0);
  const auto p = sample_binomial(4096, w, rng);
  EXPECT_EQ(p.size(), 4096u);
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_TRUE(w.contains(p.point(i)));
}

TEST(Binomial, SameStreamSameCoordinates) {
  const Window w(8.0, 2);
  RngStream a(9, 1), b(9, 1);
  EXPECT_EQ(sample_binomial(50, w, a).coords(), sample_binomial(50, w, b).coords());
}

TEST(Poisson, MeanCountMatchesIntensity) {
  const Window w(8.0, 2);
  const double rho = 0.25, mean = rho * w.volume();
  double total = 0.0;
  const int reps = 400;
  for (int r = 0; r < reps; ++r) {
    RngStream rng(17, static_cast<std::uint64_t>(r));
    total += static_cast<double>(sample_poisson(rho, w, rng).size());
  }
  EXPECT_NEAR(total / reps, mean, 4.0 * std::sqrt(mean / reps));
}

TEST(Poisson, RejectsBadIntensity) {
  RngStream rng(1, 1);
  EXPECT_THROW(sample_poisson(0.0, Window(1.0, 2), rng), InvalidInput);
  EXPECT_THROW(sample_poisson(1e9, Window(64.0, 2), rng), InvalidInput);
}

// The spectral density at alpha_max must integrate to rho; check by radial
// quadrature instead of through the closed form used for alpha_max.
TEST(Dpp, SpectralDensityIntegratesToIntensity) {
  for (double rho : {0.25, 1.0 / 16.0}) {
    const DppSpec spec{rho, 10.0, dpp_alpha_max(rho, 10.0, 2), 2};
    const double a = spec.alpha;
    double integral = 0.0;
    const int n = 200000;
    const double rmax = 2.0 / a, h = rmax / n;
    for (int i = 0; i < n; ++i) {
      const double r = (i + 0.5) * h;
      const double x[2] = {r, 0.0};
      integral += 2.0 * std::numbers::pi * r * dpp_spectral_density(x, spec) * h;
    }
    EXPECT_NEAR(integral, rho, 1e-8 * rho);
    const double zero[2] = {0.0, 0.0};
    EXPECT_NEAR(dpp_spectral_density(zero, spec), 1.0, 1e-14);
    const double edge[2] = {1.0 / a, 0.0};
    EXPECT_NEAR(dpp_spectral_density(edge, spec), std::exp(-1.0), 1e-14);
  }
}

TEST(Dpp, ExistenceCheck) {
  const double amax = dpp_alpha_max(0.25, 10.0, 2);
  EXPECT_NO_THROW(validate_dpp({0.25, 10.0, amax, 2}));
  EXPECT_NO_THROW(validate_dpp({0.25, 10.0, 0.5 * amax, 2}));
  EXPECT_THROW(validate_dpp({0.25, 10.0, 1.01 * amax, 2}), InvalidInput);
}

TEST(Dpp, SpectrumRetainsRequestedMass) {
  const Window w(16.0, 2);
  const DppSpec spec{0.25, 10.0, dpp_alpha_max(0.25, 10.0, 2), 2};
  const auto s = dpp_spectrum(spec, w);
  EXPECT_GE(s.retained, 0.99 * spec.rho * w.volume());
  double sum = 0.0;
  for (double l : s.eigenvalues) {
    EXPECT_GE(l, 0.0);
    EXPECT_LE(l, 1.0);
    sum += l;
  }
  EXPECT_LE(sum, spec.rho * w.volume() * 1.0001);
}

// Projection DPP with modes {0, 1} on [-1/2, 1/2]: the pair density is
// proportional to 1 - cos(2 pi (x - y)), so E cos(2 pi (x - y)) = -1/2.
TEST(Dpp, TwoPointProjectionPairLaw) {
  const Window w(0.5, 1);
  const int reps = 3000;
  double s = 0.0;
  for (int r = 0; r < reps; ++r) {
    RngStream rng(3, static_cast<std::uint64_t>(r));
    detail::ProjectionSampler sampler(w, {0, 1}, {});
    const auto p = sampler.run(rng);
    ASSERT_EQ(p.size(), 2u);
    s += std::cos(2.0 * std::numbers::pi * (p.point(0)[0] - p.point(1)[0]));
  }
  EXPECT_NEAR(s / reps, -0.5, 3.0 * 0.5 / std::sqrt(double(reps)));
}

// For contiguous modes {0..n-1} on a circle of length L the first Fourier
// coefficient of the pattern satisfies E|sum_i exp(2 pi i x_i / L)|^2 = 1
// (it would be n for independent points). n exceeds the refresh interval,
// so this exercises the basis updates too.
TEST(Dpp, ProjectionLinearStatistic) {
  const Window w(0.5, 1);
  std::vector<int> modes(150);
  for (int k = 0; k < 150; ++k) modes[k] = k;
  DppOptions opts;
  opts.refresh_every = 8;
  opts.proposal_block = 16;
  double mean = 0.0;
  const int reps = 40;
  for (int r = 0; r < reps; ++r) {
    RngStream rng(21, static_cast<std::uint64_t>(r));
    detail::ProjectionSampler sampler(w, modes, opts);
    const auto p = sampler.run(rng);
    ASSERT_EQ(p.size(), modes.size());
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) acc += std::polar(1.0, 2.0 * std::numbers::pi * p.point(i)[0]);
    mean += std::norm(acc);
  }
  mean /= reps;
  EXPECT_LT(mean, 3.0);
  EXPECT_GT(mean, 0.2);
}

TEST(Dpp, ExpectedCountAndRepulsion) {
  const Window w(16.0, 2);
  const DppSpec spec{0.25, 10.0, dpp_alpha_max(0.25, 10.0, 2), 2};
  std::vector<double> dpp_nn, poisson_nn, counts;
  for (int r = 0; r < 20; ++r) {
    RngStream a(77, static_cast<std::uint64_t>(r)), b(78, static_cast<std::uint64_t>(r));
    const auto x = sample_dpp(spec, w, a);
    const auto y = sample_poisson(spec.rho, w, b);
    counts.push_back(static_cast<double>(x.size()));
    dpp_nn.push_back(nn_distance_stats(x).mean);
    poisson_nn.push_back(nn_distance_stats(y).mean);
  }
  // count variance of a near-projection DPP is tiny
  EXPECT_NEAR(stats::summarize(counts).mean, 256.0, 10.0);
  const auto t = stats::welch_test(dpp_nn, poisson_nn);
  EXPECT_GT(t.statistic, 0.0);
  EXPECT_LT(t.p_value, 0.01);
}

TEST(NearestNeighbour, KnownConfiguration) {
  const Window w(2.0, 2);
  const PointPattern p(w, {0.0, 0.0, 1.0, 0.0, 0.0, 0.5});
  const auto d = nn_distances(p);
  EXPECT_DOUBLE_EQ(d[0], 0.5);
  EXPECT_DOUBLE_EQ(d[1], 1.0);
  EXPECT_DOUBLE_EQ(d[2], 0.5);
  EXPECT_THROW(nn_distances(PointPattern(w, {0.0, 0.0})), InvalidInput);
}
