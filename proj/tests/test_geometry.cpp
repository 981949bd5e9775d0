#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gensample/geometry.hpp"
#include "gensample/pointproc.hpp"
#include "gensample/rng.hpp"

using namespace gensample;

namespace {

PointPattern cell_centered_grid(double eps, const Window& w) {
  PointPattern p(w);
  const int n = static_cast<int>(std::lround(w.side() / eps));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double y[2] = {-w.half_side + eps * (i + 0.5), -w.half_side + eps * (j + 0.5)};
      p.push_back(y);
    }
  p.validate();
  return p;
}

double brute_nearest(const PointPattern& p, const double* q, const NormSpec& spec, std::size_t skip) {
  double best = INFINITY;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == skip) continue;
    std::vector<double> diff(static_cast<std::size_t>(p.dimension()));
    for (int a = 0; a < p.dimension(); ++a) diff[a] = q[a] - p.point(i)[a];
    best = std::min(best, norm_value(diff, spec));
  }
  return best;
}

}  // namespace

TEST(Window, VolumeAndContainment) {
  const Window w(64.0, 2);
  EXPECT_DOUBLE_EQ(w.volume(), 128.0 * 128.0);
  EXPECT_DOUBLE_EQ(w.bandwidth(), 64.0);
  const double in[2] = {64.0, -64.0}, out[2] = {64.0001, 0.0};
  EXPECT_TRUE(w.contains(in));
  EXPECT_FALSE(w.contains(out));
  EXPECT_THROW(Window(0.0, 2), InvalidInput);
  EXPECT_THROW(Window(1.0, 0), InvalidInput);
  EXPECT_DOUBLE_EQ(w.dilated(0.25).half_side, 64.25);
}

TEST(Norms, PolarIsScaledL1) {
  const double y[2] = {0.3, -0.4};
  EXPECT_DOUBLE_EQ(norm_value(y, NormSpec::box_polar(0.5)), 0.35);
  EXPECT_DOUBLE_EQ(norm_value(y, NormSpec::euclidean()), 0.5);
  // |y|_polar >= s * |y|_inf
  EXPECT_GE(norm_value(y, NormSpec::box_polar(0.5)), 0.5 * 0.4);
  const double bad[2] = {NAN, 0.0};
  EXPECT_THROW(norm_value(bad, NormSpec::euclidean()), InvalidInput);
  EXPECT_THROW(NormSpec::box_polar(-1.0), InvalidInput);
}

TEST(PointPattern, RejectsDuplicatesOutsideAndNonFinite) {
  const Window w(1.0, 2);
  EXPECT_THROW(PointPattern(w, {0.0, 0.0, 0.0, 0.0}), InvalidInput);
  EXPECT_THROW(PointPattern(w, {0.0, 1.5}), InvalidInput);
  EXPECT_THROW(PointPattern(w, {NAN, 0.0}), InvalidInput);
  EXPECT_THROW(PointPattern(w, {0.0, 0.1, 0.2}), InvalidInput);
  EXPECT_NO_THROW(PointPattern(w, {0.0, 0.0, 0.0, 1.0}));
}

TEST(NearestIndex, MatchesBruteForceInBothNorms) {
  const Window w(8.0, 2);
  RngStream rng(7, 0);
  const auto p = sample_binomial(300, w, rng);
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-9.0, 9.0);
  for (const auto& spec : {NormSpec::euclidean(), NormSpec::box_polar(0.5)}) {
    const NearestIndex index(p, spec, 8.0);
    for (int t = 0; t < 500; ++t) {
      const double q[2] = {u(gen), u(gen)};
      EXPECT_NEAR(index.nearest(q, p.size()).distance, brute_nearest(p, q, spec, p.size()), 1e-12);
    }
    for (std::size_t i = 0; i < p.size(); i += 17)
      EXPECT_NEAR(index.nearest(p.point(i).data(), i).distance, brute_nearest(p, p.point(i).data(), spec, i), 1e-12);
  }
}

TEST(NearestIndex, ThreeDimensional) {
  const Window w(2.0, 3);
  RngStream rng(11, 4);
  const auto p = sample_binomial(200, w, rng);
  const NearestIndex index(p, NormSpec::euclidean(), 2.0);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    const double q[3] = {u(gen), u(gen), u(gen)};
    EXPECT_NEAR(index.nearest(q, p.size()).distance, brute_nearest(p, q, NormSpec::euclidean(), p.size()), 1e-12);
  }
}

TEST(InverseDensity, RegularGridEuclidean) {
  const Window w(4.0, 2);
  for (double eps : {1.0, 0.5}) {
    const auto p = cell_centered_grid(eps, w);
    const auto d = inverse_density(p, w, NormSpec::euclidean(), 64);
    EXPECT_NEAR(d.value, eps * std::sqrt(2.0) / 2.0, 1e-12);
    EXPECT_NEAR(d.cell_diameter, std::sqrt(2.0) * 8.0 / 64.0, 1e-15);
  }
}

TEST(InverseDensity, RegularGridPolar) {
  const Window w(4.0, 2);
  const auto p = cell_centered_grid(1.0, w);
  EXPECT_NEAR(inverse_density(p, w, NormSpec::box_polar(0.5), 64).value, 0.5, 1e-12);
}

TEST(InverseDensity, SinglePointAtOrigin) {
  const Window w(1.0, 2);
  const PointPattern p(w, {0.0, 0.0});
  // farthest point of the square is a corner
  EXPECT_NEAR(inverse_density(p, w, NormSpec::euclidean(), 4).value, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(inverse_density(p, w, NormSpec::box_polar(0.5), 4).value, 1.0, 1e-15);
}

TEST(InverseDensity, NonDecreasingUnderDyadicRefinement) {
  const Window w(4.0, 2);
  RngStream rng(1, 2);
  const auto p = sample_binomial(40, w, rng);
  for (const auto& spec : {NormSpec::euclidean(), NormSpec::box_polar(0.5)}) {
    double prev = 0.0;
    for (int res = 4; res <= 512; res *= 2) {
      const auto d = inverse_density(p, w, spec, res);
      EXPECT_GE(d.value, prev);
      // the estimate plus one cell diameter bounds the true supremum from above
      const auto fine = inverse_density(p, w, spec, 1024);
      EXPECT_LE(fine.value, d.value + d.cell_diameter + 1e-12);
      prev = d.value;
    }
  }
}

TEST(InverseDensity, Errors) {
  const Window w(1.0, 2);
  EXPECT_THROW(inverse_density(PointPattern(w), w, NormSpec::euclidean(), 8), InvalidInput);
  EXPECT_THROW(inverse_density(PointPattern(w, {0.0, 0.0}), w, NormSpec::euclidean(), 1), InvalidInput);
}

TEST(VoronoiWeights, PartitionAndRegularCells) {
  const Window w(4.0, 2);
  const auto p = cell_centered_grid(1.0, w);
  const auto s = voronoi_weights(p, w, NormSpec::euclidean(), 64);
  double sum = 0.0;
  for (double m : s.weights) {
    EXPECT_DOUBLE_EQ(m, 1.0);
    sum += m;
  }
  EXPECT_EQ(sum, w.volume());
}

TEST(VoronoiWeights, SumIsWindowVolumeForRandomPatterns) {
  const Window w(16.0, 2);
  for (int rep = 0; rep < 5; ++rep) {
    RngStream rng(99, static_cast<std::uint64_t>(rep));
    const auto p = sample_binomial(256, w, rng);
    for (const auto& spec : {NormSpec::euclidean(), NormSpec::box_polar(0.5)}) {
      const auto s = voronoi_weights(p, w, spec, 256);
      double sum = 0.0;
      for (double m : s.weights) {
        EXPECT_GT(m, 0.0);
        sum += m;
      }
      EXPECT_NEAR(sum, w.volume(), s.sum_tolerance);
    }
  }
}

TEST(VoronoiWeights, SymmetricPairGetsEqualWeights) {
  const Window w(2.0, 2);
  // mirror pair across x = 0; no cell centre lies on the bisector
  const PointPattern p(w, {-0.7, 0.3, 0.7, 0.3});
  for (const auto& spec : {NormSpec::euclidean(), NormSpec::box_polar(0.5)}) {
    const auto s = voronoi_weights(p, w, spec, 128);
    EXPECT_DOUBLE_EQ(s.weights[0], s.weights[1]);
  }
}

TEST(VoronoiWeights, RefinementChangesWeightsLittle) {
  const Window w(4.0, 2);
  RngStream rng(5, 1);
  const auto p = sample_binomial(100, w, rng);
  const auto a = voronoi_weights(p, w, NormSpec::box_polar(0.5), 512);
  const auto b = voronoi_weights(p, w, NormSpec::box_polar(0.5), 1024);
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_LT(std::abs(a.weights[i] - b.weights[i]) / b.weights[i], 0.05);
}

// Every coarse centre (+-0.5, +-0.5) is closer to point 0, so the four cells
// around point 1 are split 8 per axis: 28 of the 64 subcentres in [0,1]^2
// satisfy x + y > 1.1.
TEST(VoronoiWeights, StarvedPointTriggersLocalRefinement) {
  const Window w(1.0, 2);
  const PointPattern p(w, {0.5, 0.5, 0.6, 0.6});
  const auto s = voronoi_weights(p, w, NormSpec::euclidean(), 2);
  EXPECT_EQ(s.weights[1], 28.0 / 64.0);
  EXPECT_EQ(s.weights[0] + s.weights[1], 4.0);
}

TEST(VoronoiWeights, CloseBinomialPairsKeepPositiveWeights) {
  const Window w(8.0, 2);
  RngStream rng(3, 0);
  auto p = sample_binomial(400, w, rng);
  for (int k = 0; k < 20; ++k) {
    auto q = p.point(static_cast<std::size_t>(k));
    const double shifted[2] = {std::min(q[0] + 1e-3, 8.0), q[1]};
    p.push_back(shifted);
  }
  const auto s = voronoi_weights(p, w, NormSpec::box_polar(8.0), 64);
  double sum = 0.0;
  for (double m : s.weights) {
    EXPECT_GT(m, 0.0);
    sum += m;
  }
  EXPECT_EQ(sum, w.volume());
}

TEST(VoronoiWeights, UnreachablePointIsReported) {
  // the pattern lives in a larger window than the one being partitioned
  const Window big(2.0, 2), small(1.0, 2);
  const PointPattern p(big, {0.5, 0.5, 1.9, 1.9});
  try {
    voronoi_weights(p, small, NormSpec::euclidean(), 2);
    FAIL() << "expected an error";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("point 1"), std::string::npos);
  }
}

TEST(UnitWeights, AllOnes) {
  const Window w(1.0, 2);
  const auto s = unit_weights(PointPattern(w, {0.0, 0.0, 0.5, 0.5}));
  EXPECT_EQ(s.weights, (std::vector<double>{1.0, 1.0}));
}
