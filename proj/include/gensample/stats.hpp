#pragma once

// Summary statistics, Welch t-tests with Holm adjustment, and Pearson
// correlation tests. Student-t tail probabilities come from the regularized
// incomplete beta function.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "gensample/error.hpp"

namespace gensample::stats {

struct Summary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation (n - 1)
  double se = 0.0;
};

inline Summary summarize(std::span<const double> x) {
  Summary s;
  s.n = x.size();
  if (s.n < 2) throw InvalidInput("summarize: need at least two values");
  s.mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(s.n);
  double ss = 0.0;
  for (double v : x) ss += (v - s.mean) * (v - s.mean);
  s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
  s.se = s.sd / std::sqrt(static_cast<double>(s.n));
  return s;
}

namespace detail {

// Continued fraction for I_x(a, b), modified Lentz.
inline double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 200;
  constexpr double kEps = 1e-10;
  constexpr double kTiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw NumericalError("incomplete beta: continued fraction did not converge");
}

}  // namespace detail

/// Regularized incomplete beta I_x(a, b).
inline double incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidInput("incomplete_beta: a and b must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("incomplete_beta: x outside [0, 1]");
  if (x == 0.0 || x == 1.0) return x;
  const double front =
      std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * detail::beta_cf(a, b, x) / a;
  return 1.0 - front * detail::beta_cf(b, a, 1.0 - x) / b;
}

/// Two-sided tail P(|T| >= |t|) for Student t with df degrees of freedom.
inline double student_t_two_sided(double t, double df) {
  if (!(df > 0.0)) throw InvalidInput("student_t: df must be positive");
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  return incomplete_beta(df / (df + t * t), 0.5 * df, 0.5);
}

struct TTest {
  double statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;
};

/// Welch's unequal-variance t-test of mean(a) - mean(b).
inline TTest welch_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw InvalidInput("welch_test: each group needs at least two values");
  const auto sa = summarize(a), sb = summarize(b);
  const double va = sa.sd * sa.sd / static_cast<double>(sa.n);
  const double vb = sb.sd * sb.sd / static_cast<double>(sb.n);
  const double diff = sa.mean - sb.mean;
  TTest r;
  if (va + vb == 0.0) {
    r.df = static_cast<double>(sa.n + sb.n - 2);
    if (diff == 0.0) return r;
    r.statistic = std::copysign(std::numeric_limits<double>::infinity(), diff);
    r.p_value = 0.0;
    return r;
  }
  r.statistic = diff / std::sqrt(va + vb);
  r.df = (va + vb) * (va + vb) /
         (va * va / static_cast<double>(sa.n - 1) + vb * vb / static_cast<double>(sb.n - 1));
  r.p_value = student_t_two_sided(r.statistic, r.df);
  return r;
}

/// Holm step-down adjustment; output is in the input order.
inline std::vector<double> holm_adjust(std::span<const double> p) {
  const std::size_t m = p.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return p[i] < p[j]; });
  std::vector<double> adj(m);
  double running = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    running = std::max(running, std::min(1.0, static_cast<double>(m - r) * p[order[r]]));
    adj[order[r]] = running;
  }
  return adj;
}

struct PairwiseComparison {
  std::string first;
  std::string second;
  double mean_difference = 0.0;
  TTest test;
  double adjusted_p = 1.0;
};

struct Group {
  std::string label;
  std::vector<double> values;
};

/// All pairwise Welch tests, Holm-adjusted over the family.
inline std::vector<PairwiseComparison> pairwise_welch(const std::vector<Group>& groups) {
  std::vector<PairwiseComparison> out;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      PairwiseComparison c{groups[i].label, groups[j].label, 0.0, welch_test(groups[i].values, groups[j].values),
                           1.0};
      c.mean_difference = summarize(groups[i].values).mean - summarize(groups[j].values).mean;
      out.push_back(std::move(c));
    }
  std::vector<double> raw;
  for (const auto& c : out) raw.push_back(c.test.p_value);
  const auto adj = holm_adjust(raw);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].adjusted_p = adj[i];
  return out;
}

struct Correlation {
  std::size_t n = 0;
  double r = 0.0;
  double statistic = 0.0;  // r sqrt((n-2)/(1-r^2))
  double p_value = 1.0;
};

inline Correlation pearson_test(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidInput("pearson_test: length mismatch");
  if (x.size() < 3) throw InvalidInput("pearson_test: need at least three pairs");
  const auto sx = summarize(x), sy = summarize(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - sx.mean) * (y[i] - sy.mean);
    sxx += (x[i] - sx.mean) * (x[i] - sx.mean);
    syy += (y[i] - sy.mean) * (y[i] - sy.mean);
  }
  if (sxx == 0.0 || syy == 0.0) throw InvalidInput("pearson_test: constant sample");
  Correlation c;
  c.n = x.size();
  c.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  const double df = static_cast<double>(c.n - 2);
  if (std::abs(c.r) == 1.0) {
    c.statistic = std::copysign(std::numeric_limits<double>::infinity(), c.r);
    c.p_value = 0.0;
    return c;
  }
  c.statistic = c.r * std::sqrt(df / (1.0 - c.r * c.r));
  c.p_value = student_t_two_sided(c.statistic, df);
  return c;
}

}  // namespace gensample::stats
