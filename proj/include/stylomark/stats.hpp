// Copyright 2026 The Stylomark Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tail probabilities and rank tests used by the detector and the
// evaluation harness.

#ifndef STYLOMARK_STATS_HPP_
#define STYLOMARK_STATS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "stylomark/error.hpp"

namespace stylomark {

namespace detail {

inline double log_choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  k = std::min(k, n - k);
  if (n <= 66) {
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return std::log(static_cast<double>(c));
  }
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace detail

// log P(X >= k), X ~ Binomial(n, p), summed directly over the upper tail
// in log space so tiny tails keep full relative precision.
inline double log_binomial_sf(std::uint64_t n, std::uint64_t k, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("binomial_sf: p must lie in [0, 1]");
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (k == 0) return 0.0;
  if (k > n) return kNegInf;
  if (p == 0.0) return kNegInf;
  if (p == 1.0) return 0.0;
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  std::vector<double> terms;
  terms.reserve(n - k + 1);
  double top = kNegInf;
  for (std::uint64_t i = k; i <= n; ++i) {
    const double t = detail::log_choose(n, i) + static_cast<double>(i) * lp + static_cast<double>(n - i) * lq;
    terms.push_back(t);
    top = std::max(top, t);
  }
  double sum = 0.0;
  for (const double t : terms) sum += std::exp(t - top);
  return std::min(0.0, top + std::log(sum));
}

inline double binomial_sf(std::uint64_t n, std::uint64_t k, double p) { return std::exp(log_binomial_sf(n, k, p)); }

// 1 - Phi(z) = erfc(z / sqrt 2) / 2. glibc's erfc is accurate to a few ulp,
// well inside 1e-10 absolute on [-8, 8].
inline double normal_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

inline double normal_cdf(double z) { return normal_sf(-z); }

inline double log_normal_pdf(double z) { return -0.5 * z * z - 0.5 * std::log(2.0 * std::numbers::pi); }

// log(1 - Phi(z)); switches to the asymptotic series once erfc underflows.
inline double log_normal_sf(double z) {
  if (z < 30.0) return std::log(normal_sf(z));
  const double r = 1.0 / (z * z);
  const double series = 1.0 - r + 3.0 * r * r - 15.0 * r * r * r + 105.0 * r * r * r * r;
  return log_normal_pdf(z) - std::log(z) + std::log(series);
}

// Inverse standard normal CDF. Acklam's rational approximation followed by
// one Halley refinement step against erfc.
inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw ConfigError("normal_quantile: p must lie in [0, 1]");
  }
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                 1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                 6.680131188771972e+01,  -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                 -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                 3.754408661907416e+00};
  constexpr double lo = 0.02425;
  double x;
  if (p < lo) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - lo) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

// Phi^{-1}(exp(log_p)) for probabilities too small to represent directly.
inline double normal_quantile_from_log(double log_p) {
  if (log_p > 0.0 || std::isnan(log_p)) throw ConfigError("normal_quantile_from_log: log_p must be <= 0");
  if (log_p == -std::numeric_limits<double>::infinity()) return -std::numeric_limits<double>::infinity();
  if (log_p > -690.0) return normal_quantile(std::exp(log_p));
  // Solve log_normal_sf(x) = log_p for x > 0, then z = -x.
  double x = std::sqrt(-2.0 * log_p);
  for (int i = 0; i < 60; ++i) {
    const double f = log_normal_sf(x) - log_p;
    const double slope = -std::exp(log_normal_pdf(x) - log_normal_sf(x));
    const double step = f / slope;
    x -= step;
    if (std::abs(step) < 1e-13 * x) break;
  }
  return -x;
}

struct MannWhitneyResult {
  double u = 0.0;  // U statistic of the first sample
  double z = 0.0;  // 0 when the exact distribution was used
  double p_value = 1.0;
  bool exact = false;
};

namespace detail {

// Number of arrangements with U = u for sample sizes (m, n), all u.
inline std::vector<double> mann_whitney_counts(std::size_t m, std::size_t n) {
  // f[i][j][u]: built up over i (first-sample size) and j.
  std::vector<std::vector<std::vector<double>>> f(m + 1, std::vector<std::vector<double>>(n + 1));
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      auto& cell = f[i][j];
      cell.assign(i * j + 1, 0.0);
      if (i == 0 || j == 0) {
        cell[0] = 1.0;
        continue;
      }
      // Largest observation belongs to the first sample (adds j to U) or the second.
      for (std::size_t u = 0; u < f[i - 1][j].size(); ++u) cell[u + j] += f[i - 1][j][u];
      for (std::size_t u = 0; u < f[i][j - 1].size(); ++u) cell[u] += f[i][j - 1][u];
    }
  }
  return f[m][n];
}

}  // namespace detail

// Two-sided Mann-Whitney U. Both samples of size <= 8 without ties use the
// exact null distribution; otherwise the normal approximation with tie and
// continuity correction.
inline MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw ConfigError("mann_whitney_u: both samples must be non-empty");
  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  const std::size_t total = n1 + n2;
  struct Item {
    double value;
    bool first;
  };
  std::vector<Item> items;
  items.reserve(total);
  for (const double v : a) items.push_back({v, true});
  for (const double v : b) items.push_back({v, false});
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.value < y.value; });

  double rank_sum_a = 0.0;
  double tie_term = 0.0;
  bool ties = false;
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i;
    while (j + 1 < total && items[j + 1].value == items[i].value) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
    const double t = static_cast<double>(j - i + 1);
    if (t > 1) {
      ties = true;
      tie_term += t * t * t - t;
    }
    for (std::size_t k = i; k <= j; ++k) {
      if (items[k].first) rank_sum_a += mid;
    }
    i = j + 1;
  }
  MannWhitneyResult r;
  r.u = rank_sum_a - static_cast<double>(n1 * (n1 + 1)) / 2.0;
  const double mean = static_cast<double>(n1 * n2) / 2.0;

  if (!ties && n1 <= 8 && n2 <= 8) {
    const auto counts = detail::mann_whitney_counts(n1, n2);
    double all = 0.0, le = 0.0, ge = 0.0;
    const auto u = static_cast<std::size_t>(std::llround(r.u));
    for (std::size_t k = 0; k < counts.size(); ++k) {
      all += counts[k];
      if (k <= u) le += counts[k];
      if (k >= u) ge += counts[k];
    }
    r.exact = true;
    r.p_value = std::min(1.0, 2.0 * std::min(le, ge) / all);
    return r;
  }

  const double nn = static_cast<double>(total);
  const double var = static_cast<double>(n1 * n2) / 12.0 * ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
  if (!(var > 0.0)) {
    r.p_value = 1.0;
    return r;
  }
  const double dev = std::max(0.0, std::abs(r.u - mean) - 0.5);
  r.z = (r.u - mean >= 0.0 ? 1.0 : -1.0) * dev / std::sqrt(var);
  r.p_value = std::min(1.0, 2.0 * normal_sf(std::abs(r.z)));
  return r;
}

// Multiplies each p-value by the number of comparisons, clamped at 1.
inline std::vector<double> bonferroni(std::span<const double> p_values, std::size_t comparisons) {
  std::vector<double> out;
  out.reserve(p_values.size());
  for (const double p : p_values) out.push_back(std::min(1.0, p * static_cast<double>(comparisons)));
  return out;
}

inline std::vector<double> bonferroni(std::span<const double> p_values) {
  return bonferroni(p_values, p_values.size());
}

}  // namespace stylomark

#endif  // STYLOMARK_STATS_HPP_
