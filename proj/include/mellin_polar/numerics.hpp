#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace mellin {

/// Neumaier-compensated accumulator for complex sums.
class CompensatedSum {
 public:
  void add(std::complex<double> v) {
    add_part(sum_re_, comp_re_, v.real());
    add_part(sum_im_, comp_im_, v.imag());
  }
  CompensatedSum& operator+=(std::complex<double> v) {
    add(v);
    return *this;
  }
  std::complex<double> value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double sum_re_ = 0.0, comp_re_ = 0.0;
  double sum_im_ = 0.0, comp_im_ = 0.0;
};

/// Pairwise sum whose result is bit-identical for a list and its reverse:
/// the split is symmetric and the odd middle element is added last.
inline std::complex<double> symmetric_pairwise_sum(const std::vector<std::complex<double>>& v,
                                                   std::size_t lo, std::size_t hi) {
  const std::size_t n = hi - lo;
  if (n == 0) return {0.0, 0.0};
  if (n == 1) return v[lo];
  const std::size_t half = n / 2;
  const auto left = symmetric_pairwise_sum(v, lo, lo + half);
  const auto right = symmetric_pairwise_sum(v, hi - half, hi);
  if (n % 2 == 0) return left + right;
  return (left + right) + v[lo + half];
}

inline std::complex<double> symmetric_pairwise_sum(const std::vector<std::complex<double>>& v) {
  return symmetric_pairwise_sum(v, 0, v.size());
}

/// Gauss-Legendre rule on [0, 1]. Nodes come in mirrored pairs
/// node[i] = 1 - node[n-1-i] with equal weights.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline GaussLegendreRule gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 1.0 / ((1.0 - x * x) * dp * dp);  // = 2/((1-x^2)P'^2) on [-1,1], halved
    const double offset = 0.5 * x;
    rule.nodes[i] = 0.5 - offset;
    rule.nodes[n - 1 - i] = 0.5 + offset;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.5;
  return rule;
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace mellin
