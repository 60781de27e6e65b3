#pragma once

// Independent reference computations shared by the unit and acceptance
// tests. Nothing here calls into the library's numerical kernels.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

// (z d/dz + c)^k applied to z^a gives P(a) z^a with P(a) = (a + c)^k, and
// z^j (d/dz)^j z^a = a(a-1)...(a-j+1) z^a. Writing P in the falling
// factorial basis reads off the operator coefficients: the coefficient of
// (a)_j is the j-th forward difference of P at 0 divided by j!.
inline std::vector<double> stirling_row_bruteforce(double c, int k) {
  std::vector<double> values(static_cast<std::size_t>(k + 1));
  for (int a = 0; a <= k; ++a) values[a] = std::pow(a + c, k);
  std::vector<double> row(static_cast<std::size_t>(k + 1));
  double factorial = 1.0;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) factorial *= j;
    row[j] = values[0] / factorial;
    for (int i = 0; i + 1 < static_cast<int>(values.size()) - j; ++i) values[i] = values[i + 1] - values[i];
  }
  return row;
}

// u = log r + i theta throughout.
inline Complex mellin_sine(double c, double T, Complex u) { return std::exp(-c * u) * std::sin(T * u); }
inline Complex mellin_sine_theta(double c, double T, Complex u) {
  return T * std::exp(-c * u) * std::cos(T * u);
}

// frequency w <= T variant: e^{-c u} sin(w u) and its Theta_c
inline Complex mellin_sine_w(double c, double w, Complex u) { return std::exp(-c * u) * std::sin(w * u); }
inline Complex mellin_sine_w_theta(double c, double w, Complex u) {
  return w * std::exp(-c * u) * std::cos(w * u);
}

// d/dz of (re^{i theta})^a at z = e^u: a e^{(a-1)u}
inline Complex power_dpol(Complex a, Complex u) { return a * std::exp((a - 1.0) * u); }

// e^{i theta} d/dr applied to e^{-c u} sin(T u): (T cos - c sin) e^{-(c+1)u}
inline Complex mellin_sine_dpol(double c, double T, Complex u) {
  return std::exp(-(c + 1.0) * u) * (T * std::cos(T * u) - c * std::sin(T * u));
}

inline double boas_bound(double C, double c, double T, double r, double theta, int n) {
  return 4.0 * C * std::pow(r, -c) * T * std::exp(T * std::abs(theta)) / (pi * pi * (2 * n - 1));
}

inline double valiron_bound(double C, double c, double T, double r, double theta, int n) {
  return C * std::pow(r, -c) * T * std::exp(T * std::abs(theta)) / (pi * (4.0 * (n - 1) * (n - 1) - 1.0));
}

// Residue of f / (w^2 cos w) at w = (k + 1/2) pi, weighted by e^{cw}.
inline double boas_kernel_residue(int k, double c, double f_at_rk) {
  const double odd = 2.0 * k + 1.0;
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  return 4.0 / (pi * pi) * sign / (odd * odd) * std::exp(c * (k + 0.5) * pi) * f_at_rk;
}

inline double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
