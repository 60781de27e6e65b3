#pragma once

/// Sampling-series formulas for Mellin-Bernstein members: the Boas and
/// Valiron-type differentiation series, Valiron reconstruction from
/// exponentially spaced samples, the Fourier analogue, and truncation with
/// a-priori error bounds.
///
/// With h = e^{pi/T} the two differentiation series read
///   Theta_c f = (4T/pi^2) sum_{k>=0} (-1)^k/(2k+1)^2 delta_{c,h^{k+1/2}} f          (Boas)
///   Theta_c f = T [ delta_{c,h^{1/2}} f / 2 + (1/pi) sum_{k>=1} (-1)^k/(k(4k^2-1)) delta_{c,h^k} f ]
/// and truncation after n blocks is bounded by
///   |E_boas|    <= 4 C_f r^{-c} T e^{T|theta|} / (pi^2 (2n-1))
///   |E_valiron| <=   C_f r^{-c} T e^{T|theta|} / (pi (4(n-1)^2 - 1)).

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "function_library.hpp"
#include "numerics.hpp"
#include "polar_core.hpp"

namespace mellin {

enum class FormulaId { boas, valiron_recon, valiron_diff, fourier_valiron };

inline const char* to_string(FormulaId id) {
  switch (id) {
    case FormulaId::boas: return "boas";
    case FormulaId::valiron_recon: return "valiron_recon";
    case FormulaId::valiron_diff: return "valiron_diff";
    case FormulaId::fourier_valiron: return "fourier_valiron";
  }
  return "?";
}

struct TruncationReport {
  Complex value;
  int n_terms = 0;                      // number of samples used
  std::optional<double> apriori_bound;  // certified bound, when one exists
  double empirical_tail = 0.0;          // magnitude of the last symmetric block
  std::optional<double> tail_estimate;  // non-certified tail estimate
  FormulaId formula = FormulaId::boas;
};

namespace detail {

/// e^{e c} f(r e^e, theta). Both factors can leave the double range long
/// before their product does; that is reported instead of returning inf or nan.
inline Complex weighted_sample(const PolarFunction& f, const PolarPoint& p, double c, double e) {
  const Complex v = std::exp(e * c) * f(radial_shift(p, e));
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw DomainError("sample at log r = " + std::to_string(p.log_r() + e) +
                      " is outside the floating-point range");
  return v;
}

}  // namespace detail

/// 4 C_f r^{-c} T e^{T|theta|} / (pi^2 (2n - 1)).
inline double boas_bound(const MellinBernsteinMember& m, const PolarPoint& p, int n) {
  return 4.0 * m.growth_constant() * std::exp(-m.c() * p.log_r()) * m.T() * std::exp(m.T() * std::abs(p.theta())) /
         (kPi * kPi * (2.0 * n - 1.0));
}

/// C_f r^{-c} T e^{T|theta|} / (pi (4(n-1)^2 - 1)).
inline double valiron_derivative_bound(const MellinBernsteinMember& m, const PolarPoint& p, int n) {
  const double nm1 = n - 1.0;
  return m.growth_constant() * std::exp(-m.c() * p.log_r()) * m.T() * std::exp(m.T() * std::abs(p.theta())) /
         (kPi * (4.0 * nm1 * nm1 - 1.0));
}

/// Boas series truncated to k = -n..n-1, summed in blocks {k, -(k+1)} from
/// the centre outwards.
inline TruncationReport boas_derivative(const MellinBernsteinMember& m, const PolarPoint& p, int n) {
  if (n < 1) throw PreconditionError("boas_derivative: n must be >= 1");
  const double c = m.c(), T = m.T();
  const PolarFunction& f = m.function();
  auto term = [&](int k) {
    const double e = (k + 0.5) * kPi / T;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double odd = 2.0 * k + 1.0;
    return sign / (odd * odd) * detail::weighted_sample(f, p, c, e);
  };
  CompensatedSum sum;
  Complex last{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    last = term(k) + term(-(k + 1));
    sum += last;
  }
  const double scale = 4.0 * T / (kPi * kPi);
  TruncationReport out;
  out.value = scale * sum.value();
  out.n_terms = 2 * n;
  out.apriori_bound = boas_bound(m, p, n);
  out.empirical_tail = std::abs(scale * last);
  out.formula = FormulaId::boas;
  return out;
}

/// Valiron-type differentiation series in sample form, truncated to
/// 0 < |k| <= n-1, plus the half-step central difference.
inline TruncationReport valiron_derivative(const MellinBernsteinMember& m, const PolarPoint& p, int n) {
  if (n < 2) throw PreconditionError("valiron_derivative: n must be >= 2");
  const double c = m.c(), T = m.T();
  const PolarFunction& f = m.function();
  auto sample = [&](double e) { return detail::weighted_sample(f, p, c, e); };
  const double half = kPi / (2.0 * T);
  CompensatedSum sum;
  sum += 0.5 * T * (sample(half) - sample(-half));
  Complex last{0.0, 0.0};
  for (int k = 1; k <= n - 1; ++k) {
    const double e = k * kPi / T;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double denom = k * (4.0 * k * k - 1.0);
    // (-1)^k/(k(4k^2-1)) at +k and (-1)^k/(-k(4k^2-1)) at -k
    last = (T / kPi) * sign / denom * (sample(e) - sample(-e));
    sum += last;
  }
  TruncationReport out;
  out.value = sum.value();
  out.n_terms = 2 * n;
  out.apriori_bound = valiron_derivative_bound(m, p, n);
  out.empirical_tail = std::abs(last);
  out.formula = FormulaId::valiron_diff;
  return out;
}

/// The same truncation written with central Mellin differences,
///   T [ delta_{c,h^{1/2}} f / 2 + (1/pi) sum_{k=1}^{n-1} (-1)^k/(k(4k^2-1)) delta_{c,h^k} f ].
inline Complex valiron_derivative_delta_form(const MellinBernsteinMember& m, const PolarPoint& p, int n) {
  if (n < 2) throw PreconditionError("valiron_derivative_delta_form: n must be >= 2");
  const double T = m.T();
  const double h = std::exp(kPi / T);
  Complex acc = 0.5 * central_mellin_difference(m.function(), p, m.c(), std::sqrt(h));
  for (int k = 1; k <= n - 1; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += sign / (kPi * k * (4.0 * k * k - 1.0)) *
           central_mellin_difference(m.function(), p, m.c(), std::pow(h, k));
  }
  return T * acc;
}

/// Boas truncation written with central Mellin differences.
inline Complex boas_derivative_delta_form(const MellinBernsteinMember& m, const PolarPoint& p, int n) {
  if (n < 1) throw PreconditionError("boas_derivative_delta_form: n must be >= 1");
  const double T = m.T();
  const double h = std::exp(kPi / T);
  Complex acc{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double odd = 2.0 * k + 1.0;
    acc += sign / (odd * odd) * central_mellin_difference(m.function(), p, m.c(), std::pow(h, k + 0.5));
  }
  return 4.0 * T / (kPi * kPi) * acc;
}

/// Data consumed by the Valiron reconstruction: f(1,0), (Theta_c f)(1,0) and
/// the ring samples f(e^{k pi/T}, 0) for 0 < |k| <= n.
class SampleSet {
 public:
  SampleSet(double c, double T, Complex center_value, Complex center_derivative,
            std::map<int, Complex> ring_samples)
      : c_(c), T_(T), center_value_(center_value), center_derivative_(center_derivative),
        ring_(std::move(ring_samples)) {
    if (!(T > 0.0)) throw PreconditionError("SampleSet: T must be positive");
    if (ring_.count(0)) throw PreconditionError("SampleSet: index 0 is not a ring sample");
    n_ = static_cast<int>(ring_.size() / 2);
    if (ring_.size() % 2 != 0) throw PreconditionError("SampleSet: ring indices must be symmetric");
    for (int k = 1; k <= n_; ++k)
      if (!ring_.count(k) || !ring_.count(-k))
        throw PreconditionError("SampleSet: ring indices must form {-n..-1, 1..n}");
  }

  /// Samples of a member; uses its closed-form Theta_c f(1,0) when attached.
  static SampleSet from_member(const MellinBernsteinMember& m, int n) {
    if (n < 1) throw PreconditionError("SampleSet::from_member: n must be >= 1");
    const PolarPoint one(1.0, 0.0);
    const Complex d = m.has_closed_mellin_derivative() ? m.closed_mellin_derivative(one)
                                                       : mellin_derivative(m.function(), one, m.c());
    std::map<int, Complex> ring;
    for (int k = 1; k <= n; ++k) {
      ring[k] = m(PolarPoint::from_log({k * kPi / m.T(), 0.0}));
      ring[-k] = m(PolarPoint::from_log({-k * kPi / m.T(), 0.0}));
      for (int kk : {k, -k})
        if (!std::isfinite(ring[kk].real()) || !std::isfinite(ring[kk].imag()))
          throw DomainError("SampleSet::from_member: sample " + std::to_string(kk) +
                            " is outside the floating-point range");
    }
    return {m.c(), m.T(), m(one), d, std::move(ring)};
  }

  double c() const noexcept { return c_; }
  double T() const noexcept { return T_; }
  Complex center_value() const noexcept { return center_value_; }
  Complex center_derivative() const noexcept { return center_derivative_; }
  int ring_size() const noexcept { return n_; }
  Complex ring(int k) const { return ring_.at(k); }

 private:
  double c_, T_;
  Complex center_value_, center_derivative_;
  std::map<int, Complex> ring_;
  int n_ = 0;
};

/// Estimate of r^c f(r, 0) from the Valiron sampling formula truncated to
/// 0 < |k| <= n. Written with sinc so the removable singularities at r = 1
/// and r = e^{k pi/T} need no special case:
///   sin(u)/u = sinc(u/pi),  sin(u)/(k pi - u) = (-1)^{k+1} sinc(u/pi - k),  u = T log r.
inline TruncationReport valiron_reconstruct(const SampleSet& s, double r, int n) {
  if (!(r > 0.0)) throw PreconditionError("valiron_reconstruct: r must be positive");
  if (n < 1 || n > s.ring_size()) throw PreconditionError("valiron_reconstruct: n out of sample range");
  const double T = s.T(), c = s.c();
  const double u = T * std::log(r);
  CompensatedSum sum;
  sum += std::sin(u) * s.center_derivative() / T;
  sum += s.center_value() * sinc(u / kPi);
  Complex last{0.0, 0.0};
  double weight_max = 0.0;
  for (int k = 1; k <= n; ++k) {
    Complex block{0.0, 0.0};
    for (int kk : {k, -k}) {
      const Complex weighted = std::exp(kk * kPi * c / T) * s.ring(kk);
      if (!std::isfinite(weighted.real()) || !std::isfinite(weighted.imag()))
        throw DomainError("valiron_reconstruct: weighted sample " + std::to_string(kk) +
                          " is outside the floating-point range");
      weight_max = std::max(weight_max, std::abs(weighted));
      block += u * weighted * sinc(u / kPi - kk) / (kk * kPi);
    }
    last = block;
    sum += block;
  }
  TruncationReport out;
  out.value = sum.value();
  out.n_terms = 2 * n;
  out.empirical_tail = std::abs(last);
  // |term_k| <= C |u sin u| / (|k| pi |k pi - u|); tail summed numerically
  // then closed by the integral of 2/(pi^2 x^2). Not a certified bound.
  double tail = 0.0;
  const int extra = 20000;
  for (int k = n + 1; k <= n + extra; ++k)
    tail += 1.0 / (k * kPi * std::abs(k * kPi - u)) + 1.0 / (k * kPi * std::abs(k * kPi + u));
  tail += 2.0 / (kPi * kPi * (n + extra));
  out.tail_estimate = weight_max * std::abs(u * std::sin(u)) * tail;
  out.formula = FormulaId::valiron_recon;
  return out;
}

/// Valiron formula written with lin_{c pi/T}; estimates f(r, 0).
inline Complex valiron_lin_form(const SampleSet& s, double r, int n) {
  if (!(r > 0.0)) throw PreconditionError("valiron_lin_form: r must be positive");
  if (n < 1 || n > s.ring_size()) throw PreconditionError("valiron_lin_form: n out of sample range");
  const double T = s.T();
  const double cc = s.c() * kPi / T;
  const double x = std::pow(r, T / kPi);
  const double log_r = std::log(r);
  CompensatedSum sum;
  sum += lin(cc, x) * (log_r * s.center_derivative() + s.center_value());
  Complex series{0.0, 0.0};
  for (int k = 1; k <= n; ++k)
    for (int kk : {k, -k}) series += s.ring(kk) / double(kk) * lin(cc, std::exp(-double(kk)) * x);
  sum += std::log(x) * series;
  return sum.value();
}

/// Valiron formula written with lin_0 only; estimates r^c f(r, 0).
inline Complex valiron_lin0_form(const SampleSet& s, double r, int n) {
  if (!(r > 0.0)) throw PreconditionError("valiron_lin0_form: r must be positive");
  if (n < 1 || n > s.ring_size()) throw PreconditionError("valiron_lin0_form: n out of sample range");
  const double T = s.T(), c = s.c();
  const double x = std::pow(r, T / kPi);
  const double log_r = std::log(r);
  CompensatedSum sum;
  sum += lin(0.0, x) * (log_r * s.center_derivative() + s.center_value());
  Complex series{0.0, 0.0};
  for (int k = 1; k <= n; ++k)
    for (int kk : {k, -k})
      series += std::exp(kk * kPi * c / T) * s.ring(kk) / double(kk) * lin(0.0, std::exp(-double(kk)) * x);
  sum += std::log(x) * series;
  return sum.value();
}

/// Fourier analogue: estimate of g'(x) for g of exponential type w,
///   (w/2)[g(x+pi/(2w)) - g(x-pi/(2w))] + (w/pi) sum_{k=1}^n (-1)^k/(k(4k^2-1)) [g(x+k pi/w) - g(x-k pi/w)].
inline Complex fourier_valiron_derivative(const std::function<Complex(double)>& g, double w, double x, int n) {
  if (!(w > 0.0)) throw PreconditionError("fourier_valiron_derivative: w must be positive");
  if (n < 1) throw PreconditionError("fourier_valiron_derivative: n must be >= 1");
  CompensatedSum sum;
  const double half = kPi / (2.0 * w);
  sum += 0.5 * w * (g(x + half) - g(x - half));
  for (int k = 1; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double step = k * kPi / w;
    sum += (w / kPi) * sign / (k * (4.0 * k * k - 1.0)) * (g(x + step) - g(x - step));
  }
  return sum.value();
}

/// sup_grid r^c |Theta_c f(r, theta)| / sup_grid r^c |f(r, theta)| with the
/// numerator from the Boas series at n terms. Bounded by T up to truncation
/// and grid error.
inline double bernstein_check(const MellinBernsteinMember& m, double theta, int n = 500,
                              const LogGrid& grid = {}) {
  grid.validate();
  const double c = m.c();
  double num = 0.0, den = 0.0;
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.at(i);
    const PolarPoint p(std::exp(x), theta);
    const double weight = std::exp(c * x);
    den = std::max(den, weight * std::abs(m(p)));
    num = std::max(num, weight * std::abs(boas_derivative(m, p, n).value));
  }
  if (!(den > 0.0)) throw DegenerateInputError("bernstein_check: function vanishes on the grid");
  return num / den;
}

/// Default slack for bernstein_check: ratio <= T (1 + kBernsteinSlack).
inline constexpr double kBernsteinSlack = 1e-3;

struct ConvergenceRow {
  int n = 0;
  double boas_error = 0.0;
  double boas_bound = 0.0;
  std::optional<double> valiron_error;  // defined for n >= 2
  std::optional<double> valiron_bound;
};

/// Truncation errors of both differentiation series against the member's
/// closed-form Theta_c f, with the a-priori bounds.
inline std::vector<ConvergenceRow> convergence_study(const MellinBernsteinMember& m, const PolarPoint& p,
                                                     const std::vector<int>& n_values) {
  if (!m.has_closed_mellin_derivative())
    throw PreconditionError("convergence_study: member needs a closed-form Mellin derivative");
  const Complex oracle = m.closed_mellin_derivative(p);
  std::vector<ConvergenceRow> rows;
  for (int n : n_values) {
    ConvergenceRow row;
    row.n = n;
    const auto boas = boas_derivative(m, p, n);
    row.boas_error = std::abs(boas.value - oracle);
    row.boas_bound = *boas.apriori_bound;
    if (n >= 2) {
      const auto val = valiron_derivative(m, p, n);
      row.valiron_error = std::abs(val.value - oracle);
      row.valiron_bound = *val.apriori_bound;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mellin
