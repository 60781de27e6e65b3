#pragma once

/// Core types and differential calculus of polar-analytic functions.
///
/// A point of the half-plane H = R+ x R is a pair (r, theta) with r > 0 and
/// theta a free real coordinate. It is never reduced modulo 2 pi: (1, 0) and
/// (1, 2 pi) are different points. Most computations work in the log chart
/// w = log r + i theta, where polar-analytic functions become ordinary
/// analytic functions of w and z = r e^{i theta} = e^w.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "stirling.hpp"

namespace mellin {

using Complex = std::complex<double>;
using ComplexValue = Complex;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

class PolarPoint {
 public:
  PolarPoint(double r, double theta) : log_r_(std::log(r)), theta_(theta) {
    if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(theta))
      throw DomainError("PolarPoint: requires finite r > 0 and finite theta");
  }

  /// Point with log-chart coordinate w = log r + i theta. Stored as log r,
  /// so radii far outside the double range stay usable.
  static PolarPoint from_log(Complex w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw DomainError("PolarPoint: log coordinate must be finite");
    PolarPoint p;
    p.log_r_ = w.real();
    p.theta_ = w.imag();
    return p;
  }

  /// May overflow to inf or underflow to 0 for extreme log r.
  double r() const noexcept { return std::exp(log_r_); }
  double log_r() const noexcept { return log_r_; }
  double theta() const noexcept { return theta_; }

  /// w = log r + i theta.
  Complex log_coordinate() const { return {log_r_, theta_}; }
  /// z = r e^{i theta} as an ordinary complex number (theta information lost).
  Complex z() const { return std::polar(r(), theta_); }

  friend bool operator==(const PolarPoint&, const PolarPoint&) = default;

 private:
  PolarPoint() = default;
  double log_r_ = 0.0;
  double theta_ = 0.0;
};

/// Euclidean distance in the log chart, |log(r/r0) + i(theta - theta0)|.
inline double log_distance(const PolarPoint& a, const PolarPoint& b) {
  return std::hypot(a.log_r() - b.log_r(), a.theta() - b.theta());
}

/// Where a function may be evaluated: all of H, a strip a < theta < b, or H
/// minus a finite list of isolated singularities.
class Domain {
 public:
  enum class Kind { whole, strip, punctured };

  static Domain whole() { return Domain(Kind::whole); }

  static Domain strip(double theta_min, double theta_max) {
    if (!(theta_min < theta_max)) throw PreconditionError("Domain::strip: empty strip");
    Domain d(Kind::strip);
    d.theta_min_ = theta_min;
    d.theta_max_ = theta_max;
    return d;
  }

  static Domain punctured(std::vector<PolarPoint> singularities) {
    Domain d(Kind::punctured);
    d.singularities_ = std::move(singularities);
    return d;
  }

  Kind kind() const noexcept { return kind_; }
  double theta_min() const noexcept { return theta_min_; }
  double theta_max() const noexcept { return theta_max_; }
  const std::vector<PolarPoint>& singularities() const noexcept { return singularities_; }

  /// True if p is interior with log-metric margin at least `margin`.
  bool contains(const PolarPoint& p, double margin = 0.0) const {
    switch (kind_) {
      case Kind::whole:
        return true;
      case Kind::strip:
        return p.theta() - margin > theta_min_ && p.theta() + margin < theta_max_;
      case Kind::punctured:
        for (const auto& s : singularities_)
          if (log_distance(p, s) <= margin) return false;
        return true;
    }
    return false;
  }

  void require(const PolarPoint& p, double margin, const char* who) const {
    if (!contains(p, margin))
      throw DomainError(std::string(who) + ": point (" + std::to_string(p.r()) + ", " +
                        std::to_string(p.theta()) + ") outside domain or within " +
                        std::to_string(margin) + " of its boundary");
  }

  /// Log-metric distance to the nearest listed singularity other than
  /// `exclude` (infinity when there is none).
  double distance_to_other_singularity(const PolarPoint& p, double exclude_radius = 1e-12) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : singularities_) {
      const double d = log_distance(p, s);
      if (d > exclude_radius) best = std::min(best, d);
    }
    return best;
  }

 private:
  explicit Domain(Kind k) : kind_(k) {}

  Kind kind_;
  double theta_min_ = -std::numeric_limits<double>::infinity();
  double theta_max_ = std::numeric_limits<double>::infinity();
  std::vector<PolarPoint> singularities_;
};

/// A complex-valued function on (part of) H with optional closed-form polar
/// derivatives. Immutable after construction; copies share nothing mutable.
class PolarFunction {
 public:
  using Evaluator = std::function<Complex(const PolarPoint&)>;
  using OrderedDerivative = std::function<Complex(const PolarPoint&, int)>;

  explicit PolarFunction(Evaluator eval, Domain domain = Domain::whole())
      : eval_(std::move(eval)), domain_(std::move(domain)) {}

  /// Copy with a closed-form first polar derivative attached.
  PolarFunction with_dpol(Evaluator dpol) const {
    PolarFunction out = *this;
    out.dpol_ = std::move(dpol);
    return out;
  }

  /// Copy with closed-form polar derivatives of every order attached.
  /// order(p, 0) must be f(p). Also provides the first derivative when none
  /// is attached yet.
  PolarFunction with_dpol_order(OrderedDerivative order) const {
    PolarFunction out = *this;
    out.dpol_order_ = std::move(order);
    if (!out.dpol_) {
      auto ord = out.dpol_order_;
      out.dpol_ = [ord](const PolarPoint& p) { return ord(p, 1); };
    }
    return out;
  }

  Complex operator()(const PolarPoint& p) const { return eval_(p); }

  const Domain& domain() const noexcept { return domain_; }
  bool has_closed_dpol() const noexcept { return static_cast<bool>(dpol_); }
  bool has_closed_dpol_order() const noexcept { return static_cast<bool>(dpol_order_); }

  Complex closed_dpol(const PolarPoint& p) const {
    if (!dpol_) throw PreconditionError("PolarFunction: no closed-form polar derivative");
    return dpol_(p);
  }

  Complex closed_dpol_order(const PolarPoint& p, int j) const {
    if (!dpol_order_) throw PreconditionError("PolarFunction: no closed-form higher polar derivatives");
    if (j < 0) throw PreconditionError("PolarFunction: derivative order must be >= 0");
    return dpol_order_(p, j);
  }

 private:
  Evaluator eval_;
  Domain domain_;
  Evaluator dpol_;
  OrderedDerivative dpol_order_;
};

namespace detail {

inline PolarPoint radial_shift(const PolarPoint& p, double s) {
  return PolarPoint::from_log({p.log_r() + s, p.theta()});
}

inline double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// Central difference of order m in s for g(s) = f(r e^s, theta), nodes at
/// (m/2 - i) h. Truncation error is even in h.
inline Complex log_radial_difference(const PolarFunction& f, const PolarPoint& p, int m, double h) {
  Complex acc{0.0, 0.0};
  for (int i = 0; i <= m; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binomial(m, i) * f(radial_shift(p, (0.5 * m - i) * h));
  }
  return acc / std::pow(h, m);
}

/// Default step for the m-th log-radial difference, about eps^(1/(m+4)).
inline double default_log_step(int m) {
  static constexpr double steps[] = {1e-3, 1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 3e-2, 5e-2};
  return m < 8 ? steps[m] : 0.08;
}

}  // namespace detail

/// (d/ds)^m f(r e^s, theta) at s = 0 by a central difference with one
/// Richardson step (h and h/2).
inline Complex log_radial_derivative_fd(const PolarFunction& f, const PolarPoint& p, int m,
                                        double h) {
  if (m < 0) throw PreconditionError("log_radial_derivative_fd: order must be >= 0");
  if (m == 0) return f(p);
  if (!(h > 0.0)) throw PreconditionError("log_radial_derivative_fd: step must be positive");
  f.domain().require(p, 0.5 * m * h, "log_radial_derivative_fd");
  const Complex coarse = detail::log_radial_difference(f, p, m, h);
  const Complex fine = detail::log_radial_difference(f, p, m, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

/// Polar derivative D_pol f = e^{-i theta} df/dr from the radial quotient
///   e^{-i theta} [f(r e^h, theta) - f(r e^-h, theta)] / (r (e^h - e^-h))
/// with one Richardson step. The step is taken in log r.
inline Complex polar_derivative_fd(const PolarFunction& f, const PolarPoint& p, double h = 1e-3) {
  if (!(h > 0.0)) throw PreconditionError("polar_derivative_fd: step must be positive");
  f.domain().require(p, h, "polar_derivative_fd");
  auto quotient = [&](double step) {
    const Complex diff = f(detail::radial_shift(p, step)) - f(detail::radial_shift(p, -step));
    return diff / (p.r() * 2.0 * std::sinh(step));
  };
  const Complex df_dr = (4.0 * quotient(0.5 * h) - quotient(h)) / 3.0;
  return std::polar(1.0, -p.theta()) * df_dr;
}

/// Mellin polar derivative  re^{i theta} (D_pol f) + c f.
inline Complex mellin_derivative(const PolarFunction& f, const PolarPoint& p, double c) {
  const Complex dpol = f.has_closed_dpol() ? f.closed_dpol(p) : polar_derivative_fd(f, p);
  return std::exp(p.log_coordinate()) * dpol + c * f(p);
}

struct HigherDerivative {
  Complex value;
  /// Set when the value came from nested finite differences beyond order 4.
  bool conditioning_warning = false;
};

/// z^j (D_pol^j f)(p) for j = 0..k, from closed forms when attached and from
/// log-radial finite differences otherwise (z^j D^j = sum_m s(j,m) (d/ds)^m).
inline std::vector<Complex> scaled_polar_derivatives(const PolarFunction& f, const PolarPoint& p,
                                                     int k) {
  std::vector<Complex> out(static_cast<std::size_t>(k + 1));
  out[0] = f(p);
  if (k == 0) return out;
  const Complex w = p.log_coordinate();
  if (f.has_closed_dpol_order()) {
    for (int j = 1; j <= k; ++j) out[j] = std::exp(double(j) * w) * f.closed_dpol_order(p, j);
    return out;
  }
  if (k == 1 && f.has_closed_dpol()) {
    out[1] = std::exp(w) * f.closed_dpol(p);
    return out;
  }
  std::vector<Complex> log_derivs(static_cast<std::size_t>(k + 1));
  log_derivs[0] = out[0];
  for (int m = 1; m <= k; ++m)
    log_derivs[m] = log_radial_derivative_fd(f, p, m, detail::default_log_step(m));
  const auto s = stirling_first_kind(k);
  for (int j = 1; j <= k; ++j) {
    Complex acc{0.0, 0.0};
    for (int m = 1; m <= j; ++m) acc += s[j][m] * log_derivs[m];
    out[j] = acc;
  }
  return out;
}

/// k-th Mellin polar derivative sum_j S_c(k,j) z^j D_pol^j f.
inline HigherDerivative higher_mellin_derivative(const PolarFunction& f, const PolarPoint& p,
                                                 double c, int k) {
  if (k < 0) throw PreconditionError("higher_mellin_derivative: k must be >= 0");
  const auto scaled = scaled_polar_derivatives(f, p, k);
  const StirlingTable table(c, k);
  Complex acc{0.0, 0.0};
  for (int j = 0; j <= k; ++j) acc += table(k, j) * scaled[j];
  return {acc, !f.has_closed_dpol_order() && k > 4};
}

/// |df/dtheta - i r df/dr| by Richardson central differences. Zero exactly
/// when the polar Cauchy-Riemann equation holds.
inline double cauchy_riemann_residual(const PolarFunction& f, const PolarPoint& p,
                                      double h = 1e-3) {
  if (!(h > 0.0)) throw PreconditionError("cauchy_riemann_residual: step must be positive");
  f.domain().require(p, h, "cauchy_riemann_residual");
  auto d_theta = [&](double step) {
    return (f(PolarPoint::from_log(p.log_coordinate() + Complex(0.0, step))) -
            f(PolarPoint::from_log(p.log_coordinate() - Complex(0.0, step)))) /
           (2.0 * step);
  };
  auto d_logr = [&](double step) {
    return (f(detail::radial_shift(p, step)) - f(detail::radial_shift(p, -step))) / (2.0 * step);
  };
  const Complex ft = (4.0 * d_theta(0.5 * h) - d_theta(h)) / 3.0;
  // r df/dr = dg/ds for g(s) = f(r e^s, theta)
  const Complex r_fr = (4.0 * d_logr(0.5 * h) - d_logr(h)) / 3.0;
  return std::abs(ft - kI * r_fr);
}

/// Truncated Taylor-type expansion of (re^{i theta})^c f around a centre.
class TaylorExpansion {
 public:
  TaylorExpansion(PolarPoint center, double c, std::vector<Complex> coefficients)
      : center_(center), c_(c), coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw PreconditionError("TaylorExpansion: needs at least one coefficient");
  }

  const PolarPoint& center() const noexcept { return center_; }
  double c() const noexcept { return c_; }
  int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }

  /// (r0 e^{i theta0})^c sum_{k <= K} a_k (log(r/r0) + i(theta - theta0))^k.
  Complex eval_partial(const PolarPoint& p, int K) const {
    if (K < 0 || K > order()) throw PreconditionError("TaylorExpansion: partial order out of range");
    const Complex w0 = center_.log_coordinate();
    const Complex dw = p.log_coordinate() - w0;
    Complex acc{0.0, 0.0};
    for (int k = K; k >= 0; --k) acc = acc * dw + coefficients_[k];
    return std::exp(c_ * w0) * acc;
  }

  Complex eval(const PolarPoint& p) const { return eval_partial(p, order()); }

  /// The quantity the expansion approximates: (re^{i theta})^c f(r, theta).
  static Complex target(const PolarFunction& f, const PolarPoint& p, double c) {
    return std::exp(c * p.log_coordinate()) * f(p);
  }

 private:
  PolarPoint center_;
  double c_;
  std::vector<Complex> coefficients_;
};

/// Coefficients a_k = (Theta_c^k f)(p0) / k! for k = 0..K.
inline TaylorExpansion taylor_expand(const PolarFunction& f, const PolarPoint& p0, double c, int K) {
  if (K < 0) throw PreconditionError("taylor_expand: K must be >= 0");
  const auto scaled = scaled_polar_derivatives(f, p0, K);
  const StirlingTable table(c, K);
  std::vector<Complex> coeffs(static_cast<std::size_t>(K + 1));
  double factorial = 1.0;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) factorial *= k;
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= k; ++j) acc += table(k, j) * scaled[j];
    coeffs[k] = acc / factorial;
  }
  return {p0, c, std::move(coeffs)};
}

}  // namespace mellin
