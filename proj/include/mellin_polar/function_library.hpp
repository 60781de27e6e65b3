#pragma once

/// Closed-form polar-analytic test functions and Mellin-Bernstein members.
///
/// Closed forms are described by their derivatives in the log chart,
/// g^(m)(w) = (d/dw)^m f(e^w). Polar derivatives of every order follow from
///   z^j D_pol^j f = sum_m s(j, m) g^(m)(w)
/// with signed Stirling numbers of the first kind, and the three
/// space-preserving transformations act on g by a shift or a rescaling of w.
///
/// sinc convention: sinc(t) = sin(pi t) / (pi t), sinc(0) = 1.

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "polar_core.hpp"
#include "stirling.hpp"

namespace mellin {

/// (w, m) -> (d/dw)^m f(e^w).
using LogDerivative = std::function<Complex(Complex, int)>;

namespace detail {

inline const std::vector<std::vector<double>>& first_kind_cache() {
  static const auto table = stirling_first_kind(40);
  return table;
}

inline Complex ipow(Complex a, int m) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < m; ++i) out *= a;
  return out;
}

}  // namespace detail

/// PolarFunction with every polar derivative derived from a log-chart form.
inline PolarFunction from_log_derivatives(LogDerivative g, Domain domain = Domain::whole()) {
  auto eval = [g](const PolarPoint& p) { return g(p.log_coordinate(), 0); };
  auto order = [g](const PolarPoint& p, int j) -> Complex {
    const Complex w = p.log_coordinate();
    if (j == 0) return g(w, 0);
    const auto& cached = detail::first_kind_cache();
    const auto s = j < static_cast<int>(cached.size()) ? std::vector<double>(cached[j])
                                                       : stirling_first_kind(j)[j];
    Complex acc{0.0, 0.0};
    for (int m = 1; m <= j; ++m) acc += s[m] * g(w, m);
    return std::exp(-double(j) * w) * acc;
  };
  return PolarFunction(eval, std::move(domain)).with_dpol_order(order);
}

/// Complex sinc(t) = sin(pi t)/(pi t) with its removable point filled in.
inline Complex sinc(Complex t) {
  const Complex x = kPi * t;
  if (std::abs(x) < 1e-4) {
    const Complex x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

inline double sinc(double t) { return sinc(Complex(t, 0.0)).real(); }

/// d/dt sinc(t).
inline Complex sinc_derivative(Complex t) {
  if (std::abs(kPi * t) < 1e-4) {
    const double pi2 = kPi * kPi;
    return -pi2 * t / 3.0 + pi2 * pi2 * t * t * t / 30.0;
  }
  return (std::cos(kPi * t) - sinc(t)) / t;
}

/// lin_c(x) = x^{-c} sinc(log x) for real x > 0; lin_c(1) = 1.
inline double lin(double c, double x) {
  if (!(x > 0.0)) throw DomainError("lin: requires x > 0");
  return std::pow(x, -c) * sinc(std::log(x));
}

/// f(r, theta) = (r e^{i theta})^a := e^{a (log r + i theta)}.
inline PolarFunction make_power(Complex a) {
  return from_log_derivatives([a](Complex w, int m) { return detail::ipow(a, m) * std::exp(a * w); });
}

/// Polar extension of lin_c: (re^{i theta})^{-c} sinc(log r + i theta).
/// Carries a closed-form first polar derivative only.
inline PolarFunction make_lin(double c) {
  auto eval = [c](const PolarPoint& p) {
    const Complex w = p.log_coordinate();
    return std::exp(-c * w) * sinc(w);
  };
  auto dpol = [c](const PolarPoint& p) {
    const Complex w = p.log_coordinate();
    return std::exp(-(c + 1.0) * w) * (sinc_derivative(w) - c * sinc(w));
  };
  return PolarFunction(eval).with_dpol(dpol);
}

/// Regular grid in log r used for sup-norm estimates.
struct LogGrid {
  double log_r_min = -6.0;
  double log_r_max = 6.0;
  int count = 4001;

  double at(int i) const {
    if (count == 1) return log_r_min;
    return log_r_min + (log_r_max - log_r_min) * i / (count - 1);
  }
  void validate() const {
    if (count < 1) throw PreconditionError("LogGrid: count must be >= 1");
    if (count > 1 && !(log_r_min < log_r_max)) throw PreconditionError("LogGrid: empty range");
  }
};

/// A member of the Mellin-Bernstein space B^inf_{c,T}:
///   f polar-analytic on H and r^c |f(r, theta)| <= C_f e^{T |theta|}.
/// The growth bound is certified on a 41 x 41 grid at construction.
class MellinBernsteinMember {
 public:
  using Evaluator = PolarFunction::Evaluator;

  static constexpr int kGridSide = 41;
  static constexpr double kGridLogR = 6.0;
  static constexpr double kGridTheta = 3.0;

  MellinBernsteinMember(PolarFunction f, double c, double T, double growth_constant,
                        Evaluator closed_mellin_derivative = {},
                        std::optional<LogDerivative> log_form = std::nullopt,
                        std::string label = "member")
      : f_(std::move(f)),
        c_(c),
        T_(T),
        growth_(growth_constant),
        mellin_(std::move(closed_mellin_derivative)),
        log_form_(std::move(log_form)),
        label_(std::move(label)) {
    if (!(T > 0.0)) throw PreconditionError("MellinBernsteinMember: T must be positive");
    if (!(growth_constant > 0.0)) throw PreconditionError("MellinBernsteinMember: C_f must be positive");
    const double slack = growth_bound_slack();
    if (slack < 0.0)
      throw PreconditionError("MellinBernsteinMember '" + label_ +
                              "': growth bound violated on verification grid (slack " +
                              std::to_string(slack) + ")");
  }

  const PolarFunction& function() const noexcept { return f_; }
  Complex operator()(const PolarPoint& p) const { return f_(p); }
  double c() const noexcept { return c_; }
  double T() const noexcept { return T_; }
  double growth_constant() const noexcept { return growth_; }
  const std::string& label() const noexcept { return label_; }
  const std::optional<LogDerivative>& log_form() const noexcept { return log_form_; }

  bool has_closed_mellin_derivative() const noexcept { return static_cast<bool>(mellin_); }

  /// Closed-form (Theta_c f)(p) attached by the constructor or transformation.
  Complex closed_mellin_derivative(const PolarPoint& p) const {
    if (!mellin_) throw PreconditionError("MellinBernsteinMember: no closed-form Mellin derivative");
    return mellin_(p);
  }
  const Evaluator& closed_mellin_evaluator() const noexcept { return mellin_; }

  /// Bound C_f e^{T|theta|} at the given angle.
  double growth_bound(double theta) const { return growth_ * std::exp(T_ * std::abs(theta)); }

  /// min over the verification grid of the relative slack
  ///   1 - r^c |f| / (C_f e^{T|theta|}),
  /// with 1e-12 allowed for rounding. Negative means the bound fails.
  double growth_bound_slack() const {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGridSide; ++i) {
      const double x = -kGridLogR + 2.0 * kGridLogR * i / (kGridSide - 1);
      for (int j = 0; j < kGridSide; ++j) {
        const double theta = -kGridTheta + 2.0 * kGridTheta * j / (kGridSide - 1);
        const PolarPoint p(std::exp(x), theta);
        const double weighted = std::exp(c_ * x) * std::abs(f_(p));
        worst = std::min(worst, 1.0 + 1e-12 - weighted / growth_bound(theta));
      }
    }
    return worst;
  }

 private:
  PolarFunction f_;
  double c_;
  double T_;
  double growth_;
  Evaluator mellin_;
  std::optional<LogDerivative> log_form_;
  std::string label_;
};

/// (re^{i theta})^{-c} sin(omega (log r + i theta)) as a member of
/// B^inf_{c,T} for 0 < omega <= T, with C_f = 1.
inline MellinBernsteinMember make_mellin_sine_in_class(double c, double omega, double T) {
  if (!(omega > 0.0) || omega > T)
    throw PreconditionError("make_mellin_sine_in_class: need 0 < frequency <= T");
  const Complex up{-c, omega};
  const Complex down{-c, -omega};
  LogDerivative g = [c, omega, up, down](Complex w, int m) -> Complex {
    if (m == 0) return std::exp(-c * w) * std::sin(omega * w);
    return (detail::ipow(up, m) * std::exp(up * w) - detail::ipow(down, m) * std::exp(down * w)) /
           (2.0 * kI);
  };
  auto mellin = [c, omega](const PolarPoint& p) {
    const Complex w = p.log_coordinate();
    return omega * std::exp(-c * w) * std::cos(omega * w);
  };
  return MellinBernsteinMember(from_log_derivatives(g), c, T, 1.0, mellin, g, "mellin-sine");
}

/// (re^{i theta})^{-c} sin(T (log r + i theta)), the extremal member of
/// B^inf_{c,T}; C_f = 1 since |sin(T(x+iy))| <= e^{T|y|}.
inline MellinBernsteinMember make_mellin_sine(double c, double T) {
  return make_mellin_sine_in_class(c, T, T);
}

/// (re^{i theta})^{-c + i b}, a member of B^inf_{c,|b|} with C_f = 1.
inline MellinBernsteinMember make_power_member(double c, double b) {
  if (b == 0.0) throw PreconditionError("make_power_member: b must be nonzero");
  const Complex a{-c, b};
  LogDerivative g = [a](Complex w, int m) { return detail::ipow(a, m) * std::exp(a * w); };
  auto mellin = [a, c](const PolarPoint& p) { return (a + c) * std::exp(a * p.log_coordinate()); };
  return MellinBernsteinMember(from_log_derivatives(g), c, std::abs(b), 1.0, mellin, g, "power");
}

/// lin_c as a member of B^inf_{c,pi} with C_f = 1.
inline MellinBernsteinMember make_lin_member(double c) {
  auto mellin = [c](const PolarPoint& p) {
    const Complex w = p.log_coordinate();
    return std::exp(-c * w) * sinc_derivative(w);
  };
  return MellinBernsteinMember(make_lin(c), c, kPi, 1.0, mellin, std::nullopt, "lin");
}

/// The zero function, viewed in B^inf_{c,T} with C_f = 1.
inline MellinBernsteinMember make_zero_member(double c, double T) {
  LogDerivative g = [](Complex, int) { return Complex{0.0, 0.0}; };
  auto mellin = [](const PolarPoint&) { return Complex{0.0, 0.0}; };
  return MellinBernsteinMember(from_log_derivatives(g), c, T, 1.0, mellin, g, "zero");
}

/// Mellin translation g(r, theta) = t^c f(t r, theta). Same (c, T, C_f);
/// (Theta_c g)(r, theta) = t^c (Theta_c f)(t r, theta).
inline MellinBernsteinMember mellin_translate(const MellinBernsteinMember& m, double t) {
  if (!(t > 0.0)) throw PreconditionError("mellin_translate: t must be positive");
  const double c = m.c();
  const double scale = std::pow(t, c);
  const double log_t = std::log(t);
  const PolarFunction& f = m.function();

  std::optional<LogDerivative> log_form;
  PolarFunction g_fn(PolarFunction::Evaluator{});
  if (m.log_form()) {
    LogDerivative inner = *m.log_form();
    log_form = [inner, scale, log_t](Complex w, int k) { return scale * inner(w + log_t, k); };
    g_fn = from_log_derivatives(*log_form);
  } else {
    g_fn = PolarFunction([f, scale, log_t](const PolarPoint& p) { return scale * f(detail::radial_shift(p, log_t)); });
    if (f.has_closed_dpol())
      g_fn = g_fn.with_dpol([f, scale, t, log_t](const PolarPoint& p) {
        return scale * t * f.closed_dpol(detail::radial_shift(p, log_t));
      });
  }
  PolarFunction::Evaluator mellin;
  if (m.has_closed_mellin_derivative()) {
    auto inner = m.closed_mellin_evaluator();
    mellin = [inner, scale, log_t](const PolarPoint& p) { return scale * inner(detail::radial_shift(p, log_t)); };
  }
  return MellinBernsteinMember(g_fn, c, m.T(), m.growth_constant(), mellin, log_form,
                               "translate(" + m.label() + ")");
}

/// Dilation h(r, theta) = f(r^{1/T}, theta/T), a member of B^inf_{c/T,1};
/// (Theta_{c/T} h)(r, theta) = (1/T)(Theta_c f)(r^{1/T}, theta/T).
inline MellinBernsteinMember mellin_dilate(const MellinBernsteinMember& m) {
  const double T = m.T();
  const PolarFunction& f = m.function();
  auto shrink = [T](const PolarPoint& p) { return PolarPoint::from_log(p.log_coordinate() / T); };

  std::optional<LogDerivative> log_form;
  PolarFunction h_fn(PolarFunction::Evaluator{});
  if (m.log_form()) {
    LogDerivative inner = *m.log_form();
    log_form = [inner, T](Complex w, int k) { return std::pow(T, -k) * inner(w / T, k); };
    h_fn = from_log_derivatives(*log_form);
  } else {
    h_fn = PolarFunction([f, shrink](const PolarPoint& p) { return f(shrink(p)); });
    if (f.has_closed_dpol())
      h_fn = h_fn.with_dpol([f, shrink, T](const PolarPoint& p) {
        return std::exp((1.0 / T - 1.0) * p.log_coordinate()) * f.closed_dpol(shrink(p)) / T;
      });
  }
  PolarFunction::Evaluator mellin;
  if (m.has_closed_mellin_derivative()) {
    auto inner = m.closed_mellin_evaluator();
    mellin = [inner, shrink, T](const PolarPoint& p) { return inner(shrink(p)) / T; };
  }
  return MellinBernsteinMember(h_fn, m.c() / T, 1.0, m.growth_constant(), mellin, log_form,
                               "dilate(" + m.label() + ")");
}

/// Shift of the angular argument phi(r, theta) = f(r, theta + alpha). Same
/// (c, T) with C_phi = C_f e^{T|alpha|}; (Theta_c phi)(r,theta) = (Theta_c f)(r, theta+alpha).
inline MellinBernsteinMember theta_shift(const MellinBernsteinMember& m, double alpha) {
  const PolarFunction& f = m.function();
  std::optional<LogDerivative> log_form;
  PolarFunction phi_fn(PolarFunction::Evaluator{});
  if (m.log_form()) {
    LogDerivative inner = *m.log_form();
    log_form = [inner, alpha](Complex w, int k) { return inner(w + Complex(0.0, alpha), k); };
    phi_fn = from_log_derivatives(*log_form);
  } else {
    phi_fn = PolarFunction([f, alpha](const PolarPoint& p) { return f(PolarPoint::from_log(p.log_coordinate() + Complex(0.0, alpha))); });
    if (f.has_closed_dpol())
      phi_fn = phi_fn.with_dpol([f, alpha](const PolarPoint& p) {
        return std::polar(1.0, alpha) * f.closed_dpol(PolarPoint::from_log(p.log_coordinate() + Complex(0.0, alpha)));
      });
  }
  PolarFunction::Evaluator mellin;
  if (m.has_closed_mellin_derivative()) {
    auto inner = m.closed_mellin_evaluator();
    mellin = [inner, alpha](const PolarPoint& p) { return inner(PolarPoint::from_log(p.log_coordinate() + Complex(0.0, alpha))); };
  }
  return MellinBernsteinMember(phi_fn, m.c(), m.T(), m.growth_constant() * std::exp(m.T() * std::abs(alpha)),
                               mellin, log_form, "shift(" + m.label() + ")");
}

/// Central Mellin difference h^c f(h r, theta) - h^{-c} f(r/h, theta).
inline Complex central_mellin_difference(const PolarFunction& f, const PolarPoint& p, double c,
                                         double h) {
  if (!(h > 0.0)) throw PreconditionError("central_mellin_difference: h must be positive");
  const PolarPoint up = detail::radial_shift(p, std::log(h));
  const PolarPoint down = detail::radial_shift(p, -std::log(h));
  f.domain().require(up, 0.0, "central_mellin_difference");
  f.domain().require(down, 0.0, "central_mellin_difference");
  return std::pow(h, c) * f(up) - std::pow(h, -c) * f(down);
}

struct NormEstimate {
  double value = 0.0;
  LogGrid grid;
  std::string truncation_note;
};

/// Grid estimate of the X_c^inf norm of f(., theta): max of r^c |f(r, theta)|
/// over the log grid. A lower bound of the true supremum.
inline NormEstimate sup_norm(const PolarFunction& f, double c, double theta, const LogGrid& grid = {}) {
  grid.validate();
  double best = 0.0;
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.at(i);
    best = std::max(best, std::exp(c * x) * std::abs(f(PolarPoint(std::exp(x), theta))));
  }
  return {best, grid,
          "grid sup over log r in [" + std::to_string(grid.log_r_min) + ", " +
              std::to_string(grid.log_r_max) + "] with " + std::to_string(grid.count) +
              " points; lower bound of the true sup"};
}

}  // namespace mellin
