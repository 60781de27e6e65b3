#pragma once

/// Line integrals of the form  int_gamma g(r, theta) e^{i theta} (dr + i r dtheta)
/// and the Cauchy and residue formulas built on them.
///
/// Curves live in the log chart w = log r + i theta. There
/// e^{i theta}(dr + i r dtheta) = dz = e^w dw, so every integral is an ordinary
/// complex contour integral in w. Rectangles and circles are Euclidean
/// objects in that chart.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "function_library.hpp"
#include "numerics.hpp"
#include "polar_core.hpp"

namespace mellin {

struct LineSegment {
  Complex from;
  Complex to;
};

/// Arc of the circle |w - center| = radius from angle phi0 to phi1.
struct ArcSegment {
  Complex center;
  double radius;
  double phi0;
  double phi1;
};

/// One smooth piece of a curve, parametrized by t in [0, 1]. A reversed
/// segment runs its shape backwards; it is integrated with the same nodes
/// as the forward one and the result negated.
struct Segment {
  std::variant<LineSegment, ArcSegment> shape;
  bool reversed = false;

  /// Position in the log chart at internal (unreversed) parameter s.
  Complex internal_position(double s) const {
    if (const auto* line = std::get_if<LineSegment>(&shape)) return line->from + s * (line->to - line->from);
    const auto& arc = std::get<ArcSegment>(shape);
    return arc.center + std::polar(arc.radius, arc.phi0 + s * (arc.phi1 - arc.phi0));
  }

  /// dw/ds at internal parameter s.
  Complex internal_tangent(double s) const {
    if (const auto* line = std::get_if<LineSegment>(&shape)) return line->to - line->from;
    const auto& arc = std::get<ArcSegment>(shape);
    const double dphi = arc.phi1 - arc.phi0;
    return kI * dphi * std::polar(arc.radius, arc.phi0 + s * dphi);
  }

  Complex start() const { return internal_position(reversed ? 1.0 : 0.0); }
  Complex end() const { return internal_position(reversed ? 0.0 : 1.0); }

  /// The two halves [0, t] and [t, 1] in curve direction.
  std::pair<Segment, Segment> split(double t) const {
    if (!(t > 0.0 && t < 1.0)) throw PreconditionError("Segment::split: parameter must lie in (0, 1)");
    const double s = reversed ? 1.0 - t : t;
    Segment a = *this, b = *this;
    if (const auto* line = std::get_if<LineSegment>(&shape)) {
      const Complex mid = internal_position(s);
      a.shape = LineSegment{line->from, mid};
      b.shape = LineSegment{mid, line->to};
    } else {
      const auto& arc = std::get<ArcSegment>(shape);
      const double phi = arc.phi0 + s * (arc.phi1 - arc.phi0);
      a.shape = ArcSegment{arc.center, arc.radius, arc.phi0, phi};
      b.shape = ArcSegment{arc.center, arc.radius, phi, arc.phi1};
    }
    if (reversed) return {b, a};
    return {a, b};
  }

  /// Bounding interval of theta = Im w along the segment.
  std::pair<double, double> theta_range() const {
    if (const auto* line = std::get_if<LineSegment>(&shape))
      return std::minmax(line->from.imag(), line->to.imag());
    const auto& arc = std::get<ArcSegment>(shape);
    return {arc.center.imag() - arc.radius, arc.center.imag() + arc.radius};
  }
};

/// Axis-parallel rectangle in the log chart.
struct LogRectangle {
  double log_r_min, log_r_max;
  double theta_min, theta_max;

  void validate() const {
    if (!(log_r_min < log_r_max) || !(theta_min < theta_max))
      throw PreconditionError("LogRectangle: requires log_r_min < log_r_max and theta_min < theta_max");
  }
  bool contains_interior(const PolarPoint& p) const {
    const double x = p.log_r();
    return x > log_r_min && x < log_r_max && p.theta() > theta_min && p.theta() < theta_max;
  }
};

/// Piecewise-smooth parametrized path in H.
class Curve {
 public:
  static constexpr double kClosureTolerance = 1e-12;

  Curve(std::vector<Segment> segments, bool closed) : segments_(std::move(segments)), closed_(closed) {
    if (segments_.empty()) throw PreconditionError("Curve: needs at least one segment");
    for (std::size_t i = 0; i + 1 < segments_.size(); ++i)
      if (std::abs(segments_[i].end() - segments_[i + 1].start()) > kClosureTolerance)
        throw PreconditionError("Curve: consecutive segments do not join");
    if (closed_ && std::abs(segments_.back().end() - segments_.front().start()) > kClosureTolerance)
      throw PreconditionError("Curve: closed curve does not return to its start");
  }

  /// Positively oriented boundary of a rectangle in the log chart.
  static Curve boundary(const LogRectangle& rect) {
    rect.validate();
    const Complex a{rect.log_r_min, rect.theta_min}, b{rect.log_r_max, rect.theta_min};
    const Complex c{rect.log_r_max, rect.theta_max}, d{rect.log_r_min, rect.theta_max};
    return Curve({{LineSegment{a, b}}, {LineSegment{b, c}}, {LineSegment{c, d}}, {LineSegment{d, a}}}, true);
  }

  /// Positively oriented log-circle {(r, theta) : |w - w0| = radius}.
  static Curve log_circle(const PolarPoint& center, double radius) {
    if (!(radius > 0.0)) throw PreconditionError("Curve::log_circle: radius must be positive");
    const Complex w0 = center.log_coordinate();
    return Curve({{ArcSegment{w0, radius, 0.0, kPi}}, {ArcSegment{w0, radius, kPi, 2.0 * kPi}}}, true);
  }

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  bool closed() const noexcept { return closed_; }

  Curve reversed() const {
    std::vector<Segment> segs(segments_.rbegin(), segments_.rend());
    for (auto& s : segs) s.reversed = !s.reversed;
    return Curve(std::move(segs), closed_, true);
  }

  /// Same trace with segment i split at curve parameter t.
  Curve split_segment(std::size_t i, double t) const {
    if (i >= segments_.size()) throw PreconditionError("Curve::split_segment: index out of range");
    std::vector<Segment> segs;
    for (std::size_t k = 0; k < segments_.size(); ++k) {
      if (k != i) {
        segs.push_back(segments_[k]);
        continue;
      }
      auto [a, b] = segments_[k].split(t);
      segs.push_back(a);
      segs.push_back(b);
    }
    return Curve(std::move(segs), closed_, true);
  }

  std::pair<double, double> theta_range() const {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& s : segments_) {
      auto [a, b] = s.theta_range();
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
    return {lo, hi};
  }

  /// Smallest log-chart distance from w to the trace, sampled densely.
  double distance_to(Complex w, int samples_per_segment = 512) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : segments_) {
      if (const auto* line = std::get_if<LineSegment>(&s.shape)) {
        const Complex d = line->to - line->from;
        const double t = std::clamp(std::real((w - line->from) * std::conj(d)) / std::norm(d), 0.0, 1.0);
        best = std::min(best, std::abs(w - (line->from + t * d)));
      } else {
        for (int k = 0; k <= samples_per_segment; ++k)
          best = std::min(best, std::abs(w - s.internal_position(double(k) / samples_per_segment)));
      }
    }
    return best;
  }

 private:
  // trusted: callers only rearrange an already validated curve
  Curve(std::vector<Segment> segments, bool closed, bool)
      : segments_(std::move(segments)), closed_(closed) {}

  std::vector<Segment> segments_;
  bool closed_;
};

struct QuadratureSpec {
  int nodes_per_segment = 16;
  int refinement = 30;  // maximum bisection depth per segment
  double tol = 1e-9;
  int max_panels = 20000;  // per segment; keeps unreachable tolerances cheap

  void validate() const {
    if (nodes_per_segment < 4) throw PreconditionError("QuadratureSpec: nodes_per_segment must be >= 4");
    if (refinement < 0) throw PreconditionError("QuadratureSpec: refinement must be >= 0");
    if (!(tol > 0.0)) throw PreconditionError("QuadratureSpec: tol must be positive");
    if (max_panels < 1) throw PreconditionError("QuadratureSpec: max_panels must be >= 1");
  }
};

/// Integrand in the log chart: returns h(w) such that the line integral is
/// int h(w(t)) w'(t) dt.
using ChartIntegrand = std::function<Complex(Complex)>;

namespace detail {

inline Complex panel(const ChartIntegrand& h, const Segment& seg, const GaussLegendreRule& rule,
                     double a, double b) {
  const double len = b - a;
  const std::size_t n = rule.nodes.size();
  Complex acc{0.0, 0.0};
  // mirrored node pairs summed first so the panel value does not depend on
  // traversal direction
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double s1 = a + len * rule.nodes[i];
    const double s2 = a + len * rule.nodes[n - 1 - i];
    const Complex v1 = h(seg.internal_position(s1)) * seg.internal_tangent(s1);
    const Complex v2 = h(seg.internal_position(s2)) * seg.internal_tangent(s2);
    acc += rule.weights[i] * (v1 + v2);
  }
  if (n % 2 == 1) {
    const double s = a + len * rule.nodes[n / 2];
    acc += rule.weights[n / 2] * h(seg.internal_position(s)) * seg.internal_tangent(s);
  }
  return acc * len;
}

struct AdaptiveOutcome {
  Complex value;
  double worst_gap = 0.0;
  bool converged = true;
  int panels = 0;
};

inline void adaptive(const ChartIntegrand& h, const Segment& seg, const GaussLegendreRule& rule,
                     double a, double b, Complex whole, double tol, int depth, int max_panels,
                     AdaptiveOutcome& out) {
  const double mid = 0.5 * (a + b);
  const Complex left = panel(h, seg, rule, a, mid);
  const Complex right = panel(h, seg, rule, mid, b);
  out.panels += 2;
  const Complex refined = left + right;
  const double gap = std::abs(refined - whole);
  if (gap <= tol || !std::isfinite(gap)) {
    out.value += refined;
    if (!std::isfinite(gap)) out.converged = false;
    return;
  }
  if (depth <= 0 || out.panels >= max_panels) {
    out.value += refined;
    out.converged = false;
    out.worst_gap = std::max(out.worst_gap, gap);
    return;
  }
  adaptive(h, seg, rule, a, mid, left, 0.5 * tol, depth - 1, max_panels, out);
  adaptive(h, seg, rule, mid, b, right, 0.5 * tol, depth - 1, max_panels, out);
}

inline AdaptiveOutcome integrate_segment(const ChartIntegrand& h, const Segment& seg,
                                         const GaussLegendreRule& rule, double tol, int depth,
                                         int max_panels) {
  AdaptiveOutcome out{{0.0, 0.0}};
  adaptive(h, seg, rule, 0.0, 1.0, panel(h, seg, rule, 0.0, 1.0), tol, depth, max_panels, out);
  if (seg.reversed) out.value = -out.value;
  return out;
}

inline Complex chart_integral(const ChartIntegrand& h, const Curve& gamma, const QuadratureSpec& q,
                              int threads) {
  q.validate();
  const auto rule = gauss_legendre(q.nodes_per_segment);
  const auto& segs = gamma.segments();
  const double seg_tol = q.tol / segs.size();
  std::vector<AdaptiveOutcome> results(segs.size());
  auto work = [&](std::size_t i) { results[i] = integrate_segment(h, segs[i], rule, seg_tol, q.refinement, q.max_panels); };
  if (threads > 1 && segs.size() > 1) {
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), segs.size());
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < segs.size(); i += workers) work(i);
      });
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < segs.size(); ++i) work(i);
  }
  std::vector<Complex> values;
  double gap = 0.0;
  bool ok = true;
  for (const auto& r : results) {
    values.push_back(r.value);
    gap = std::max(gap, r.worst_gap);
    ok = ok && r.converged;
  }
  const Complex total = symmetric_pairwise_sum(values);
  if (!ok || !std::isfinite(total.real()) || !std::isfinite(total.imag()))
    throw ToleranceNotMet("line integral: tolerance " + std::to_string(q.tol) +
                              " not met after maximum refinement (gap " + std::to_string(gap) + ")",
                          total, gap);
  return total;
}

}  // namespace detail

/// Non-adaptive composite rule: one Gauss-Legendre panel per segment.
inline Complex line_integral_fixed(const PolarFunction& g, const Curve& gamma, int nodes_per_segment) {
  const auto rule = gauss_legendre(nodes_per_segment);
  ChartIntegrand h = [&g](Complex w) { return g(PolarPoint::from_log(w)) * std::exp(w); };
  std::vector<Complex> values;
  for (const auto& seg : gamma.segments()) {
    Complex v = detail::panel(h, seg, rule, 0.0, 1.0);
    values.push_back(seg.reversed ? -v : v);
  }
  return symmetric_pairwise_sum(values);
}

/// int_gamma g(r, theta) e^{i theta} (dr + i r dtheta) by adaptive composite
/// Gauss-Legendre quadrature. `threads` > 1 evaluates segments concurrently;
/// the summation order is fixed so the result does not depend on it.
inline Complex line_integral(const PolarFunction& g, const Curve& gamma, const QuadratureSpec& q = {},
                             int threads = 0) {
  ChartIntegrand h = [&g](Complex w) { return g(PolarPoint::from_log(w)) * std::exp(w); };
  return detail::chart_integral(h, gamma, q, threads);
}

/// (1/2 pi i) int_gamma f e^{i theta} / (r e^{i theta} - r0 e^{i theta0}) (dr + i r dtheta).
/// Equals f(p0) when gamma lies in a strip of theta-width below 2 pi.
inline Complex cauchy_value(const PolarFunction& f, const Curve& gamma, const PolarPoint& p0,
                            const QuadratureSpec& q = {}, int threads = 0) {
  if (!gamma.closed()) throw PreconditionError("cauchy_value: curve must be closed");
  const auto [lo, hi] = gamma.theta_range();
  if (!(hi - lo < 2.0 * kPi))
    throw PreconditionError("cauchy_value: curve must lie in a strip of theta-width < 2 pi");
  const Complex w0 = p0.log_coordinate();
  for (int j = static_cast<int>(std::floor((lo - w0.imag()) / (2 * kPi))) - 1;
       j <= static_cast<int>(std::ceil((hi - w0.imag()) / (2 * kPi))) + 1; ++j)
    if (gamma.distance_to(w0 + Complex(0.0, 2.0 * kPi * j)) < 1e-12)
      throw PreconditionError("cauchy_value: a point (r0, theta0 + 2j pi) lies on the curve");
  const Complex z0 = std::exp(w0);
  ChartIntegrand h = [&f, z0](Complex w) {
    const Complex z = std::exp(w);
    return f(PolarPoint::from_log(w)) * z / (z - z0);
  };
  return detail::chart_integral(h, gamma, q, threads) / (2.0 * kPi * kI);
}

/// (1/2 pi i) int_gamma (re^{i theta})^{c-1} f e^{i theta} / (log(r/r0) + i(theta-theta0))^{k+1} (dr + i r dtheta),
/// which equals (r0 e^{i theta0})^c (Theta_c^k f)(p0) / k!.
inline Complex cauchy_derivative(const PolarFunction& f, const Curve& gamma, const PolarPoint& p0,
                                 double c, int k, const QuadratureSpec& q = {}, int threads = 0) {
  if (k < 0) throw PreconditionError("cauchy_derivative: k must be >= 0");
  if (!gamma.closed()) throw PreconditionError("cauchy_derivative: curve must be closed");
  const Complex w0 = p0.log_coordinate();
  ChartIntegrand h = [&f, w0, c, k](Complex w) {
    Complex denom{1.0, 0.0};
    const Complex d = w - w0;
    for (int i = 0; i <= k; ++i) denom *= d;
    return std::exp(c * w) * f(PolarPoint::from_log(w)) / denom;
  };
  return detail::chart_integral(h, gamma, q, threads) / (2.0 * kPi * kI);
}

/// Divides (r0 e^{i theta0})^c / k! out of a cauchy_derivative value,
/// leaving (Theta_c^k f)(p0).
inline Complex extract_derivative(Complex integral_value, const PolarPoint& p0, double c, int k) {
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return integral_value * factorial / std::exp(c * p0.log_coordinate());
}

/// f = g / (log(r/r0) + i(theta - theta0))^k near `location`. The residue
/// formula stays valid when g vanishes at the pole (true order below k), so
/// that is accepted; kernels rely on it when f itself vanishes there.
struct LogPoleSpec {
  PolarPoint location;
  int order = 1;
  std::optional<PolarFunction> factor_g;

  void validate() const {
    if (order < 1) throw PreconditionError("LogPoleSpec: order must be >= 1");
  }
};

/// c-residue (r0 e^{i theta0})^c (Theta_c^{k-1} g)(r0, theta0) / (k-1)!.
inline Complex residue_from_factor(const LogPoleSpec& spec, double c) {
  if (!spec.factor_g) throw PreconditionError("residue_from_factor: regular factor g is required");
  spec.validate();
  const int k = spec.order;
  const auto deriv = higher_mellin_derivative(*spec.factor_g, spec.location, c, k - 1);
  double factorial = 1.0;
  for (int i = 2; i <= k - 1; ++i) factorial *= i;
  return std::exp(c * spec.location.log_coordinate()) * deriv.value / factorial;
}

/// (1/2 pi i) of the weighted integral of F over a small log-circle around p0:
/// the c-residue without knowing the factorization. The caller guarantees
/// that no other singularity lies within `radius`.
inline Complex residue_numeric(const PolarFunction& F, const PolarPoint& p0, double c, double radius,
                               const QuadratureSpec& q = {}) {
  const Curve circle = Curve::log_circle(p0, radius);
  ChartIntegrand h = [&F, c](Complex w) { return std::exp(c * w) * F(PolarPoint::from_log(w)); };
  return detail::chart_integral(h, circle, q, 0) / (2.0 * kPi * kI);
}

/// Default radius: half the log distance to the nearest other singularity
/// listed in F's domain, capped at 0.5.
inline double default_residue_radius(const PolarFunction& F, const PolarPoint& p0) {
  return std::min(0.5, 0.5 * F.domain().distance_to_other_singularity(p0));
}

inline Complex residue_numeric(const PolarFunction& F, const PolarPoint& p0, double c,
                               const QuadratureSpec& q = {}) {
  return residue_numeric(F, p0, c, default_residue_radius(F, p0), q);
}

/// Weighted integral int_gamma (re^{i theta})^{c-1} F e^{i theta}(dr + i r dtheta).
inline Complex weighted_integral(const PolarFunction& F, const Curve& gamma, double c,
                                 const QuadratureSpec& q = {}, int threads = 0) {
  ChartIntegrand h = [&F, c](Complex w) { return std::exp(c * w) * F(PolarPoint::from_log(w)); };
  return detail::chart_integral(h, gamma, q, threads);
}

struct ResidueBalance {
  Complex integral;     // contour integral of the weighted integrand
  Complex residue_sum;  // sum of c-residues of the listed poles
  double defect;        // |integral - 2 pi i residue_sum|
};

inline ResidueBalance residue_theorem_balance(const PolarFunction& F, const Curve& gamma,
                                              const std::vector<LogPoleSpec>& poles, double c,
                                              const QuadratureSpec& q = {}, int threads = 0) {
  if (!gamma.closed()) throw PreconditionError("residue_theorem_check: curve must be closed");
  CompensatedSum residues;
  for (const auto& pole : poles) {
    if (gamma.distance_to(pole.location.log_coordinate()) < 1e-12)
      throw PreconditionError("residue_theorem_check: a pole lies on the curve");
    residues += residue_from_factor(pole, c);
  }
  const Complex integral = weighted_integral(F, gamma, c, q, threads);
  const Complex sum = residues.value();
  return {integral, sum, std::abs(integral - 2.0 * kPi * kI * sum)};
}

/// Residue-theorem defect |int_gamma ... - 2 pi i sum res_c F|.
inline double residue_theorem_check(const PolarFunction& F, const Curve& gamma,
                                    const std::vector<LogPoleSpec>& poles, double c,
                                    const QuadratureSpec& q = {}, int threads = 0) {
  return residue_theorem_balance(F, gamma, poles, c, q, threads).defect;
}

/// A kernel function together with the rectangle and pole list of a
/// residue computation.
struct KernelProblem {
  PolarFunction F;
  Curve boundary;
  std::vector<LogPoleSpec> poles;
};

/// Kernel of the Boas differentiation formula (type-1 case),
///   F = f / ((log r + i theta)^2 cos(log r + i theta)),
/// on the rectangle with vertices (e^{+-n pi}, +-n pi). Its poles are (1, 0)
/// of order two and r_k = e^{(k+1/2) pi}, k = -n..n-1, of order one, where
/// res_c F(r_k, 0) = (4/pi^2) (-1)^{k+1} / (2k+1)^2 r_k^c f(r_k, 0).
inline KernelProblem boas_kernel(const PolarFunction& f, int n) {
  if (n < 1) throw PreconditionError("boas_kernel: n must be >= 1");
  std::vector<PolarPoint> sing{PolarPoint(1.0, 0.0)};
  for (int k = -n; k <= n - 1; ++k) sing.emplace_back(std::exp((k + 0.5) * kPi), 0.0);

  PolarFunction F(
      [f](const PolarPoint& p) {
        const Complex w = p.log_coordinate();
        return f(p) / (w * w * std::cos(w));
      },
      Domain::punctured(sing));

  std::vector<LogPoleSpec> poles;
  poles.push_back({PolarPoint(1.0, 0.0), 2,
                   PolarFunction([f](const PolarPoint& p) { return f(p) / std::cos(p.log_coordinate()); })});
  for (int k = -n; k <= n - 1; ++k) {
    const double wk = (k + 0.5) * kPi;
    const double limit = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
    PolarFunction g([f, wk, limit](const PolarPoint& p) {
      const Complex w = p.log_coordinate();
      const Complex d = w - wk;
      const Complex psi = std::abs(d) < 1e-8 ? Complex(limit) * (1.0 - d * d / 6.0) : std::cos(w) / d;
      return f(p) / (w * w * psi);
    });
    poles.push_back({PolarPoint(std::exp(wk), 0.0), 1, g});
  }
  const double side = n * kPi;
  return {F, Curve::boundary({-side, side, -side, side}), poles};
}

/// Kernel of the Valiron sampling formula (type-1 case),
///   F = f / ((log(r/t) + i theta)(log r + i theta) sin(log r + i theta)),
/// on the rectangle with vertices (e^{+-(n+1/2) pi}, +-(n+1/2) pi). Poles:
/// (t, 0) and (e^{k pi}, 0), k != 0, of order one and (1, 0) of order two.
inline KernelProblem valiron_kernel(const PolarFunction& f, double t, int n) {
  if (n < 1) throw PreconditionError("valiron_kernel: n must be >= 1");
  const double log_t = std::log(t);
  if (!(std::abs(log_t) < n * kPi)) throw PreconditionError("valiron_kernel: need e^{-n pi} < t < e^{n pi}");
  if (std::abs(std::remainder(log_t, kPi)) < 1e-6)
    throw PreconditionError("valiron_kernel: t must avoid the sample points e^{k pi}");

  std::vector<PolarPoint> sing{PolarPoint(t, 0.0)};
  for (int k = -n; k <= n; ++k) sing.emplace_back(std::exp(k * kPi), 0.0);

  PolarFunction F(
      [f, log_t](const PolarPoint& p) {
        const Complex w = p.log_coordinate();
        return f(p) / ((w - log_t) * w * std::sin(w));
      },
      Domain::punctured(sing));

  // sin(w) / (w - k pi), continuous at w = k pi with value (-1)^k
  auto psi = [](Complex w, int k) {
    const Complex d = w - k * kPi;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    if (std::abs(d) < 1e-8) return Complex(sign) * (1.0 - d * d / 6.0);
    return std::sin(w) / d;
  };

  std::vector<LogPoleSpec> poles;
  poles.push_back({PolarPoint(t, 0.0), 1, PolarFunction([f](const PolarPoint& p) {
                     const Complex w = p.log_coordinate();
                     return f(p) / (w * std::sin(w));
                   })});
  poles.push_back({PolarPoint(1.0, 0.0), 2, PolarFunction([f, log_t, psi](const PolarPoint& p) {
                     const Complex w = p.log_coordinate();
                     return f(p) / ((w - log_t) * psi(w, 0));
                   })});
  for (int k = -n; k <= n; ++k) {
    if (k == 0) continue;
    poles.push_back({PolarPoint(std::exp(k * kPi), 0.0), 1, PolarFunction([f, log_t, psi, k](const PolarPoint& p) {
                       const Complex w = p.log_coordinate();
                       return f(p) / ((w - log_t) * w * psi(w, k));
                     })});
  }
  const double side = (n + 0.5) * kPi;
  return {F, Curve::boundary({-side, side, -side, side}), poles};
}

}  // namespace mellin
