#pragma once

/// Reproducible experiments over the library, emitting CSV.
///
/// A configuration is a flat key=value map (from a file, from flags, or
/// both with flags winning). Every experiment produces rows carrying a
/// computed value, an independent oracle value and, where one exists, a
/// certified error bound. A row's status is decided by its own contract and
/// the run fails iff any row does.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "contour_engine.hpp"
#include "error.hpp"
#include "function_library.hpp"
#include "polar_core.hpp"
#include "sampling_ops.hpp"

namespace mellin::experiment {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "1.0.0";

/// Invalid configuration; names the offending field.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Shortest decimal string that reads back to the same double.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

using ConfigMap = std::map<std::string, std::string>;

/// key=value lines; blank lines and lines starting with '#' are skipped.
inline ConfigMap parse_config_text(const std::string& text) {
  ConfigMap out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config", "line " + std::to_string(line_no) + " is not key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

inline ConfigMap read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

struct ExperimentConfig {
  std::string experiment;
  std::string function = "mellin-sine";
  double c = 0.0;
  double T = 1.0;
  Complex a{1.0, 0.0};
  double t_shift = 1.0;
  double alpha = 0.0;
  double point_r = 1.0;
  double point_theta = 0.0;
  std::vector<int> n_list;
  double grid_lo = 0.5;
  double grid_hi = 2.0;
  int grid_count = 16;
  double tol = 1e-9;
  std::string kernel = "boas";
  int n_rect = 1;
  std::string out;
  bool timing = false;

  /// Grid radii, log-uniform from grid_lo to grid_hi.
  std::vector<double> radii() const {
    std::vector<double> r;
    for (int i = 0; i < grid_count; ++i) {
      const double s = grid_count == 1 ? 0.0 : double(i) / (grid_count - 1);
      r.push_back(std::exp(std::log(grid_lo) + s * (std::log(grid_hi) - std::log(grid_lo))));
    }
    return r;
  }
};

inline const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids{"boas-convergence", "valiron-convergence", "reconstruct",
                                            "contour-cauchy",   "residue-defect",      "bernstein",
                                            "fourier-demo"};
  return ids;
}

struct FunctionInfo {
  std::string id;
  std::string parameters;
  std::string class_data;
  std::string note;
};

/// Stable, ordered registry of library functions.
inline const std::vector<FunctionInfo>& function_registry() {
  static const std::vector<FunctionInfo> reg{
      {"power", "a (re or re,im)", "class (c, |Im a|) when Re a = -c, C_f = 1",
       "(r e^{i theta})^a; any a is accepted by contour-cauchy"},
      {"mellin-sine", "c, T", "class (c, T), C_f = 1", "(r e^{i theta})^{-c} sin(T (log r + i theta))"},
      {"lin", "c", "class (c, pi), C_f = 1",
       "lin_c(x) = x^{-c} sinc(log x) with sinc(t) = sin(pi t)/(pi t)"},
      {"translated-sine", "c, T, t-shift", "class (c, T), C_f = 1", "t^c f(t r, theta) with f = mellin-sine"},
      {"dilated-sine", "c, T", "class (c/T, 1), C_f = 1", "f(r^{1/T}, theta/T) with f = mellin-sine"},
      {"shifted-sine", "c, T, alpha", "class (c, T), C_f = e^{T|alpha|}",
       "f(r, theta + alpha) with f = mellin-sine"},
      {"zero", "c, T", "class (c, T), C_f = 1", "identically zero"},
  };
  return reg;
}

inline std::string list_functions() {
  std::ostringstream os;
  for (const auto& f : function_registry())
    os << f.id << "\n  parameters: " << f.parameters << "\n  " << f.class_data << "\n  " << f.note << "\n";
  return os.str();
}

namespace detail {

inline double parse_real(const std::string& field, const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
    throw ConfigError(field, "expected a real number, got '" + s + "'");
  return v;
}

inline int parse_int(const std::string& field, const std::string& s) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError(field, "expected an integer, got '" + s + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::vector<int> default_n_list(const std::string& experiment) {
  if (experiment == "reconstruct") return {64, 128, 256};
  if (experiment == "bernstein") return {500};
  if (experiment == "fourier-demo") return {1, 2, 4, 8, 16, 32, 64, 128};
  if (experiment == "contour-cauchy" || experiment == "residue-defect") return {};
  return {2, 4, 8, 16, 32, 64};
}

}  // namespace detail

/// Builds and validates a configuration. Unknown keys are rejected.
inline ExperimentConfig parse_config(const ConfigMap& m) {
  static const std::vector<std::string> known{"experiment", "function", "c",      "T",   "a",      "t-shift",
                                              "alpha",      "point",    "n",      "r-grid", "tol", "kernel",
                                              "n-rect",     "out",      "timing"};
  for (const auto& [k, v] : m)
    if (std::find(known.begin(), known.end(), k) == known.end()) throw ConfigError(k, "unknown field");

  ExperimentConfig cfg;
  auto get = [&m](const std::string& k) -> std::optional<std::string> {
    const auto it = m.find(k);
    if (it == m.end()) return std::nullopt;
    return it->second;
  };

  if (!get("experiment")) throw ConfigError("experiment", "missing");
  cfg.experiment = *get("experiment");
  const auto& ids = experiment_ids();
  if (std::find(ids.begin(), ids.end(), cfg.experiment) == ids.end())
    throw ConfigError("experiment", "unknown experiment '" + cfg.experiment + "'");

  if (auto v = get("function")) cfg.function = *v;
  const auto& reg = function_registry();
  if (std::none_of(reg.begin(), reg.end(), [&](const FunctionInfo& f) { return f.id == cfg.function; }))
    throw ConfigError("function", "unknown function '" + cfg.function + "'");

  if (auto v = get("c")) cfg.c = detail::parse_real("c", *v);
  if (auto v = get("T")) cfg.T = detail::parse_real("T", *v);
  if (!(cfg.T > 0.0)) throw ConfigError("T", "must be positive");
  if (auto v = get("a")) {
    const auto parts = detail::split(*v, ',');
    if (parts.size() > 2) throw ConfigError("a", "expected re or re,im");
    cfg.a = {detail::parse_real("a", parts[0]), parts.size() == 2 ? detail::parse_real("a", parts[1]) : 0.0};
  }
  if (auto v = get("t-shift")) cfg.t_shift = detail::parse_real("t-shift", *v);
  if (!(cfg.t_shift > 0.0)) throw ConfigError("t-shift", "must be positive");
  if (auto v = get("alpha")) cfg.alpha = detail::parse_real("alpha", *v);
  if (auto v = get("point")) {
    const auto parts = detail::split(*v, ',');
    if (parts.size() != 2) throw ConfigError("point", "expected r,theta");
    cfg.point_r = detail::parse_real("point", parts[0]);
    cfg.point_theta = detail::parse_real("point", parts[1]);
  }
  if (!(cfg.point_r > 0.0)) throw ConfigError("point", "r must be positive");

  if (auto v = get("n")) {
    cfg.n_list.clear();
    for (const auto& part : detail::split(*v, ',')) cfg.n_list.push_back(detail::parse_int("n", part));
  } else {
    cfg.n_list = detail::default_n_list(cfg.experiment);
  }
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    if (cfg.n_list[i] < 1) throw ConfigError("n", "entries must be >= 1");
    if (i > 0 && cfg.n_list[i] <= cfg.n_list[i - 1]) throw ConfigError("n", "must be strictly increasing");
  }
  if (cfg.experiment == "valiron-convergence" && !cfg.n_list.empty() && cfg.n_list.front() < 2)
    throw ConfigError("n", "valiron-convergence needs n >= 2");
  const bool needs_n = cfg.experiment != "contour-cauchy" && cfg.experiment != "residue-defect";
  if (needs_n && cfg.n_list.empty()) throw ConfigError("n", "empty list");

  if (auto v = get("r-grid")) {
    const auto parts = detail::split(*v, ':');
    if (parts.size() != 3) throw ConfigError("r-grid", "expected lo:hi:count");
    cfg.grid_lo = detail::parse_real("r-grid", parts[0]);
    cfg.grid_hi = detail::parse_real("r-grid", parts[1]);
    cfg.grid_count = detail::parse_int("r-grid", parts[2]);
  }
  if (!(cfg.grid_lo > 0.0) || !(cfg.grid_hi > cfg.grid_lo) || cfg.grid_count < 1)
    throw ConfigError("r-grid", "need 0 < lo < hi and count >= 1");

  if (auto v = get("tol")) cfg.tol = detail::parse_real("tol", *v);
  if (!(cfg.tol > 0.0)) throw ConfigError("tol", "must be positive");
  if (auto v = get("kernel")) cfg.kernel = *v;
  if (cfg.kernel != "boas" && cfg.kernel != "valiron") throw ConfigError("kernel", "expected boas or valiron");
  if (auto v = get("n-rect")) cfg.n_rect = detail::parse_int("n-rect", *v);
  if (cfg.n_rect < 1) throw ConfigError("n-rect", "must be >= 1");
  if (auto v = get("out")) cfg.out = *v;
  if (auto v = get("timing")) {
    if (*v != "true" && *v != "false" && *v != "1" && *v != "0") throw ConfigError("timing", "expected true or false");
    cfg.timing = (*v == "true" || *v == "1");
  }
  return cfg;
}

/// The configuration as one line of key=value pairs, in a fixed order.
inline std::string echo_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "experiment=" << cfg.experiment << " function=" << cfg.function << " c=" << format_double(cfg.c)
     << " T=" << format_double(cfg.T) << " a=" << format_double(cfg.a.real()) << ","
     << format_double(cfg.a.imag()) << " t-shift=" << format_double(cfg.t_shift)
     << " alpha=" << format_double(cfg.alpha) << " point=" << format_double(cfg.point_r) << ","
     << format_double(cfg.point_theta) << " n=";
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) os << (i ? "," : "") << cfg.n_list[i];
  os << " r-grid=" << format_double(cfg.grid_lo) << ":" << format_double(cfg.grid_hi) << ":" << cfg.grid_count
     << " tol=" << format_double(cfg.tol) << " kernel=" << cfg.kernel << " n-rect=" << cfg.n_rect
     << " out=" << cfg.out << " timing=" << (cfg.timing ? "true" : "false");
  return os.str();
}

/// Mellin-Bernstein member for the configured function.
inline MellinBernsteinMember make_member(const ExperimentConfig& cfg) {
  const std::string& id = cfg.function;
  try {
    if (id == "power") {
      if (cfg.a.real() != -cfg.c || cfg.a.imag() == 0.0)
        throw ConfigError("a", "power is a Mellin-Bernstein member only for a = -c + ib with b != 0");
      return make_power_member(cfg.c, cfg.a.imag());
    }
    if (id == "mellin-sine") return make_mellin_sine(cfg.c, cfg.T);
    if (id == "lin") return make_lin_member(cfg.c);
    if (id == "translated-sine") return mellin_translate(make_mellin_sine(cfg.c, cfg.T), cfg.t_shift);
    if (id == "dilated-sine") return mellin_dilate(make_mellin_sine(cfg.c, cfg.T));
    if (id == "shifted-sine") return theta_shift(make_mellin_sine(cfg.c, cfg.T), cfg.alpha);
    if (id == "zero") return make_zero_member(cfg.c, cfg.T);
  } catch (const PreconditionError& e) {
    throw ConfigError("function", e.what());
  }
  throw ConfigError("function", "unknown function '" + id + "'");
}

/// Plain polar-analytic function for the configured id; power accepts any a.
inline PolarFunction make_function(const ExperimentConfig& cfg) {
  if (cfg.function == "power") return make_power(cfg.a);
  return make_member(cfg).function();
}

enum class RowStatus { ok, violation, fail };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::violation: return "violation";
    case RowStatus::fail: return "fail";
  }
  return "?";
}

struct ResultRow {
  std::string experiment;
  std::string function;
  std::string quantity;
  std::optional<int> n;
  std::optional<double> r;
  std::optional<double> theta;
  double c = 0.0;
  double T = 0.0;
  Complex computed;
  Complex oracle;
  std::optional<double> bound;          // certified a-priori bound
  std::optional<double> tail_estimate;  // non-certified estimate
  RowStatus status = RowStatus::ok;
  double wall_time = 0.0;
  std::string note;

  /// Recomputed from the stored values each time it is asked for.
  double abs_error() const { return std::abs(computed - oracle); }
};

struct RunResult {
  std::vector<ResultRow> rows;
  int violations() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const ResultRow& r) {
      return r.status != RowStatus::ok;
    }));
  }
  double max_error() const {
    double m = 0.0;
    for (const auto& r : rows) {
      const double e = r.abs_error();
      if (std::isnan(e)) return e;
      m = std::max(m, e);
    }
    return m;
  }
  bool ok() const { return violations() == 0; }
};

namespace detail {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

inline ResultRow base_row(const ExperimentConfig& cfg, const std::string& quantity, double c, double T) {
  ResultRow row;
  row.experiment = cfg.experiment;
  row.function = cfg.function;
  row.quantity = quantity;
  row.c = c;
  row.T = T;
  return row;
}

inline void judge_against_bound(ResultRow& row) {
  const double e = row.abs_error();
  if (!std::isfinite(e)) row.status = RowStatus::fail;
  else if (row.bound && e > *row.bound) row.status = RowStatus::violation;
}

inline void judge_against_tolerance(ResultRow& row, double tol) {
  const double e = row.abs_error();
  if (!std::isfinite(e)) row.status = RowStatus::fail;
  else if (e > tol) row.status = RowStatus::violation;
}

inline void run_series_convergence(const ExperimentConfig& cfg, RunResult& out, bool boas) {
  const auto m = make_member(cfg);
  if (!m.has_closed_mellin_derivative())
    throw ConfigError("function", "needs a closed-form Mellin derivative as oracle");
  const PolarPoint p(cfg.point_r, cfg.point_theta);
  const Complex oracle = m.closed_mellin_derivative(p);
  for (int n : cfg.n_list) {
    Timer timer;
    auto row = base_row(cfg, boas ? "boas" : "valiron_diff", m.c(), m.T());
    row.n = n;
    row.r = p.r();
    row.theta = p.theta();
    const auto rep = boas ? boas_derivative(m, p, n) : valiron_derivative(m, p, n);
    row.computed = rep.value;
    row.oracle = oracle;
    row.bound = rep.apriori_bound;
    judge_against_bound(row);
    row.wall_time = timer.seconds();
    out.rows.push_back(row);
  }
}

/// Errors below this are rounding noise and exempt from the shrink check.
inline constexpr double kRoundoffFloor = 1e-12;

inline void run_reconstruct(const ExperimentConfig& cfg, RunResult& out) {
  const auto m = make_member(cfg);
  const double c = m.c();
  std::optional<double> previous;
  for (int n : cfg.n_list) {
    Timer timer;
    const auto samples = SampleSet::from_member(m, n);
    double worst = 0.0;
    for (double r : cfg.radii()) {
      auto row = base_row(cfg, "valiron_recon", c, m.T());
      row.n = n;
      row.r = r;
      row.theta = 0.0;
      const auto rep = valiron_reconstruct(samples, r, n);
      row.computed = rep.value;
      row.oracle = std::exp(c * std::log(r)) * m(PolarPoint(r, 0.0));
      row.tail_estimate = rep.tail_estimate;
      judge_against_bound(row);
      const double e = row.abs_error();
      worst = std::isnan(e) ? e : std::max(worst, e);
      row.wall_time = timer.seconds();
      out.rows.push_back(row);
    }
    // per-n maximum; must shrink as n grows
    auto summary = base_row(cfg, "recon_max_error", c, m.T());
    summary.n = n;
    summary.computed = worst;
    summary.oracle = 0.0;
    if (!std::isfinite(worst)) summary.status = RowStatus::fail;
    else if (previous && !(worst < *previous) && worst > kRoundoffFloor) {
      summary.status = RowStatus::violation;
      summary.note = "not smaller than at the previous n";
    }
    previous = worst;
    summary.wall_time = timer.seconds();
    out.rows.push_back(summary);
  }
}

inline void run_contour_cauchy(const ExperimentConfig& cfg, RunResult& out, int threads) {
  const PolarFunction f = make_function(cfg);
  const PolarPoint p(cfg.point_r, cfg.point_theta);
  const double x0 = p.log_r(), y0 = p.theta();
  const auto gamma = Curve::boundary({x0 - 1.0, x0 + 1.0, y0 - 1.0, y0 + 1.0});
  QuadratureSpec q;
  q.tol = cfg.tol;
  constexpr double kRelTol = 1e-6;
  {
    Timer timer;
    auto row = base_row(cfg, "cauchy_value", cfg.c, cfg.T);
    row.r = p.r();
    row.theta = p.theta();
    row.oracle = f(p);
    row.computed = cauchy_value(f, gamma, p, q, threads);
    judge_against_tolerance(row, kRelTol * std::max(1.0, std::abs(row.oracle)));
    row.wall_time = timer.seconds();
    out.rows.push_back(row);
  }
  for (int k = 0; k <= 2; ++k) {
    Timer timer;
    auto row = base_row(cfg, "cauchy_derivative_k" + std::to_string(k), cfg.c, cfg.T);
    row.r = p.r();
    row.theta = p.theta();
    row.oracle = higher_mellin_derivative(f, p, cfg.c, k).value;
    row.computed = extract_derivative(cauchy_derivative(f, gamma, p, cfg.c, k, q, threads), p, cfg.c, k);
    judge_against_tolerance(row, kRelTol * std::max(1.0, std::abs(row.oracle)));
    row.wall_time = timer.seconds();
    out.rows.push_back(row);
  }
}

inline void run_residue_defect(const ExperimentConfig& cfg, RunResult& out, int threads) {
  const PolarFunction f = make_function(cfg);
  const KernelProblem kp = cfg.kernel == "boas" ? boas_kernel(f, cfg.n_rect)
                                                : valiron_kernel(f, cfg.point_r, cfg.n_rect);
  QuadratureSpec q;
  q.tol = cfg.tol;
  constexpr double kDefectTol = 1e-8;
  for (const auto& pole : kp.poles) {
    Timer timer;
    auto row = base_row(cfg, "residue_order" + std::to_string(pole.order), cfg.c, cfg.T);
    row.r = pole.location.r();
    row.theta = pole.location.theta();
    row.computed = residue_from_factor(pole, cfg.c);
    row.oracle = residue_numeric(kp.F, pole.location, cfg.c, q);
    judge_against_tolerance(row, kDefectTol * std::max(1.0, std::abs(row.oracle)));
    row.wall_time = timer.seconds();
    out.rows.push_back(row);
  }
  Timer timer;
  const auto bal = residue_theorem_balance(kp.F, kp.boundary, kp.poles, cfg.c, q, threads);
  auto row = base_row(cfg, "residue_defect", cfg.c, cfg.T);
  row.n = cfg.n_rect;
  row.computed = bal.integral;
  row.oracle = 2.0 * kPi * kI * bal.residue_sum;
  row.note = cfg.kernel + " kernel";
  judge_against_tolerance(row, kDefectTol);
  row.wall_time = timer.seconds();
  out.rows.push_back(row);
}

inline void run_bernstein(const ExperimentConfig& cfg, RunResult& out) {
  const auto m = make_member(cfg);
  for (int n : cfg.n_list) {
    Timer timer;
    auto row = base_row(cfg, "bernstein_ratio", m.c(), m.T());
    row.n = n;
    row.theta = cfg.point_theta;
    row.computed = bernstein_check(m, cfg.point_theta, n);
    row.oracle = m.T();
    const double ratio = row.computed.real();
    if (!std::isfinite(ratio)) row.status = RowStatus::fail;
    else if (ratio > m.T() * (1.0 + kBernsteinSlack)) row.status = RowStatus::violation;
    row.note = "contract: ratio <= T(1+" + format_double(kBernsteinSlack) + ")";
    row.wall_time = timer.seconds();
    out.rows.push_back(row);
  }
}

inline void run_fourier_demo(const ExperimentConfig& cfg, RunResult& out) {
  const double w = cfg.T;
  const double w0 = 0.7 * w;
  const double x = std::log(cfg.point_r);
  for (int n : cfg.n_list) {
    {
      Timer timer;
      auto row = base_row(cfg, "fourier_sin", cfg.c, w);
      row.n = n;
      row.r = cfg.point_r;
      row.computed = fourier_valiron_derivative([w](double t) { return Complex(std::sin(w * t)); }, w, x, n);
      row.oracle = w * std::cos(w * x);
      judge_against_tolerance(row, 1e-12 * w);
      row.wall_time = timer.seconds();
      out.rows.push_back(row);
    }
    Timer timer;
    auto row = base_row(cfg, "fourier_exp", cfg.c, w);
    row.n = n;
    row.r = cfg.point_r;
    row.computed = fourier_valiron_derivative([w0](double t) { return std::exp(Complex(0.0, w0 * t)); }, w, x, n);
    row.oracle = Complex(0.0, w0) * std::exp(Complex(0.0, w0 * x));
    // same bound as the Mellin series with n + 1 blocks, C = 1, theta = 0
    row.bound = w / (kPi * (4.0 * n * n - 1.0));
    judge_against_bound(row);
    row.wall_time = timer.seconds();
    out.rows.push_back(row);
  }
}

}  // namespace detail

/// Runs the configured experiment. Quadrature failures become a diagnostic
/// row with status fail; other library errors propagate.
inline RunResult run(const ExperimentConfig& cfg, int threads = 0) {
  RunResult out;
  try {
    if (cfg.experiment == "boas-convergence") detail::run_series_convergence(cfg, out, true);
    else if (cfg.experiment == "valiron-convergence") detail::run_series_convergence(cfg, out, false);
    else if (cfg.experiment == "reconstruct") detail::run_reconstruct(cfg, out);
    else if (cfg.experiment == "contour-cauchy") detail::run_contour_cauchy(cfg, out, threads);
    else if (cfg.experiment == "residue-defect") detail::run_residue_defect(cfg, out, threads);
    else if (cfg.experiment == "bernstein") detail::run_bernstein(cfg, out);
    else if (cfg.experiment == "fourier-demo") detail::run_fourier_demo(cfg, out);
    else throw ConfigError("experiment", "unknown experiment '" + cfg.experiment + "'");
  } catch (const ToleranceNotMet& e) {
    auto row = detail::base_row(cfg, "quadrature_failure", cfg.c, cfg.T);
    row.computed = e.best_estimate();
    row.oracle = row.computed;
    row.status = RowStatus::fail;
    row.note = "tolerance not met; gap " + format_double(e.gap());
    out.rows.push_back(row);
  }
  return out;
}

inline void write_csv(std::ostream& os, const ExperimentConfig& cfg, const RunResult& result) {
  os << "# mellin_polar schema=" << kSchemaVersion << " " << echo_config(cfg) << "\n";
  os << "experiment,function,quantity,n,r,theta,c,T,computed_re,computed_im,oracle_re,oracle_im,abs_error,"
        "bound,tail_estimate,status,note";
  if (cfg.timing) os << ",wall_time_s";
  os << "\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const auto& row : result.rows) {
    os << row.experiment << ',' << row.function << ',' << row.quantity << ','
       << (row.n ? std::to_string(*row.n) : std::string()) << ',' << opt(row.r) << ',' << opt(row.theta) << ','
       << format_double(row.c) << ',' << format_double(row.T) << ',' << format_double(row.computed.real()) << ','
       << format_double(row.computed.imag()) << ',' << format_double(row.oracle.real()) << ','
       << format_double(row.oracle.imag()) << ',' << format_double(row.abs_error()) << ',' << opt(row.bound)
       << ',' << opt(row.tail_estimate) << ',' << to_string(row.status) << ',' << row.note;
    if (cfg.timing) os << ',' << format_double(row.wall_time);
    os << "\n";
  }
}

inline std::string summary_line(const ExperimentConfig& cfg, const RunResult& result) {
  return "experiment=" + cfg.experiment + " function=" + cfg.function +
         " rows=" + std::to_string(result.rows.size()) + " max_error=" + format_double(result.max_error()) +
         " violations=" + std::to_string(result.violations()) + " status=" + (result.ok() ? "ok" : "FAILED");
}

/// MELLIN_POLAR_THREADS, or 0 (serial) when unset or unparsable.
inline int threads_from_env() {
  const char* v = std::getenv("MELLIN_POLAR_THREADS");
  if (!v) return 0;
  int n = 0;
  const std::string s(v);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
  if (res.ec != std::errc() || n < 0) return 0;
  return n;
}

}  // namespace mellin::experiment
