#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "mellin_polar/experiment.hpp"

using namespace mellin;
using namespace mellin::experiment;

namespace {

std::string csv_of(const ConfigMap& m, int threads = 0) {
  const auto cfg = parse_config(m);
  std::ostringstream os;
  write_csv(os, cfg, run(cfg, threads));
  return os.str();
}

}  // namespace

TEST_CASE("config parsing and validation") {
  const auto cfg = parse_config({{"experiment", "boas-convergence"}, {"c", "0.5"}, {"T", "2"},
                                 {"point", "1.5,-0.25"}, {"n", "2,4,8"}, {"r-grid", "0.5:4:8"}});
  CHECK(cfg.c == 0.5);
  CHECK(cfg.T == 2.0);
  CHECK(cfg.point_r == 1.5);
  CHECK(cfg.point_theta == -0.25);
  CHECK(cfg.n_list == std::vector<int>{2, 4, 8});
  REQUIRE(cfg.radii().size() == 8);
  CHECK(cfg.radii().front() == Catch::Approx(0.5));
  CHECK(cfg.radii().back() == Catch::Approx(4.0));
  CHECK(cfg.radii()[1] / cfg.radii()[0] == Catch::Approx(cfg.radii()[2] / cfg.radii()[1]));

  auto field_of = [](const ConfigMap& m) {
    try {
      parse_config(m);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  CHECK(field_of({}) == "experiment");
  CHECK(field_of({{"experiment", "nope"}}) == "experiment");
  CHECK(field_of({{"experiment", "bernstein"}, {"function", "nope"}}) == "function");
  CHECK(field_of({{"experiment", "bernstein"}, {"n", "4,4"}}) == "n");
  CHECK(field_of({{"experiment", "bernstein"}, {"n", "0"}}) == "n");
  CHECK(field_of({{"experiment", "valiron-convergence"}, {"n", "1,2"}}) == "n");
  CHECK(field_of({{"experiment", "bernstein"}, {"T", "0"}}) == "T");
  CHECK(field_of({{"experiment", "bernstein"}, {"c", "abc"}}) == "c");
  CHECK(field_of({{"experiment", "bernstein"}, {"point", "1"}}) == "point");
  CHECK(field_of({{"experiment", "bernstein"}, {"point", "-1,0"}}) == "point");
  CHECK(field_of({{"experiment", "reconstruct"}, {"r-grid", "2:1:4"}}) == "r-grid");
  CHECK(field_of({{"experiment", "residue-defect"}, {"kernel", "x"}}) == "kernel");
  CHECK(field_of({{"experiment", "residue-defect"}, {"n-rect", "0"}}) == "n-rect");
  CHECK(field_of({{"experiment", "bernstein"}, {"colour", "red"}}) == "colour");
  CHECK(field_of({{"experiment", "contour-cauchy"}, {"tol", "-1"}}) == "tol");
}

TEST_CASE("config file text") {
  const auto m = parse_config_text("# comment\nexperiment = bernstein\n\n  c=0.25\n");
  CHECK(m.at("experiment") == "bernstein");
  CHECK(m.at("c") == "0.25");
  CHECK_THROWS_AS(parse_config_text("experiment bernstein"), ConfigError);
}

TEST_CASE("power needs a = -c + ib to be a member") {
  const auto cfg = parse_config({{"experiment", "boas-convergence"}, {"function", "power"}, {"a", "3"}});
  CHECK_THROWS_AS(run(cfg), ConfigError);
  const auto ok = parse_config({{"experiment", "boas-convergence"}, {"function", "power"}, {"c", "0.5"}, {"a", "-0.5,1.2"}});
  CHECK(run(ok).ok());
}

TEST_CASE("registry listing") {
  const auto text = list_functions();
  CHECK(text == list_functions());
  CHECK(text.find("mellin-sine") != std::string::npos);
  CHECK(text.find("sinc(t) = sin(pi t)/(pi t)") != std::string::npos);
  const auto& reg = function_registry();
  REQUIRE(reg.size() == 7);
  CHECK(reg.front().id == "power");
  CHECK(reg[1].class_data.find("C_f = 1") != std::string::npos);
  // every registered id builds
  for (const auto& f : reg) {
    ConfigMap m{{"experiment", "bernstein"}, {"function", f.id}, {"T", "1.5"}, {"t-shift", "1.3"}, {"alpha", "0.2"}};
    if (f.id == "power") m["a"] = "0,1.5";
    CHECK_NOTHROW(make_function(parse_config(m)));
  }
}

TEST_CASE("boas convergence experiment") {
  const auto cfg = parse_config({{"experiment", "boas-convergence"}, {"function", "mellin-sine"}, {"c", "0.5"},
                                 {"T", "2"}, {"point", "1,0"}, {"n", "2,4,8,16,32,64"}});
  const auto res = run(cfg);
  REQUIRE(res.rows.size() == 6);
  CHECK(res.violations() == 0);
  for (const auto& row : res.rows) CHECK(row.abs_error() <= *row.bound);
  CHECK(res.rows.back().abs_error() <= 4.0 * 2.0 / (kPi * kPi * 127.0));
}

TEST_CASE("every experiment runs clean on its defaults") {
  for (const auto& id : experiment_ids()) {
    INFO(id);
    ConfigMap m{{"experiment", id}, {"T", "2"}, {"c", "0.5"}};
    if (id == "residue-defect") m["point"] = "1.7,0";
    const auto res = run(parse_config(m));
    CHECK_FALSE(res.rows.empty());
    CHECK(res.ok());
  }
  const auto val = run(parse_config({{"experiment", "residue-defect"}, {"kernel", "valiron"}, {"point", "1.7,0"}, {"n-rect", "2"}}));
  CHECK(val.ok());
}

TEST_CASE("reconstruct reports shrinking maxima") {
  const auto res = run(parse_config({{"experiment", "reconstruct"}, {"function", "translated-sine"}, {"t-shift", "1.2"},
                                     {"r-grid", "0.5:2.0:16"}, {"n", "64,128,256"}}));
  std::vector<double> maxima;
  for (const auto& row : res.rows)
    if (row.quantity == "recon_max_error") maxima.push_back(row.abs_error());
  REQUIRE(maxima.size() == 3);
  CHECK(maxima[1] < maxima[0]);
  CHECK(maxima[2] < maxima[1]);
  CHECK(res.ok());
}

TEST_CASE("CSV is deterministic and thread independent") {
  const ConfigMap m{{"experiment", "residue-defect"}, {"kernel", "boas"}, {"n-rect", "1"}, {"c", "0"}};
  const auto a = csv_of(m);
  CHECK(a == csv_of(m));
  CHECK(a == csv_of(m, 4));
  CHECK(a.rfind("# mellin_polar schema=1 experiment=residue-defect", 0) == 0);
  CHECK(a.find("wall_time") == std::string::npos);

  ConfigMap timed = m;
  timed["timing"] = "true";
  CHECK(csv_of(timed).find(",wall_time_s\n") != std::string::npos);
}

TEST_CASE("float formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300, 1.0}) CHECK(std::stod(format_double(v)) == v);
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("error column is recomputed from stored values") {
  ResultRow row;
  row.computed = {1.0, 1.0};
  row.oracle = {1.0, 0.0};
  CHECK(row.abs_error() == 1.0);
  row.oracle = {0.0, 0.0};
  CHECK(row.abs_error() == Catch::Approx(std::sqrt(2.0)));
}

TEST_CASE("status drives the run result") {
  RunResult r;
  r.rows.resize(2);
  CHECK(r.ok());
  r.rows[1].status = RowStatus::violation;
  CHECK_FALSE(r.ok());
  CHECK(r.violations() == 1);
}

TEST_CASE("quadrature failure becomes a diagnostic row") {
  const auto cfg = parse_config({{"experiment", "contour-cauchy"}, {"function", "mellin-sine"}, {"tol", "1e-300"}});
  const auto res = run(cfg);
  REQUIRE_FALSE(res.rows.empty());
  CHECK(res.rows.back().quantity == "quadrature_failure");
  CHECK(res.rows.back().status == RowStatus::fail);
  CHECK_FALSE(res.ok());
}

TEST_CASE("thread count from the environment") {
  ::setenv("MELLIN_POLAR_THREADS", "3", 1);
  CHECK(threads_from_env() == 3);
  ::setenv("MELLIN_POLAR_THREADS", "x", 1);
  CHECK(threads_from_env() == 0);
  ::unsetenv("MELLIN_POLAR_THREADS");
  CHECK(threads_from_env() == 0);
}
