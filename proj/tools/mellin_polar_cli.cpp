// Command-line front end: run experiments, list functions, print version.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mellin_polar/mellin_polar.hpp"

namespace ex = mellin::experiment;

int main(int argc, char** argv) {
  CLI::App app{"Mellin polar-analytic experiments"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run an experiment and write CSV");
  std::string experiment;
  run->add_option("experiment", experiment, "experiment id (may come from --config instead)");

  // Flag name -> config key. Flags win over values from --config.
  const std::vector<std::pair<std::string, std::string>> flag_keys{
      {"--function", "function"}, {"--c", "c"},           {"--T", "T"},
      {"--a", "a"},               {"--t-shift", "t-shift"}, {"--alpha", "alpha"},
      {"--point", "point"},       {"--n", "n"},           {"--r-grid", "r-grid"},
      {"--tol", "tol"},           {"--kernel", "kernel"}, {"--n-rect", "n-rect"},
      {"--out", "out"}};
  std::map<std::string, std::string> flag_values;
  for (const auto& [flag, key] : flag_keys) run->add_option(flag, flag_values[key]);
  std::string config_path;
  run->add_option("--config", config_path, "flat key=value file");
  bool timing = false;
  run->add_flag("--timing", timing, "add a wall-time column (output no longer byte-stable)");

  app.add_subcommand("list-functions", "list library functions");
  app.add_subcommand("version", "print version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (app.got_subcommand("version")) {
    std::cout << "mellin_polar " << ex::kVersion << " (csv schema " << ex::kSchemaVersion << ")\n";
    return 0;
  }
  if (app.got_subcommand("list-functions")) {
    std::cout << ex::list_functions();
    return 0;
  }

  try {
    ex::ConfigMap map;
    if (!config_path.empty()) map = ex::read_config_file(config_path);
    if (!experiment.empty()) map["experiment"] = experiment;
    for (const auto& [flag, key] : flag_keys)
      if (run->count(flag) > 0) map[key] = flag_values[key];
    if (timing) map["timing"] = "true";

    const auto cfg = ex::parse_config(map);
    const auto result = ex::run(cfg, ex::threads_from_env());
    const std::string summary = ex::summary_line(cfg, result);
    if (cfg.out.empty()) {
      ex::write_csv(std::cout, cfg, result);
      std::cerr << summary << "\n";
    } else {
      std::ofstream out(cfg.out);
      if (!out) {
        std::cerr << "error: out: cannot write '" << cfg.out << "'\n";
        return 2;
      }
      ex::write_csv(out, cfg, result);
      std::cout << summary << "\n";
    }
    return result.ok() ? 0 : 1;
  } catch (const ex::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const mellin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
