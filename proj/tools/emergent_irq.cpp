// emergent-irq: batch experiment runner.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eirq/experiment.hpp"

namespace {

std::uint64_t env_seed() {
  const char* s = std::getenv("EMERGENT_IRQ_SEED");
  if (!s || !*s) return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw eirq::ConfigError(std::string("EMERGENT_IRQ_SEED is not an integer: ") + s);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiments on idempotent right quasigroups and their emergent operations"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run one experiment and write its report");
  std::string config_path, carrier, experiment, out, format;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<long long> samples;
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--carrier", carrier, "override carrier");
  run->add_option("--experiment", experiment, "override experiment");
  run->add_option("--seed", seed, "override seed");
  run->add_option("--tol", tol, "override residual tolerance");
  run->add_option("--samples", samples, "override sample count");
  run->add_option("--out", out, "report path (default stdout)");
  run->add_option("--format", format, "csv or json");

  app.add_subcommand("list-carriers", "print carrier names");
  app.add_subcommand("list-experiments", "print experiment names");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("list-carriers")) {
    for (const auto& n : eirq::carrier_names()) std::cout << n << '\n';
    return 0;
  }
  if (app.got_subcommand("list-experiments")) {
    for (const auto& n : eirq::experiment_names()) std::cout << n << '\n';
    return 0;
  }

  eirq::ExperimentConfig cfg;
  std::vector<eirq::ReportRow> rows;
  try {
    nlohmann::json j = nlohmann::json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw eirq::ConfigError("cannot read config file " + config_path);
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw eirq::ConfigError("config " + config_path + " is not valid JSON: " + e.what());
      }
    }
    cfg = eirq::ExperimentConfig::from_json(j, env_seed());
    if (!carrier.empty()) cfg.carrier = carrier;
    if (!experiment.empty()) cfg.experiment = experiment;
    if (seed) cfg.seed = *seed;
    if (tol) cfg.tol = *tol;
    if (samples) {
      if (*samples < 1) throw eirq::ConfigError("samples must be >= 1");
      cfg.samples = static_cast<std::size_t>(*samples);
    }
    if (!out.empty()) cfg.out = out;
    if (!format.empty()) cfg.format = format;
    cfg.validate();
    rows = eirq::run_experiment(cfg);
  } catch (const eirq::ConfigError& e) {
    std::cerr << "emergent-irq: invalid config: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "emergent-irq: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream report;
  if (cfg.format == "json") eirq::write_json(report, rows);
  else eirq::write_csv(report, rows);
  if (cfg.out.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "emergent-irq: cannot write " << cfg.out << '\n';
      return 2;
    }
    f << report.str();
  }
  for (const auto& r : rows)
    if (!r.passed) return 1;
  return 0;
}
