#ifndef EIRQ_EXPERIMENT_HPP
#define EIRQ_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eirq/exec.hpp"
#include "eirq/irq.hpp"

namespace eirq {

/// Invalid experiment configuration; the CLI maps it to exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct ExperimentConfig {
  std::string carrier;
  std::string experiment;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::optional<double> tol;        // residual tolerance; per-experiment default
  long max_k = 200;
  long cauchy_window = 3;
  std::optional<double> limit_tol;  // Cauchy tolerance; per-carrier default
  std::optional<double> radius;     // sampling radius; per-carrier default
  double epsilon = 0.5;
  std::size_t dim = 3;
  long n = 5;
  double eta = 0.1;
  nlohmann::json algebra;  // for carrier "carnot"
  std::string out;         // empty: stdout
  std::string format = "csv";

  /// Flat object; unknown keys are rejected. Missing seed falls back to
  /// `default_seed`.
  static ExperimentConfig from_json(const nlohmann::json& j, std::uint64_t default_seed);
  void validate() const;
};

struct ReportRow {
  std::string experiment;
  std::string carrier;
  std::string identity;
  long k = 0;
  std::size_t samples = 0;
  double max_residual = 0.0;
  std::optional<double> rate;
  bool passed = false;
};

const std::vector<std::string>& carrier_names();
const std::vector<std::string>& experiment_names();

/// Builds the carrier named in the config. Throws ConfigError.
IrqPtr make_carrier(const ExperimentConfig& cfg);

/// Rows sorted by identity, then k.
std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg, Execution exec = Execution::parallel);

/// experiment,carrier,identity,k,samples,max_residual,rate,passed
void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);
/// Array of row objects; non-finite numbers and missing rates become null.
void write_json(std::ostream& os, const std::vector<ReportRow>& rows);

}  // namespace eirq

#endif
