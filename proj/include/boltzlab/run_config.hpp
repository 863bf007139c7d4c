// Experiment configuration: JSON schema, validation and echo.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boltzlab/measure_lab.hpp"
#include "boltzlab/particle_simulator.hpp"

namespace boltzlab::cli {

// Configuration problem; the message names the offending key or the violated
// constraint.  Mapped to exit code 2 by the CLI.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalysisSpec {
  double grid_half_extent = 6.0;
  int grid_points = 101;
  double bandwidth = 0.0;  // <= 0: default rule
  double lambda_prime = 1.0;
  double fit_r_lo = 2.0;
  double fit_r_hi = 0.0;  // <= 0: 99.9th percentile radius
};

struct RunConfig {
  kernel::KernelParams kernel;
  std::vector<kernel::CutoffSchedule> schedules;  // at least one
  sim::InitialLaw law = sim::GaussianLaw{};
  std::size_t n = 10000;
  double t_end = 1.0;
  std::vector<double> snapshot_times;
  sim::Scheme scheme = sim::Scheme::kFictive;
  bool symmetric_pairs = false;
  int replicas = 1;
  std::uint64_t master_seed = 1;
  AnalysisSpec analysis;
  std::string out_dir = ".";

  sim::SimConfig sim_config(int replica, std::size_t schedule_index = 0) const;
};

// Parses and validates a config from JSON text (inline document or the
// contents of a file).  Derived constants are materialized by construction.
RunConfig parse_config(const std::string& json_text);

// Loads the file at path and parses it.
RunConfig parse_config_file(const std::string& path);

// Full round-trippable echo of a config, derived constants included; floats
// carry 17 significant digits.
std::string echo_config(const RunConfig& config);

}  // namespace boltzlab::cli
