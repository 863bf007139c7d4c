// File formats: snapshot CSV, run manifests, density grids, fit summaries,
// regime reports.  Floats are written with 17 significant digits so every
// value round-trips exactly.
#pragma once

#include <string>
#include <vector>

#include "boltzlab/exponent_engine.hpp"
#include "boltzlab/measure_lab.hpp"
#include "boltzlab/particle_simulator.hpp"
#include "boltzlab/run_config.hpp"

namespace boltzlab::io {

// replica,t,particle,vx,vy,running_max
void write_snapshots_csv(const std::string& path,
                         const std::vector<sim::Trajectory>& trajectories);

struct SnapshotRow {
  int replica;
  double t;
  std::size_t particle;
  Vec2 v;
  double running_max;
};
std::vector<SnapshotRow> read_snapshots_csv(const std::string& path);

// Config echo plus schedule constants, event counts and wall-clock stats.
void write_manifest(const std::string& path, const cli::RunConfig& config,
                    const std::vector<sim::Trajectory>& trajectories,
                    double wall_seconds);

// x,y,value rows preceded by a header carrying bandwidth and sample count.
void write_density_csv(const std::string& path, const measure::DensityEstimate& estimate);

std::string fit_to_json(const measure::FitResult& fit);
void write_fit_json(const std::string& path, const measure::FitResult& fit,
                    const std::string& label);

std::string report_to_json(const exponents::RegimeReport& report);

}  // namespace boltzlab::io
