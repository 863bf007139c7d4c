#include "boltzlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace boltzlab::io {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  return out;
}

json fit_json(const measure::FitResult& fit) {
  return {{"slope", fit.slope},
          {"intercept", fit.intercept},
          {"stderr", fit.stderr_slope},
          {"r2", fit.r2},
          {"window", {fit.window_lo, fit.window_hi}},
          {"points", fit.points}};
}

}  // namespace

void write_snapshots_csv(const std::string& path,
                         const std::vector<sim::Trajectory>& trajectories) {
  auto out = open_out(path);
  out << "replica,t,particle,vx,vy,running_max\n";
  for (std::size_t r = 0; r < trajectories.size(); ++r) {
    for (const auto& snap : trajectories[r].snapshots) {
      for (std::size_t p = 0; p < snap.v.size(); ++p) {
        out << r << ',' << fmt17(snap.t) << ',' << p << ',' << fmt17(snap.v[p].x) << ','
            << fmt17(snap.v[p].y) << ',' << fmt17(snap.running_max[p]) << '\n';
      }
    }
  }
}

std::vector<SnapshotRow> read_snapshots_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read snapshot file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty snapshot file: " + path);
  if (line.rfind("replica,t,particle,vx,vy,running_max", 0) != 0)
    throw std::runtime_error("snapshot file " + path +
                             ": missing column header 'replica,t,particle,vx,vy,running_max'");
  std::vector<SnapshotRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    SnapshotRow row;
    std::istringstream ss(line);
    char c;
    if (!(ss >> row.replica >> c >> row.t >> c >> row.particle >> c >> row.v.x >> c >>
          row.v.y >> c >> row.running_max))
      throw std::runtime_error("snapshot file " + path + ": parse error at line " +
                               std::to_string(line_no));
    rows.push_back(row);
  }
  return rows;
}

void write_manifest(const std::string& path, const cli::RunConfig& config,
                    const std::vector<sim::Trajectory>& trajectories,
                    double wall_seconds) {
  json j = json::parse(cli::echo_config(config));
  json runs = json::array();
  for (std::size_t r = 0; r < trajectories.size(); ++r) {
    runs.push_back({{"replica", r},
                    {"seed_lineage",
                     {{"master", trajectories[r].lineage.master},
                      {"replica", trajectories[r].lineage.replica},
                      {"events", trajectories[r].lineage.events}}},
                    {"arrivals", trajectories[r].arrivals},
                    {"accepted", trajectories[r].accepted}});
  }
  j["runs"] = runs;
  j["wall_seconds"] = wall_seconds;
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

void write_density_csv(const std::string& path, const measure::DensityEstimate& estimate) {
  auto out = open_out(path);
  out << "# bandwidth=" << fmt17(estimate.bandwidth) << " n_samples=" << estimate.n_samples
      << " weighted=" << (estimate.weights_used ? 1 : 0) << '\n';
  out << "x,y,value\n";
  const auto& g = estimate.grid;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out << fmt17(g.x(i)) << ',' << fmt17(g.y(j)) << ','
          << fmt17(estimate.values[static_cast<std::size_t>(j) * g.nx + i]) << '\n';
}

std::string fit_to_json(const measure::FitResult& fit) { return fit_json(fit).dump(2); }

void write_fit_json(const std::string& path, const measure::FitResult& fit,
                    const std::string& label) {
  json j = fit_json(fit);
  j["label"] = label;
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

std::string report_to_json(const exponents::RegimeReport& report) {
  json j;
  j["params"] = {{"nu", report.params.nu},
                 {"gamma", report.params.gamma},
                 {"lambda", report.params.lambda_moment},
                 {"lambda_prime", report.params.lambda_prime}};
  j["phi0"] = report.phi0;
  j["phi2"] = report.phi2;
  j["regime"] = exponents::regime_name(report.regime);
  const auto opt = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  j["alpha_star"] = opt(report.alpha_star);
  j["eta"] = opt(report.eta);
  j["kappa"] = opt(report.kappa);
  j["p1"] = opt(report.p1);
  j["p2"] = opt(report.p2);
  j["chi"] = opt(report.chi);
  j["k_star"] = report.k_star ? json(*report.k_star) : json(nullptr);
  j["alpha_seq"] = report.alpha_seq;
  j["kappa_seq"] = report.kappa_seq;
  return j.dump(2);
}

}  // namespace boltzlab::io
