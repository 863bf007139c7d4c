// boltzlab command line: exponent reports, particle simulation, measure-level
// analysis and the end-to-end verification suite.
//
// Exit codes: 0 success, 2 configuration error, 3 verification failure.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "boltzlab/io.hpp"
#include "boltzlab/run_config.hpp"
#include "boltzlab/verify_suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerify = 3;

std::string default_out_dir() {
  if (const char* env = std::getenv("BOLTZLAB_OUT_DIR")) return env;
  return ".";
}

void print_report(const boltzlab::exponents::RegimeReport& r) {
  using boltzlab::exponents::regime_name;
  std::cout << "regime      " << regime_name(r.regime) << "\n";
  std::cout << "phi(0)      " << r.phi0 << "\n";
  std::cout << "phi(2)      " << r.phi2 << "\n";
  const auto line = [](const char* name, const std::optional<double>& v,
                       const char* why_absent) {
    std::cout << name;
    if (v)
      std::cout << *v << "\n";
    else
      std::cout << "absent (" << why_absent << ")\n";
  };
  line("alpha_star  ", r.alpha_star, "requires nu < gamma/(2 gamma+1)");
  line("eta         ", r.eta, "requires phi(2) > 2, i.e. nu < gamma/(4 gamma+9)");
  line("kappa       ", r.kappa, "requires nu < gamma/(2 gamma+1)");
  line("p1          ", r.p1, "requires nu < gamma/(4 gamma+9)");
  line("p2          ", r.p2, "requires nu < gamma/(4 gamma+9)");
  line("chi         ", r.chi, "requires nu < gamma/(4 gamma+9)");
  if (r.k_star)
    std::cout << "k_star      " << *r.k_star << "\n";
  else
    std::cout << "k_star      absent (requires alpha_star > 2)\n";
  if (!r.alpha_seq.empty()) {
    std::cout << "alpha_seq  ";
    const std::size_t show = std::min<std::size_t>(r.alpha_seq.size(), 8);
    for (std::size_t k = 0; k < show; ++k) std::cout << " " << r.alpha_seq[k];
    if (show < r.alpha_seq.size()) std::cout << " ...";
    std::cout << "\n";
  }
}

int cmd_exponents(double gamma, double nu, double lambda, double lambda_prime,
                  std::optional<double> s, const std::string& out_dir) {
  boltzlab::kernel::KernelParams params{nu, gamma, lambda, lambda_prime};
  if (s) {
    const auto m = boltzlab::exponents::from_dimension3(*s);
    params.nu = m.nu;
    params.gamma = m.gamma;
    params.lambda_moment = 0.5 * (m.gamma + 2.0);
    params.lambda_prime = 0.5 * params.lambda_moment;
    std::cout << "s " << *s << " -> nu " << m.nu << ", gamma " << m.gamma
              << " (density regime: " << (m.density_regime ? "yes" : "no")
              << ", full regime: " << (m.full_regime ? "yes" : "no") << ")\n";
  }
  const auto report = boltzlab::exponents::build_report(params);
  print_report(report);
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / "regime_report.json";
  std::ofstream out(path);
  out << boltzlab::io::report_to_json(report) << "\n";
  std::cout << "report written to " << path.string() << "\n";
  return kExitOk;
}

int cmd_simulate(const boltzlab::cli::RunConfig& cfg) {
  namespace sim = boltzlab::sim;
  std::cout << echo_config(cfg) << "\n";
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<sim::Trajectory> trajectories;
  for (int r = 0; r < cfg.replicas; ++r) trajectories.push_back(sim::run(cfg.sim_config(r)));
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::filesystem::create_directories(cfg.out_dir);
  const auto dir = std::filesystem::path(cfg.out_dir);
  boltzlab::io::write_snapshots_csv((dir / "snapshots.csv").string(), trajectories);
  boltzlab::io::write_manifest((dir / "manifest.json").string(), cfg, trajectories, wall);
  std::cout << "wrote " << (dir / "snapshots.csv").string() << " and "
            << (dir / "manifest.json").string() << " (" << wall << "s)\n";
  return kExitOk;
}

int cmd_analyze(const std::string& snapshots_path, const boltzlab::cli::RunConfig& cfg) {
  namespace measure = boltzlab::measure;
  const auto rows = boltzlab::io::read_snapshots_csv(snapshots_path);
  if (rows.empty()) throw boltzlab::cli::ConfigError("no rows in " + snapshots_path);

  // group by snapshot time, pooling replicas
  std::map<double, std::vector<boltzlab::Vec2>> by_time;
  for (const auto& row : rows) by_time[row.t].push_back(row.v);

  std::filesystem::create_directories(cfg.out_dir);
  const auto dir = std::filesystem::path(cfg.out_dir);
  const auto grid = measure::Grid2D::centered(cfg.analysis.grid_half_extent,
                                              cfg.analysis.grid_points);

  std::ofstream tails((dir / "tails.csv").string());
  tails << "t,R,tail_mass\n";
  std::vector<std::pair<double, double>> sups;
  int idx = 0;
  for (const auto& [t, samples] : by_time) {
    const auto est = measure::kde(samples, {}, cfg.analysis.bandwidth, grid);
    boltzlab::io::write_density_csv(
        (dir / ("density_t" + std::to_string(idx) + ".csv")).string(), est);
    sups.emplace_back(t, est.max_value());
    for (double radius : {1.0, 2.0, 3.0, 4.0})
      tails << t << ',' << radius << ',' << measure::tail_mass(samples, radius) << '\n';

    double r_hi = cfg.analysis.fit_r_hi;
    if (r_hi <= 0.0) {
      std::vector<double> rad(samples.size());
      for (std::size_t k = 0; k < samples.size(); ++k) rad[k] = samples[k].norm();
      std::sort(rad.begin(), rad.end());
      r_hi = rad[static_cast<std::size_t>(0.999 * (rad.size() - 1))];
    }
    try {
      const auto fit = measure::fit_spatial_decay(est, cfg.analysis.lambda_prime,
                                                  cfg.analysis.fit_r_lo, r_hi);
      boltzlab::io::write_fit_json(
          (dir / ("spatial_decay_t" + std::to_string(idx) + ".json")).string(), fit,
          "log f vs |v|^lambda' at t=" + std::to_string(t));
    } catch (const std::exception& e) {
      std::cerr << "spatial fit skipped at t=" << t << ": " << e.what() << "\n";
    }
    ++idx;
  }
  if (sups.size() >= 4) {
    const auto fit = measure::fit_time_blowup(sups);
    boltzlab::io::write_fit_json((dir / "time_blowup.json").string(), fit,
                                 "log sup f_hat vs log t");
    std::cout << "eta_emp = " << -fit.slope << "\n";
  }
  std::cout << "analysis artifacts written to " << dir.string() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& profile_name, std::uint64_t seed,
               const std::string& out_dir) {
  using namespace boltzlab::verify;
  const Profile profile = profile_name == "full" ? Profile::kFull : Profile::kQuick;
  const auto results = run_all(profile, seed);
  std::cout << format_results(results);
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / "verify.json";
  std::ofstream out(path);
  out << results_to_json(results, profile, seed) << "\n";
  std::cout << "verdict written to " << path.string() << "\n";
  if (!all_passed(results)) return kExitVerify;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boltzlab: particle-level laboratory for the 2D non-cutoff Boltzmann "
               "equation with hard potentials"};
  app.require_subcommand(1);

  // exponents
  auto* exps = app.add_subcommand("exponents", "closed-form exponents and regime report");
  double gamma = 1.0, nu = 0.25, lambda = 0.0, lambda_prime = 0.0;
  std::optional<double> s3;
  std::string out_dir = default_out_dir();
  exps->add_option("--gamma", gamma, "potential exponent gamma in (0,1]");
  exps->add_option("--nu", nu, "angular singularity exponent nu in (0,1/2)");
  exps->add_option("--lambda", lambda, "moment order lambda in (gamma,2); default (gamma+2)/2");
  exps->add_option("--lambda-prime", lambda_prime, "working order lambda' in (0,lambda)");
  exps->add_option("--s", s3, "derive (nu,gamma) from the 3D-significant parameter s > 5");
  exps->add_option("--out", out_dir, "output directory");

  // simulate
  auto* simc = app.add_subcommand("simulate", "run the particle system, dump snapshots");
  std::string config_path;
  std::string inline_json;
  double sim_gamma = 1.0, sim_nu = 0.25, sim_lambda = 0.0, sim_lambda_prime = 0.0;
  double epsilon = 0.05, zeta = 0.1, eta0 = 0.0, t_end = 1.0;
  std::size_t n = 10000;
  int replicas = 1;
  std::uint64_t seed = 1;
  std::string scheme = "fictive", sim_out = default_out_dir();
  simc->add_option("--config", config_path, "JSON config file (overrides other flags)");
  simc->add_option("--json", inline_json, "inline JSON config");
  simc->add_option("--gamma", sim_gamma, "");
  simc->add_option("--nu", sim_nu, "");
  simc->add_option("--lambda", sim_lambda, "");
  simc->add_option("--lambda-prime", sim_lambda_prime, "");
  simc->add_option("--epsilon", epsilon, "");
  simc->add_option("--zeta", zeta, "");
  simc->add_option("--eta0", eta0, "0 = midpoint default");
  simc->add_option("--n", n, "");
  simc->add_option("--t-end", t_end, "");
  simc->add_option("--seed", seed, "");
  simc->add_option("--scheme", scheme, "fictive|real");
  simc->add_option("--replicas", replicas, "");
  simc->add_option("--out", sim_out, "");

  // analyze
  auto* ana = app.add_subcommand("analyze", "densities, tails and fits from snapshots");
  std::string snapshots_path;
  std::string ana_config_path, ana_out = default_out_dir();
  double ana_lambda_prime = 1.0, bandwidth = 0.0;
  ana->add_option("--snapshots", snapshots_path, "snapshot CSV")->required();
  ana->add_option("--config", ana_config_path, "JSON config for the analysis block");
  ana->add_option("--lambda-prime", ana_lambda_prime, "");
  ana->add_option("--bandwidth", bandwidth, "0 = default rule");
  ana->add_option("--out", ana_out, "");

  // verify
  auto* ver = app.add_subcommand("verify", "run the acceptance criteria");
  std::string profile = "quick";
  std::uint64_t vseed = 1234;
  std::string ver_out = default_out_dir();
  ver->add_option("--profile", profile, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));
  ver->add_option("--seed", vseed, "");
  ver->add_option("--out", ver_out, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (exps->parsed()) {
      if (lambda <= 0.0) lambda = 0.5 * (gamma + 2.0);
      if (lambda_prime <= 0.0) lambda_prime = 0.5 * lambda;
      return cmd_exponents(gamma, nu, lambda, lambda_prime, s3, out_dir);
    }
    if (simc->parsed()) {
      boltzlab::cli::RunConfig cfg;
      if (!config_path.empty()) {
        cfg = boltzlab::cli::parse_config_file(config_path);
      } else if (!inline_json.empty()) {
        cfg = boltzlab::cli::parse_config(inline_json);
      } else {
        if (sim_lambda <= 0.0) sim_lambda = 0.5 * (sim_gamma + 2.0);
        if (sim_lambda_prime <= 0.0) sim_lambda_prime = 0.5 * sim_lambda;
        cfg.kernel = {sim_nu, sim_gamma, sim_lambda, sim_lambda_prime};
        try {
          cfg.kernel.validate();
          cfg.schedules = {boltzlab::kernel::CutoffSchedule::make(cfg.kernel, epsilon,
                                                                  zeta, eta0)};
        } catch (const std::domain_error& e) {
          throw boltzlab::cli::ConfigError(e.what());
        }
        cfg.n = n;
        cfg.t_end = t_end;
        cfg.snapshot_times = {t_end};
        cfg.scheme = scheme == "real" ? boltzlab::sim::Scheme::kReal
                                      : boltzlab::sim::Scheme::kFictive;
        cfg.replicas = replicas;
        cfg.master_seed = seed;
        cfg.out_dir = sim_out;
      }
      return cmd_simulate(cfg);
    }
    if (ana->parsed()) {
      boltzlab::cli::RunConfig cfg;
      if (!ana_config_path.empty()) {
        cfg = boltzlab::cli::parse_config_file(ana_config_path);
      } else {
        cfg.kernel = {0.25, 1.0, 1.5, 1.0};
        cfg.schedules = {boltzlab::kernel::CutoffSchedule::make(cfg.kernel, 0.05, 0.1)};
        cfg.analysis.lambda_prime = ana_lambda_prime;
        cfg.analysis.bandwidth = bandwidth;
      }
      cfg.out_dir = ana_out;
      return cmd_analyze(snapshots_path, cfg);
    }
    if (ver->parsed()) return cmd_verify(profile, vseed, ver_out);
  } catch (const boltzlab::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
