#include "boltzlab/run_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace boltzlab::cli {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing key: " + key);
  if (!j.at(key).is_number()) throw ConfigError("key is not a number: " + key);
  return j.at(key).get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ConfigError("key is not a number: " + key);
  return j.at(key).get<double>();
}

Vec2 parse_vec2(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError("expected [x, y] array for key: " + key);
  return {j[0].get<double>(), j[1].get<double>()};
}

sim::SimpleLaw parse_simple_law(const json& j) {
  const std::string type = j.value("type", "");
  if (type == "dirac") {
    return sim::DiracLaw{parse_vec2(j.at("v0"), "law.v0")};
  }
  if (type == "two_point") {
    sim::TwoPointLaw l;
    l.a = parse_vec2(j.at("a"), "law.a");
    l.b = parse_vec2(j.at("b"), "law.b");
    l.weight_a = number_or(j, "weight_a", 0.5);
    if (!(l.weight_a >= 0.0 && l.weight_a <= 1.0))
      throw ConfigError("law.weight_a must lie in [0,1]");
    return l;
  }
  if (type == "gaussian") {
    sim::GaussianLaw l;
    if (j.contains("mean")) l.mean = parse_vec2(j.at("mean"), "law.mean");
    l.sxx = number_or(j, "sxx", 1.0);
    l.sxy = number_or(j, "sxy", 0.0);
    l.syy = number_or(j, "syy", 1.0);
    return l;
  }
  if (type == "uniform_disc") {
    sim::UniformDiscLaw l;
    l.radius = require_number(j, "radius");
    if (!(l.radius > 0.0)) throw ConfigError("law.radius must be positive");
    if (j.contains("center")) l.center = parse_vec2(j.at("center"), "law.center");
    return l;
  }
  throw ConfigError("unknown initial law type: '" + type +
                    "' (expected dirac|two_point|gaussian|uniform_disc|mixture)");
}

sim::InitialLaw parse_law(const json& j) {
  if (j.value("type", "") == "mixture") {
    sim::MixtureLaw mix;
    if (!j.contains("components") || !j.at("components").is_array())
      throw ConfigError("mixture law: missing components array");
    for (const auto& c : j.at("components")) {
      mix.weights.push_back(require_number(c, "weight"));
      mix.components.push_back(parse_simple_law(c));
    }
    if (mix.components.empty()) throw ConfigError("mixture law: no components");
    return mix;
  }
  const sim::SimpleLaw base = parse_simple_law(j);
  return std::visit([](const auto& l) -> sim::InitialLaw { return l; }, base);
}

json law_to_json(const sim::InitialLaw& law);

json simple_law_to_json(const sim::SimpleLaw& law) {
  return std::visit(
      [](const auto& l) -> json {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, sim::DiracLaw>) {
          return {{"type", "dirac"}, {"v0", {l.v0.x, l.v0.y}}};
        } else if constexpr (std::is_same_v<T, sim::TwoPointLaw>) {
          return {{"type", "two_point"},
                  {"a", {l.a.x, l.a.y}},
                  {"b", {l.b.x, l.b.y}},
                  {"weight_a", l.weight_a}};
        } else if constexpr (std::is_same_v<T, sim::GaussianLaw>) {
          return {{"type", "gaussian"},
                  {"mean", {l.mean.x, l.mean.y}},
                  {"sxx", l.sxx},
                  {"sxy", l.sxy},
                  {"syy", l.syy}};
        } else {
          return {{"type", "uniform_disc"},
                  {"radius", l.radius},
                  {"center", {l.center.x, l.center.y}}};
        }
      },
      law);
}

json law_to_json(const sim::InitialLaw& law) {
  if (const auto* mix = std::get_if<sim::MixtureLaw>(&law)) {
    json components = json::array();
    for (std::size_t k = 0; k < mix->components.size(); ++k) {
      json c = simple_law_to_json(mix->components[k]);
      c["weight"] = mix->weights[k];
      components.push_back(c);
    }
    return {{"type", "mixture"}, {"components", components}};
  }
  return std::visit(
      [](const auto& l) -> json {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, sim::MixtureLaw>) {
          return {};
        } else {
          return simple_law_to_json(sim::SimpleLaw{l});
        }
      },
      law);
}

RunConfig parse_config_json(const json& j);

}  // namespace

sim::SimConfig RunConfig::sim_config(int replica, std::size_t schedule_index) const {
  sim::SimConfig c;
  c.kernel = kernel;
  c.schedule = schedules.at(schedule_index);
  c.law = law;
  c.n = n;
  c.t_end = t_end;
  c.snapshot_times = snapshot_times;
  c.scheme = scheme;
  c.symmetric_pairs = symmetric_pairs;
  c.master_seed = master_seed;
  c.replica = static_cast<std::uint64_t>(replica);
  return c;
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_config_json(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

namespace {

RunConfig parse_config_json(const json& j) {
  RunConfig cfg;
  if (!j.contains("kernel")) throw ConfigError("missing key: kernel");
  const auto& jk = j.at("kernel");
  cfg.kernel.nu = require_number(jk, "nu");
  cfg.kernel.gamma = require_number(jk, "gamma");
  cfg.kernel.lambda_moment = number_or(jk, "lambda", 1.5);
  cfg.kernel.lambda_prime = number_or(jk, "lambda_prime", 1.0);
  try {
    cfg.kernel.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("kernel: ") + e.what());
  }

  if (!j.contains("schedules") || !j.at("schedules").is_array() || j.at("schedules").empty())
    throw ConfigError("missing key: schedules (non-empty array required)");
  for (const auto& js : j.at("schedules")) {
    const double eps = require_number(js, "epsilon");
    const double zeta = require_number(js, "zeta");
    const double eta0 = number_or(js, "eta0", 0.0);
    try {
      cfg.schedules.push_back(kernel::CutoffSchedule::make(cfg.kernel, eps, zeta, eta0));
    } catch (const std::domain_error& e) {
      throw ConfigError(std::string("schedules: ") + e.what());
    }
  }

  if (j.contains("sim")) {
    const auto& js = j.at("sim");
    cfg.n = static_cast<std::size_t>(number_or(js, "n", 10000));
    if (cfg.n < 2) throw ConfigError("sim.n must be at least 2");
    cfg.t_end = number_or(js, "t_end", 1.0);
    if (!(cfg.t_end > 0.0)) throw ConfigError("sim.t_end must be positive");
    if (js.contains("snapshots")) {
      for (const auto& t : js.at("snapshots")) {
        if (!t.is_number()) throw ConfigError("sim.snapshots entries must be numbers");
        cfg.snapshot_times.push_back(t.get<double>());
      }
    }
    const std::string scheme = js.value("scheme", "fictive");
    if (scheme == "fictive") cfg.scheme = sim::Scheme::kFictive;
    else if (scheme == "real") cfg.scheme = sim::Scheme::kReal;
    else throw ConfigError("sim.scheme must be 'fictive' or 'real', got '" + scheme + "'");
    cfg.symmetric_pairs = js.value("symmetric_pairs", false);
    cfg.replicas = static_cast<int>(number_or(js, "replicas", 1));
    if (cfg.replicas < 1) throw ConfigError("sim.replicas must be at least 1");
    cfg.master_seed = static_cast<std::uint64_t>(number_or(js, "seed", 1));
    if (js.contains("law")) cfg.law = parse_law(js.at("law"));
  }
  if (cfg.snapshot_times.empty()) cfg.snapshot_times = {cfg.t_end};
  for (std::size_t k = 0; k < cfg.snapshot_times.size(); ++k) {
    const double t = cfg.snapshot_times[k];
    if (!(t > 0.0 && t <= cfg.t_end) || (k > 0 && !(t > cfg.snapshot_times[k - 1])))
      throw ConfigError("sim.snapshots must be strictly increasing in (0, t_end]");
  }

  if (j.contains("analysis")) {
    const auto& ja = j.at("analysis");
    cfg.analysis.grid_half_extent = number_or(ja, "grid_half_extent", 6.0);
    cfg.analysis.grid_points = static_cast<int>(number_or(ja, "grid_points", 101));
    if (cfg.analysis.grid_points < 2) throw ConfigError("analysis.grid_points must be >= 2");
    cfg.analysis.bandwidth = number_or(ja, "bandwidth", 0.0);
    cfg.analysis.lambda_prime = number_or(ja, "lambda_prime", cfg.kernel.lambda_prime);
    cfg.analysis.fit_r_lo = number_or(ja, "fit_r_lo", 2.0);
    cfg.analysis.fit_r_hi = number_or(ja, "fit_r_hi", 0.0);
  } else {
    cfg.analysis.lambda_prime = cfg.kernel.lambda_prime;
  }

  if (j.contains("output")) cfg.out_dir = j.at("output").value("dir", ".");
  return cfg;
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string echo_config(const RunConfig& config) {
  json j;
  j["kernel"] = {{"nu", config.kernel.nu},
                 {"gamma", config.kernel.gamma},
                 {"lambda", config.kernel.lambda_moment},
                 {"lambda_prime", config.kernel.lambda_prime}};
  j["schedules"] = json::array();
  for (const auto& s : config.schedules) {
    j["schedules"].push_back({{"epsilon", s.epsilon},
                              {"zeta", s.zeta},
                              {"eta0", s.eta0},
                              {"derived", {{"gamma_eps", s.gamma_eps},
                                           {"g_zeta", s.g_zeta},
                                           {"rate", s.rate},
                                           {"molli_var_coeff", s.molli_var_coeff},
                                           {"zeta_alpha0", kernel::zeta_alpha(
                                                s.epsilon, config.kernel.gamma, 0.0,
                                                config.kernel.nu)}}}});
  }
  j["sim"] = {{"n", config.n},
              {"t_end", config.t_end},
              {"snapshots", config.snapshot_times},
              {"scheme", config.scheme == sim::Scheme::kReal ? "real" : "fictive"},
              {"symmetric_pairs", config.symmetric_pairs},
              {"replicas", config.replicas},
              {"seed", config.master_seed},
              {"law", law_to_json(config.law)}};
  j["analysis"] = {{"grid_half_extent", config.analysis.grid_half_extent},
                   {"grid_points", config.analysis.grid_points},
                   {"bandwidth", config.analysis.bandwidth},
                   {"lambda_prime", config.analysis.lambda_prime},
                   {"fit_r_lo", config.analysis.fit_r_lo},
                   {"fit_r_hi", config.analysis.fit_r_hi}};
  j["output"] = {{"dir", config.out_dir}};
  return j.dump(2);
}

}  // namespace boltzlab::cli
