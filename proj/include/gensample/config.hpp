#pragma once

// Experiment configuration: JSON load/save with unknown-key rejection, the
// two built-in profiles, and cross-field validation.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "gensample/error.hpp"
#include "gensample/geometry.hpp"
#include "gensample/gsmatrix.hpp"
#include "gensample/pointproc.hpp"
#include "gensample/wavelets.hpp"

namespace gensample {

struct ProcessConfig {
  enum class Kind { Binomial, Poisson, Dpp };
  Kind kind = Kind::Binomial;
  std::string label;
  std::size_t n = 0;  // binomial
  double rho = 0.0;   // poisson, dpp
  double nu = 10.0;   // dpp
  double alpha = 0.0; // dpp; 0 selects alpha_max

  static std::string kind_name(Kind k) {
    switch (k) {
      case Kind::Binomial: return "binomial";
      case Kind::Poisson: return "poisson";
      case Kind::Dpp: return "dpp";
    }
    return "?";
  }
  double expected_points(const Window& w) const { return kind == Kind::Binomial ? double(n) : rho * w.volume(); }
  DppSpec dpp_spec(int dimension) const {
    return {rho, nu, alpha > 0.0 ? alpha : dpp_alpha_max(rho, nu, dimension), dimension};
  }
};

struct ExperimentConfig {
  std::string profile = "paper";
  double half_side = 64.0;
  int scale = 5;  // J
  std::vector<int> p_values{1, 2, 3, 4, 5, 6, 7};
  std::vector<ProcessConfig> processes;
  int replicates = 100;
  std::uint64_t seed = 2017;
  int grid_res = 1024;
  std::string weights = "polar";  // polar | euclidean | unit
  std::string condition = "auto"; // svd | gram | auto | iterative
  std::vector<double> table2_epsilons{1.0, 1.25, 1.5, 1.75, 2.0};
  std::string out = "results";

  Window window() const { return Window(half_side, 2); }

  /// Norm used for the Voronoi weights (and for the headline delta).
  NormSpec weight_norm() const { return weights == "euclidean" ? NormSpec::euclidean() : NormSpec::box_polar(0.5); }
  bool weighted() const { return weights != "unit"; }

  CondMethod cond_method() const {
    if (condition == "svd") return CondMethod::Svd;
    if (condition == "gram") return CondMethod::Gram;
    if (condition == "iterative") return CondMethod::Iterative;
    return CondMethod::Auto;
  }
};

inline std::vector<ProcessConfig> default_processes(std::size_t n, double rho) {
  return {{ProcessConfig::Kind::Binomial, "binomial", n, 0.0, 10.0, 0.0},
          {ProcessConfig::Kind::Poisson, "poisson", 0, rho, 10.0, 0.0},
          {ProcessConfig::Kind::Dpp, "dpp", 0, rho, 10.0, 0.0}};
}

inline ExperimentConfig paper_profile() {
  ExperimentConfig c;
  c.processes = default_processes(4096, 0.25);
  return c;
}

/// Minutes-scale profile: window [-16,16]^2, J = 3, 256 expected points.
inline ExperimentConfig ci_profile() {
  ExperimentConfig c;
  c.profile = "ci";
  c.half_side = 16.0;
  c.scale = 3;
  c.p_values = {1, 2};
  c.processes = default_processes(256, 0.25);
  c.replicates = 20;
  c.grid_res = 256;
  c.out = "results-ci";
  return c;
}

inline ExperimentConfig profile_by_name(const std::string& name) {
  if (name == "paper") return paper_profile();
  if (name == "ci") return ci_profile();
  throw ConfigError("unknown scale profile '" + name + "' (expected paper or ci)");
}

inline void validate(const ExperimentConfig& c) {
  if (!(c.half_side > 0.0) || !std::isfinite(c.half_side)) throw ConfigError("half_side must be positive");
  if (c.scale < 1 || c.scale > 12) throw ConfigError("J must be in 1..12");
  if (c.p_values.empty()) throw ConfigError("p list is empty");
  std::set<int> seen;
  for (int p : c.p_values) {
    if (!seen.insert(p).second) throw ConfigError("p list has duplicates");
    try {
      ScalingBasis(p, c.scale);
    } catch (const InvalidInput& e) {
      throw ConfigError(e.what());
    }
  }
  if (c.replicates < 1) throw ConfigError("replicates must be >= 1");
  if (c.grid_res < 2) throw ConfigError("grid_res must be >= 2");
  if (c.weights != "polar" && c.weights != "euclidean" && c.weights != "unit")
    throw ConfigError("weights must be polar, euclidean or unit");
  if (c.condition != "svd" && c.condition != "gram" && c.condition != "auto" && c.condition != "iterative")
    throw ConfigError("condition must be svd, gram, auto or iterative");
  if (c.processes.empty()) throw ConfigError("no processes configured");
  std::set<std::string> labels;
  for (const auto& p : c.processes) {
    if (p.label.empty() || p.label.find_first_of(",\n\"/\\") != std::string::npos)
      throw ConfigError("process label must be nonempty and free of commas, quotes and slashes");
    if (!labels.insert(p.label).second) throw ConfigError("duplicate process label '" + p.label + "'");
    switch (p.kind) {
      case ProcessConfig::Kind::Binomial:
        if (p.n == 0) throw ConfigError(p.label + ": binomial n must be positive");
        break;
      case ProcessConfig::Kind::Poisson:
        if (!(p.rho > 0.0)) throw ConfigError(p.label + ": rho must be positive");
        break;
      case ProcessConfig::Kind::Dpp:
        if (!(p.rho > 0.0) || !(p.nu > 0.0)) throw ConfigError(p.label + ": rho and nu must be positive");
        try {
          validate_dpp(p.dpp_spec(2));
        } catch (const InvalidInput& e) {
          throw ConfigError(p.label + ": " + e.what());
        }
        break;
    }
    if (p.expected_points(c.window()) > kMaxExpectedPoints) throw ConfigError(p.label + ": too many points");
  }
  for (double e : c.table2_epsilons)
    if (!(e > 0.0) || !std::isfinite(e)) throw ConfigError("table2 epsilons must be positive");
  if (c.out.empty()) throw ConfigError("out must be a nonempty path");
}

namespace detail {

inline void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
T get(const nlohmann::json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

}  // namespace detail

inline nlohmann::json to_json(const ProcessConfig& p) {
  nlohmann::json j{{"kind", ProcessConfig::kind_name(p.kind)}, {"label", p.label}};
  if (p.kind == ProcessConfig::Kind::Binomial) j["n"] = p.n;
  if (p.kind != ProcessConfig::Kind::Binomial) j["rho"] = p.rho;
  if (p.kind == ProcessConfig::Kind::Dpp) {
    j["nu"] = p.nu;
    if (p.alpha > 0.0)
      j["alpha"] = p.alpha;
    else
      j["alpha"] = "max";
  }
  return j;
}

inline nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json procs = nlohmann::json::array();
  for (const auto& p : c.processes) procs.push_back(to_json(p));
  return {{"profile", c.profile},     {"half_side", c.half_side}, {"J", c.scale},
          {"p", c.p_values},          {"processes", procs},       {"replicates", c.replicates},
          {"seed", c.seed},           {"grid_res", c.grid_res},   {"weights", c.weights},
          {"condition", c.condition}, {"table2_epsilons", c.table2_epsilons}, {"out", c.out}};
}

inline ProcessConfig process_from_json(const nlohmann::json& j) {
  detail::reject_unknown(j, {"kind", "label", "n", "rho", "nu", "alpha"}, "process");
  ProcessConfig p;
  const auto kind = detail::get<std::string>(j, "kind", "process");
  if (kind == "binomial") {
    p.kind = ProcessConfig::Kind::Binomial;
    p.n = detail::get<std::size_t>(j, "n", "process");
  } else if (kind == "poisson") {
    p.kind = ProcessConfig::Kind::Poisson;
    p.rho = detail::get<double>(j, "rho", "process");
  } else if (kind == "dpp") {
    p.kind = ProcessConfig::Kind::Dpp;
    p.rho = detail::get<double>(j, "rho", "process");
    if (j.contains("nu")) p.nu = detail::get<double>(j, "nu", "process");
    if (j.contains("alpha")) {
      const auto& a = j.at("alpha");
      if (a.is_string() && a.get<std::string>() == "max")
        p.alpha = 0.0;
      else if (a.is_number())
        p.alpha = a.get<double>();
      else
        throw ConfigError("process.alpha must be a number or \"max\"");
    }
  } else {
    throw ConfigError("unknown process kind '" + kind + "'");
  }
  for (const char* key : {"n", "rho", "nu", "alpha"}) {
    const bool allowed = (p.kind == ProcessConfig::Kind::Binomial && std::string(key) == "n") ||
                         (p.kind == ProcessConfig::Kind::Poisson && std::string(key) == "rho") ||
                         (p.kind == ProcessConfig::Kind::Dpp && std::string(key) != "n");
    if (j.contains(key) && !allowed) throw ConfigError(std::string("key '") + key + "' does not apply to " + kind);
  }
  p.label = j.contains("label") ? detail::get<std::string>(j, "label", "process") : kind;
  return p;
}

/// Keys present in `j` override `base` (a profile); anything unknown is an error.
inline ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = paper_profile()) {
  detail::reject_unknown(j,
                         {"profile", "half_side", "J", "p", "processes", "replicates", "seed", "grid_res", "weights",
                          "condition", "table2_epsilons", "out"},
                         "config");
  const std::string w = "config";
  if (j.contains("profile")) {
    auto profile = profile_by_name(detail::get<std::string>(j, "profile", w));
    base = profile;
  }
  ExperimentConfig c = base;
  if (j.contains("half_side")) c.half_side = detail::get<double>(j, "half_side", w);
  if (j.contains("J")) c.scale = detail::get<int>(j, "J", w);
  if (j.contains("p")) c.p_values = detail::get<std::vector<int>>(j, "p", w);
  if (j.contains("replicates")) c.replicates = detail::get<int>(j, "replicates", w);
  if (j.contains("seed")) c.seed = detail::get<std::uint64_t>(j, "seed", w);
  if (j.contains("grid_res")) c.grid_res = detail::get<int>(j, "grid_res", w);
  if (j.contains("weights")) c.weights = detail::get<std::string>(j, "weights", w);
  if (j.contains("condition")) c.condition = detail::get<std::string>(j, "condition", w);
  if (j.contains("table2_epsilons")) c.table2_epsilons = detail::get<std::vector<double>>(j, "table2_epsilons", w);
  if (j.contains("out")) c.out = detail::get<std::string>(j, "out", w);
  if (j.contains("processes")) {
    if (!j.at("processes").is_array()) throw ConfigError("config.processes must be an array");
    c.processes.clear();
    for (const auto& p : j.at("processes")) c.processes.push_back(process_from_json(p));
  }
  validate(c);
  return c;
}

inline ExperimentConfig config_from_string(const std::string& text, ExperimentConfig base = paper_profile()) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j, std::move(base));
}

}  // namespace gensample
