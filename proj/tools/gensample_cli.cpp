// gensample command-line front end.
//
// Exit codes: 0 success, 2 configuration or input error, 3 numerical
// failure, 1 anything else.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gensample/gensample.hpp"

namespace fs = std::filesystem;
using namespace gensample;
using nlohmann::json;

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string scale = "paper";
  std::string weights;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--config", f.config_path, "JSON configuration file")->check(CLI::ExistingFile);
  app->add_option("--seed", f.seed, "master seed (u64)");
  app->add_option("--out", f.out, "output directory");
  app->add_option("--scale", f.scale, "built-in profile")->check(CLI::IsMember({"paper", "ci"}));
  app->add_option("--weights", f.weights, "Voronoi weight norm")->check(CLI::IsMember({"polar", "euclidean", "unit"}));
}

ExperimentConfig load_config(const CommonFlags& f) {
  ExperimentConfig cfg = profile_by_name(f.scale);
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = config_from_string(ss.str(), cfg);
  }
  if (f.seed) cfg.seed = *f.seed;
  if (!f.out.empty()) cfg.out = f.out;
  if (!f.weights.empty()) cfg.weights = f.weights;
  validate(cfg);
  return cfg;
}

const ProcessConfig& find_process(const ExperimentConfig& cfg, const std::string& label) {
  for (const auto& p : cfg.processes)
    if (p.label == label) return p;
  throw ConfigError("no process labelled '" + label + "' in the configuration");
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json condition_json(const ConditionResult& c) {
  return {{"condition", io::fmt(c.value)},   {"sigma_max", c.sigma_max}, {"sigma_min", c.sigma_min},
          {"method", method_name(c.method)}, {"underdetermined", c.underdetermined}};
}

std::string singular_csv(const ConditionResult& c) {
  std::string s = "index,singular_value\n";
  for (std::size_t i = 0; i < c.singular_values.size(); ++i)
    s += std::to_string(i) + "," + io::fmt(c.singular_values[i]) + "\n";
  return s;
}

NormSpec norm_named(const std::string& name) {
  return name == "euclidean" ? NormSpec::euclidean() : NormSpec::box_polar(0.5);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier sampling schemes, wavelet change-of-basis matrices and their condition numbers"};
  app.require_subcommand(1);

  CommonFlags common;

  // simulate
  auto* sim = app.add_subcommand("simulate", "sample one point-pattern realization");
  add_common(sim, common);
  std::string sim_process = "dpp";
  int sim_replicate = 0;
  sim->add_option("--process", sim_process, "process label from the configuration");
  sim->add_option("--replicate", sim_replicate, "stream index")->check(CLI::NonNegativeNumber);

  // weights
  auto* wts = app.add_subcommand("weights", "Voronoi weights of a pattern");
  add_common(wts, common);
  std::string points_path;
  int grid_res = 0;
  wts->add_option("--points", points_path, "pattern CSV")->required()->check(CLI::ExistingFile);
  wts->add_option("--grid-res", grid_res, "cells per axis (default from config)");

  // density
  auto* den = app.add_subcommand("density", "grid estimate of the inverse density");
  add_common(den, common);
  den->add_option("--points", points_path, "pattern CSV")->required()->check(CLI::ExistingFile);
  den->add_option("--grid-res", grid_res, "cells per axis (default from config)");

  // cond
  auto* cond = app.add_subcommand("cond", "condition number of the change-of-basis matrix");
  add_common(cond, common);
  int cond_p = 1;
  std::optional<int> cond_j;
  std::string cond_method, export_path, sv_path;
  cond->add_option("--points", points_path, "pattern CSV (weights computed per --weights)")
      ->check(CLI::ExistingFile);
  std::string weights_path;
  cond->add_option("--weights-file", weights_path, "weights CSV as written by 'weights'")->check(CLI::ExistingFile);
  cond->add_option("-p,--vanishing-moments", cond_p, "Daubechies order (1 = Haar)");
  cond->add_option("-J,--level", cond_j, "scale J (default from config)");
  cond->add_option("--method", cond_method, "svd, gram, auto or iterative")
      ->check(CLI::IsMember({"svd", "gram", "auto", "iterative"}));
  cond->add_option("--export-matrix", export_path, "write the matrix in binary form");
  cond->add_option("--singular-values", sv_path, "write singular values as CSV");
  cond->add_option("--grid-res", grid_res, "Voronoi cells per axis (default from config)");

  // bound
  auto* bnd = app.add_subcommand("bound", "Poisson lower bound on P(delta < 1/4)");
  add_common(bnd, common);
  int bound_d = 2;
  double bound_rho = 10.0, bound_volume = 1.0;
  bnd->add_option("-d,--dimension", bound_d)->check(CLI::PositiveNumber);
  bnd->add_option("--rho", bound_rho)->check(CLI::PositiveNumber);
  bnd->add_option("--volume", bound_volume)->check(CLI::PositiveNumber);

  // mc-bound
  auto* mc = app.add_subcommand("mc-bound", "Monte Carlo estimate of P(delta < 1/4) for Poisson patterns");
  add_common(mc, common);
  int mc_reps = 500, mc_grid = 256;
  double mc_half = 0.5;
  mc->add_option("-d,--dimension", bound_d)->check(CLI::PositiveNumber);
  mc->add_option("--rho", bound_rho)->check(CLI::PositiveNumber);
  mc->add_option("--half-side", mc_half, "half side of the box K")->check(CLI::PositiveNumber);
  mc->add_option("--replicates", mc_reps)->check(CLI::PositiveNumber);
  mc->add_option("--grid-res", mc_grid)->check(CLI::Range(2, 1 << 20));

  auto* exp = app.add_subcommand("experiment", "run (or resume) the replicated experiment");
  add_common(exp, common);

  auto* t2 = app.add_subcommand("table2", "condition numbers on regular grids epsilon Z^2");
  add_common(t2, common);

  auto* rep = app.add_subcommand("report", "summarize an experiment results directory");
  add_common(rep, common);

  auto* plt = app.add_subcommand("plot", "write SVG figures for an experiment results directory");
  add_common(plt, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ExperimentConfig cfg = load_config(common);
    const fs::path out = cfg.out;
    const Window window = cfg.window();
    const int res = grid_res > 0 ? grid_res : cfg.grid_res;

    if (sim->parsed()) {
      const auto& proc = find_process(cfg, sim_process);
      RngStream rng(process_seed(cfg.seed, proc.label), static_cast<std::uint64_t>(sim_replicate));
      const auto pattern = sample_process(proc, window, rng);
      const auto path = out / "patterns" / (proc.label + "_" + std::to_string(sim_replicate) + ".csv");
      io::write_text(path, io::pattern_csv(pattern));
      print_json({{"process", proc.label}, {"replicate", sim_replicate}, {"points", pattern.size()},
                  {"file", path.string()}});
    } else if (wts->parsed()) {
      const auto pattern = io::read_pattern(points_path, window);
      const auto scheme =
          cfg.weighted() ? voronoi_weights(pattern, window, cfg.weight_norm(), res) : unit_weights(pattern);
      const auto path = out / "weights.csv";
      io::write_text(path, io::weights_csv(scheme));
      double total = 0.0;
      for (double w : scheme.weights) total += w;
      print_json({{"points", pattern.size()}, {"norm", cfg.weights}, {"weight_sum", total},
                  {"window_volume", window.volume()}, {"file", path.string()}});
    } else if (den->parsed()) {
      const auto pattern = io::read_pattern(points_path, window);
      json j{{"points", pattern.size()}, {"grid_res", res}};
      for (const char* name : {"polar", "euclidean"}) {
        const auto d = inverse_density(pattern, window, norm_named(name), res);
        j[name] = {{"delta", d.value}, {"cell_diameter", d.cell_diameter}, {"below_quarter", d.certifies_below(0.25)}};
      }
      io::write_text(out / "density.json", j.dump(2) + "\n");
      print_json(j);
    } else if (cond->parsed()) {
      if (points_path.empty() == weights_path.empty())
        throw ConfigError("cond needs exactly one of --points or --weights-file");
      WeightedScheme scheme;
      bool weighted = true;
      if (!weights_path.empty()) {
        scheme = io::read_weights(weights_path, window);
      } else {
        const auto pattern = io::read_pattern(points_path, window);
        weighted = cfg.weighted();
        scheme = weighted ? voronoi_weights(pattern, window, cfg.weight_norm(), res) : unit_weights(pattern);
      }
      const ScalingBasis basis(cond_p, cond_j.value_or(cfg.scale));
      const auto m = assemble(scheme, basis, weighted);
      if (!cond_method.empty()) cfg.condition = cond_method;
      const auto c = condition_number(m, cfg.condition == "auto" && !sv_path.empty() ? CondMethod::Svd
                                                                                       : cfg.cond_method());
      if (!export_path.empty()) write_matrix_binary(m, export_path);
      if (!sv_path.empty()) io::write_text(sv_path, singular_csv(c));
      json j = condition_json(c);
      j["basis"] = basis.name();
      j["J"] = basis.scale;
      j["rows"] = m.rows();
      j["columns"] = m.cols();
      j["weighted"] = weighted;
      print_json(j);
    } else if (bnd->parsed()) {
      const auto b = poisson_density_bound(bound_d, bound_rho, bound_volume);
      print_json({{"d", bound_d},
                  {"rho", bound_rho},
                  {"volume", bound_volume},
                  {"lower_bound", b.value},
                  {"vacuous", b.value <= 0.0},
                  {"simplex_factor", b.simplex_factor},
                  {"incomplete_gamma", b.incomplete_gamma},
                  {"radial_integral", b.radial_integral},
                  {"volume_term", b.volume_term}});
    } else if (mc->parsed()) {
      const Window k(mc_half, bound_d);
      const auto est = mc_density_probability(bound_d, bound_rho, k, mc_reps, mc_grid, cfg.seed);
      std::string csv = "replicate,count,delta,event\n";
      for (std::size_t i = 0; i < est.replicates.size(); ++i) {
        const auto& r = est.replicates[i];
        csv += std::to_string(i) + "," + std::to_string(r.points) + "," + io::fmt(r.delta) + "," +
               (r.event ? "1" : "0") + "\n";
      }
      io::write_text(out / "mc_bound.csv", csv);
      const auto b = poisson_density_bound(bound_d, bound_rho, k.volume());
      print_json({{"d", bound_d},
                  {"rho", bound_rho},
                  {"volume", k.volume()},
                  {"replicates", mc_reps},
                  {"frequency", est.frequency},
                  {"std_error", est.std_error},
                  {"lower_bound", b.value},
                  {"consistent", est.frequency + 3.0 * est.std_error >= b.value}});
    } else if (exp->parsed()) {
      const auto s = run_experiment(cfg, out, 0, &std::cerr);
      print_json({{"results", s.results.string()},
                  {"units", s.units_total},
                  {"resumed", s.units_resumed},
                  {"ran", s.units_run}});
    } else if (t2->parsed()) {
      const auto rows = reproduce_table2(cfg.table2_epsilons, 1, cfg.scale, window, CondMethod::Svd);
      io::write_text(out / "table2.csv", table2_csv(rows));
      json j = json::array();
      for (const auto& r : rows)
        j.push_back({{"epsilon", r.epsilon},
                     {"points", r.points},
                     {"condition", io::fmt(r.condition.value)},
                     {"singular", r.condition.infinite() || r.condition.value > 1e12}});
      io::write_text(out / "table2.json", j.dump(2) + "\n");
      print_json(j);
    } else if (rep->parsed()) {
      const auto table = io::read_csv(out / kResultsFile);
      const std::string delta = cfg.weights == "euclidean" ? "delta_euclidean" : "delta_polar";
      const auto r = make_report(table, delta);
      write_report(r, out);
      std::cout << report_text(r);
    } else if (plt->parsed()) {
      const auto table = io::read_csv(out / kResultsFile);
      const auto c_proc = table.column("process"), c_p = table.column("p"), c_cond = table.column("condition");
      const auto c_delta = table.column(cfg.weights == "euclidean" ? "delta_euclidean" : "delta_polar");
      int p0 = 1 << 30;
      for (const auto& row : table.rows) p0 = std::min(p0, std::stoi(row[c_p]));
      std::vector<plot::Series> series;
      for (const auto& proc : cfg.processes) series.push_back({proc.label, {}, {}});
      for (const auto& row : table.rows) {
        if (std::stoi(row[c_p]) != p0) continue;
        for (auto& s : series)
          if (s.label == row[c_proc]) {
            s.x.push_back(io::parse_double(row[c_delta]));
            s.y.push_back(io::parse_double(row[c_cond]));
          }
      }
      const fs::path figs = out / "figures";
      std::vector<std::string> written;
      plot::Axes ax;
      ax.title = "Inverse density versus condition number (" + basis_label(p0) + ")";
      ax.xlabel = "inverse density";
      ax.ylabel = "condition number";
      io::write_text(figs / "density_condition.svg", plot::scatter_svg(series, ax));
      written.push_back((figs / "density_condition.svg").string());
      for (const auto& proc : cfg.processes) {
        const auto path = out / "patterns" / (proc.label + "_0.csv");
        if (!fs::exists(path)) continue;
        const auto pattern = io::read_pattern(path, window);
        const auto svg_path = figs / ("pattern_" + proc.label + ".svg");
        io::write_text(svg_path, plot::pattern_svg(pattern, proc.label + " realization"));
        written.push_back(svg_path.string());
      }
      print_json({{"figures", written}});
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
