#pragma once

// Replicated condition-number experiments and the regular-grid table.
//
// Work is split into units (process, replicate). A unit samples one
// pattern, computes its weights and inverse densities, then evaluates the
// condition number for every configured p on that same pattern. Units run
// on a small thread pool and a single writer appends their rows in unit
// order, so the output file is independent of scheduling.

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gensample/config.hpp"
#include "gensample/geometry.hpp"
#include "gensample/gsmatrix.hpp"
#include "gensample/io.hpp"
#include "gensample/pointproc.hpp"
#include "gensample/rng.hpp"

extern "C" void openblas_set_num_threads(int);

namespace gensample {

inline constexpr const char* kResultsFile = "results.csv";
inline constexpr const char* kMetadataFile = "metadata.json";

struct ResultRow {
  std::string process;
  int replicate = 0;
  std::uint64_t seed = 0;  // per-process stream seed; stream index = replicate
  int p = 1;
  int scale = 5;
  std::size_t points = 0;
  std::string weights;
  double delta_polar = 0.0;
  double delta_euclidean = 0.0;
  double cell_polar = 0.0;
  double cell_euclidean = 0.0;
  double condition = 0.0;
  double sigma_max = 0.0;
  double sigma_min = 0.0;
  std::string method;
  std::string status = "ok";
};

inline const std::vector<std::string>& result_columns() {
  static const std::vector<std::string> cols{
      "process",         "replicate",  "seed",           "p",         "J",         "points",
      "weights",         "delta_polar", "delta_euclidean", "cell_polar", "cell_euclidean", "condition",
      "sigma_max",       "sigma_min",  "method",         "status"};
  return cols;
}

inline std::string to_csv(const ResultRow& r) {
  return io::join({r.process, std::to_string(r.replicate), std::to_string(r.seed), std::to_string(r.p),
                   std::to_string(r.scale), std::to_string(r.points), r.weights, io::fmt(r.delta_polar),
                   io::fmt(r.delta_euclidean), io::fmt(r.cell_polar), io::fmt(r.cell_euclidean),
                   io::fmt(r.condition), io::fmt(r.sigma_max), io::fmt(r.sigma_min), r.method, r.status});
}

inline std::string method_name(CondMethod m) {
  switch (m) {
    case CondMethod::Svd: return "svd";
    case CondMethod::Gram: return "gram";
    case CondMethod::Auto: return "auto";
    case CondMethod::Iterative: return "iterative";
  }
  return "?";
}

/// Seed of the RNG family used for one process: replicate r of that process
/// draws from RngStream(process_seed(master, label), r).
inline std::uint64_t process_seed(std::uint64_t master, const std::string& label) {
  return detail::mix64(master ^ detail::fnv1a(0xCBF29CE484222325ULL, label.data(), label.size()));
}

inline PointPattern sample_process(const ProcessConfig& p, const Window& window, RngStream& rng) {
  switch (p.kind) {
    case ProcessConfig::Kind::Binomial: return sample_binomial(p.n, window, rng);
    case ProcessConfig::Kind::Poisson: return sample_poisson(p.rho, window, rng);
    case ProcessConfig::Kind::Dpp: return sample_dpp(p.dpp_spec(window.dimension), window, rng);
  }
  throw InvalidInput("unknown process kind");
}

inline std::string sanitize(std::string s) {
  for (auto& ch : s)
    if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"') ch = ';';
  return s;
}

/// Rows for one (process, replicate); `pattern_out` receives the sampled
/// pattern when non-null. Failures are recorded in the status column.
inline std::vector<ResultRow> run_unit(const ExperimentConfig& cfg, const ProcessConfig& proc, int replicate,
                                       PointPattern* pattern_out = nullptr) {
  const Window window = cfg.window();
  const std::uint64_t seed = process_seed(cfg.seed, proc.label);
  std::vector<ResultRow> rows;
  for (int p : cfg.p_values) {
    ResultRow r;
    r.process = proc.label;
    r.replicate = replicate;
    r.seed = seed;
    r.p = p;
    r.scale = cfg.scale;
    r.weights = cfg.weights;
    r.method = method_name(cfg.cond_method());
    rows.push_back(r);
  }
  auto fail_all = [&](const std::string& why) {
    for (auto& r : rows) {
      r.condition = std::numeric_limits<double>::quiet_NaN();
      r.status = "error: " + sanitize(why);
    }
    return rows;
  };
  PointPattern pattern;
  WeightedScheme scheme;
  try {
    RngStream rng(seed, static_cast<std::uint64_t>(replicate));
    pattern = sample_process(proc, window, rng);
    if (pattern_out) *pattern_out = pattern;
    for (auto& r : rows) r.points = pattern.size();
    if (pattern.empty()) return fail_all("empty pattern");
    const auto dp = inverse_density(pattern, window, NormSpec::box_polar(0.5), cfg.grid_res);
    const auto de = inverse_density(pattern, window, NormSpec::euclidean(), cfg.grid_res);
    for (auto& r : rows) {
      r.delta_polar = dp.value;
      r.cell_polar = dp.cell_diameter;
      r.delta_euclidean = de.value;
      r.cell_euclidean = de.cell_diameter;
    }
    scheme = cfg.weighted() ? voronoi_weights(pattern, window, cfg.weight_norm(), cfg.grid_res) : unit_weights(pattern);
  } catch (const std::exception& e) {
    return fail_all(e.what());
  }
  for (auto& r : rows) {
    try {
      const auto m = assemble(scheme, ScalingBasis(r.p, cfg.scale), cfg.weighted());
      const auto c = condition_number(m, cfg.cond_method());
      r.condition = c.value;
      r.sigma_max = c.sigma_max;
      r.sigma_min = c.sigma_min;
      r.method = method_name(c.method);
      r.status = c.underdetermined ? "underdetermined" : (c.infinite() ? "singular" : "ok");
    } catch (const std::exception& e) {
      r.condition = std::numeric_limits<double>::quiet_NaN();
      r.status = "error: " + sanitize(e.what());
    }
  }
  return rows;
}

/// Worker count: GENSAMPLE_THREADS if set, else the hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("GENSAMPLE_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096) throw ConfigError("GENSAMPLE_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Metadata written next to the results; it pins the configuration so a
/// resumed run cannot silently mix settings.
inline nlohmann::json experiment_metadata(const ExperimentConfig& cfg) {
  return {{"config", to_json(cfg)},
          {"design", "one pattern per (process, replicate), shared by every p"},
          {"stream_index", "replicate"},
          {"columns", result_columns()},
          {"delta_grid", "vertices of a uniform grid with grid_res cells per axis"},
          {"weight_grid", "cell centers of a uniform grid with grid_res cells per axis"}};
}

struct RunSummary {
  std::size_t units_total = 0;
  std::size_t units_resumed = 0;
  std::size_t units_run = 0;
  std::filesystem::path results;
};

namespace detail {

// Number of leading units already complete in an existing results file;
// the file is truncated to exactly those rows.
inline std::size_t recover_prefix(const std::filesystem::path& path, const ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  std::vector<std::string> lines;
  if (!std::getline(in, line) || line != io::join(result_columns())) {
    throw ConfigError(path.string() + " exists but does not look like a results file");
  }
  while (std::getline(in, line)) lines.push_back(line);
  const bool last_complete = [&] {
    in.clear();
    in.seekg(-1, std::ios::end);
    char ch = 0;
    in.get(ch);
    return ch == '\n';
  }();
  if (!last_complete && !lines.empty()) lines.pop_back();
  const std::size_t per_unit = cfg.p_values.size();
  std::size_t units = 0;
  std::size_t u = 0;
  for (const auto& proc : cfg.processes) {
    for (int rep = 0; rep < cfg.replicates; ++rep, ++u) {
      bool ok = (u + 1) * per_unit <= lines.size();
      for (std::size_t k = 0; ok && k < per_unit; ++k) {
        const auto cells = io::split(lines[u * per_unit + k]);
        ok = cells.size() == result_columns().size() && cells[0] == proc.label && cells[1] == std::to_string(rep) &&
             cells[3] == std::to_string(cfg.p_values[k]);
      }
      if (!ok) goto done;
      ++units;
    }
  }
done:
  std::string text = io::join(result_columns()) + "\n";
  for (std::size_t i = 0; i < units * per_unit; ++i) text += lines[i] + "\n";
  io::write_text(path, text);
  return units;
}

}  // namespace detail

/// Runs (or resumes) the experiment into `out_dir`. Rerunning with the same
/// configuration reproduces the results file byte for byte.
inline RunSummary run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir, int workers = 0,
                                 std::ostream* log = nullptr) {
  validate(cfg);
  std::filesystem::create_directories(out_dir / "patterns");
  const auto meta_path = out_dir / kMetadataFile;
  const auto meta = experiment_metadata(cfg);
  if (std::filesystem::exists(meta_path)) {
    std::ifstream in(meta_path);
    nlohmann::json old;
    try {
      old = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception&) {
      throw ConfigError(meta_path.string() + " is unreadable; remove it or use another output directory");
    }
    if (old != meta) throw ConfigError(out_dir.string() + " holds results for a different configuration");
  } else {
    std::filesystem::remove(out_dir / kResultsFile);
    io::write_text(meta_path, meta.dump(2) + "\n");
  }

  RunSummary summary;
  summary.results = out_dir / kResultsFile;
  summary.units_total = cfg.processes.size() * static_cast<std::size_t>(cfg.replicates);
  summary.units_resumed = detail::recover_prefix(summary.results, cfg);
  if (!std::filesystem::exists(summary.results)) io::write_text(summary.results, io::join(result_columns()) + "\n");

  const std::size_t first = summary.units_resumed, total = summary.units_total;
  if (workers <= 0) workers = worker_count();
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(1, total - first)));
  // Parallelism lives at the replicate level; keep BLAS single-threaded
  // when several replicates run at once.
  if (workers > 1) openblas_set_num_threads(1);

  std::ofstream out(summary.results, std::ios::app | std::ios::binary);
  if (!out) throw InvalidInput("cannot append to " + summary.results.string());
  std::mutex mu;
  std::map<std::size_t, std::string> ready;
  std::size_t next_write = first;
  std::atomic<std::size_t> next_unit{first};
  std::exception_ptr fatal;

  auto work = [&] {
    while (true) {
      const std::size_t u = next_unit.fetch_add(1);
      if (u >= total) return;
      const auto& proc = cfg.processes[u / static_cast<std::size_t>(cfg.replicates)];
      const int rep = static_cast<int>(u % static_cast<std::size_t>(cfg.replicates));
      std::string block;
      try {
        PointPattern pattern;
        const auto rows = run_unit(cfg, proc, rep, rep == 0 ? &pattern : nullptr);
        if (rep == 0 && !pattern.empty())
          io::write_text(out_dir / "patterns" / (proc.label + "_0.csv"), io::pattern_csv(pattern));
        for (const auto& r : rows) block += to_csv(r) + "\n";
      } catch (...) {
        std::lock_guard lock(mu);
        if (!fatal) fatal = std::current_exception();
        next_unit = total;
        return;
      }
      std::lock_guard lock(mu);
      ready.emplace(u, std::move(block));
      while (!ready.empty() && ready.begin()->first == next_write) {
        out << ready.begin()->second;
        out.flush();
        ready.erase(ready.begin());
        ++next_write;
        ++summary.units_run;
        if (log) *log << "  " << next_write << "/" << total << " units\n" << std::flush;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (fatal) std::rethrow_exception(fatal);
  return summary;
}

struct Table2Row {
  double epsilon = 1.0;
  std::size_t points = 0;
  ConditionResult condition;
};

/// The regular pattern epsilon Z^2 intersected with the window.
inline PointPattern regular_grid(double epsilon, const Window& window) {
  if (!(epsilon > 0.0)) throw InvalidInput("grid spacing must be positive");
  const auto k = static_cast<long>(std::floor(window.half_side / epsilon * (1.0 + 1e-12)));
  PointPattern p(window);
  std::vector<double> y(static_cast<std::size_t>(window.dimension));
  std::vector<long> idx(static_cast<std::size_t>(window.dimension), -k);
  while (true) {
    for (int a = 0; a < window.dimension; ++a)
      y[a] = std::clamp(static_cast<double>(idx[a]) * epsilon, -window.half_side, window.half_side);
    p.push_back(y);
    int a = 0;
    for (; a < window.dimension; ++a) {
      if (++idx[a] <= k) break;
      idx[a] = -k;
    }
    if (a == window.dimension) break;
  }
  return p;
}

/// Unit-weight condition numbers on regular grids, one row per spacing.
inline std::vector<Table2Row> reproduce_table2(const std::vector<double>& epsilons, int p, int scale,
                                               const Window& window, CondMethod method = CondMethod::Svd) {
  const ScalingBasis basis(p, scale);
  std::vector<Table2Row> rows;
  for (double eps : epsilons) {
    const PointPattern grid = regular_grid(eps, window);
    const auto m = assemble(grid, basis);
    rows.push_back({eps, grid.size(), condition_number(m, method)});
  }
  return rows;
}

inline std::string table2_csv(const std::vector<Table2Row>& rows) {
  std::string s = "epsilon,points,condition,sigma_max,sigma_min,singular\n";
  for (const auto& r : rows)
    s += io::join({io::fmt(r.epsilon), std::to_string(r.points), io::fmt(r.condition.value),
                   io::fmt(r.condition.sigma_max), io::fmt(r.condition.sigma_min),
                   r.condition.infinite() || r.condition.value > 1e12 ? "true" : "false"}) +
         "\n";
  return s;
}

}  // namespace gensample
