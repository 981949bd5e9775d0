#pragma once

// Table-1-style summary of an experiment results file, with pairwise Welch
// tests between processes and per-process Pearson tests of delta against
// the condition number.

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gensample/io.hpp"
#include "gensample/stats.hpp"

namespace gensample {

struct GroupSummary {
  std::string process;
  int p = 1;
  std::size_t finite = 0;
  std::size_t non_finite = 0;  // singular, underdetermined or failed rows
  double mean = 0.0;
  double sd = 0.0;
  double se = 0.0;
};

struct PairRow {
  int p = 1;
  stats::PairwiseComparison cmp;
};

struct CorrelationRow {
  std::string process;
  int p = 1;
  stats::Correlation corr;
};

struct Report {
  std::vector<std::string> processes;  // first-appearance order
  std::vector<int> p_values;           // ascending
  std::vector<GroupSummary> groups;
  std::vector<PairRow> pairs;
  std::vector<CorrelationRow> correlations;
  std::string delta_column;
  std::map<std::string, bool> monotone;  // mean strictly increasing in p

  const GroupSummary* group(const std::string& process, int p) const {
    for (const auto& g : groups)
      if (g.process == process && g.p == p) return &g;
    return nullptr;
  }
};

inline constexpr const char* kPairwiseMethod = "Welch t-test, Holm-adjusted within each p";

/// `delta_column` is delta_polar or delta_euclidean; the correlation uses
/// the smallest p present (Haar in the default configuration).
inline Report make_report(const io::Table& t, const std::string& delta_column = "delta_polar") {
  const auto c_proc = t.column("process"), c_p = t.column("p"), c_cond = t.column("condition"),
             c_delta = t.column(delta_column);
  Report rep;
  rep.delta_column = delta_column;
  std::map<std::pair<std::string, int>, std::vector<double>> values;
  std::map<std::pair<std::string, int>, std::vector<double>> deltas;
  std::map<std::pair<std::string, int>, std::size_t> bad;
  for (const auto& row : t.rows) {
    const std::string& proc = row[c_proc];
    const int p = std::stoi(row[c_p]);
    if (std::find(rep.processes.begin(), rep.processes.end(), proc) == rep.processes.end())
      rep.processes.push_back(proc);
    if (std::find(rep.p_values.begin(), rep.p_values.end(), p) == rep.p_values.end()) rep.p_values.push_back(p);
    const double k = io::parse_double(row[c_cond]);
    if (std::isfinite(k)) {
      values[{proc, p}].push_back(k);
      deltas[{proc, p}].push_back(io::parse_double(row[c_delta]));
    } else {
      ++bad[{proc, p}];
    }
  }
  if (rep.processes.empty()) throw InvalidInput("report: results table is empty");
  std::sort(rep.p_values.begin(), rep.p_values.end());

  for (int p : rep.p_values)
    for (const auto& proc : rep.processes) {
      GroupSummary g{proc, p, 0, bad[{proc, p}], 0.0, 0.0, 0.0};
      const auto& v = values[{proc, p}];
      g.finite = v.size();
      g.mean = g.sd = g.se = std::numeric_limits<double>::quiet_NaN();
      if (v.size() == 1) {
        g.mean = v.front();
      } else if (v.size() > 1) {
        const auto s = stats::summarize(v);
        g.mean = s.mean;
        g.sd = s.sd;
        g.se = s.se;
      }
      rep.groups.push_back(g);
    }

  for (const auto& proc : rep.processes) {
    bool mono = true;
    for (std::size_t i = 1; i < rep.p_values.size(); ++i)
      mono = mono && rep.group(proc, rep.p_values[i])->mean > rep.group(proc, rep.p_values[i - 1])->mean;
    rep.monotone[proc] = mono;
  }

  for (int p : rep.p_values) {
    std::vector<stats::Group> gs;
    for (const auto& proc : rep.processes)
      if (values[{proc, p}].size() >= 3) gs.push_back({proc, values[{proc, p}]});
    if (gs.size() < 2) continue;
    for (auto& c : stats::pairwise_welch(gs)) rep.pairs.push_back({p, std::move(c)});
  }

  const int p0 = rep.p_values.front();
  for (const auto& proc : rep.processes) {
    const auto& x = deltas[{proc, p0}];
    const auto& y = values[{proc, p0}];
    if (x.size() < 3) continue;
    try {
      rep.correlations.push_back({proc, p0, stats::pearson_test(x, y)});
    } catch (const InvalidInput&) {
      // constant delta or kappa: no correlation to report
    }
  }
  return rep;
}

inline std::string basis_label(int p) { return p == 1 ? "haar" : "db" + std::to_string(p); }

inline std::string table1_csv(const Report& r) {
  std::string s = "process,p,basis,n,non_finite,mean,sd,se\n";
  for (const auto& g : r.groups)
    s += io::join({g.process, std::to_string(g.p), basis_label(g.p), std::to_string(g.finite),
                   std::to_string(g.non_finite), io::fmt(g.mean), io::fmt(g.sd), io::fmt(g.se)}) +
         "\n";
  return s;
}

inline std::string pairwise_csv(const Report& r) {
  std::string s = "p,pair,mean_difference,statistic,df,raw_p,adjusted_p\n";
  for (const auto& row : r.pairs)
    s += io::join({std::to_string(row.p), row.cmp.first + "-" + row.cmp.second, io::fmt(row.cmp.mean_difference),
                   io::fmt(row.cmp.test.statistic), io::fmt(row.cmp.test.df), io::fmt(row.cmp.test.p_value),
                   io::fmt(row.cmp.adjusted_p)}) +
         "\n";
  return s;
}

inline std::string correlation_csv(const Report& r) {
  std::string s = "process,p,n,r,statistic,p_value\n";
  for (const auto& c : r.correlations)
    s += io::join({c.process, std::to_string(c.p), std::to_string(c.corr.n), io::fmt(c.corr.r),
                   io::fmt(c.corr.statistic), io::fmt(c.corr.p_value)}) +
         "\n";
  return s;
}

inline nlohmann::json report_json(const Report& r) {
  nlohmann::json j;
  j["pairwise_method"] = kPairwiseMethod;
  j["correlation_method"] = "Pearson product-moment, two-sided Student t";
  j["delta_column"] = r.delta_column;
  for (const auto& g : r.groups)
    j["table"].push_back({{"process", g.process}, {"p", g.p}, {"n", g.finite}, {"non_finite", g.non_finite},
                          {"mean", g.mean}, {"sd", g.sd}, {"se", g.se}});
  for (const auto& row : r.pairs)
    j["pairwise"].push_back({{"p", row.p}, {"first", row.cmp.first}, {"second", row.cmp.second},
                             {"mean_difference", row.cmp.mean_difference}, {"statistic", row.cmp.test.statistic},
                             {"df", row.cmp.test.df}, {"raw_p", row.cmp.test.p_value},
                             {"adjusted_p", row.cmp.adjusted_p}});
  for (const auto& c : r.correlations)
    j["correlation"].push_back({{"process", c.process}, {"p", c.p}, {"n", c.corr.n}, {"r", c.corr.r},
                                {"statistic", c.corr.statistic}, {"p_value", c.corr.p_value}});
  for (const auto& [proc, mono] : r.monotone) j["monotone_in_p"][proc] = mono;
  return j;
}

inline std::string report_text(const Report& r) {
  std::ostringstream o;
  char buf[64];
  o << "Mean condition number (standard error) by basis and process\n\n";
  o << "basis ";
  for (const auto& proc : r.processes) {
    std::snprintf(buf, sizeof buf, "%22s", proc.c_str());
    o << buf;
  }
  o << "\n";
  for (int p : r.p_values) {
    std::snprintf(buf, sizeof buf, "%-6s", basis_label(p).c_str());
    o << buf;
    for (const auto& proc : r.processes) {
      const auto* g = r.group(proc, p);
      std::snprintf(buf, sizeof buf, "%13.1f (%6.1f)", g->mean, g->se);
      o << buf;
      if (g->non_finite) o << " [" << g->non_finite << " non-finite]";
    }
    o << "\n";
  }
  o << "\nPairwise comparisons (" << kPairwiseMethod << ")\n";
  for (const auto& row : r.pairs) {
    std::snprintf(buf, sizeof buf, "  %-6s", basis_label(row.p).c_str());
    o << buf << row.cmp.first << " - " << row.cmp.second;
    std::snprintf(buf, sizeof buf, ": diff %.3g, t %.3f, adjusted p %.3g\n", row.cmp.mean_difference,
                  row.cmp.test.statistic, row.cmp.adjusted_p);
    o << buf;
  }
  o << "\nCorrelation of " << r.delta_column << " with the condition number\n";
  for (const auto& c : r.correlations) {
    std::snprintf(buf, sizeof buf, ": r %.4f, p %.3g (n = %zu)\n", c.corr.r, c.corr.p_value, c.corr.n);
    o << "  " << c.process << " (" << basis_label(c.p) << ")" << buf;
  }
  return o.str();
}

inline void write_report(const Report& r, const std::filesystem::path& dir) {
  io::write_text(dir / "table1.csv", table1_csv(r));
  io::write_text(dir / "pairwise.csv", pairwise_csv(r));
  io::write_text(dir / "correlation.csv", correlation_csv(r));
  io::write_text(dir / "report.json", report_json(r).dump(2) + "\n");
  io::write_text(dir / "report.txt", report_text(r));
}

}  // namespace gensample
