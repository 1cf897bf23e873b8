#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cplxmine/comparator.hpp"
#include "cplxmine/dataset.hpp"
#include "cplxmine/miner.hpp"
#include "cplxmine/trend.hpp"
#include "cplxmine/types.hpp"

namespace cplxmine {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Analysis { Transform, Mine, Trend, All };
enum class Scope { General, Organic, Semidetached, Embedded, Each };
enum class OutputFormat { Csv, Text };

/// Scopes above this many rules get a divergence warning.
inline constexpr std::size_t kDivergentRuleCount = 20;

struct PipelineConfig {
  std::string dataset_path;
  Analysis analysis = Analysis::All;
  Scope scope = Scope::Each;
  MiningConfig mining;
  Engine engine = Engine::Optimized;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> output_path;     // standard output when absent
  std::optional<std::string> plot_data_path;  // JSON distribution data for charting
};

struct TableDiagnostics {
  std::size_t pairs_generated = 0;
  std::size_t pivot_zero_pruned = 0;
  std::size_t pivot_survivors = 0;
  std::size_t antecedent_retained = 0;
};

struct ScopeReport {
  std::string name;
  std::optional<DevMode> mode;
  TableDiagnostics diagnostics;
  std::optional<ComparisonTable> transform;
  std::optional<std::vector<AssociationRule>> rules;
  std::optional<TrendAnalysis> trend;
  std::vector<std::string> warnings;
};

struct RunReport {
  std::string dataset;
  std::size_t project_count = 0;
  Analysis analysis = Analysis::All;
  std::vector<ScopeReport> scopes;

  const ScopeReport* find(std::string_view name) const {
    for (const auto& s : scopes)
      if (s.name == name) return &s;
    return nullptr;
  }
};

inline bool runs_transform(Analysis a) { return a == Analysis::Transform || a == Analysis::All; }
inline bool runs_mining(Analysis a) { return a == Analysis::Mine || a == Analysis::All; }
inline bool runs_trend(Analysis a) { return a == Analysis::Trend || a == Analysis::All; }

inline std::vector<std::optional<DevMode>> expand_scope(Scope scope) {
  switch (scope) {
    case Scope::General: return {std::nullopt};
    case Scope::Organic: return {DevMode::Organic};
    case Scope::Semidetached: return {DevMode::Semidetached};
    case Scope::Embedded: return {DevMode::Embedded};
    case Scope::Each:
      return {std::nullopt, DevMode::Organic, DevMode::Semidetached, DevMode::Embedded};
  }
  return {};
}

inline ScopeReport run_scope(const ProjectSet& projects, std::optional<DevMode> mode,
                             const PipelineConfig& config) {
  ScopeReport report;
  report.name = mode ? std::string(to_string(*mode)) : "general";
  report.mode = mode;

  if (runs_transform(config.analysis) || runs_mining(config.analysis)) {
    const auto scoped = mode ? filter_by_mode(projects, *mode) : projects;
    auto table =
        build_comparison_table(scoped, mode.has_value(), config.mining.antecedent.pivot());
    report.diagnostics.pairs_generated = table.pairs_generated;
    report.diagnostics.pivot_zero_pruned = table.pivot_zero_pruned;
    report.diagnostics.pivot_survivors = table.size();

    if (runs_mining(config.analysis)) {
      const auto filtered = apply_antecedent(table, config.mining.antecedent);
      report.diagnostics.antecedent_retained = filtered.size();
      auto rules = mine(filtered, config.mining, config.engine, &report.warnings);
      if (rules.size() > kDivergentRuleCount)
        report.warnings.push_back(std::to_string(rules.size()) + " rules exceed " +
                                  std::to_string(kDivergentRuleCount) +
                                  "; the scope likely lacks data and the rules are divergent");
      report.rules = std::move(rules);
    }
    if (runs_transform(config.analysis)) report.transform = std::move(table);
  }

  if (runs_trend(config.analysis)) report.trend = analyze_trends(projects, mode);
  return report;
}

/// Runs every requested stage over `projects` for each scope, in the
/// order general, organic, semidetached, embedded.
inline RunReport run_pipeline(const ProjectSet& projects, const PipelineConfig& config) {
  candidate_attributes(config.mining);  // validates thresholds and candidates
  if (config.plot_data_path && !runs_trend(config.analysis))
    throw ConfigError("plot data requires the trend analysis");

  RunReport report;
  report.dataset = config.dataset_path;
  report.project_count = projects.size();
  report.analysis = config.analysis;
  for (auto mode : expand_scope(config.scope))
    report.scopes.push_back(run_scope(projects, mode, config));
  return report;
}

inline RunReport run_pipeline(const PipelineConfig& config) {
  return run_pipeline(load_dataset(config.dataset_path), config);
}

namespace detail {

inline void write_diagnostics(std::ostream& out, const TableDiagnostics& d) {
  out << "pairs_generated=" << d.pairs_generated << " pivot_zero_pruned=" << d.pivot_zero_pruned
      << " pivot_survivors=" << d.pivot_survivors
      << " antecedent_retained=" << d.antecedent_retained;
}

inline void emit_csv(const RunReport& report, std::ostream& out) {
  out << "# dataset: " << report.dataset << " (" << report.project_count << " projects)\n";
  for (const auto& s : report.scopes) {
    out << "\n# scope: " << s.name << '\n';
    if (s.transform || s.rules) {
      out << "# diagnostics: ";
      write_diagnostics(out, s.diagnostics);
      out << '\n';
    }
    if (s.transform) write_table_csv(out, *s.transform);
    if (s.rules) write_rules_csv(out, *s.rules);
    if (s.trend) write_trend_csv(out, *s.trend);
    for (const auto& w : s.warnings) out << "# warning: " << w << '\n';
  }
}

inline void emit_text(const RunReport& report, std::ostream& out) {
  out << "dataset: " << report.dataset << " (" << report.project_count << " projects)\n";
  for (const auto& s : report.scopes) {
    out << "\n== " << s.name << " ==\n";
    if (s.transform || s.rules) {
      out << "diagnostics: ";
      write_diagnostics(out, s.diagnostics);
      out << '\n';
    }
    if (s.transform) {
      out << "comparison table (" << s.transform->size() << " records):\n";
      write_table_csv(out, *s.transform);
    }
    if (s.rules) {
      const auto& rules = *s.rules;
      out << "rules: " << rules.size() << '\n';
      if (!rules.empty()) out << "  IF " << rules.front().antecedent.to_string() << " THEN\n";
      std::size_t id = 0;
      for (const auto& r : rules)
        out << "  " << ++id << ". " << r.consequent.to_string() << "  " << r.appearance << '/'
            << r.applied << '=' << format_pct(r.appearance, r.applied)
            << "%  frequency=" << r.appearance << '/' << r.total << '='
            << format_pct(r.appearance, r.total) << "%\n";
    }
    if (s.trend) {
      out << "effort change by complexity scale pair:\n";
      for (const auto& a : s.trend->pairs)
        out << "  " << a.pair.label() << "  projects=" << a.subset_size << "  +=" << a.counts.plus
            << " -=" << a.counts.minus << " 0=" << a.counts.zero << "  " << to_string(a.trend)
            << '\n';
      out << "turning points: " << describe_turning_points(s.trend->points) << '\n';
      out << "decreasing intervals: " << describe_intervals(s.trend->decreasing_intervals)
          << '\n';
    }
    for (const auto& w : s.warnings) out << "warning: " << w << '\n';
  }
}

}  // namespace detail

/// Serializes the report. Output depends only on the report contents.
inline void emit_report(const RunReport& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv)
    detail::emit_csv(report, out);
  else
    detail::emit_text(report, out);
}

inline void emit_report(const RunReport& report, OutputFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  emit_report(report, format, out);
  if (!out.flush()) throw IoError("write failed for '" + path + "'");
}

/// Pair label -> sign counts, per scope that ran the trend analysis.
inline nlohmann::ordered_json plot_data(const RunReport& report) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& s : report.scopes) {
    if (!s.trend) continue;
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& a : s.trend->pairs)
      pairs.push_back({{"pair", a.pair.label()},
                       {"plus", a.counts.plus},
                       {"minus", a.counts.minus},
                       {"zero", a.counts.zero},
                       {"trend", std::string(to_string(a.trend))}});
    doc[s.name] = std::move(pairs);
  }
  return doc;
}

inline void write_plot_data(const RunReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << plot_data(report).dump(2) << '\n';
  if (!out.flush()) throw IoError("write failed for '" + path + "'");
}

}  // namespace cplxmine
