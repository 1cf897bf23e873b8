#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cplxmine/comparator.hpp"
#include "cplxmine/dataset.hpp"
#include "cplxmine/types.hpp"

namespace cplxmine {

/// Two consecutive complexity ratings.
struct ScalePair {
  Rating lower;
  Rating upper;

  std::string label() const {
    return std::string(to_string(lower)) + "-" + std::string(to_string(upper));
  }

  friend bool operator==(const ScalePair&, const ScalePair&) = default;
};

inline constexpr std::array<ScalePair, 5> kScalePairs = {{{Rating::VL, Rating::L},
                                                          {Rating::L, Rating::N},
                                                          {Rating::N, Rating::H},
                                                          {Rating::H, Rating::VH},
                                                          {Rating::VH, Rating::XH}}};

struct SignCounts {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;

  std::size_t total() const { return plus + minus + zero; }

  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

enum class Trend { Increasing, Decreasing, Indeterminate };

constexpr std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::Increasing: return "increasing";
    case Trend::Decreasing: return "decreasing";
    case Trend::Indeterminate: return "indeterminate";
  }
  return "";
}

enum class TurningKind { Obverse, Reverse, Bearing };

constexpr std::string_view to_string(TurningKind k) {
  switch (k) {
    case TurningKind::Obverse: return "obverse";
    case TurningKind::Reverse: return "reverse";
    case TurningKind::Bearing: return "bearing";
  }
  return "";
}

struct TurningPoint {
  Rating scale;
  TurningKind kind;

  friend bool operator==(const TurningPoint&, const TurningPoint&) = default;
};

struct ScalePairAnalysis {
  ScalePair pair;
  std::size_t subset_size = 0;
  SignCounts counts;
  Trend trend = Trend::Indeterminate;
};

/// Projects whose CPLX is either rating of each pair. A project appears in
/// up to two subsets.
inline std::vector<std::pair<ScalePair, ProjectSet>> scale_pair_subsets(
    const ProjectSet& projects, std::optional<DevMode> mode = std::nullopt) {
  std::vector<std::pair<ScalePair, ProjectSet>> out;
  for (const auto& pair : kScalePairs) {
    std::vector<Project> members;
    for (const auto& p : projects) {
      if (mode && p.mode != *mode) continue;
      const auto c = p.rating(Attribute::CPLX);
      if (c == pair.lower || c == pair.upper) members.push_back(p);
    }
    out.emplace_back(pair, ProjectSet(std::move(members)));
  }
  return out;
}

/// Tallies ACTUAL signs over the CPLX-oriented, CPLX-zero-pruned table of `subset`.
inline SignCounts effort_change_distribution(const ProjectSet& subset, bool mode_aware) {
  const auto table = build_comparison_table(subset, mode_aware, Attribute::CPLX);
  SignCounts c;
  for (const auto& r : table.records) {
    switch (r.sign(Attribute::ACTUAL)) {
      case Sign::Plus: ++c.plus; break;
      case Sign::Minus: ++c.minus; break;
      case Sign::Zero: ++c.zero; break;
    }
  }
  return c;
}

/// Strict majority over all three buckets.
inline Trend classify_trend(const SignCounts& c) {
  const auto n = c.total();
  if (2 * c.minus > n) return Trend::Decreasing;
  if (2 * c.plus > n) return Trend::Increasing;
  return Trend::Indeterminate;
}

/// Classifies the interior scales L, N, H, VH from the five pair trends
/// ordered (VL,L) .. (VH,XH). Scales next to an indeterminate trend get nothing.
inline std::vector<TurningPoint> turning_points(std::span<const Trend, 5> trends) {
  std::vector<TurningPoint> out;
  for (std::size_t i = 1; i < trends.size(); ++i) {
    const auto before = trends[i - 1];
    const auto after = trends[i];
    if (before == Trend::Indeterminate || after == Trend::Indeterminate) continue;
    const auto scale = kScalePairs[i].lower;
    if (before == after)
      out.push_back({scale, TurningKind::Bearing});
    else if (before == Trend::Increasing)
      out.push_back({scale, TurningKind::Reverse});
    else
      out.push_back({scale, TurningKind::Obverse});
  }
  return out;
}

/// Maximal runs of consecutive decreasing pairs, as [from, to] rating intervals.
inline std::vector<std::pair<Rating, Rating>> negative_intervals(std::span<const Trend, 5> trends) {
  std::vector<std::pair<Rating, Rating>> out;
  for (std::size_t i = 0; i < trends.size(); ++i) {
    if (trends[i] != Trend::Decreasing) continue;
    if (!out.empty() && out.back().second == kScalePairs[i].lower)
      out.back().second = kScalePairs[i].upper;
    else
      out.emplace_back(kScalePairs[i].lower, kScalePairs[i].upper);
  }
  return out;
}

struct TrendAnalysis {
  std::optional<DevMode> mode;  // nullopt for the general analysis
  std::vector<ScalePairAnalysis> pairs;
  std::vector<TurningPoint> points;
  std::vector<std::pair<Rating, Rating>> decreasing_intervals;

  std::array<Trend, 5> trends() const {
    std::array<Trend, 5> t{};
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = pairs[i].trend;
    return t;
  }
};

/// General analysis compares across modes; a per-mode analysis compares
/// within that mode only.
inline TrendAnalysis analyze_trends(const ProjectSet& projects,
                                    std::optional<DevMode> mode = std::nullopt) {
  TrendAnalysis out;
  out.mode = mode;
  for (auto& [pair, subset] : scale_pair_subsets(projects, mode)) {
    ScalePairAnalysis a;
    a.pair = pair;
    a.subset_size = subset.size();
    a.counts = effort_change_distribution(subset, mode.has_value());
    a.trend = classify_trend(a.counts);
    out.pairs.push_back(a);
  }
  const auto t = out.trends();
  out.points = turning_points(t);
  out.decreasing_intervals = negative_intervals(t);
  return out;
}

inline std::string describe_turning_points(const std::vector<TurningPoint>& points) {
  if (points.empty()) return "none";
  std::string s;
  for (const auto& p : points) {
    if (!s.empty()) s += ' ';
    s += to_string(p.scale);
    s += '=';
    s += to_string(p.kind);
  }
  return s;
}

inline std::string describe_intervals(const std::vector<std::pair<Rating, Rating>>& intervals) {
  if (intervals.empty()) return "none";
  std::string s;
  for (const auto& [lo, hi] : intervals) {
    if (!s.empty()) s += ' ';
    s += '[';
    s += to_string(lo);
    s += ',';
    s += to_string(hi);
    s += ']';
  }
  return s;
}

inline constexpr std::string_view kTrendCsvHeader = "pair,plus,minus,zero,trend";

inline void write_trend_csv(std::ostream& out, const TrendAnalysis& analysis) {
  out << kTrendCsvHeader << '\n';
  for (const auto& a : analysis.pairs)
    out << a.pair.label() << ',' << a.counts.plus << ',' << a.counts.minus << ','
        << a.counts.zero << ',' << to_string(a.trend) << '\n';
  out << "# turning_points: " << describe_turning_points(analysis.points) << '\n';
  out << "# decreasing_intervals: " << describe_intervals(analysis.decreasing_intervals) << '\n';
}

}  // namespace cplxmine
