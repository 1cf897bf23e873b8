#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cplxmine/types.hpp"

namespace cplxmine {

/// One project row: 15 ordinal drivers plus size (KDSI) and effort (person-months).
struct Project {
  std::string id;
  DevMode mode = DevMode::Organic;
  std::array<Rating, kDriverCount> ratings{};
  double loc = 0.0;
  double actual_effort = 0.0;

  Rating rating(Attribute a) const { return ratings.at(index_of(a)); }

  friend bool operator==(const Project&, const Project&) = default;
};

/// Ordered collection of projects with unique ids. Order is input order.
class ProjectSet {
 public:
  ProjectSet() = default;

  /// Throws DatasetError on duplicate or empty ids.
  explicit ProjectSet(std::vector<Project> projects) : projects_(std::move(projects)) {
    std::unordered_set<std::string> seen;
    for (const auto& p : projects_) {
      if (p.id.empty()) throw DatasetError("empty project id");
      if (!seen.insert(p.id).second) throw DatasetError("duplicate id '" + p.id + "'");
    }
  }

  std::size_t size() const { return projects_.size(); }
  bool empty() const { return projects_.empty(); }
  const Project& operator[](std::size_t i) const { return projects_[i]; }
  auto begin() const { return projects_.begin(); }
  auto end() const { return projects_.end(); }
  const std::vector<Project>& projects() const { return projects_; }

  friend bool operator==(const ProjectSet&, const ProjectSet&) = default;

 private:
  std::vector<Project> projects_;
};

inline constexpr std::array<std::string_view, 2 + kAttributeCount> kDatasetColumns = {
    "ID",   "DEV_MODE", "RELY", "DATA", "CPLX", "TIME", "STOR", "VIRT", "TURN", "ACAP", "AEXP",
    "PCAP", "VEXP",     "LEXP", "MODP", "TOOL", "SCED", "LOC",  "ACTUAL"};

namespace detail {

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

inline double parse_positive(std::string_view text, std::string_view column, std::size_t line_no) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  const auto where = " (line " + std::to_string(line_no) + ")";
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value))
    throw DatasetError("invalid number '" + std::string(text) + "' in column " +
                       std::string(column) + where);
  if (value <= 0.0)
    throw DatasetError("non-positive " + std::string(column) + " '" + std::string(text) + "'" +
                       where);
  return value;
}

inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace detail

/// Parses the comma-separated dataset table. The header must name each of
/// ID, DEV_MODE, the 15 drivers, LOC and ACTUAL exactly once. Blank lines
/// are skipped. An input without project rows is an error.
inline ProjectSet parse_dataset(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::array<std::size_t, kDatasetColumns.size()> column_pos{};
  std::size_t width = 0;
  std::vector<Project> projects;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv_line(line);

    if (!have_header) {
      std::array<bool, kDatasetColumns.size()> seen{};
      for (std::size_t pos = 0; pos < fields.size(); ++pos) {
        const auto name = detail::to_upper(fields[pos]);
        std::size_t k = 0;
        while (k < kDatasetColumns.size() && kDatasetColumns[k] != name) ++k;
        if (k == kDatasetColumns.size())
          throw DatasetError("unknown column '" + std::string(fields[pos]) + "'");
        if (seen[k]) throw DatasetError("duplicate column '" + name + "'");
        seen[k] = true;
        column_pos[k] = pos;
      }
      for (std::size_t k = 0; k < kDatasetColumns.size(); ++k)
        if (!seen[k]) throw DatasetError("missing column '" + std::string(kDatasetColumns[k]) + "'");
      width = fields.size();
      have_header = true;
      continue;
    }

    if (fields.size() != width)
      throw DatasetError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                         " fields, found " + std::to_string(fields.size()));

    Project p;
    p.id = std::string(fields[column_pos[0]]);
    if (p.id.empty()) throw DatasetError("line " + std::to_string(line_no) + ": empty project id");
    const auto mode_text = fields[column_pos[1]];
    const auto mode = parse_mode(mode_text);
    if (!mode)
      throw DatasetError("line " + std::to_string(line_no) + ": unknown mode '" +
                         std::string(mode_text) + "'");
    p.mode = *mode;
    for (std::size_t d = 0; d < kDriverCount; ++d) {
      const auto text = fields[column_pos[2 + d]];
      const auto r = parse_rating(text);
      if (!r)
        throw DatasetError("line " + std::to_string(line_no) + ": unknown rating symbol '" +
                           std::string(text) + "' for " +
                           std::string(to_string(attribute_at(d))));
      p.ratings[d] = *r;
    }
    p.loc = detail::parse_positive(fields[column_pos[2 + kDriverCount]], "LOC", line_no);
    p.actual_effort =
        detail::parse_positive(fields[column_pos[3 + kDriverCount]], "ACTUAL", line_no);
    projects.push_back(std::move(p));
  }

  if (!have_header) throw DatasetError("no projects: missing header");
  if (projects.empty()) throw DatasetError("no projects");
  return ProjectSet(std::move(projects));
}

inline ProjectSet parse_dataset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dataset(in);
}

inline ProjectSet load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset '" + path + "'");
  return parse_dataset(in);
}

/// Writes the canonical column order with uppercase rating symbols.
inline void write_dataset(std::ostream& out, const ProjectSet& projects) {
  for (std::size_t k = 0; k < kDatasetColumns.size(); ++k)
    out << (k ? "," : "") << kDatasetColumns[k];
  out << '\n';
  for (const auto& p : projects) {
    out << p.id << ',' << to_string(p.mode);
    for (auto r : p.ratings) out << ',' << to_string(r);
    out << ',' << detail::format_number(p.loc) << ',' << detail::format_number(p.actual_effort)
        << '\n';
  }
}

inline ProjectSet filter_by_mode(const ProjectSet& projects, DevMode mode) {
  std::vector<Project> kept;
  for (const auto& p : projects)
    if (p.mode == mode) kept.push_back(p);
  return ProjectSet(std::move(kept));
}

}  // namespace cplxmine
