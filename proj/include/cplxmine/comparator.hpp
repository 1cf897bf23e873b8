#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cplxmine/dataset.hpp"
#include "cplxmine/types.hpp"

namespace cplxmine {

using SignVector = std::array<Sign, kAttributeCount>;

/// Sign-valued comparison of all 17 attributes of `left` against `right`.
struct ComparisonRecord {
  std::string left_id;
  std::string right_id;
  std::size_t left_index = 0;   // position of the left project in the source set
  std::size_t right_index = 0;
  std::optional<DevMode> mode;  // set iff both projects share a mode
  SignVector signs{};

  Sign sign(Attribute a) const { return signs[index_of(a)]; }

  friend bool operator==(const ComparisonRecord&, const ComparisonRecord&) = default;
};

struct AntecedentItem {
  Attribute attribute;
  Sign sign;

  friend bool operator==(const AntecedentItem&, const AntecedentItem&) = default;
};

/// Fixed left-hand side of every mined rule. The first item is the pivot and
/// always requires "+".
class Antecedent {
 public:
  explicit Antecedent(std::vector<AntecedentItem> items) : items_(std::move(items)) {
    if (items_.empty()) throw ConfigError("antecedent must not be empty");
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (items_[i].sign == Sign::Zero)
        throw ConfigError("antecedent sign for " + std::string(cplxmine::to_string(items_[i].attribute)) +
                          " must be + or -");
      for (std::size_t j = 0; j < i; ++j)
        if (items_[j].attribute == items_[i].attribute)
          throw ConfigError("antecedent repeats attribute " +
                            std::string(cplxmine::to_string(items_[i].attribute)));
    }
    if (items_.front().sign != Sign::Plus)
      throw ConfigError("antecedent pivot " + std::string(cplxmine::to_string(items_.front().attribute)) +
                        " must require +");
  }

  const std::vector<AntecedentItem>& items() const { return items_; }
  Attribute pivot() const { return items_.front().attribute; }

  bool contains(Attribute a) const {
    return std::any_of(items_.begin(), items_.end(),
                       [a](const AntecedentItem& it) { return it.attribute == a; });
  }

  bool matches(const ComparisonRecord& r) const {
    return std::all_of(items_.begin(), items_.end(),
                       [&](const AntecedentItem& it) { return r.sign(it.attribute) == it.sign; });
  }

  /// "CPLX=+ & ACTUAL=-"
  std::string to_string() const {
    std::string out;
    for (const auto& it : items_) {
      if (!out.empty()) out += " & ";
      out += cplxmine::to_string(it.attribute);
      out += '=';
      out += to_char(it.sign);
    }
    return out;
  }

  friend bool operator==(const Antecedent&, const Antecedent&) = default;

 private:
  std::vector<AntecedentItem> items_;
};

inline Antecedent default_antecedent() {
  return Antecedent({{Attribute::CPLX, Sign::Plus}, {Attribute::ACTUAL, Sign::Minus}});
}

/// Parses "ATTR=SIGN,ATTR=SIGN,...".
inline Antecedent parse_antecedent(std::string_view text) {
  std::vector<AntecedentItem> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto part = detail::trim(text.substr(start, comma - start));
    const auto eq = part.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("antecedent entry '" + std::string(part) + "' is not ATTR=SIGN");
    const auto attr = parse_attribute(part.substr(0, eq));
    const auto sign = parse_sign(part.substr(eq + 1));
    if (!sign) throw ConfigError("antecedent entry '" + std::string(part) + "' has a bad sign");
    items.push_back({attr, *sign});
    start = comma + 1;
  }
  return Antecedent(std::move(items));
}

struct ComparisonTable {
  std::vector<ComparisonRecord> records;
  bool mode_aware = false;
  Attribute pivot = Attribute::CPLX;
  std::optional<Antecedent> antecedent_applied;
  std::size_t pairs_generated = 0;    // eligible pairs before pivot-zero pruning
  std::size_t pivot_zero_pruned = 0;  // pairs dropped because the pivot was unchanged

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

inline Sign compare_attribute(const Project& a, const Project& b, Attribute attr) {
  switch (attr) {
    case Attribute::LOC: return sign_of(a.loc, b.loc);
    case Attribute::ACTUAL: return sign_of(a.actual_effort, b.actual_effort);
    default: return sign_of(rank(a.rating(attr)), rank(b.rating(attr)));
  }
}

inline ComparisonRecord compare_projects(const Project& a, const Project& b) {
  ComparisonRecord r;
  r.left_id = a.id;
  r.right_id = b.id;
  if (a.mode == b.mode) r.mode = a.mode;
  for (std::size_t i = 0; i < kAttributeCount; ++i)
    r.signs[i] = compare_attribute(a, b, attribute_at(i));
  return r;
}

/// One record per unordered pair (same-mode pairs only when `mode_aware`),
/// oriented so the pivot sign is never "-", with pivot-zero records removed.
/// Records are ordered by (left index, right index) after orientation.
inline ComparisonTable build_comparison_table(const ProjectSet& projects, bool mode_aware,
                                              Attribute pivot = Attribute::CPLX) {
  ComparisonTable table;
  table.mode_aware = mode_aware;
  table.pivot = pivot;
  const auto n = projects.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const auto& a = projects[j];
      const auto& b = projects[k];
      if (mode_aware && a.mode != b.mode) continue;
      ++table.pairs_generated;
      const auto pivot_sign = compare_attribute(a, b, pivot);
      if (pivot_sign == Sign::Zero) {
        ++table.pivot_zero_pruned;
        continue;
      }
      const bool swap = pivot_sign == Sign::Minus;
      auto rec = swap ? compare_projects(b, a) : compare_projects(a, b);
      rec.left_index = swap ? k : j;
      rec.right_index = swap ? j : k;
      table.records.push_back(std::move(rec));
    }
  }
  std::sort(table.records.begin(), table.records.end(),
            [](const ComparisonRecord& x, const ComparisonRecord& y) {
              return std::pair(x.left_index, x.right_index) <
                     std::pair(y.left_index, y.right_index);
            });
  return table;
}

/// Keeps the records matching every antecedent item. The result size is the
/// mining denominator.
inline ComparisonTable apply_antecedent(const ComparisonTable& table,
                                        const Antecedent& antecedent) {
  if (table.pivot != antecedent.pivot())
    throw ConfigError("table is oriented on " + std::string(to_string(table.pivot)) +
                      " but antecedent pivot is " + std::string(to_string(antecedent.pivot())));
  ComparisonTable out;
  out.mode_aware = table.mode_aware;
  out.pivot = table.pivot;
  out.antecedent_applied = antecedent;
  out.pairs_generated = table.pairs_generated;
  out.pivot_zero_pruned = table.pivot_zero_pruned;
  std::copy_if(table.records.begin(), table.records.end(), std::back_inserter(out.records),
               [&](const ComparisonRecord& r) { return antecedent.matches(r); });
  return out;
}

inline void write_table_header(std::ostream& out) {
  out << "ID,COMPARISON,DEV_MODE";
  for (std::size_t i = 0; i < kAttributeCount; ++i) out << ',' << to_string(attribute_at(i));
  out << '\n';
}

/// Comparison-table export; DEV_MODE is left empty for mode-agnostic tables.
inline void write_table_csv(std::ostream& out, const ComparisonTable& table) {
  write_table_header(out);
  std::size_t row = 0;
  for (const auto& r : table.records) {
    out << ++row << ",#" << r.left_id << "-#" << r.right_id << ',';
    if (table.mode_aware && r.mode) out << to_string(*r.mode);
    for (auto s : r.signs) out << ',' << to_char(s);
    out << '\n';
  }
}

}  // namespace cplxmine
