#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cplxmine/comparator.hpp"
#include "cplxmine/types.hpp"

namespace cplxmine {

struct ConsequentItem {
  Attribute attribute;
  Sign sign;

  friend bool operator==(const ConsequentItem&, const ConsequentItem&) = default;
};

/// Right-hand side of a rule: distinct attributes with "+" or "-" signs,
/// kept sorted by column order.
class Consequent {
 public:
  explicit Consequent(std::vector<ConsequentItem> items) : items_(std::move(items)) {
    if (items_.empty()) throw ConfigError("consequent must not be empty");
    std::sort(items_.begin(), items_.end(), [](const auto& x, const auto& y) {
      return index_of(x.attribute) < index_of(y.attribute);
    });
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (items_[i].sign == Sign::Zero)
        throw ConfigError("consequent sign must be + or -");
      if (i && items_[i - 1].attribute == items_[i].attribute)
        throw ConfigError("consequent repeats attribute " +
                          std::string(cplxmine::to_string(items_[i].attribute)));
    }
  }

  const std::vector<ConsequentItem>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  std::vector<Attribute> attributes() const {
    std::vector<Attribute> out;
    for (const auto& it : items_) out.push_back(it.attribute);
    return out;
  }

  bool matches(const ComparisonRecord& r) const {
    return std::all_of(items_.begin(), items_.end(),
                       [&](const ConsequentItem& it) { return r.sign(it.attribute) == it.sign; });
  }

  /// "DATA=- & LOC=-"
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

  /// Canonical order: size, then attributes in column order, then "+" before "-".
  friend bool operator<(const Consequent& x, const Consequent& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x.items_[i].attribute != y.items_[i].attribute)
        return index_of(x.items_[i].attribute) < index_of(y.items_[i].attribute);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x.items_[i].sign != y.items_[i].sign) return x.items_[i].sign == Sign::Plus;
    return false;
  }

  friend bool operator==(const Consequent&, const Consequent&) = default;

 private:
  std::vector<ConsequentItem> items_;
};

struct AssociationRule {
  Antecedent antecedent;
  Consequent consequent;
  std::size_t appearance = 0;  // rows covering the item set; also the correct predictions
  std::size_t applied = 0;     // rows left after zero-pruning on the consequent attributes
  std::size_t total = 0;       // antecedent table size
  double frequency = 0.0;
  double accuracy = 0.0;

  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

enum class Engine { Faithful, Optimized };

struct MiningConfig {
  double min_frequency = 0.5;
  double min_accuracy = 0.75;
  std::size_t max_consequent_size = 15;
  Antecedent antecedent = default_antecedent();
  // Consequent attribute universe; empty means every non-antecedent attribute.
  std::vector<Attribute> candidates;
};

/// Consequent attributes in column order after validating the config.
inline std::vector<Attribute> candidate_attributes(const MiningConfig& config) {
  if (!(config.min_frequency > 0.0 && config.min_frequency < 1.0))
    throw ConfigError("min frequency must lie in (0,1)");
  if (!(config.min_accuracy > 0.0 && config.min_accuracy < 1.0))
    throw ConfigError("min accuracy must lie in (0,1)");
  if (config.max_consequent_size == 0) throw ConfigError("max consequent size must be >= 1");

  std::vector<Attribute> out;
  if (config.candidates.empty()) {
    for (std::size_t i = 0; i < kAttributeCount; ++i)
      if (!config.antecedent.contains(attribute_at(i))) out.push_back(attribute_at(i));
    return out;
  }
  out = config.candidates;
  std::sort(out.begin(), out.end(),
            [](Attribute x, Attribute y) { return index_of(x) < index_of(y); });
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (config.antecedent.contains(out[i]))
      throw ConfigError("candidate attribute " + std::string(to_string(out[i])) +
                        " is part of the antecedent");
    if (i && out[i - 1] == out[i])
      throw ConfigError("candidate attribute " + std::string(to_string(out[i])) + " repeated");
  }
  return out;
}

/// Drops every record with sign "0" at any of `attributes`.
inline ComparisonTable prune_for_consequent(const ComparisonTable& table,
                                            std::span<const Attribute> attributes) {
  ComparisonTable out = table;
  out.records.clear();
  for (const auto& r : table.records) {
    const bool keep = std::none_of(attributes.begin(), attributes.end(),
                                   [&](Attribute a) { return r.sign(a) == Sign::Zero; });
    if (keep) out.records.push_back(r);
  }
  return out;
}

struct CandidateEvaluation {
  std::size_t appearance = 0;
  std::size_t applied = 0;
  std::size_t total = 0;
  double frequency = 0.0;
  double accuracy = 0.0;  // 0 when nothing applies
};

inline CandidateEvaluation evaluate_candidate(const Consequent& consequent,
                                              const ComparisonTable& antecedent_table) {
  if (antecedent_table.empty()) throw std::domain_error("empty antecedent table");
  const auto attrs = consequent.attributes();
  const auto pruned = prune_for_consequent(antecedent_table, attrs);
  CandidateEvaluation ev;
  ev.total = antecedent_table.size();
  ev.applied = pruned.size();
  ev.appearance = static_cast<std::size_t>(
      std::count_if(pruned.records.begin(), pruned.records.end(),
                    [&](const ComparisonRecord& r) { return consequent.matches(r); }));
  ev.frequency = static_cast<double>(ev.appearance) / static_cast<double>(ev.total);
  ev.accuracy = ev.applied ? static_cast<double>(ev.appearance) / static_cast<double>(ev.applied)
                           : 0.0;
  return ev;
}

namespace detail {

// A record reduced to two attribute bitmasks.
struct PackedRecord {
  std::uint32_t nonzero = 0;
  std::uint32_t plus = 0;
};

inline std::vector<PackedRecord> pack(const ComparisonTable& table) {
  std::vector<PackedRecord> rows;
  rows.reserve(table.size());
  for (const auto& r : table.records) {
    PackedRecord p;
    for (std::size_t i = 0; i < kAttributeCount; ++i) {
      if (r.signs[i] != Sign::Zero) p.nonzero |= 1u << i;
      if (r.signs[i] == Sign::Plus) p.plus |= 1u << i;
    }
    rows.push_back(p);
  }
  return rows;
}

// `attrs` are bit positions in ascending order; `plus` marks which of them carry "+".
inline Consequent make_consequent(const std::vector<std::size_t>& attrs, std::uint32_t plus) {
  std::vector<ConsequentItem> items;
  for (auto a : attrs)
    items.push_back({attribute_at(a), (plus >> a) & 1u ? Sign::Plus : Sign::Minus});
  return Consequent(std::move(items));
}

inline bool passes(std::size_t appearance, std::size_t applied, std::size_t total,
                   const MiningConfig& config) {
  if (applied == 0 || total == 0) return false;
  const double freq = static_cast<double>(appearance) / static_cast<double>(total);
  const double acc = static_cast<double>(appearance) / static_cast<double>(applied);
  return freq > config.min_frequency && acc > config.min_accuracy;
}

inline AssociationRule make_rule(const MiningConfig& config, Consequent consequent,
                                 std::size_t appearance, std::size_t applied, std::size_t total) {
  return AssociationRule{config.antecedent,
                         std::move(consequent),
                         appearance,
                         applied,
                         total,
                         static_cast<double>(appearance) / static_cast<double>(total),
                         static_cast<double>(appearance) / static_cast<double>(applied)};
}

inline void sort_rules(std::vector<AssociationRule>& rules) {
  std::sort(rules.begin(), rules.end(),
            [](const AssociationRule& x, const AssociationRule& y) {
              return x.consequent < y.consequent;
            });
}

inline bool precheck(const ComparisonTable& table, const MiningConfig& config,
                     std::vector<std::string>* warnings) {
  if (table.antecedent_applied && !(*table.antecedent_applied == config.antecedent))
    throw ConfigError("table was filtered with antecedent " +
                      table.antecedent_applied->to_string() + ", config uses " +
                      config.antecedent.to_string());
  if (table.empty()) {
    if (warnings) warnings->push_back("empty antecedent table: no rules mined");
    return false;
  }
  return true;
}

}  // namespace detail

/// Exhaustive search following the modified Apriori listing: for every
/// attribute combination, prune zero rows, then test every "+"/"-"
/// assignment against the strict frequency and accuracy thresholds.
inline std::vector<AssociationRule> mine_rules(const ComparisonTable& antecedent_table,
                                               const MiningConfig& config,
                                               std::vector<std::string>* warnings = nullptr) {
  const auto candidates = candidate_attributes(config);
  if (!detail::precheck(antecedent_table, config, warnings)) return {};

  const auto rows = detail::pack(antecedent_table);
  const std::size_t total = rows.size();
  const std::size_t max_k = std::min(config.max_consequent_size, candidates.size());
  std::vector<AssociationRule> rules;
  std::vector<std::uint32_t> applicable;  // plus masks of rows surviving the prune

  for (std::size_t k = 1; k <= max_k; ++k) {
    // Lexicographic k-combinations of candidate positions.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<std::size_t> attrs(k);
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < k; ++i) {
        attrs[i] = index_of(candidates[pick[i]]);
        mask |= 1u << attrs[i];
      }

      applicable.clear();
      for (const auto& r : rows)
        if ((r.nonzero & mask) == mask) applicable.push_back(r.plus & mask);
      const std::size_t applied = applicable.size();

      if (applied > 0) {
        // Sign assignments in lexicographic order, "+" first.
        for (std::uint32_t code = 0; code < (1u << k); ++code) {
          std::uint32_t plus = 0;
          for (std::size_t i = 0; i < k; ++i)
            if (!((code >> (k - 1 - i)) & 1u)) plus |= 1u << attrs[i];
          const auto appearance = static_cast<std::size_t>(
              std::count(applicable.begin(), applicable.end(), plus));
          if (detail::passes(appearance, applied, total, config))
            rules.push_back(detail::make_rule(config, detail::make_consequent(attrs, plus),
                                              appearance, applied, total));
        }
      }

      // Advance to the next combination.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == candidates.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  detail::sort_rules(rules);
  return rules;
}

/// Level-wise search that only extends item sets whose frequency exceeds the
/// threshold. Appearance cannot grow when a consequent gains items, so every
/// emittable rule is still reached. Output equals mine_rules.
inline std::vector<AssociationRule> mine_rules_optimized(
    const ComparisonTable& antecedent_table, const MiningConfig& config,
    std::vector<std::string>* warnings = nullptr) {
  const auto candidates = candidate_attributes(config);
  if (!detail::precheck(antecedent_table, config, warnings)) return {};

  const auto rows = detail::pack(antecedent_table);
  const std::size_t total = rows.size();
  const std::size_t max_k = std::min(config.max_consequent_size, candidates.size());

  struct ItemSet {
    std::vector<std::size_t> attrs;  // ascending bit positions
    std::uint32_t mask = 0;
    std::uint32_t plus = 0;
  };
  auto key = [](std::uint32_t mask, std::uint32_t plus) {
    return (static_cast<std::uint64_t>(mask) << 32) | plus;
  };

  std::vector<AssociationRule> rules;
  auto evaluate = [&](const ItemSet& s, bool& frequent) {
    std::size_t applied = 0;
    std::size_t appearance = 0;
    for (const auto& r : rows) {
      if ((r.nonzero & s.mask) != s.mask) continue;
      ++applied;
      if ((r.plus & s.mask) == s.plus) ++appearance;
    }
    frequent = static_cast<double>(appearance) / static_cast<double>(total) > config.min_frequency;
    if (detail::passes(appearance, applied, total, config))
      rules.push_back(detail::make_rule(config, detail::make_consequent(s.attrs, s.plus),
                                        appearance, applied, total));
  };

  std::vector<ItemSet> level;
  for (auto a : candidates) {
    const auto bit = index_of(a);
    for (bool positive : {true, false}) {
      ItemSet s{{bit}, 1u << bit, positive ? (1u << bit) : 0u};
      bool frequent = false;
      evaluate(s, frequent);
      if (frequent) level.push_back(std::move(s));
    }
  }

  for (std::size_t k = 2; k <= max_k && level.size() > 1; ++k) {
    std::unordered_set<std::uint64_t> known;
    for (const auto& s : level) known.insert(key(s.mask, s.plus));

    std::vector<ItemSet> next;
    for (std::size_t x = 0; x < level.size(); ++x) {
      for (std::size_t y = x + 1; y < level.size(); ++y) {
        const auto& a = level[x];
        const auto& b = level[y];
        if (!std::equal(a.attrs.begin(), a.attrs.end() - 1, b.attrs.begin())) continue;
        if (a.attrs.back() == b.attrs.back()) continue;
        const std::uint32_t prefix_mask = a.mask & ~(1u << a.attrs.back());
        if ((a.plus & prefix_mask) != (b.plus & prefix_mask)) continue;

        ItemSet c;
        c.attrs = a.attrs;
        c.attrs.push_back(b.attrs.back());
        std::sort(c.attrs.begin(), c.attrs.end());
        c.mask = a.mask | b.mask;
        c.plus = a.plus | b.plus;

        bool all_subsets_frequent = true;
        for (auto drop : c.attrs) {
          const std::uint32_t bit = 1u << drop;
          if (!known.count(key(c.mask & ~bit, c.plus & ~bit))) {
            all_subsets_frequent = false;
            break;
          }
        }
        if (!all_subsets_frequent) continue;

        bool frequent = false;
        evaluate(c, frequent);
        if (frequent) next.push_back(std::move(c));
      }
    }
    // Deterministic join order for the next level.
    std::sort(next.begin(), next.end(), [](const ItemSet& p, const ItemSet& q) {
      if (p.attrs != q.attrs) return p.attrs < q.attrs;
      return p.plus < q.plus;
    });
    level = std::move(next);
  }
  detail::sort_rules(rules);
  return rules;
}

inline std::vector<AssociationRule> mine(const ComparisonTable& antecedent_table,
                                         const MiningConfig& config, Engine engine,
                                         std::vector<std::string>* warnings = nullptr) {
  return engine == Engine::Faithful ? mine_rules(antecedent_table, config, warnings)
                                    : mine_rules_optimized(antecedent_table, config, warnings);
}

inline std::string format_pct(std::size_t num, std::size_t den) {
  if (den == 0) return "0.00";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f",
                100.0 * static_cast<double>(num) / static_cast<double>(den));
  return buf;
}

inline constexpr std::string_view kRuleCsvHeader =
    "antecedent,consequent,appearance,applied,total,frequency_pct,accuracy_pct";

inline void write_rules_csv(std::ostream& out, const std::vector<AssociationRule>& rules) {
  out << kRuleCsvHeader << '\n';
  for (const auto& r : rules)
    out << r.antecedent.to_string() << ',' << r.consequent.to_string() << ',' << r.appearance
        << ',' << r.applied << ',' << r.total << ',' << format_pct(r.appearance, r.total) << ','
        << format_pct(r.appearance, r.applied) << '\n';
}

}  // namespace cplxmine
