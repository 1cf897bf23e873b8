#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cplxmine {

/// Raised for malformed or inconsistent dataset input.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for invalid configuration (flags, antecedents, thresholds).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string to_upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Six-point ordinal rating scale.

enum class Rating : std::uint8_t { VL = 0, L = 1, N = 2, H = 3, VH = 4, XH = 5 };

inline constexpr std::size_t kRatingCount = 6;
inline constexpr std::array<Rating, kRatingCount> kAllRatings = {
    Rating::VL, Rating::L, Rating::N, Rating::H, Rating::VH, Rating::XH};

constexpr int rank(Rating r) { return static_cast<int>(r); }

constexpr std::string_view to_string(Rating r) {
  constexpr std::array<std::string_view, kRatingCount> names = {"VL", "L", "N", "H", "VH", "XH"};
  return names[static_cast<std::size_t>(r)];
}

/// Case-insensitive; returns nullopt for anything outside VL..XH.
inline std::optional<Rating> parse_rating(std::string_view text) {
  const auto up = detail::to_upper(detail::trim(text));
  for (auto r : kAllRatings)
    if (to_string(r) == up) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Development modes.

enum class DevMode : std::uint8_t { Organic, Semidetached, Embedded };

inline constexpr std::array<DevMode, 3> kAllModes = {DevMode::Organic, DevMode::Semidetached,
                                                     DevMode::Embedded};

constexpr std::string_view to_string(DevMode m) {
  switch (m) {
    case DevMode::Organic: return "organic";
    case DevMode::Semidetached: return "semidetached";
    case DevMode::Embedded: return "embedded";
  }
  return "";
}

inline std::optional<DevMode> parse_mode(std::string_view text) {
  const auto low = detail::to_lower(detail::trim(text));
  for (auto m : kAllModes)
    if (to_string(m) == low) return m;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Attribute universe: 15 effort drivers followed by LOC and ACTUAL, in
// dataset column order.

enum class Attribute : std::uint8_t {
  RELY, DATA, CPLX, TIME, STOR, VIRT, TURN, ACAP, AEXP, PCAP, VEXP, LEXP, MODP, TOOL, SCED,
  LOC, ACTUAL
};

inline constexpr std::size_t kDriverCount = 15;
inline constexpr std::size_t kAttributeCount = 17;

constexpr std::size_t index_of(Attribute a) { return static_cast<std::size_t>(a); }
constexpr Attribute attribute_at(std::size_t i) { return static_cast<Attribute>(i); }
constexpr bool is_driver(Attribute a) { return index_of(a) < kDriverCount; }

constexpr std::string_view to_string(Attribute a) {
  constexpr std::array<std::string_view, kAttributeCount> names = {
      "RELY", "DATA", "CPLX", "TIME", "STOR", "VIRT", "TURN", "ACAP", "AEXP",
      "PCAP", "VEXP", "LEXP", "MODP", "TOOL", "SCED", "LOC",  "ACTUAL"};
  return names[index_of(a)];
}

inline std::optional<Attribute> find_attribute(std::string_view name) {
  const auto up = detail::to_upper(detail::trim(name));
  for (std::size_t i = 0; i < kAttributeCount; ++i)
    if (to_string(attribute_at(i)) == up) return attribute_at(i);
  return std::nullopt;
}

/// Throws ConfigError on an unknown name.
inline Attribute parse_attribute(std::string_view name) {
  if (auto a = find_attribute(name)) return *a;
  throw ConfigError("unknown attribute '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Qualitative comparison outcome.

enum class Sign : std::uint8_t { Zero, Plus, Minus };

constexpr Sign negate(Sign s) {
  switch (s) {
    case Sign::Plus: return Sign::Minus;
    case Sign::Minus: return Sign::Plus;
    case Sign::Zero: return Sign::Zero;
  }
  return Sign::Zero;
}

constexpr char to_char(Sign s) {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
  }
  return '0';
}

inline std::optional<Sign> parse_sign(std::string_view text) {
  const auto t = detail::trim(text);
  if (t == "+") return Sign::Plus;
  if (t == "-" || t == "\xE2\x88\x92") return Sign::Minus;  // also accept U+2212
  if (t == "0") return Sign::Zero;
  return std::nullopt;
}

template <typename T>
constexpr Sign sign_of(const T& lhs, const T& rhs) {
  if (lhs > rhs) return Sign::Plus;
  if (lhs < rhs) return Sign::Minus;
  return Sign::Zero;
}

}  // namespace cplxmine
