#pragma once

// Command-line plumbing shared by the tool and its tests: integer-list input
// and the JSON reports each subcommand emits.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmss/core.hpp"

namespace gmss {

inline constexpr std::size_t max_list_input = 1'000'000;
inline constexpr std::size_t max_tree_input = 100'000;

/// Exit statuses of the command-line tool.
namespace status {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int distributivity = 3;
inline constexpr int overflow = 4;
inline constexpr int size_guard = 5;
inline constexpr int budget = 6;
}  // namespace status

class InputTooLarge : public Error {
 public:
  using Error::Error;
};

/// Integers separated by commas or whitespace, optionally inside [ ].
/// Blank input is the empty list.
inline std::vector<Label> parse_list(std::string_view text) {
  std::vector<Label> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (i < end && text[i] == '[') {
    if (text[end - 1] != ']') throw ParseError(end, "missing ']'");
    ++i;
    --end;
  }
  text = text.substr(0, end);
  bool need_value = false;  // just read a comma
  for (skip_ws(); i < text.size(); skip_ws()) {
    Label v = 0;
    const char* first = text.data() + i;
    const char* plus = first < text.data() + text.size() && *first == '+' ? first + 1 : first;
    auto [ptr, ec] = std::from_chars(plus, text.data() + text.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError(i, "integer out of range");
    if (ec != std::errc() || ptr == plus) throw ParseError(i, "expected an integer");
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',')
      throw ParseError(i, "unexpected character '" + std::string(1, text[i]) + "'");
    out.push_back(v);
    if (out.size() > max_list_input)
      throw InputTooLarge("list input longer than " + std::to_string(max_list_input));
    need_value = false;
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      need_value = true;
    }
  }
  if (need_value) throw ParseError(i, "trailing ','");
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct MssReport {
  std::string algo;
  Label value = 0;
  std::size_t n = 0;
  bool operator==(const MssReport&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MssReport, algo, value, n)

struct TreeReport {
  std::string shape, semiring, monad, via;
  Label b = 0;
  Label value = 0;
  std::size_t nodes = 0;
  /// With --check, the value by the other method.
  std::optional<Label> check;
  bool operator==(const TreeReport&) const = default;
};

inline void to_json(nlohmann::json& j, const TreeReport& r) {
  j = nlohmann::json{{"shape", r.shape}, {"semiring", r.semiring}, {"monad", r.monad},
                     {"via", r.via},     {"b", r.b},               {"value", r.value},
                     {"nodes", r.nodes}};
  j["check"] = r.check ? nlohmann::json(*r.check) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, TreeReport& r) {
  j.at("shape").get_to(r.shape);
  j.at("semiring").get_to(r.semiring);
  j.at("monad").get_to(r.monad);
  j.at("via").get_to(r.via);
  j.at("b").get_to(r.b);
  j.at("value").get_to(r.value);
  j.at("nodes").get_to(r.nodes);
  const auto& c = j.at("check");
  r.check = c.is_null() ? std::nullopt : std::optional<Label>(c.get<Label>());
}

struct PruneReport {
  std::string shape, monad;
  std::size_t count = 0;
  /// Canonical s-expressions; empty when only counting.
  std::vector<std::string> prunings;
  bool operator==(const PruneReport&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PruneReport, shape, monad, count, prunings)

struct BenchRow {
  std::string algo;
  std::size_t n = 0;
  double median_ms = 0;
  Label value = 0;
  bool operator==(const BenchRow&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BenchRow, algo, n, median_ms, value)

}  // namespace gmss
