#pragma once

// Executable laws: a law is a property over generated inputs, run for a number
// of seeded trials (after an optional exhaustive sweep). The first violating
// input is shrunk and reported as the witness. Laws expected to fail are run
// until a witness turns up, within a fixed budget.

#include <algorithm>
#include <any>
#include <cstdint>
#include <exception>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmss/collections.hpp"
#include "gmss/core.hpp"
#include "gmss/generators.hpp"
#include "gmss/labelled.hpp"

namespace gmss {

enum class Expectation { holds, fails_with_witness };
enum class Outcome { holds, fails_with_witness, error };

constexpr std::string_view to_string(Expectation e) noexcept {
  return e == Expectation::holds ? "HOLDS" : "FAILS_WITH_WITNESS";
}
constexpr std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::holds: return "HOLDS";
    case Outcome::fails_with_witness: return "FAILS_WITH_WITNESS";
    case Outcome::error: return "ERROR";
  }
  return "?";
}

/// Trials spent looking for a witness of a law that is expected to fail.
inline constexpr std::uint64_t witness_budget = 10'000;

struct LawReport {
  std::string id;
  std::uint64_t trials = 0;
  Outcome outcome = Outcome::holds;
  Expectation expected = Expectation::holds;
  /// Serialized inputs of the (shrunk) counterexample.
  std::optional<std::string> witness;
  /// What the two sides evaluated to at the witness, or the error raised.
  std::string detail;
  /// The counterexample itself, for replaying. Not serialized.
  std::any witness_value;

  bool met() const {
    return (expected == Expectation::holds && outcome == Outcome::holds) ||
           (expected == Expectation::fails_with_witness && outcome == Outcome::fails_with_witness);
  }
  friend bool operator==(const LawReport& a, const LawReport& b) {
    return a.id == b.id && a.trials == b.trials && a.outcome == b.outcome &&
           a.expected == b.expected && a.witness == b.witness && a.detail == b.detail;
  }
};

/// nullopt when the law held on an input, otherwise a description of the mismatch.
using Verdict = std::optional<std::string>;

struct LawCase {
  std::string id;
  std::string summary;
  Expectation expected = Expectation::holds;
  /// Left out of a full run unless asked for by id.
  bool optional = false;
  std::function<LawReport(std::uint64_t seed, std::uint64_t trials)> run;
  /// Re-checks a reported witness_value.
  std::function<Verdict(const std::any&)> replay;
};

template <class In>
struct Property {
  /// Draws the input for trial i.
  std::function<In(Rng&, std::uint64_t)> gen;
  std::function<Verdict(const In&)> check;
  /// Inputs checked before the random trials.
  std::function<std::vector<In>()> exhaustive;
  std::function<std::vector<In>(const In&)> shrinker;
  std::function<std::string(const In&)> printer;
};

namespace detail {

template <class V>
void show_labelled_into(const Labelled<V>& l, std::string& out) {
  out += show(l.value());
  if (l.skeleton().kids.empty()) return;
  out += " {";
  bool first = true;
  for (const auto& k : l.skeleton().kids) {
    out += first ? "" : "; ";
    first = false;
    show_labelled_into(k, out);
  }
  out += "}";
}

template <class T>
struct is_labelled : std::false_type {};
template <class V>
struct is_labelled<Labelled<V>> : std::true_type {};

template <class T>
std::string describe(const T& a) {
  if constexpr (is_labelled<T>::value) {
    std::string out;
    show_labelled_into(a, out);
    return out;
  } else if constexpr (is_optional<T>::value) {
    return a ? describe(*a) : std::string("none");
  } else if constexpr (std::is_same_v<T, bool>) {
    return a ? "true" : "false";
  } else {
    return show(a);
  }
}

struct Eval {
  bool failed = false;
  bool raised = false;
  std::string detail;
};

template <class In>
Eval evaluate(const Property<In>& p, const In& x) {
  try {
    if (auto v = p.check(x)) return {true, false, *v};
    return {};
  } catch (const std::exception& e) {
    return {true, true, std::string("raised: ") + e.what()};
  }
}

}  // namespace detail

/// Equality check with both sides in the message.
template <class A>
Verdict same(const A& lhs, const A& rhs, std::string_view what) {
  if (lhs == rhs) return std::nullopt;
  return std::string(what) + ": " + detail::describe(lhs) + " vs " + detail::describe(rhs);
}

inline Verdict require(bool ok, std::string_view what) {
  if (ok) return std::nullopt;
  return std::string(what);
}

template <class In>
LawCase make_law(std::string id, std::string summary, Expectation expected, Property<In> p,
                 bool optional = false) {
  if (!p.shrinker) p.shrinker = [](const In& x) { return shrink(x); };
  if (!p.printer) p.printer = [](const In& x) { return detail::describe(x); };

  LawCase c;
  c.id = id;
  c.summary = std::move(summary);
  c.expected = expected;
  c.optional = optional;
  c.replay = [p](const std::any& a) { return p.check(std::any_cast<const In&>(a)); };
  c.run = [p, id, expected](std::uint64_t seed, std::uint64_t trials) {
    LawReport r;
    r.id = id;
    r.expected = expected;
    Rng rng(stream_seed(seed, id));

    std::optional<In> bad;
    detail::Eval bad_eval;
    auto probe = [&](const In& x) {
      ++r.trials;
      auto e = detail::evaluate(p, x);
      if (!e.failed) return false;
      bad = x;
      bad_eval = std::move(e);
      return true;
    };

    bool found = false;
    if (p.exhaustive)
      for (const In& x : p.exhaustive())
        if ((found = probe(x))) break;
    const std::uint64_t budget =
        expected == Expectation::fails_with_witness ? std::max(trials, witness_budget) : trials;
    for (std::uint64_t i = 0; !found && i < budget; ++i) found = probe(p.gen(rng, i));
    if (!found) return r;

    // Greedy shrinking: take the first smaller input that fails the same way.
    In cur = *bad;
    detail::Eval cur_eval = bad_eval;
    std::size_t steps = 0;
    for (bool progress = true; progress && steps < 20'000;) {
      progress = false;
      for (const In& cand : p.shrinker(cur)) {
        if (++steps >= 20'000) break;
        auto e = detail::evaluate(p, cand);
        if (e.failed && e.raised == cur_eval.raised) {
          cur = cand;
          cur_eval = std::move(e);
          progress = true;
          break;
        }
      }
    }
    r.outcome = cur_eval.raised ? Outcome::error : Outcome::fails_with_witness;
    r.witness = p.printer(cur);
    r.detail = cur_eval.detail;
    r.witness_value = cur;
    return r;
  };
  return c;
}

// ---------------------------------------------------------------------------
// Report output

inline void to_json(nlohmann::json& j, const LawReport& r) {
  j = nlohmann::json{{"id", r.id},
                     {"trials", r.trials},
                     {"outcome", to_string(r.outcome)},
                     {"expected", to_string(r.expected)},
                     {"met", r.met()},
                     {"witness", r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr)},
                     {"detail", r.detail}};
}

inline void from_json(const nlohmann::json& j, LawReport& r) {
  r.id = j.at("id").get<std::string>();
  r.trials = j.at("trials").get<std::uint64_t>();
  const auto outcome = j.at("outcome").get<std::string>();
  if (outcome == "HOLDS") r.outcome = Outcome::holds;
  else if (outcome == "FAILS_WITH_WITNESS") r.outcome = Outcome::fails_with_witness;
  else if (outcome == "ERROR") r.outcome = Outcome::error;
  else throw Error("unknown outcome " + outcome);
  const auto expected = j.at("expected").get<std::string>();
  if (expected == "HOLDS") r.expected = Expectation::holds;
  else if (expected == "FAILS_WITH_WITNESS") r.expected = Expectation::fails_with_witness;
  else throw Error("unknown expectation " + expected);
  const auto& w = j.at("witness");
  r.witness = w.is_null() ? std::nullopt : std::optional<std::string>(w.get<std::string>());
  r.detail = j.value("detail", std::string());
}

inline std::string format_table(const std::vector<LawReport>& reports) {
  std::size_t width = 2;
  for (const auto& r : reports) width = std::max(width, r.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "id" << "  " << std::setw(8) << "trials"
     << "  " << std::setw(18) << "outcome" << "  " << std::setw(18) << "expected" << "  status\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(8) << r.trials
       << "  " << std::setw(18) << to_string(r.outcome) << "  " << std::setw(18)
       << to_string(r.expected) << "  " << (r.met() ? "ok" : "UNMET") << "\n";
    if (r.witness) {
      os << "    witness: " << *r.witness << "\n";
      if (!r.detail.empty()) os << "    " << r.detail << "\n";
    }
  }
  return os.str();
}

inline bool all_met(const std::vector<LawReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.met(); });
}

}  // namespace gmss
