#pragma once

// Seeded random inputs and shrinkers for the law checker. The RNG is a
// mt19937_64 (fully specified by the standard) and draws are mapped to ranges
// by hand, so a seed gives the same values on every platform.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "gmss/collections.hpp"
#include "gmss/core.hpp"
#include "gmss/pruning.hpp"
#include "gmss/shapes.hpp"

namespace gmss {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream per (seed, name): FNV-1a of the name mixed into the seed.
inline std::uint64_t stream_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
  return splitmix64(seed ^ splitmix64(h));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [lo, hi].
  Label between(Label lo, Label hi) {
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<Label>(eng_());
    return static_cast<Label>(static_cast<std::uint64_t>(lo) + eng_() % span);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
  bool chance(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// Terms

struct TermGen {
  Shape shape = Shape::htree;
  std::size_t max_depth = 6;
  Label lo = -8, hi = 8;
  /// Chance of choosing the recursive constructor at each level.
  double grow = 0.6;
  /// Rejection bounds; 0 means unbounded.
  std::size_t max_nodes = 0;
  std::size_t max_prune = 0;
};

namespace detail {
inline Term grow_term(Rng& rng, const TermGen& g, std::size_t level) {
  const auto [base, rec] = constructors(g.shape);
  const Tag tag = (level < g.max_depth && rng.chance(g.grow)) ? rec : base;
  std::optional<Label> label;
  if (has_label(tag)) label = rng.between(g.lo, g.hi);
  std::vector<Term> kids;
  for (std::size_t i = 0; i < arity(tag); ++i) kids.push_back(grow_term(rng, g, level + 1));
  return Term(Node<Label, Term>{tag, label, std::move(kids)});
}
}  // namespace detail

inline Term random_term(Rng& rng, const TermGen& g) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Term t = detail::grow_term(rng, g, 0);
    if (g.max_nodes && node_count(t) > g.max_nodes) continue;
    if (g.max_prune && bag_prune_count(t) > g.max_prune) continue;
    return t;
  }
  const auto base = constructors(g.shape)[0];
  return Term(Node<Label, Term>{base, has_label(base) ? std::optional<Label>(g.lo) : std::nullopt, {}});
}

/// A single layer of the given shape, label in [lo, hi], children from `kid`.
template <class Kid>
auto random_node(Rng& rng, Shape shape, Label lo, Label hi, Kid&& kid) {
  using C = std::decay_t<decltype(kid(rng))>;
  const Tag tag = constructors(shape)[rng.below(2)];
  Node<Label, C> n{tag, std::nullopt, {}};
  if (has_label(tag)) n.label = rng.between(lo, hi);
  for (std::size_t i = 0; i < arity(tag); ++i) n.kids.push_back(kid(rng));
  return n;
}

inline std::vector<Label> random_labels(Rng& rng, std::size_t max_len, Label lo, Label hi) {
  std::vector<Label> xs(rng.below(max_len + 1));
  for (auto& x : xs) x = rng.between(lo, hi);
  return xs;
}

/// Every list of length <= max_len over [lo, hi], shortest first.
inline std::vector<std::vector<Label>> all_lists(std::size_t max_len, Label lo, Label hi) {
  std::vector<std::vector<Label>> out{{}};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (Label v = lo; v <= hi; ++v) {
        auto xs = out[i];
        xs.push_back(v);
        out.push_back(std::move(xs));
      }
    start = end;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shrinking: smaller structure first, then smaller labels.

inline std::vector<Label> shrink(Label a) {
  std::vector<Label> out;
  auto add = [&](Label c) {
    if (c != a && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  if (a == 0) return out;
  add(0);
  add(a / 2);
  add(a > 0 ? a - 1 : a + 1);
  if (a < 0 && a != min_sentinel) add(-a);
  return out;
}

inline std::vector<Term> shrink(const Term& t) {
  std::vector<Term> out;
  const auto& n = t.node();
  for (const Term& k : n.kids) out.push_back(k);
  if (!n.kids.empty()) {
    const Tag base = constructors(shape_of(n.tag))[0];
    std::optional<Label> l;
    if (has_label(base)) l = n.label.value_or(0);
    out.push_back(Term(Node<Label, Term>{base, l, {}}));
  }
  for (std::size_t i = 0; i < n.kids.size(); ++i)
    for (Term& s : shrink(n.kids[i])) {
      auto m = n;
      m.kids[i] = std::move(s);
      out.push_back(Term(std::move(m)));
    }
  if (n.label)
    for (Label c : shrink(*n.label)) {
      auto m = n;
      m.label = c;
      out.push_back(Term(std::move(m)));
    }
  return out;
}

template <class T>
std::vector<std::vector<T>> shrink(const std::vector<T>& xs);
template <class T>
std::vector<Collection<T>> shrink(const Collection<T>& x);
template <class A, class B>
std::vector<std::pair<A, B>> shrink(const std::pair<A, B>& p);
template <class L, class C>
std::vector<Node<L, C>> shrink(const Node<L, C>& n);
template <class... Ts>
std::vector<std::variant<Ts...>> shrink(const std::variant<Ts...>& v);

template <class T>
std::vector<std::vector<T>> shrink(const std::vector<T>& xs) {
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto ys = xs;
    ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(ys));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (auto& s : shrink(xs[i])) {
      auto ys = xs;
      ys[i] = std::move(s);
      out.push_back(std::move(ys));
    }
  return out;
}

template <class T>
std::vector<Collection<T>> shrink(const Collection<T>& x) {
  std::vector<Collection<T>> out;
  for (auto& ys : shrink(x.items())) out.emplace_back(x.kind(), std::move(ys));
  return out;
}

template <class A, class B>
std::vector<std::pair<A, B>> shrink(const std::pair<A, B>& p) {
  std::vector<std::pair<A, B>> out;
  for (auto& a : shrink(p.first)) out.emplace_back(std::move(a), p.second);
  for (auto& b : shrink(p.second)) out.emplace_back(p.first, std::move(b));
  return out;
}

/// Keeps the constructor; shrinks the label and the child payloads.
template <class L, class C>
std::vector<Node<L, C>> shrink(const Node<L, C>& n) {
  std::vector<Node<L, C>> out;
  for (std::size_t i = 0; i < n.kids.size(); ++i)
    for (auto& s : shrink(n.kids[i])) {
      auto m = n;
      m.kids[i] = std::move(s);
      out.push_back(std::move(m));
    }
  if (n.label)
    for (auto& c : shrink(*n.label)) {
      auto m = n;
      m.label = std::move(c);
      out.push_back(std::move(m));
    }
  return out;
}

/// Shrinks within the held alternative.
template <class... Ts>
std::vector<std::variant<Ts...>> shrink(const std::variant<Ts...>& v) {
  std::vector<std::variant<Ts...>> out;
  std::visit([&](const auto& x) { for (auto& s : shrink(x)) out.emplace_back(std::move(s)); }, v);
  return out;
}

}  // namespace gmss
