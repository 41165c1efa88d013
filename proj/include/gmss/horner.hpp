#pragma once

// Semirings, the classical list development of maximum segment sum (cubic
// specification, quadratic and linear forms, Horner's rule) and the generic
// Horner/MSS pipeline over any shape.

#include <algorithm>
#include <array>
#include <string>
#include <optional>
#include <string_view>
#include <vector>

#include "gmss/collections.hpp"
#include "gmss/core.hpp"
#include "gmss/labelled.hpp"
#include "gmss/pruning.hpp"
#include "gmss/schemes.hpp"
#include "gmss/shapes.hpp"

namespace gmss {

// ---------------------------------------------------------------------------
// Semirings

using BinaryOp = Label (*)(Label, Label);

struct Semiring {
  std::string_view name;
  BinaryOp add;
  Label zero;  // unit of add
  BinaryOp mul;
  Label one;   // unit of mul
  bool idempotent_add;
};

namespace detail {
inline Label max_op(Label a, Label b) { return std::max(a, b); }
inline Label min_op(Label a, Label b) { return std::min(a, b); }
// Tropical multiplication: the additive unit is absorbing (it stands for -inf / +inf).
inline Label plus_absorb_min(Label a, Label b) {
  return (a == min_sentinel || b == min_sentinel) ? min_sentinel : checked_add(a, b);
}
inline Label plus_absorb_max(Label a, Label b) {
  return (a == max_sentinel || b == max_sentinel) ? max_sentinel : checked_add(a, b);
}
inline Label or_op(Label a, Label b) { return (a != 0 || b != 0) ? 1 : 0; }
inline Label and_op(Label a, Label b) { return (a != 0 && b != 0) ? 1 : 0; }
}  // namespace detail

inline constexpr Semiring max_plus{"max-plus", detail::max_op, min_sentinel,
                                   detail::plus_absorb_min, 0, true};
inline constexpr Semiring min_plus{"min-plus", detail::min_op, max_sentinel,
                                   detail::plus_absorb_max, 0, true};
inline constexpr Semiring plus_times{"plus-times", checked_add, 0, checked_mul, 1, false};
inline constexpr Semiring bool_or_and{"bool-or-and", detail::or_op, 0, detail::and_op, 1, true};

inline constexpr std::array<Semiring, 4> all_semirings = {max_plus, min_plus, plus_times,
                                                          bool_or_and};

inline std::optional<Semiring> semiring_by_name(std::string_view name) {
  for (const auto& s : all_semirings)
    if (s.name == name) return s;
  return std::nullopt;
}

/// ⊕ with its unit, as a collection reduction.
inline ReduceOp<> add_reduce(const Semiring& s) {
  return {std::string(s.name) + " add", s.add, s.zero};
}

/// Default value of the empty structure: the multiplicative unit
/// (1 for plus-times, 0 for the tropical semirings).
inline Label default_b(const Semiring& s) { return s.one; }

// ---------------------------------------------------------------------------
// Lists

/// foldr: h [] = e, h (a:x) = step(a, h x).
template <class T, class C, class Step>
C foldr_list(const Step& step, C e, const std::vector<T>& xs) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) e = step(*it, std::move(e));
  return e;
}

/// scanr f e = foldr h [e] where h a (b:x) = f a b : (b:x). The result is
/// the fold of every tail, longest first.
template <class T, class C, class Step>
std::vector<C> scanr_list(const Step& step, C e, const std::vector<T>& xs) {
  // Built back to front, so prepending is a push_back on the reversed list.
  std::vector<C> rev{std::move(e)};
  rev.reserve(xs.size() + 1);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) rev.push_back(step(*it, rev.back()));
  std::reverse(rev.begin(), rev.end());
  return rev;
}

using Segments = std::vector<std::vector<Label>>;

/// tails = foldr f [[]] where f x xss = (x : head xss) : xss
inline Segments tails_list(const std::vector<Label>& xs) {
  return foldr_list(
      [](Label x, Segments xss) {
        std::vector<Label> t{x};
        t.insert(t.end(), xss.front().begin(), xss.front().end());
        xss.insert(xss.begin(), std::move(t));
        return xss;
      },
      Segments{{}}, xs);
}

/// inits = foldr g [[]] where g x xss = [] : map (x:) xss
inline Segments inits_list(const std::vector<Label>& xs) {
  return foldr_list(
      [](Label x, Segments xss) {
        for (auto& s : xss) s.insert(s.begin(), x);
        xss.insert(xss.begin(), std::vector<Label>{});
        return xss;
      },
      Segments{{}}, xs);
}

/// segs = concat . map inits . tails
inline Segments segs_list(const std::vector<Label>& xs) {
  Segments out;
  for (const auto& t : tails_list(xs))
    for (auto& s : inits_list(t)) out.push_back(std::move(s));
  return out;
}

inline Label sum_list(const std::vector<Label>& xs) {
  return foldr_list([](Label a, Label b) { return checked_add(a, b); }, Label{0}, xs);
}

/// maximum = foldr1 max; the argument must be nonempty.
inline Label maximum_list(const std::vector<Label>& xs) {
  if (xs.empty()) throw Error("maximum of an empty list");
  return foldr_list([](Label a, Label b) { return std::max(a, b); }, xs.back(),
                    std::vector<Label>(xs.begin(), xs.end() - 1));
}

/// mss = maximum . map sum . segs, in cubic time. The segments are visited in
/// `segs_list` order and summed from scratch, without materialising the
/// cubic-size list of segments.
inline Label mss_spec(const std::vector<Label>& xs) {
  const std::size_t n = xs.size();
  Label best = 0;  // the empty segment of the first tail
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t len = 0; i + len <= n; ++len) {
      Label sum = 0;
      for (std::size_t k = i + len; k-- > i;) sum = checked_add(xs[k], sum);
      best = std::max(best, sum);
    }
  }
  return best;
}

/// maximum . map (maximum . map sum . inits) . tails, with the sums of the
/// inits of each tail accumulated left to right (quadratic time).
inline Label mss_quadratic(const std::vector<Label>& xs) {
  const std::size_t n = xs.size();
  Label best = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    Label prefix = 0, best_init = 0;
    for (std::size_t k = i; k < n; ++k) {
      prefix = checked_add(prefix, xs[k]);
      best_init = std::max(best_init, prefix);
    }
    best = std::max(best, best_init);
  }
  return best;
}

/// u ⊕ z = 0 ⊔ (u + z), the tropical instance of Horner's rule.
inline Label max_prefix_step(Label u, Label z) { return std::max<Label>(0, checked_add(u, z)); }

/// maximum . map sum . inits = foldr (⊕) 0.
inline Label max_prefix_sum(const std::vector<Label>& xs) {
  return foldr_list(max_prefix_step, Label{0}, xs);
}

/// maximum . scanr (⊕) 0: linear-time mss.
inline Label mss_linear(const std::vector<Label>& xs) {
  return maximum_list(scanr_list(max_prefix_step, Label{0}, xs));
}

/// Horner's rule in semiring `s`: foldr (\u z -> 1 ⊕ u ⊗ z) 1, equal to the
/// ⊕-sum of the ⊗-products of the inits.
inline Label horner_list(const Semiring& s, const std::vector<Label>& xs) {
  return foldr_list([&s](Label u, Label z) { return s.add(s.one, s.mul(u, z)); }, s.one, xs);
}

/// a0 + x (a1 + x (a2 + ...)).
inline Label poly_horner(const std::vector<Label>& coeffs, Label x) {
  return foldr_list([x](Label a, Label acc) { return checked_add(a, checked_mul(x, acc)); },
                    Label{0}, coeffs);
}

// ---------------------------------------------------------------------------
// Generic Horner

/// f = foldr (⊗) b . contents: the generic "product" of a layer.
struct ProductAlg {
  Semiring s;
  Label b;
  Label operator()(const Node<Label, Label>& n) const {
    return foldr_list([this](Label u, Label z) { return s.mul(u, z); }, b, contents_node(n));
  }
};

inline ProductAlg generic_product_alg(const Semiring& s, Label b) { return {s, b}; }

/// (b ⊕) . f
struct HornerAlg {
  ProductAlg f;
  Label operator()(const Node<Label, Label>& n) const { return f.s.add(f.b, f(n)); }
};

inline HornerAlg horner_alg(const Semiring& s, Label b) { return {generic_product_alg(s, b)}; }

/// fold ((b ⊕) . f): the ⊕-sum over all prunings of their products, in one pass.
inline Label horner_generic(const Semiring& s, Label b, const Term& t) {
  return fold(horner_alg(s, b), t);
}

/// The same quantity by enumeration: ⊕/ . M (fold_H (maybe b f)) . prune.
inline Label horner_by_prunings(const Semiring& s, Label b, const Term& t, Kind kind = Kind::bag,
                                PruneOptions opts = {}) {
  const auto f = generic_product_alg(s, b);
  const auto values = fmap([&](const Pruned& p) { return pruned_fold(b, f, p); }, prune(t, kind, opts));
  return reduce(add_reduce(s), values);
}

enum class Via { scan, brute };

/// Rejects set reductions of a non-idempotent ⊕: set union is idempotent, so
/// no such reduction distributes over it.
inline void check_distributivity_gate(const Semiring& s, Kind kind) {
  if (kind == Kind::set && !s.idempotent_add)
    throw DistributivityViolation("semiring " + std::string(s.name) +
                                  " has a non-idempotent sum, which cannot distribute over "
                                  "set union");
}

struct MssOptions {
  /// Run even when the distributivity gate fails; reductions are then unchecked.
  bool force = false;
  PruneOptions prune{};
};

/// Generic maximum segment sum.
///   scan:  ⊕/ . contents_L . scan ((b ⊕) . f)
///   brute: ⊕/ . M (fold_H (maybe b f)) . segs
inline Label mss_generic(const Semiring& s, Label b, const Term& t, Via via, Kind kind,
                         MssOptions opts = {}) {
  if (!opts.force) check_distributivity_gate(s, kind);
  const auto r = add_reduce(s);
  auto sum = [&](const Collection<Label>& c) {
    return opts.force ? reduce_unchecked(r, c) : reduce(r, c);
  };
  if (via == Via::scan) return sum(contents_labelled(scan(horner_alg(s, b), t), kind));
  const auto f = generic_product_alg(s, b);
  return sum(fmap([&](const Pruned& p) { return pruned_fold(b, f, p); }, segs(t, kind, opts.prune)));
}

}  // namespace gmss
