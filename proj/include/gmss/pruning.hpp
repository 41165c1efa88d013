#pragma once

// The pruned variant U a = mu(H a), H a b = 1 + F a b, and the generic
// "initial segments" operation: every way of replacing some subterms of a
// term by the Empty marker, collected in a list, bag or set.

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

#include "gmss/collections.hpp"
#include "gmss/labelled.hpp"
#include "gmss/schemes.hpp"
#include "gmss/shapes.hpp"

namespace gmss {

struct PruneOptions {
  /// Largest collection prune or segs may build before giving up.
  std::size_t guard = 1'000'000;
};

namespace detail {

inline std::size_t saturating_mul(std::size_t a, std::size_t b) {
  std::size_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::size_t>::max();
  return r;
}

inline std::size_t saturating_add(std::size_t a, std::size_t b) {
  std::size_t r;
  if (__builtin_add_overflow(a, b, &r)) return std::numeric_limits<std::size_t>::max();
  return r;
}

/// in_H: Nothing is the Empty marker, Just n a proper node.
inline Pruned in_pruned(const std::optional<Node<Label, Pruned>>& n) {
  return n ? Pruned(*n) : Pruned::empty();
}

}  // namespace detail

/// All prunings of `t`:
/// fold (M in_H . opt Nothing . M Just . δ₂).
inline Collection<Pruned> prune(const Term& t, Kind kind, PruneOptions opts = {}) {
  using Layer = Node<Label, Pruned>;
  return fold<Collection<Pruned>>(
      [kind, opts](const Node<Label, Collection<Pruned>>& n) {
        std::size_t size = 1;
        for (const auto& k : n.kids) size = detail::saturating_mul(size, k.size());
        size = detail::saturating_add(size, 1);
        if (size > opts.guard) throw SizeGuardExceeded(size, opts.guard);
        const auto layers = distribute_node(n, kind);
        const auto justs = fmap([](const Layer& l) { return std::optional<Layer>(l); }, layers);
        return fmap(detail::in_pruned, opt(std::optional<Layer>(), justs));
      },
      t);
}

/// fold_H (maybe b f): Empty evaluates to `b`, a node to `alg` of its
/// evaluated children.
template <class C, class Alg>
C pruned_fold(const C& b, const Alg& alg, const Pruned& p) {
  if (p.is_empty()) return b;
  return alg(bimap(Identity{}, [&](const Pruned& k) { return pruned_fold(b, alg, k); }, p.node()));
}

/// Generic segments: join . M prune . contents_L . subterms.
inline Collection<Pruned> segs(const Term& t, Kind kind, PruneOptions opts = {}) {
  const auto tails = contents_labelled(subterms(t), kind);
  const auto pruned = fmap([&](const Term& s) { return prune(s, kind, opts); }, tails);
  std::size_t total = 0;
  for (const auto& c : pruned) total = detail::saturating_add(total, c.size());
  if (total > opts.guard) throw SizeGuardExceeded(total, opts.guard);
  return join(pruned);
}

/// |prune(t, bag)| by the recurrence: 2 for a node without children,
/// otherwise 1 + the product over the children. Saturates.
inline std::size_t bag_prune_count(const Term& t) {
  const auto& n = t.node();
  if (n.kids.empty()) return 2;
  std::size_t c = 1;
  for (const Term& k : n.kids) c = detail::saturating_mul(c, bag_prune_count(k));
  return detail::saturating_add(c, 1);
}

/// |segs(t, bag)|: the sum of the prune counts of every subterm.
inline std::size_t bag_segs_count(const Term& t) {
  std::size_t c = bag_prune_count(t);
  for (const Term& k : t.node().kids) c = detail::saturating_add(c, bag_segs_count(k));
  return c;
}

/// True when `p` is `t` with some subterms replaced by Empty.
inline bool is_pruning_of(const Pruned& p, const Term& t) {
  if (p.is_empty()) return true;
  const auto& a = p.node();
  const auto& b = t.node();
  if (a.tag != b.tag || a.label != b.label) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!is_pruning_of(a.kids[i], b.kids[i])) return false;
  return true;
}

}  // namespace gmss
