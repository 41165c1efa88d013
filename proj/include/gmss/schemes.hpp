#pragma once

// Recursion schemes over Terms (fold, depth-bounded unfold, para) and the
// positional traversal that everything else is built on: `contents` and the
// distributors of a node over a collection monad.

#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include "gmss/collections.hpp"
#include "gmss/core.hpp"
#include "gmss/shapes.hpp"

namespace gmss {

/// An F-algebra with carrier C.
template <class C>
using Algebra = std::function<C(const Node<Label, C>&)>;

/// A coalgebra producing one layer from a seed.
template <class Seed>
using Coalgebra = std::function<Node<Label, Seed>(const Seed&)>;

namespace detail {

template <class>
struct call_arg;
template <class R, class Cls, class A>
struct call_arg<R (Cls::*)(A) const> { using type = std::decay_t<A>; };
template <class R, class Cls, class A>
struct call_arg<R (Cls::*)(A)> { using type = std::decay_t<A>; };

template <class F>
struct callable_arg : call_arg<decltype(&F::operator())> {};
template <class R, class A>
struct callable_arg<R(A)> { using type = std::decay_t<A>; };
template <class R, class A>
struct callable_arg<R (*)(A)> { using type = std::decay_t<A>; };

template <class N>
struct node_child;
template <class L, class C>
struct node_child<Node<L, C>> { using type = C; };

/// Carrier of an algebra whose call operator is not a template.
template <class Alg>
using algebra_carrier_t =
    typename node_child<typename callable_arg<Alg>::type>::type;

template <class C, class Alg>
struct carrier_or { using type = C; };
template <class Alg>
struct carrier_or<void, Alg> { using type = algebra_carrier_t<Alg>; };

template <class C, class Alg>
C fold_impl(const Alg& alg, const Term& t) {
  return alg(bimap(Identity{}, [&alg](const Term& k) { return fold_impl<C>(alg, k); }, t.node()));
}

template <class C, class PAlg>
C para_impl(const PAlg& palg, const Term& t) {
  return palg(bimap(
      Identity{},
      [&palg](const Term& k) { return std::pair<C, Term>(para_impl<C>(palg, k), k); },
      t.node()));
}

template <class Seed, class Coalg>
Term unfold_impl(const Coalg& coalg, const Seed& seed, std::size_t level, std::size_t max_depth) {
  if (level > max_depth) throw DepthExceeded(max_depth);
  const Node<Label, Seed> layer = coalg(seed);
  return Term(bimap(
      Identity{},
      [&](const Seed& s) { return unfold_impl<Seed>(coalg, s, level + 1, max_depth); },
      layer));
}

template <class T>
void cartesian(const std::vector<Collection<T>>& slots, std::size_t i, std::vector<T>& pick,
               std::vector<std::vector<T>>& out) {
  if (i == slots.size()) {
    out.push_back(pick);
    return;
  }
  for (const T& x : slots[i]) {
    pick.push_back(x);
    cartesian(slots, i + 1, pick, out);
    pick.pop_back();
  }
}

}  // namespace detail

/// Catamorphism: the unique homomorphism from the initial algebra.
/// The carrier is deduced from a non-generic algebra, or given explicitly.
template <class C = void, class Alg>
auto fold(const Alg& alg, const Term& t) {
  using Carrier = typename detail::carrier_or<C, Alg>::type;
  return detail::fold_impl<Carrier>(alg, t);
}

/// Paramorphism: each child slot holds (recursive result, original child).
template <class C, class PAlg>
C para(const PAlg& palg, const Term& t) {
  return detail::para_impl<C>(palg, t);
}

/// Anamorphism cut off at `max_depth` layers below the root; a seed that
/// would need expanding deeper raises DepthExceeded.
template <class Seed, class Coalg>
Term unfold_bounded(const Coalg& coalg, const Seed& seed, std::size_t max_depth) {
  return detail::unfold_impl<Seed>(coalg, seed, 0, max_depth);
}

/// Relabelling T g, written as the fold in . F g id.
template <class G>
Term map_term(const G& g, const Term& t) {
  return fold<Term>([&g](const Node<Label, Term>& n) { return Term(bimap(g, Identity{}, n)); }, t);
}

/// Element positions of a diagonal node, label first, then children left to right.
template <class C>
std::vector<C> contents_node(const Node<C, C>& n) {
  std::vector<C> out;
  out.reserve(n.kids.size() + 1);
  if (n.label) out.push_back(*n.label);
  out.insert(out.end(), n.kids.begin(), n.kids.end());
  return out;
}

namespace detail {
inline void contents_into(const Term& t, std::vector<Label>& out) {
  const auto& n = t.node();
  if (n.label) out.push_back(*n.label);
  for (const Term& k : n.kids) contents_into(k, out);
}
}  // namespace detail

/// Labels of a term in preorder.
inline std::vector<Label> contents_term(const Term& t) {
  std::vector<Label> out;
  detail::contents_into(t, out);
  return out;
}

/// δ₂: distributes the shape functor over the monad in its child positions.
/// Choices vary fastest in the rightmost position; a node with no child
/// positions yields a singleton.
template <class L, class T>
Collection<Node<L, T>> distribute_node(const Node<L, Collection<T>>& n, Kind kind) {
  for (const auto& c : n.kids) detail::require_same_kind(kind, c.kind(), "distribute_node");
  std::vector<std::vector<T>> combos;
  std::vector<T> pick;
  detail::cartesian(n.kids, 0, pick, combos);
  std::vector<Node<L, T>> out;
  out.reserve(combos.size());
  for (auto& kids : combos) out.push_back(Node<L, T>{n.tag, n.label, std::move(kids)});
  return Collection<Node<L, T>>(kind, std::move(out));
}

/// δ: distributes over the monad in both label and child positions, in
/// contents order.
template <class T>
Collection<Node<T, T>> bidistribute_node(const Node<Collection<T>, Collection<T>>& n, Kind kind) {
  const auto slots = contents_node(n);
  for (const auto& c : slots) detail::require_same_kind(kind, c.kind(), "bidistribute_node");
  std::vector<std::vector<T>> combos;
  std::vector<T> pick;
  detail::cartesian(slots, 0, pick, combos);
  std::vector<Node<T, T>> out;
  out.reserve(combos.size());
  for (auto& c : combos) {
    Node<T, T> m{n.tag, std::nullopt, {}};
    std::size_t i = 0;
    if (n.label) m.label = c[i++];
    m.kids.assign(c.begin() + static_cast<std::ptrdiff_t>(i), c.end());
    out.push_back(std::move(m));
  }
  return Collection<Node<T, T>>(kind, std::move(out));
}

// A few algebras used throughout.

/// Sum of the labels and child values in a layer.
inline Label sum_alg(const Node<Label, Label>& n) {
  Label s = n.label.value_or(0);
  for (Label k : n.kids) s = checked_add(s, k);
  return s;
}

/// The constructor `in`: rebuilds a term from a layer of terms.
inline Term in_term(const Node<Label, Term>& n) { return Term(n); }

}  // namespace gmss
