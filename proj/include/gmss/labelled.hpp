#pragma once

// The labelled variant L a = mu(G a) with G a b = a * F 1 b: every node
// carries exactly one value, and the shape of the node (its constructor and
// child positions) is kept as a skeleton whose own label slot, if any, holds
// the unit value.
//
// `subterms` is the generic tails, and `scan` folds every subterm in a single
// bottom-up pass.

#include <memory>
#include <utility>
#include <vector>

#include "gmss/collections.hpp"
#include "gmss/schemes.hpp"
#include "gmss/shapes.hpp"

namespace gmss {

template <class V>
class Labelled {
 public:
  using value_type = V;
  using skeleton_type = Node<Unit, Labelled>;

  Labelled(V value, skeleton_type skeleton)
      : p_(std::make_shared<const Rep>(Rep{std::move(value), std::move(skeleton)})) {}

  const V& value() const noexcept { return p_->value; }
  const skeleton_type& skeleton() const noexcept { return p_->skeleton; }
  Tag tag() const noexcept { return p_->skeleton.tag; }

  friend bool operator==(const Labelled& a, const Labelled& b) {
    return a.p_ == b.p_ || (a.value() == b.value() && a.skeleton() == b.skeleton());
  }

 private:
  struct Rep {
    V value;
    skeleton_type skeleton;
  };
  std::shared_ptr<const Rep> p_;
};

/// The unique arrow to the unit type.
struct Bang {
  template <class T>
  constexpr Unit operator()(const T&) const noexcept { return {}; }
};

/// Label at the root.
template <class V>
const V& root(const Labelled<V>& l) {
  return l.value();
}

/// Every node labelled with the subterm rooted there, built as
/// fold (in_G . <in_F . F id root, F ! id>).
inline Labelled<Term> subterms(const Term& t) {
  return fold<Labelled<Term>>(
      [](const Node<Label, Labelled<Term>>& n) {
        Term here(bimap(Identity{}, [](const Labelled<Term>& k) { return root(k); }, n));
        return Labelled<Term>(std::move(here), bimap(Bang{}, Identity{}, n));
      },
      t);
}

/// subterms as a paramorphism; the original child terms are read directly
/// rather than rebuilt from the roots.
inline Labelled<Term> subterms_para(const Term& t) {
  using Slot = std::pair<Labelled<Term>, Term>;
  return para<Labelled<Term>>(
      [](const Node<Label, Slot>& n) {
        Term here(bimap(Identity{}, [](const Slot& s) { return s.second; }, n));
        return Labelled<Term>(std::move(here),
                              bimap(Bang{}, [](const Slot& s) { return s.first; }, n));
      },
      t);
}

/// scan f = L (fold f) . subterms, computed in one pass as
/// fold (in_G . <f . F id root, F ! id>).
template <class Alg>
auto scan(const Alg& alg, const Term& t) {
  using C = detail::algebra_carrier_t<Alg>;
  return fold<Labelled<C>>(
      [&alg](const Node<Label, Labelled<C>>& n) {
        C here = alg(bimap(Identity{}, [](const Labelled<C>& k) { return root(k); }, n));
        return Labelled<C>(std::move(here), bimap(Bang{}, Identity{}, n));
      },
      t);
}

/// Functor action L f.
template <class F, class V, class W = std::decay_t<std::invoke_result_t<const F&, const V&>>>
Labelled<W> map_labelled(const F& f, const Labelled<V>& l) {
  return Labelled<W>(f(l.value()),
                     bimap(Identity{}, [&f](const Labelled<V>& k) { return map_labelled(f, k); },
                           l.skeleton()));
}

namespace detail {
template <class V>
void labelled_contents_into(const Labelled<V>& l, std::vector<V>& out) {
  out.push_back(l.value());
  for (const auto& k : l.skeleton().kids) labelled_contents_into(k, out);
}
template <class V>
void labelled_tags_into(const Labelled<V>& l, std::vector<Tag>& out) {
  out.push_back(l.tag());
  for (const auto& k : l.skeleton().kids) labelled_tags_into(k, out);
}
}  // namespace detail

/// Values in preorder.
template <class V>
std::vector<V> contents_labelled(const Labelled<V>& l) {
  std::vector<V> out;
  detail::labelled_contents_into(l, out);
  return out;
}

/// contents_L as a natural transformation into a collection monad.
template <class V>
Collection<V> contents_labelled(const Labelled<V>& l, Kind kind) {
  return Collection<V>(kind, contents_labelled(l));
}

/// Skeleton constructor tags in preorder.
template <class V>
std::vector<Tag> labelled_tags(const Labelled<V>& l) {
  std::vector<Tag> out;
  detail::labelled_tags_into(l, out);
  return out;
}

}  // namespace gmss
