#pragma once

// Collection monads: finite lists, bags and sets.
//
// A Collection<T> is a finite sequence tagged with its kind. Lists keep order
// and multiplicity; bags are kept sorted under the canonical order (so equal
// bags have equal sequences, and the (element, multiplicity) form is a run
// length encoding of the sequence); sets are sorted and duplicate free.
//
// Every operation preserves the representation invariant, so structural
// equality of two collections is equality in the monad.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gmss/core.hpp"
#include "gmss/shapes.hpp"

namespace gmss {

enum class Kind : std::uint8_t { list, bag, set };

inline constexpr std::array<Kind, 3> all_kinds = {Kind::list, Kind::bag, Kind::set};

constexpr std::string_view to_string(Kind k) noexcept {
  switch (k) {
    case Kind::list: return "list";
    case Kind::bag:  return "bag";
    case Kind::set:  return "set";
  }
  return "?";
}

inline std::optional<Kind> parse_kind(std::string_view name) {
  for (Kind k : all_kinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

template <class T>
class Collection {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  explicit Collection(Kind kind = Kind::list) : kind_(kind) {}
  Collection(Kind kind, std::vector<T> items) : kind_(kind), items_(std::move(items)) {
    normalize();
  }
  Collection(Kind kind, std::initializer_list<T> items)
      : Collection(kind, std::vector<T>(items)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<T>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }

  /// Canonical bag form: distinct elements in order, with multiplicities.
  std::vector<std::pair<T, std::size_t>> multiplicities() const {
    std::vector<T> sorted = items_;
    if (kind_ == Kind::list) std::stable_sort(sorted.begin(), sorted.end(), CanonicalLess{});
    std::vector<std::pair<T, std::size_t>> out;
    for (auto& x : sorted) {
      if (!out.empty() && gmss::canonical_compare(out.back().first, x) == 0)
        ++out.back().second;
      else
        out.emplace_back(std::move(x), 1);
    }
    return out;
  }

  friend bool operator==(const Collection& a, const Collection& b) {
    return a.kind_ == b.kind_ && a.items_.size() == b.items_.size() &&
           std::equal(a.items_.begin(), a.items_.end(), b.items_.begin(),
                      [](const T& x, const T& y) { return gmss::canonical_compare(x, y) == 0; });
  }

  std::strong_ordering canonical_compare(const Collection& o) const {
    if (auto c = kind_ <=> o.kind_; c != 0) return c;
    return gmss::canonical_compare(items_, o.items_);
  }

 private:
  void normalize() {
    if (kind_ == Kind::list) return;
    std::sort(items_.begin(), items_.end(), CanonicalLess{});
    if (kind_ == Kind::set)
      items_.erase(std::unique(items_.begin(), items_.end(),
                               [](const T& x, const T& y) {
                                 return gmss::canonical_compare(x, y) == 0;
                               }),
                   items_.end());
  }

  Kind kind_;
  std::vector<T> items_;
};

namespace detail {
inline void require_same_kind(Kind a, Kind b, std::string_view op) {
  if (a != b)
    throw KindMismatch(std::string(op) + ": " + std::string(to_string(a)) + " vs " +
                       std::string(to_string(b)));
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Monad structure

/// `return`: the one-element collection.
template <class T>
Collection<T> singleton(Kind kind, T a) {
  std::vector<T> v;
  v.push_back(std::move(a));
  return Collection<T>(kind, std::move(v));
}

template <class T>
Collection<T> empty_of(Kind kind) {
  return Collection<T>(kind);
}

/// The union operator: append, bag union or set union.
template <class T>
Collection<T> unite(const Collection<T>& x, const Collection<T>& y) {
  detail::require_same_kind(x.kind(), y.kind(), "union");
  std::vector<T> out;
  out.reserve(x.size() + y.size());
  switch (x.kind()) {
    case Kind::list:
      out.insert(out.end(), x.begin(), x.end());
      out.insert(out.end(), y.begin(), y.end());
      break;
    case Kind::bag:
      std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out), CanonicalLess{});
      break;
    case Kind::set:
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out),
                     CanonicalLess{});
      break;
  }
  return Collection<T>(x.kind(), std::move(out));
}

/// Functor action M f.
template <class F, class T>
auto fmap(F&& f, const Collection<T>& x) {
  using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
  std::vector<U> out;
  out.reserve(x.size());
  for (const T& a : x) out.push_back(f(a));
  return Collection<U>(x.kind(), std::move(out));
}

/// Monad multiplication; every inner collection must share the outer kind.
template <class T>
Collection<T> join(const Collection<Collection<T>>& xx) {
  std::size_t total = 0;
  for (const auto& inner : xx) {
    detail::require_same_kind(xx.kind(), inner.kind(), "join");
    total += inner.size();
  }
  std::vector<T> out;
  out.reserve(total);
  for (const auto& inner : xx) out.insert(out.end(), inner.begin(), inner.end());
  return Collection<T>(xx.kind(), std::move(out));
}

template <class T, class K>
auto bind(const Collection<T>& x, K&& k) {
  return join(fmap(std::forward<K>(k), x));
}

/// A new alternative: return a ⊎ x.
template <class T>
Collection<T> opt(T a, const Collection<T>& x) {
  return unite(singleton(x.kind(), std::move(a)), x);
}

/// Cartesian product: join (M (\a -> M (a,) y) x).
template <class A, class B>
Collection<std::pair<A, B>> cp(const Collection<A>& x, const Collection<B>& y) {
  detail::require_same_kind(x.kind(), y.kind(), "cp");
  return join(fmap(
      [&y](const A& a) { return fmap([&a](const B& b) { return std::pair<A, B>(a, b); }, y); },
      x));
}

/// Distributes the list functor over the collection monad:
/// foldr (M (:) . cp) (return []).
template <class T>
Collection<std::vector<T>> dist_list(const std::vector<Collection<T>>& xs, Kind kind) {
  for (const auto& x : xs) detail::require_same_kind(kind, x.kind(), "dist_list");
  auto acc = singleton(kind, std::vector<T>{});
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    acc = fmap(
        [](const std::pair<T, std::vector<T>>& p) {
          std::vector<T> v;
          v.reserve(p.second.size() + 1);
          v.push_back(p.first);
          v.insert(v.end(), p.second.begin(), p.second.end());
          return v;
        },
        cp(*it, acc));
  }
  return acc;
}

namespace detail {
template <class T>
Collection<std::vector<T>> dist_list_lift(const std::vector<Collection<T>>& xs, std::size_t i,
                                          Kind kind) {
  if (i == xs.size()) return singleton(kind, std::vector<T>{});
  // liftM2 (:) mb rest = mb >>= \a -> rest >>= \as -> return (a:as)
  const auto rest = dist_list_lift(xs, i + 1, kind);
  return bind(xs[i], [&](const T& a) {
    return bind(rest, [&](const std::vector<T>& as) {
      std::vector<T> v{a};
      v.insert(v.end(), as.begin(), as.end());
      return singleton(kind, std::move(v));
    });
  });
}
}  // namespace detail

/// The same distributor written with liftM0 / liftM2 (monadic bind).
template <class T>
Collection<std::vector<T>> dist_list_lift(const std::vector<Collection<T>>& xs, Kind kind) {
  for (const auto& x : xs) detail::require_same_kind(kind, x.kind(), "dist_list_lift");
  return detail::dist_list_lift(xs, 0, kind);
}

// ---------------------------------------------------------------------------
// Reductions

/// A binary operator with its unit, used as the monad algebra ⊕/.
template <class C = Label>
struct ReduceOp {
  std::string name;
  std::function<C(C, C)> op;
  C unit;
};

inline ReduceOp<> max_reduce() {
  return {"max", [](Label a, Label b) { return std::max(a, b); }, min_sentinel};
}
inline ReduceOp<> min_reduce() {
  return {"min", [](Label a, Label b) { return std::min(a, b); }, max_sentinel};
}
inline ReduceOp<> plus_reduce() { return {"+", checked_add, 0}; }
inline ReduceOp<> times_reduce() { return {"*", checked_mul, 1}; }

struct ReduceOptions {
  /// Sampled triples used to check the operator laws.
  std::size_t trials = 64;
};

/// Checks, on the elements of `x` and the unit (triples sampled when there are
/// many), that the operator satisfies the laws union satisfies for x's kind: associativity
/// and unit always, commutativity for bags and sets, idempotence for sets.
template <class C>
void validate_reduce(const ReduceOp<C>& r, const Collection<C>& x, ReduceOptions opts = {}) {
  std::vector<C> pool = x.items();
  pool.push_back(r.unit);
  std::sort(pool.begin(), pool.end(), CanonicalLess{});
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  auto fail = [&](const std::string& law) {
    throw PreconditionError("operator " + r.name + " is not " + law + " as required for " +
                            std::string(to_string(x.kind())) + " reduction");
  };
  for (const C& a : pool) {
    if (r.op(r.unit, a) != a || r.op(a, r.unit) != a) fail("unital");
    if (x.kind() == Kind::set && r.op(a, a) != a) fail("idempotent");
  }
  auto check = [&](const C& a, const C& b, const C& c) {
    if (r.op(r.op(a, b), c) != r.op(a, r.op(b, c))) fail("associative");
    if (x.kind() != Kind::list && r.op(a, b) != r.op(b, a)) fail("commutative");
  };

  const std::size_t p = pool.size();
  if (p * p * p <= opts.trials) {
    for (const C& a : pool)
      for (const C& b : pool)
        for (const C& c : pool) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
  for (std::size_t i = 0; i < opts.trials; ++i)
    check(pool[rng() % p], pool[rng() % p], pool[rng() % p]);
}

/// ⊕/ without law checks: folds the elements in sequence order from the unit.
template <class C>
C reduce_unchecked(const ReduceOp<C>& r, const Collection<C>& x) {
  C acc = r.unit;
  for (const C& a : x) acc = r.op(acc, a);
  return acc;
}

/// ⊕/ on a collection; throws PreconditionError when the operator's sampled
/// laws do not match the kind.
template <class C>
C reduce(const ReduceOp<C>& r, const Collection<C>& x, ReduceOptions opts = {}) {
  validate_reduce(r, x, opts);
  return reduce_unchecked(r, x);
}

/// Optional axiom: join (M (\_ -> empty) x) = empty.
template <class T>
bool satisfies_zero_axiom(const Collection<T>& x) {
  return join(fmap([&x](const T&) { return empty_of<T>(x.kind()); }, x)).empty();
}

// ---------------------------------------------------------------------------
// Text form: [a, b] for lists, <a, b> for bags, {a, b} for sets.

template <class T>
std::string show(const T& a) {
  if constexpr (std::is_same_v<T, Term> || std::is_same_v<T, Pruned>) {
    return to_sexpr(a);
  } else if constexpr (detail::is_pair<T>::value) {
    return "(" + show(a.first) + ", " + show(a.second) + ")";
  } else if constexpr (detail::is_vector<T>::value) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + show(a[i]);
    return out + "]";
  } else if constexpr (requires { a.index(); a.valueless_by_exception(); }) {
    return std::visit([](const auto& x) { return show(x); }, a);
  } else if constexpr (std::is_same_v<T, Tag>) {
    return std::string(info(a).keyword);
  } else if constexpr (requires { a.tag; a.label; a.kids; }) {
    std::string out = "(" + std::string(info(a.tag).keyword);
    if (a.label) out += " " + show(*a.label);
    for (const auto& k : a.kids) out += " " + show(k);
    return out + ")";
  } else if constexpr (requires { a.kind(); a.items(); }) {
    const char* open = a.kind() == Kind::list ? "[" : a.kind() == Kind::bag ? "<" : "{";
    const char* close = a.kind() == Kind::list ? "]" : a.kind() == Kind::bag ? ">" : "}";
    std::string out = open;
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + show(a.items()[i]);
    return out + close;
  } else {
    std::ostringstream os;
    os << a;
    return os.str();
  }
}

}  // namespace gmss
