#pragma once

// Basic vocabulary shared by every gmss header: the label carrier, the error
// hierarchy, checked 64-bit arithmetic and the canonical total order used by
// bags and sets.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gmss {

using Label = std::int64_t;

/// Bottom element for max-based reductions over labels.
inline constexpr Label min_sentinel = std::numeric_limits<Label>::min();
/// Top element for min-based reductions over labels.
inline constexpr Label max_sentinel = std::numeric_limits<Label>::max();

/// The unit type `1`; the only label carried by a skeleton node.
struct Unit {
  friend constexpr bool operator==(Unit, Unit) noexcept { return true; }
  friend constexpr std::strong_ordering operator<=>(Unit, Unit) noexcept {
    return std::strong_ordering::equal;
  }
};

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("parse error at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class DepthExceeded : public Error {
 public:
  explicit DepthExceeded(std::size_t max_depth)
      : Error("unfold exceeded depth bound " + std::to_string(max_depth)),
        max_depth_(max_depth) {}
  std::size_t max_depth() const noexcept { return max_depth_; }

 private:
  std::size_t max_depth_;
};

class SizeGuardExceeded : public Error {
 public:
  SizeGuardExceeded(std::size_t size, std::size_t guard)
      : Error("collection of size " + std::to_string(size) +
              " exceeds guard " + std::to_string(guard)),
        size_(size) {}
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_;
};

/// A node or term does not conform to its shape functor.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// A reduction operator failed its sampled law checks for the collection kind.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Thrown when a (semiring, collection kind) pair cannot satisfy the
/// distributivity required by generic Horner evaluation.
class DistributivityViolation : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Checked arithmetic

inline Label checked_add(Label a, Label b) {
  Label r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Label checked_mul(Label a, Label b) {
  Label r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline Label checked_neg(Label a) {
  if (a == min_sentinel) throw OverflowError("overflow in negation");
  return -a;
}

// ---------------------------------------------------------------------------
// Canonical order
//
// Bags and sets keep their elements sorted under this order. Class types opt
// in with a member `canonical_compare(const T&) const`; pairs, vectors and
// optionals compare lexicographically (an empty optional is least).

namespace detail {
template <class T> struct is_pair : std::false_type {};
template <class A, class B> struct is_pair<std::pair<A, B>> : std::true_type {};
template <class T> struct is_vector : std::false_type {};
template <class A, class Al> struct is_vector<std::vector<A, Al>> : std::true_type {};
template <class T> struct is_optional : std::false_type {};
template <class A> struct is_optional<std::optional<A>> : std::true_type {};
}  // namespace detail

template <class T>
std::strong_ordering canonical_compare(const T& a, const T& b) {
  if constexpr (requires { { a.canonical_compare(b) } -> std::convertible_to<std::strong_ordering>; }) {
    return a.canonical_compare(b);
  } else if constexpr (detail::is_pair<T>::value) {
    if (auto c = canonical_compare(a.first, b.first); c != 0) return c;
    return canonical_compare(a.second, b.second);
  } else if constexpr (detail::is_vector<T>::value) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
      if (auto c = canonical_compare(a[i], b[i]); c != 0) return c;
    return a.size() <=> b.size();
  } else if constexpr (detail::is_optional<T>::value) {
    if (!a || !b) return a.has_value() <=> b.has_value();
    return canonical_compare(*a, *b);
  } else {
    return a <=> b;
  }
}

struct CanonicalLess {
  template <class T>
  bool operator()(const T& a, const T& b) const {
    return canonical_compare(a, b) < 0;
  }
};

}  // namespace gmss
