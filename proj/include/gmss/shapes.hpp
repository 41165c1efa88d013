#pragma once

// Shape functors, the recursive Term type and its s-expression syntax.
//
// Four closed shape functors are supported:
//
//   list   F a b = 1 + a*b        nil | (cons a t)
//   etree  F a b = a + b*b        (tip a) | (bin t u)
//   itree  F a b = 1 + a*b*b      nilt | (node a t u)
//   htree  F a b = a + a*b*b      (leaf a) | (fork a t u)
//
// A Node<L, C> is one layer F L C: a constructor tag, an optional label slot
// (engaged exactly when the constructor carries an `a`) and the ordered child
// slots. A Term is the least fixed point; a Pruned value additionally admits
// the Empty marker `E` at any position (the functor 1 + F a b).

#include <array>
#include <charconv>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmss/core.hpp"

namespace gmss {

enum class Shape : std::uint8_t { list, etree, itree, htree };

enum class Tag : std::uint8_t { nil, cons, tip, bin, nilt, node, leaf, fork };

struct TagInfo {
  Shape shape;
  bool labelled;
  std::uint8_t arity;
  std::string_view keyword;
};

constexpr TagInfo info(Tag t) noexcept {
  switch (t) {
    case Tag::nil:  return {Shape::list, false, 0, "nil"};
    case Tag::cons: return {Shape::list, true, 1, "cons"};
    case Tag::tip:  return {Shape::etree, true, 0, "tip"};
    case Tag::bin:  return {Shape::etree, false, 2, "bin"};
    case Tag::nilt: return {Shape::itree, false, 0, "nilt"};
    case Tag::node: return {Shape::itree, true, 2, "node"};
    case Tag::leaf: return {Shape::htree, true, 0, "leaf"};
    case Tag::fork: return {Shape::htree, true, 2, "fork"};
  }
  return {Shape::list, false, 0, "?"};
}

constexpr Shape shape_of(Tag t) noexcept { return info(t).shape; }
constexpr bool has_label(Tag t) noexcept { return info(t).labelled; }
constexpr std::size_t arity(Tag t) noexcept { return info(t).arity; }
/// Atoms print without parentheses (constructors with no label and no children).
constexpr bool is_atom(Tag t) noexcept { return !has_label(t) && arity(t) == 0; }

/// The two constructors of a shape: {base, recursive}.
constexpr std::array<Tag, 2> constructors(Shape s) noexcept {
  switch (s) {
    case Shape::list:  return {Tag::nil, Tag::cons};
    case Shape::etree: return {Tag::tip, Tag::bin};
    case Shape::itree: return {Tag::nilt, Tag::node};
    case Shape::htree: return {Tag::leaf, Tag::fork};
  }
  return {Tag::nil, Tag::cons};
}

inline constexpr std::array<Shape, 4> all_shapes = {Shape::list, Shape::etree, Shape::itree,
                                                    Shape::htree};

constexpr std::string_view to_string(Shape s) noexcept {
  switch (s) {
    case Shape::list:  return "list";
    case Shape::etree: return "etree";
    case Shape::itree: return "itree";
    case Shape::htree: return "htree";
  }
  return "?";
}

inline std::optional<Shape> parse_shape(std::string_view name) {
  for (Shape s : all_shapes)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Node

template <class L, class C>
struct Node {
  Tag tag;
  std::optional<L> label;
  std::vector<C> kids;

  bool operator==(const Node&) const = default;

  std::strong_ordering canonical_compare(const Node& o) const {
    if (auto c = tag <=> o.tag; c != 0) return c;
    if (auto c = gmss::canonical_compare(label, o.label); c != 0) return c;
    return gmss::canonical_compare(kids, o.kids);
  }
};

/// Builds a node, checking label presence and arity against the tag.
template <class L, class C>
Node<L, C> make_node(Tag tag, std::optional<L> label, std::vector<C> kids) {
  if (label.has_value() != has_label(tag))
    throw ShapeError(std::string(info(tag).keyword) +
                     (has_label(tag) ? " requires a label" : " takes no label"));
  if (kids.size() != arity(tag))
    throw ShapeError(std::string(info(tag).keyword) + " takes " + std::to_string(arity(tag)) +
                     " children, got " + std::to_string(kids.size()));
  return Node<L, C>{tag, std::move(label), std::move(kids)};
}

/// The bifunctor action F f g on one layer; the tag and arity are preserved.
template <class F, class G, class L, class C>
auto bimap(F&& f, G&& g, const Node<L, C>& n) {
  using L2 = std::decay_t<std::invoke_result_t<F&, const L&>>;
  using C2 = std::decay_t<std::invoke_result_t<G&, const C&>>;
  Node<L2, C2> out{n.tag, std::nullopt, {}};
  if (n.label) out.label = f(*n.label);
  out.kids.reserve(n.kids.size());
  for (const C& k : n.kids) out.kids.push_back(g(k));
  return out;
}

struct Identity {
  template <class T>
  constexpr T operator()(const T& x) const { return x; }
};

// ---------------------------------------------------------------------------
// Tree: Term (Prunable = false) and Pruned (Prunable = true)

template <bool Prunable>
class Tree {
 public:
  using node_type = Node<Label, Tree>;
  static constexpr bool prunable = Prunable;

  /// The Empty marker; only Pruned values have one.
  Tree() requires Prunable = default;

  explicit Tree(node_type n) {
    n = make_node(n.tag, std::move(n.label), std::move(n.kids));
    for (const Tree& k : n.kids)
      if (!k.is_empty() && k.shape() != shape_of(n.tag))
        throw ShapeError("child of " + std::string(info(n.tag).keyword) + " has shape " +
                         std::string(to_string(k.shape())));
    p_ = std::make_shared<const node_type>(std::move(n));
  }

  static Tree empty() requires Prunable { return Tree(); }

  bool is_empty() const noexcept { return p_ == nullptr; }
  const node_type& node() const {
    if (!p_) throw Error("node() on the Empty marker");
    return *p_;
  }
  Tag tag() const { return node().tag; }
  Shape shape() const { return shape_of(tag()); }

  friend bool operator==(const Tree& a, const Tree& b) {
    if (a.p_ == b.p_) return true;
    if (!a.p_ || !b.p_) return false;
    return *a.p_ == *b.p_;
  }

  /// Total order: Empty first; otherwise the lexicographic order of the
  /// serialized token sequence. For Terms this coincides with the byte order
  /// of `to_sexpr`.
  std::strong_ordering canonical_compare(const Tree& o) const;

  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.canonical_compare(b);
  }

 private:
  std::shared_ptr<const node_type> p_;
};

using Term = Tree<false>;
using Pruned = Tree<true>;

namespace detail {

inline std::string_view label_token(Label v, std::array<char, 24>& buf) {
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), static_cast<std::size_t>(end - buf.data())};
}

inline std::strong_ordering compare_tokens(std::string_view a, std::string_view b) {
  const int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less
       : c > 0 ? std::strong_ordering::greater
               : std::strong_ordering::equal;
}

}  // namespace detail

template <bool P>
std::strong_ordering Tree<P>::canonical_compare(const Tree& o) const {
  if (p_ == o.p_) return std::strong_ordering::equal;
  if (!p_ || !o.p_) return o.p_ ? std::strong_ordering::less : std::strong_ordering::greater;
  const node_type& a = *p_;
  const node_type& b = *o.p_;
  // An atom's only token is its keyword; a compound starts with "(", which
  // precedes every letter.
  const bool atom_a = is_atom(a.tag), atom_b = is_atom(b.tag);
  if (atom_a != atom_b) return atom_a ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = detail::compare_tokens(info(a.tag).keyword, info(b.tag).keyword); c != 0) return c;
  if (a.label) {
    std::array<char, 24> ba{}, bb{};
    if (auto c = detail::compare_tokens(detail::label_token(*a.label, ba),
                                        detail::label_token(*b.label, bb));
        c != 0)
      return c;
  }
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (auto c = a.kids[i].canonical_compare(b.kids[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Constructors

namespace mk {

template <class T = Term> T nil() { return T({Tag::nil, std::nullopt, {}}); }
template <class T> T cons(Label a, T t) { return T({Tag::cons, a, {std::move(t)}}); }
template <class T = Term> T tip(Label a) { return T({Tag::tip, a, {}}); }
template <class T> T bin(T l, T r) { return T({Tag::bin, std::nullopt, {std::move(l), std::move(r)}}); }
template <class T = Term> T nilt() { return T({Tag::nilt, std::nullopt, {}}); }
template <class T> T node(Label a, T l, T r) { return T({Tag::node, a, {std::move(l), std::move(r)}}); }
template <class T = Term> T leaf(Label a) { return T({Tag::leaf, a, {}}); }
template <class T> T fork(Label a, T l, T r) { return T({Tag::fork, a, {std::move(l), std::move(r)}}); }

/// A LIST term holding `xs` in order.
inline Term list(const std::vector<Label>& xs) {
  Term t = nil();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) t = cons(*it, std::move(t));
  return t;
}

}  // namespace mk

/// Embeds a Term into the pruned variant without pruning anything.
inline Pruned to_pruned(const Term& t) {
  return Pruned(bimap(Identity{}, [](const Term& k) { return to_pruned(k); }, t.node()));
}

template <bool P>
std::size_t node_count(const Tree<P>& t) {
  if (t.is_empty()) return 0;
  std::size_t n = 1;
  for (const auto& k : t.node().kids) n += node_count(k);
  return n;
}

template <bool P>
std::size_t depth(const Tree<P>& t) {
  if (t.is_empty()) return 0;
  std::size_t d = 0;
  for (const auto& k : t.node().kids) d = std::max(d, depth(k));
  return d + 1;
}

/// Constructor tags in preorder.
template <bool P>
void preorder_tags(const Tree<P>& t, std::vector<Tag>& out) {
  if (t.is_empty()) return;
  out.push_back(t.tag());
  for (const auto& k : t.node().kids) preorder_tags(k, out);
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

template <bool P>
void print_into(const Tree<P>& t, std::string& out) {
  if (t.is_empty()) {
    out += 'E';
    return;
  }
  const auto& n = t.node();
  const auto& ti = info(n.tag);
  if (is_atom(n.tag)) {
    out += ti.keyword;
    return;
  }
  out += '(';
  out += ti.keyword;
  if (n.label) {
    std::array<char, 24> buf{};
    out += ' ';
    out += label_token(*n.label, buf);
  }
  for (const auto& k : n.kids) {
    out += ' ';
    print_into(k, out);
  }
  out += ')';
}

}  // namespace detail

/// Canonical s-expression. Pruned values print Empty as `E`.
template <bool P>
std::string to_sexpr(const Tree<P>& t) {
  std::string out;
  detail::print_into(t, out);
  return out;
}

inline std::string print_term(const Term& t) { return to_sexpr(t); }

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class SexprReader {
 public:
  SexprReader(std::string_view text, Shape shape) : text_(text), shape_(shape) {}

  template <bool P>
  Tree<P> read_all() {
    Tree<P> t = read<P>();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing input");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_alpha(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::optional<Tag> tag_for(std::string_view kw, bool compound) const {
    for (Tag t : constructors(shape_))
      if (info(t).keyword == kw && is_atom(t) != compound) return t;
    return std::nullopt;
  }

  Label integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) throw ParseError(start, "expected integer");
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    Label v{};
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) throw ParseError(start, "integer out of range");
    return v;
  }

  template <bool P>
  Tree<P> read() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    if (is_alpha(text_[pos_])) {
      const std::string_view w = word();
      if constexpr (P) {
        if (w == "E") return Tree<P>::empty();
      }
      if (auto t = tag_for(w, false)) return Tree<P>({*t, std::nullopt, {}});
      throw ParseError(start, "'" + std::string(w) + "' is not an atom of shape " +
                                  std::string(to_string(shape_)));
    }
    if (text_[pos_] != '(') throw ParseError(pos_, "expected term");
    ++pos_;
    skip_ws();
    const std::size_t kw_at = pos_;
    const std::string_view w = word();
    if (w.empty()) throw ParseError(kw_at, "expected constructor name");
    const auto tag = tag_for(w, true);
    if (!tag)
      throw ParseError(kw_at, "'" + std::string(w) + "' is not a constructor of shape " +
                                  std::string(to_string(shape_)));
    typename Tree<P>::node_type n{*tag, std::nullopt, {}};
    if (has_label(*tag)) n.label = integer();
    for (std::size_t i = 0; i < arity(*tag); ++i) n.kids.push_back(read<P>());
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')')
      throw ParseError(pos_, "expected ')' closing " + std::string(w));
    ++pos_;
    return Tree<P>(std::move(n));
  }

  std::string_view text_;
  Shape shape_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text, Shape shape) {
  return detail::SexprReader(text, shape).read_all<false>();
}

inline Pruned parse_pruned(std::string_view text, Shape shape) {
  return detail::SexprReader(text, shape).read_all<true>();
}

}  // namespace gmss
