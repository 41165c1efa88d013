#pragma once

// The registry of executable laws. Each law draws its own inputs from a stream
// derived from (seed, id), so laws can be run alone or together with the same
// results.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gmss/collections.hpp"
#include "gmss/generators.hpp"
#include "gmss/horner.hpp"
#include "gmss/labelled.hpp"
#include "gmss/lawcheck.hpp"
#include "gmss/pruning.hpp"
#include "gmss/schemes.hpp"
#include "gmss/shapes.hpp"

namespace gmss {

class UnknownLaw : public Error {
 public:
  explicit UnknownLaw(std::string_view id) : Error("unknown law id '" + std::string(id) + "'") {}
};

inline constexpr std::uint64_t default_trials = 100;

namespace laws {

using LayerAlg = std::function<Label(const Node<Label, Label>&)>;
using Relabel = std::function<Label(Label)>;
using Labels = std::vector<Label>;

inline Label floor_mod(Label a, Label m) {
  const Label r = a % m;
  return r < 0 ? r + m : r;
}

inline Shape shape_for(std::uint64_t i) { return all_shapes[i % all_shapes.size()]; }

inline const std::vector<std::pair<std::string, LayerAlg>>& sample_algebras() {
  static const std::vector<std::pair<std::string, LayerAlg>> algs = {
      {"sum", sum_alg},
      {"size",
       [](const Node<Label, Label>& n) {
         Label s = 1;
         for (Label k : n.kids) s += k;
         return s;
       }},
      {"height",
       [](const Node<Label, Label>& n) {
         Label h = 0;
         for (Label k : n.kids) h = std::max(h, k);
         return h + 1;
       }},
      {"hash",
       [](const Node<Label, Label>& n) {
         Label h = floor_mod(n.label.value_or(7) * 31 + static_cast<Label>(n.tag), 1'000'003);
         for (Label k : n.kids) h = floor_mod(h * 131 + k, 1'000'003);
         return h;
       }},
      {"horner-max-plus", horner_alg(max_plus, 0)},
  };
  return algs;
}

inline const std::vector<std::pair<std::string, Relabel>>& sample_relabels() {
  static const std::vector<std::pair<std::string, Relabel>> gs = {
      {"succ", [](Label a) { return a + 1; }},
      {"double", [](Label a) { return 2 * a; }},
      {"negate", [](Label a) { return -a; }},
      {"mod3", [](Label a) { return floor_mod(a, 3); }},
  };
  return gs;
}

inline TermGen plain_gen(Shape s) {
  TermGen g;
  g.shape = s;
  g.grow = s == Shape::list ? 0.85 : 0.55;
  g.max_nodes = 60;
  return g;
}

/// Small terms whose prunings can be enumerated.
inline TermGen prune_gen(Shape s, Label lo, Label hi, std::size_t max_nodes, std::size_t max_prune) {
  TermGen g;
  g.shape = s;
  g.max_depth = 5;
  g.lo = lo;
  g.hi = hi;
  g.grow = s == Shape::list ? 0.8 : 0.55;
  g.max_nodes = max_nodes;
  g.max_prune = max_prune;
  return g;
}

inline bool is_bool(const Semiring& s) { return s.name == bool_or_and.name; }

/// Moves a sampled integer into the carrier of `s` (booleans are 0/1).
inline Label into(const Semiring& s, Label a) { return is_bool(s) ? (a & 1) : a; }
inline Labels into(const Semiring& s, Labels xs) {
  for (auto& x : xs) x = into(s, x);
  return xs;
}
inline Term into(const Semiring& s, const Term& t) {
  return is_bool(s) ? map_term([](Label a) { return a & 1; }, t) : t;
}

struct Instance {
  Semiring s;
  Kind kind;
};

/// Every (semiring, kind) pair that passes the distributivity gate.
inline std::vector<Instance> gated_instances() {
  std::vector<Instance> out;
  for (const auto& s : all_semirings)
    for (Kind k : all_kinds)
      if (k != Kind::set || s.idempotent_add) out.push_back({s, k});
  return out;
}

inline std::string where(const Instance& in) {
  return std::string(in.s.name) + "/" + std::string(to_string(in.kind));
}

inline std::vector<ReduceOp<>> ops_for(Kind k) {
  std::vector<ReduceOp<>> out{max_reduce(), min_reduce()};
  if (k != Kind::set) out.push_back(plus_reduce());
  return out;
}

inline std::vector<Node<Label, Label>> all_small_nodes(Label lo, Label hi) {
  std::vector<Node<Label, Label>> out;
  for (Shape s : all_shapes)
    for (Tag tag : constructors(s)) {
      std::vector<std::optional<Label>> labels{std::nullopt};
      if (has_label(tag)) {
        labels.clear();
        for (Label a = lo; a <= hi; ++a) labels.push_back(a);
      }
      for (const auto& l : labels)
        for (const auto& kids : all_lists(arity(tag), lo, hi))
          if (kids.size() == arity(tag)) out.push_back(Node<Label, Label>{tag, l, kids});
    }
  return out;
}

inline Node<Label, Labels> random_coll_node(Rng& rng, Shape shape, Label lo, Label hi) {
  return random_node(rng, shape, lo, hi, [lo, hi](Rng& r) { return random_labels(r, 3, lo, hi); });
}

template <class T>
std::vector<T> ordered_tags(const Tree<false>& t) {
  std::vector<T> out;
  preorder_tags(t, out);
  return out;
}

// --- oracles kept local to the law checker -------------------------------

/// The unfold formulation of a labelled scan: each seed is a subterm; its
/// value is `value(seed)` and its children are the seed's children.
template <class V, class Value>
Labelled<V> unfold_labelled(const Value& value, const Term& seed, std::size_t level,
                            std::size_t max_depth) {
  if (level > max_depth) throw DepthExceeded(max_depth);
  return Labelled<V>(value(seed), bimap(Bang{},
                                        [&](const Term& k) {
                                          return unfold_labelled<V>(value, k, level + 1, max_depth);
                                        },
                                        seed.node()));
}

/// The recursive characterisation of prune: Empty, then every node built from
/// one pruning per child, rightmost child varying fastest.
inline std::vector<Pruned> prune_recursive(const Term& t) {
  std::vector<Pruned> out{Pruned::empty()};
  const auto& n = t.node();
  std::vector<std::vector<Pruned>> kids;
  for (const Term& k : n.kids) kids.push_back(prune_recursive(k));
  std::vector<std::size_t> idx(kids.size(), 0);
  for (;;) {
    Node<Label, Pruned> m{n.tag, n.label, {}};
    for (std::size_t i = 0; i < kids.size(); ++i) m.kids.push_back(kids[i][idx[i]]);
    out.push_back(Pruned(std::move(m)));
    std::size_t i = kids.size();
    while (i > 0 && ++idx[i - 1] == kids[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// A labelled tree is a homogeneous (fork/leaf) tree.
inline Term to_htree(const Labelled<Label>& l) {
  const auto& kids = l.skeleton().kids;
  if (kids.empty()) return mk::leaf(l.value());
  if (kids.size() != 2) throw ShapeError("labelled node with one child is not tree-shaped");
  return mk::fork(l.value(), to_htree(kids[0]), to_htree(kids[1]));
}

inline Labelled<Label> from_htree(const Term& h, Shape shape) {
  const auto [base, rec] = constructors(shape);
  const auto& n = h.node();
  const Tag tag = n.kids.empty() ? base : rec;
  Node<Unit, Labelled<Label>> sk{tag, has_label(tag) ? std::optional<Unit>(Unit{}) : std::nullopt, {}};
  for (const Term& k : n.kids) sk.kids.push_back(from_htree(k, shape));
  return Labelled<Label>(*n.label, std::move(sk));
}

// --- recursion schemes ----------------------------------------------------

inline LawCase fold_universal_base() {
  Property<Term> p;
  p.exhaustive = [] {
    std::vector<Term> out;
    for (Shape s : all_shapes) {
      const Tag b = constructors(s)[0];
      if (!has_label(b)) out.push_back(Term(Node<Label, Term>{b, std::nullopt, {}}));
      else
        for (Label a = -3; a <= 3; ++a) out.push_back(Term(Node<Label, Term>{b, a, {}}));
    }
    return out;
  };
  p.gen = [](Rng& rng, std::uint64_t i) {
    const Tag b = constructors(shape_for(i))[0];
    std::optional<Label> l;
    if (has_label(b)) l = rng.between(-1000, 1000);
    return Term(Node<Label, Term>{b, l, {}});
  };
  p.check = [](const Term& t) -> Verdict {
    for (const auto& [name, alg] : sample_algebras()) {
      const Node<Label, Label> base{t.tag(), t.node().label, {}};
      if (auto v = same(fold<Label>(alg, t), alg(base), name)) return v;
    }
    return std::nullopt;
  };
  return make_law<Term>("fold-universal-base",
                        "fold on a childless constructor is the algebra applied to it",
                        Expectation::holds, p);
}

inline LawCase fold_universal() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    const auto subs = contents_labelled(subterms(t));
    for (const auto& [name, alg] : sample_algebras())
      for (const Term& s : subs) {
        const auto layer =
            bimap(Identity{}, [&alg = alg](const Term& k) { return fold<Label>(alg, k); }, s.node());
        if (auto v = same(fold<Label>(alg, s), alg(layer), name + " at " + to_sexpr(s))) return v;
      }
    return std::nullopt;
  };
  return make_law<Term>("fold-universal",
                        "fold (in n) = alg (F id (fold alg) n) at every subterm",
                        Expectation::holds, p);
}

struct FusionTriple {
  std::string name;
  Relabel h;
  LayerAlg f, g;
};

inline const std::vector<FusionTriple>& fusion_triples() {
  static const std::vector<FusionTriple> triples = {
      {"double-sum", [](Label a) { return 2 * a; }, sum_alg,
       [](const Node<Label, Label>& n) {
         Label s = 2 * n.label.value_or(0);
         for (Label k : n.kids) s += k;
         return s;
       }},
      {"parity-sum", [](Label a) { return floor_mod(a, 2); }, sum_alg,
       [](const Node<Label, Label>& n) {
         Label s = floor_mod(n.label.value_or(0), 2);
         for (Label k : n.kids) s += k;
         return floor_mod(s, 2);
       }},
      {"succ-size", [](Label a) { return a + 1; }, sample_algebras()[1].second,
       [](const Node<Label, Label>& n) {
         Label s = 2;
         for (Label k : n.kids) s += k - 1;
         return s;
       }},
  };
  return triples;
}

inline LawCase fold_fusion() {
  // Side condition h . f = g . F id h on every small layer, then the fused
  // equation h . fold f = fold g on random terms.
  using In = std::variant<Node<Label, Label>, Term>;
  Property<In> p;
  p.exhaustive = [] {
    std::vector<In> out;
    for (auto& n : all_small_nodes(-3, 3)) out.emplace_back(std::move(n));
    return out;
  };
  p.gen = [](Rng& rng, std::uint64_t i) { return In(random_term(rng, plain_gen(shape_for(i)))); };
  p.check = [](const In& in) -> Verdict {
    for (const auto& tr : fusion_triples()) {
      if (const auto* n = std::get_if<Node<Label, Label>>(&in)) {
        if (auto v = same(tr.h(tr.f(*n)), tr.g(bimap(Identity{}, tr.h, *n)),
                          tr.name + " side condition"))
          return v;
      } else {
        const Term& t = std::get<Term>(in);
        if (auto v = same(tr.h(fold<Label>(tr.f, t)), fold<Label>(tr.g, t), tr.name)) return v;
      }
    }
    return std::nullopt;
  };
  return make_law<In>("fold-fusion", "h . fold f = fold g whenever h . f = g . F id h",
                      Expectation::holds, p);
}

inline LawCase fold_map_fusion() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    for (const auto& [gname, g] : sample_relabels())
      for (const auto& [fname, f] : sample_algebras()) {
        const Label lhs = fold<Label>(f, map_term(g, t));
        const Label rhs = fold<Label>(
            [&f = f, &g = g](const Node<Label, Label>& n) { return f(bimap(g, Identity{}, n)); }, t);
        if (auto v = same(lhs, rhs, fname + " after " + gname)) return v;
      }
    return std::nullopt;
  };
  return make_law<Term>("fold-map-fusion", "fold f . T g = fold (f . F g id)", Expectation::holds, p);
}

inline LawCase functor_laws() {
  Property<Node<Label, Label>> p;
  p.exhaustive = [] { return all_small_nodes(-1, 1); };
  p.gen = [](Rng& rng, std::uint64_t i) {
    return random_node(rng, shape_for(i), -50, 50, [](Rng& r) { return r.between(-50, 50); });
  };
  p.check = [](const Node<Label, Label>& n) -> Verdict {
    if (auto v = same(bimap(Identity{}, Identity{}, n), n, "identity")) return v;
    auto f1 = [](Label a) { return a + 1; };
    auto f2 = [](Label a) { return 3 * a; };
    auto g1 = [](Label a) { return -a; };
    auto g2 = [](Label a) { return a + 5; };
    const auto lhs = bimap([&](Label a) { return f1(f2(a)); }, [&](Label a) { return g1(g2(a)); }, n);
    const auto rhs = bimap(f1, g1, bimap(f2, g2, n));
    return same(lhs, rhs, "composition");
  };
  return make_law<Node<Label, Label>>("functor-laws",
                                      "bimap preserves identities and composition",
                                      Expectation::holds, p);
}

inline LawCase unfold_roundtrip() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    auto out = [](const Term& s) { return s.node(); };
    const std::size_t d = depth(t);
    if (auto v = same(unfold_bounded<Term>(out, t, d - 1), t, "unfold out")) return v;
    if (d >= 2) {
      try {
        unfold_bounded<Term>(out, t, d - 2);
        return "unfold below the term's depth did not stop";
      } catch (const DepthExceeded& e) {
        if (e.max_depth() != d - 2) return "DepthExceeded names the wrong bound";
      }
    }
    return std::nullopt;
  };
  return make_law<Term>("unfold-roundtrip",
                        "unfolding the out coalgebra rebuilds the term; one level less is refused",
                        Expectation::holds, p);
}

inline LawCase para_degenerate() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    using Slot = std::pair<Label, Term>;
    for (const auto& [name, alg] : sample_algebras()) {
      const Label via_para = para<Label>(
          [&alg = alg](const Node<Label, Slot>& n) {
            return alg(bimap(Identity{}, [](const Slot& s) { return s.first; }, n));
          },
          t);
      if (auto v = same(via_para, fold<Label>(alg, t), name)) return v;
    }
    // The original children are visible at the root.
    using KidSlot = std::pair<std::vector<Term>, Term>;
    const auto seen = para<std::vector<Term>>(
        [](const Node<Label, KidSlot>& n) {
          std::vector<Term> kids;
          for (const auto& s : n.kids) kids.push_back(s.second);
          return kids;
        },
        t);
    return same(seen, t.node().kids, "original children");
  };
  return make_law<Term>("para-degenerate",
                        "para that ignores the original subterms is fold; para sees them",
                        Expectation::holds, p);
}

// --- serialization ----------------------------------------------------------

inline LawCase print_parse_roundtrip() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return random_term(rng, prune_gen(shape_for(i), -20, 20, 30, 400));
  };
  p.check = [](const Term& t) -> Verdict {
    const std::string s = to_sexpr(t);
    if (auto v = same(parse_term(s, t.shape()), t, "parse . print")) return v;
    if (auto v = same(to_sexpr(parse_term(s, t.shape())), s, "print . parse")) return v;
    for (const Pruned& q : prune(t, Kind::bag))
      if (auto v = same(parse_pruned(to_sexpr(q), t.shape()), q, "pruned parse . print")) return v;
    return std::nullopt;
  };
  return make_law<Term>("print-parse-roundtrip",
                        "parsing the printed form gives back the term, with and without E",
                        Expectation::holds, p);
}

inline LawCase order_matches_string() {
  using In = std::pair<Term, Term>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    TermGen g = plain_gen(shape_for(i));
    g.lo = -12;
    g.hi = 12;
    Term a = random_term(rng, g);
    switch (rng.below(3)) {
      case 0: return In(a, random_term(rng, g));
      case 1: return In(a, a);
      default: {
        auto near = shrink(a);
        return In(a, near.empty() ? a : rng.pick(near));
      }
    }
  };
  p.check = [](const In& in) -> Verdict {
    const auto& [a, b] = in;
    const std::string sa = to_sexpr(a), sb = to_sexpr(b);
    if (auto v = same(a == b, sa == sb, "equality vs printed equality")) return v;
    const int by_term = static_cast<int>(canonical_compare(a, b) < 0) - static_cast<int>(canonical_compare(a, b) > 0);
    const int by_text = static_cast<int>(sa < sb) - static_cast<int>(sa > sb);
    return same(by_term, by_text, "canonical order vs printed order");
  };
  return make_law<In>("order-matches-string",
                      "the canonical term order is the order of the printed forms, and printing is "
                      "injective",
                      Expectation::holds, p);
}

// --- labelled variant -------------------------------------------------------

inline LawCase scan_lemma() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    for (const auto& [name, alg] : sample_algebras()) {
      const auto one_pass = scan(alg, t);
      const auto two_pass =
          map_labelled([&alg = alg](const Term& s) { return fold<Label>(alg, s); }, subterms(t));
      if (auto v = same(one_pass, two_pass, name)) return v;
      if (auto v = same(root(one_pass), fold<Label>(alg, t), name + " root")) return v;
    }
    return std::nullopt;
  };
  return make_law<Term>("scan-lemma", "scan f = L (fold f) . subterms", Expectation::holds, p);
}

inline LawCase scan_skeleton() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    const auto l = scan(sum_alg, t);
    if (auto v = same(labelled_tags(l), ordered_tags<Tag>(t), "skeleton tags")) return v;
    if (t.shape() == Shape::list) {
      const auto classical =
          scanr_list([](Label a, Label b) { return checked_add(a, b); }, Label{0}, contents_term(t));
      if (auto v = same(contents_labelled(l), classical, "list scan vs scanr")) return v;
    }
    return std::nullopt;
  };
  return make_law<Term>("scan-skeleton",
                        "scan keeps the term's constructors; on lists it is scanr",
                        Expectation::holds, p);
}

inline LawCase subterms_count() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    const auto st = subterms(t);
    const auto values = contents_labelled(st);
    if (auto v = same(values.size(), node_count(t), "value count vs node count")) return v;
    if (auto v = same(root(st), t, "root")) return v;
    if (t.shape() == Shape::list)
      if (auto v = same(values.size(), contents_term(t).size() + 1, "tails of a list")) return v;
    return std::nullopt;
  };
  return make_law<Term>("subterms-count",
                        "subterms has one value per node, the whole term at the root",
                        Expectation::holds, p);
}

inline LawCase labelled_shape() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    const auto l = scan(sum_alg, t);
    if (t.shape() == Shape::list) {
      // A nonempty list: a chain of single children.
      const auto tags = labelled_tags(l);
      for (std::size_t i = 0; i + 1 < tags.size(); ++i)
        if (tags[i] != Tag::cons) return "labelled list is not a chain";
      return require(!tags.empty() && tags.back() == Tag::nil, "labelled list does not end at nil");
    }
    const Term h = to_htree(l);
    if (auto v = same(contents_term(h), contents_labelled(l), "contents through the iso")) return v;
    return same(from_htree(h, t.shape()), l, "iso round trip");
  };
  return make_law<Term>("labelled-shape",
                        "labelled lists are nonempty lists; labelled trees are fork/leaf trees",
                        Expectation::holds, p);
}

inline LawCase subterms_para_equiv() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    return same(subterms_para(t), subterms(t), "para vs fold");
  };
  return make_law<Term>("subterms-para-equiv", "subterms as a paramorphism agrees with the fold",
                        Expectation::holds, p);
}

inline LawCase subterms_unfold_equiv() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    const std::size_t d = depth(t);
    const auto by_unfold =
        unfold_labelled<Term>([](const Term& s) { return s; }, t, 0, d);
    if (auto v = same(by_unfold, subterms(t), "subterms")) return v;
    for (const auto& [name, alg] : sample_algebras()) {
      const auto scan_unfold = unfold_labelled<Label>(
          [&alg = alg](const Term& s) { return fold<Label>(alg, s); }, t, 0, d);
      if (auto v = same(scan_unfold, scan(alg, t), "scan " + name)) return v;
    }
    return std::nullopt;
  };
  return make_law<Term>("subterms-unfold-equiv",
                        "the unfold formulations of subterms and scan agree with the folds",
                        Expectation::holds, p);
}

// --- collections ------------------------------------------------------------

template <class T>
Collection<Collection<T>> nest(Kind k, const std::vector<std::vector<T>>& xs) {
  std::vector<Collection<T>> inner;
  for (const auto& x : xs) inner.emplace_back(k, x);
  return Collection<Collection<T>>(k, std::move(inner));
}

inline LawCase monad_laws() {
  using In = std::pair<Labels, std::vector<std::vector<Labels>>>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) {
    In in;
    in.first = random_labels(rng, 5, -4, 4);
    in.second.resize(rng.below(4));
    for (auto& mid : in.second) {
      mid.resize(rng.below(4));
      for (auto& x : mid) x = random_labels(rng, 3, -4, 4);
    }
    return in;
  };
  p.check = [](const In& in) -> Verdict {
    for (Kind k : all_kinds) {
      const std::string kn(to_string(k));
      const Collection<Label> x(k, in.first);
      if (auto v = same(join(singleton(k, x)), x, kn + " join . return")) return v;
      if (auto v = same(join(fmap([k](Label a) { return singleton(k, a); }, x)), x,
                        kn + " join . M return"))
        return v;
      std::vector<Collection<Collection<Label>>> mids;
      for (const auto& m : in.second) mids.push_back(nest(k, m));
      const Collection<Collection<Collection<Label>>> xxx(k, mids);
      const auto lhs = join(fmap([](const Collection<Collection<Label>>& c) { return join(c); }, xxx));
      if (auto v = same(lhs, join(join(xxx)), kn + " join . M join")) return v;
    }
    return std::nullopt;
  };
  return make_law<In>("monad-laws", "unit and associativity laws of list, bag and set",
                      Expectation::holds, p);
}

inline LawCase join_distributes() {
  using In = std::pair<std::vector<Labels>, std::vector<Labels>>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) {
    In in;
    in.first.resize(rng.below(4));
    in.second.resize(rng.below(4));
    for (auto& x : in.first) x = random_labels(rng, 3, -4, 4);
    for (auto& x : in.second) x = random_labels(rng, 3, -4, 4);
    return in;
  };
  p.check = [](const In& in) -> Verdict {
    for (Kind k : all_kinds) {
      const std::string kn(to_string(k));
      if (auto v = same(join(empty_of<Collection<Label>>(k)), empty_of<Label>(k), kn + " join empty"))
        return v;
      const auto xx = nest(k, in.first), yy = nest(k, in.second);
      if (auto v = same(join(unite(xx, yy)), unite(join(xx), join(yy)), kn + " join union")) return v;
    }
    return std::nullopt;
  };
  return make_law<In>("join-distributes", "join preserves empty and union", Expectation::holds, p);
}

inline LawCase join_zero_axiom() {
  Property<Labels> p;
  p.gen = [](Rng& rng, std::uint64_t) { return random_labels(rng, 5, -4, 4); };
  p.check = [](const Labels& xs) -> Verdict {
    for (Kind k : all_kinds) {
      const Collection<Label> x(k, xs);
      if (!satisfies_zero_axiom(x)) return std::string(to_string(k)) + ": empty is not a right zero";
      const auto left = bind(empty_of<Label>(k), [k](Label a) { return singleton(k, a); });
      if (!left.empty()) return std::string(to_string(k)) + ": empty is not a left zero";
    }
    return std::nullopt;
  };
  return make_law<Labels>("join-zero-axiom",
                          "empty is a left and right zero of Kleisli composition",
                          Expectation::holds, p, /*optional=*/true);
}

inline LawCase monad_algebra() {
  using In = std::pair<Labels, std::vector<Labels>>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) {
    In in;
    in.first = random_labels(rng, 4, -8, 8);
    in.second.resize(rng.below(4));
    for (auto& x : in.second) x = random_labels(rng, 4, -8, 8);
    return in;
  };
  p.check = [](const In& in) -> Verdict {
    for (Kind k : all_kinds)
      for (const auto& r : ops_for(k)) {
        const std::string ctx = r.name + "/" + std::string(to_string(k));
        for (Label a : in.first)
          if (auto v = same(reduce(r, singleton(k, a)), a, ctx + " k . return")) return v;
        const auto xx = nest(k, in.second);
        const Label lhs = reduce(r, join(xx));
        const Label rhs = reduce(r, fmap([&r](const Collection<Label>& c) { return reduce(r, c); }, xx));
        if (auto v = same(lhs, rhs, ctx + " k . join vs k . M k")) return v;
      }
    return std::nullopt;
  };
  return make_law<In>("monad-algebra", "a reduction is a monad algebra", Expectation::holds, p);
}

inline LawCase reduce_distributes() {
  using In = std::pair<Labels, Labels>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) {
    return In(random_labels(rng, 5, -8, 8), random_labels(rng, 5, -8, 8));
  };
  p.check = [](const In& in) -> Verdict {
    for (Kind k : all_kinds)
      for (const auto& r : ops_for(k)) {
        const std::string ctx = r.name + "/" + std::string(to_string(k));
        const Collection<Label> x(k, in.first), y(k, in.second);
        if (!in.first.empty() && !in.second.empty()) {
          const Label a = in.first[0], b = in.second[0];
          if (auto v = same(r.op(a, b), reduce(r, unite(singleton(k, a), singleton(k, b))),
                            ctx + " a op b"))
            return v;
          if (auto v = same(reduce(r, opt(a, y)), r.op(a, reduce(r, y)), ctx + " opt")) return v;
        }
        if (auto v = same(reduce(r, unite(x, y)), r.op(reduce(r, x), reduce(r, y)), ctx + " union"))
          return v;
      }
    return std::nullopt;
  };
  return make_law<In>("reduce-distributes",
                      "a reduction is determined by its operator and distributes over union",
                      Expectation::holds, p);
}

inline LawCase reduce_unit_forced() {
  Property<Labels> p;
  p.gen = [](Rng& rng, std::uint64_t) { return random_labels(rng, 6, -8, 8); };
  p.check = [](const Labels& xs) -> Verdict {
    for (Kind k : all_kinds) {
      const Collection<Label> x(k, xs), none = empty_of<Label>(k);
      for (const auto& r : ops_for(k)) {
        const std::string ctx = r.name + "/" + std::string(to_string(k));
        const Label e = reduce(r, none), rx = reduce(r, x);
        if (auto v = same(e, r.unit, ctx + " reduce of empty")) return v;
        if (auto v = same(r.op(e, rx), rx, ctx + " left unit on the range")) return v;
        if (auto v = same(r.op(rx, e), rx, ctx + " right unit on the range")) return v;
        if (k == Kind::set)
          if (auto v = same(r.op(rx, rx), rx, ctx + " idempotent on the range")) return v;
        if (k != Kind::list) {
          const Labels front(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(xs.size() / 2));
          const Labels back(xs.begin() + static_cast<std::ptrdiff_t>(xs.size() / 2), xs.end());
          const Label a = reduce(r, Collection<Label>(k, front));
          const Label b = reduce(r, Collection<Label>(k, back));
          if (auto v = same(r.op(a, b), r.op(b, a), ctx + " commutative on the range")) return v;
        }
      }
      // An operator whose unit is wrong is refused.
      try {
        reduce(ReduceOp<>{"+ with unit 1", checked_add, 1}, x);
        return std::string(to_string(k)) + ": wrong unit accepted";
      } catch (const PreconditionError&) {
      }
    }
    const Collection<Label> s(Kind::set, xs);
    if (std::any_of(xs.begin(), xs.end(), [](Label a) { return a != 0; })) {
      try {
        reduce(plus_reduce(), s);
        return std::string("non-idempotent + accepted on a set");
      } catch (const PreconditionError&) {
      }
    }
    return std::nullopt;
  };
  return make_law<Labels>("reduce-unit-forced",
                          "the reduction of empty is the operator's unit, and union's laws carry "
                          "over to the operator",
                          Expectation::holds, p);
}

// --- lists ----------------------------------------------------------------

inline LawCase horner_list_law() {
  Property<Labels> p;
  p.exhaustive = [] { return all_lists(6, 0, 3); };
  p.gen = [](Rng& rng, std::uint64_t) { return random_labels(rng, 16, -8, 8); };
  p.check = [](const Labels& raw) -> Verdict {
    for (const auto& s : all_semirings) {
      const Labels xs = into(s, raw);
      std::vector<Label> products;
      for (const auto& init : inits_list(xs)) products.push_back(foldr_list(s.mul, s.one, init));
      const Label lhs = reduce(add_reduce(s), Collection<Label>(Kind::list, products));
      if (auto v = same(lhs, horner_list(s, xs), std::string(s.name))) return v;
    }
    return std::nullopt;
  };
  return make_law<Labels>("horner-list", "sum . map product . inits = foldr (\\u z -> 1 + u * z) 1",
                          Expectation::holds, p);
}

inline LawCase poly_horner_law() {
  using In = std::pair<Labels, Label>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) { return In(random_labels(rng, 8, -8, 8), rng.between(-4, 4)); };
  p.check = [](const In& in) -> Verdict {
    const auto& [cs, x] = in;
    Label direct = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      Label power = 1;
      for (std::size_t j = 0; j < i; ++j) power = checked_mul(power, x);
      direct = checked_add(direct, checked_mul(cs[i], power));
    }
    return same(poly_horner(cs, x), direct, "nested vs powered");
  };
  return make_law<In>("poly-horner", "nested evaluation of a polynomial equals the sum of powers",
                      Expectation::holds, p);
}

inline LawCase prefix_sum_law() {
  Property<Labels> p;
  p.gen = [](Rng& rng, std::uint64_t) { return random_labels(rng, 32, -20, 20); };
  p.check = [](const Labels& xs) -> Verdict {
    Label run = 0, best = 0;
    for (Label x : xs) best = std::max(best, run = checked_add(run, x));
    if (auto v = same(max_prefix_sum(xs), best, "running prefix sums")) return v;
    return same(max_prefix_sum(xs), horner_list(max_plus, xs), "max-plus horner");
  };
  return make_law<Labels>("prefix-sum", "maximum . map sum . inits = foldr (\\u z -> 0 max (u + z)) 0",
                          Expectation::holds, p);
}

inline LawCase scanr_head() {
  Property<Labels> p;
  p.gen = [](Rng& rng, std::uint64_t) { return random_labels(rng, 24, -20, 20); };
  p.check = [](const Labels& xs) -> Verdict {
    using Step = std::function<Label(Label, Label)>;
    const std::vector<std::pair<std::string, Step>> steps = {
        {"+", [](Label a, Label b) { return checked_add(a, b); }}, {"max-prefix", max_prefix_step}};
    for (const auto& [name, step] : steps) {
      const auto s = scanr_list(step, Label{0}, xs);
      if (auto v = same(s.size(), xs.size() + 1, name + " length")) return v;
      if (auto v = same(s.front(), foldr_list(step, Label{0}, xs), name + " head")) return v;
      Labels folded;
      for (const auto& t : tails_list(xs)) folded.push_back(foldr_list(step, Label{0}, t));
      if (auto v = same(s, folded, name + " map fold . tails")) return v;
    }
    return std::nullopt;
  };
  return make_law<Labels>("scanr-head", "scanr f e = map (foldr f e) . tails, headed by the fold",
                          Expectation::holds, p);
}

inline LawCase mss_chain() {
  Property<Labels> p;
  p.exhaustive = [] { return all_lists(6, -2, 2); };
  p.gen = [](Rng& rng, std::uint64_t) { return random_labels(rng, 64, -(1 << 20), 1 << 20); };
  p.check = [](const Labels& xs) -> Verdict {
    const Label spec = mss_spec(xs);
    if (auto v = same(mss_quadratic(xs), spec, "quadratic vs spec")) return v;
    if (auto v = same(mss_linear(xs), spec, "linear vs spec")) return v;
    if (xs.size() <= 8) {
      Labels sums;
      for (const auto& s : segs_list(xs)) sums.push_back(sum_list(s));
      if (auto v = same(maximum_list(sums), spec, "all segments vs spec")) return v;
    }
    return std::nullopt;
  };
  return make_law<Labels>("mss-chain", "cubic, quadratic and linear mss agree",
                          Expectation::holds, p);
}

inline LawCase mss_generic_vs_linear() {
  Property<Labels> p;
  p.gen = [](Rng& rng, std::uint64_t) { return random_labels(rng, 24, -8, 8); };
  p.check = [](const Labels& xs) -> Verdict {
    const Term t = mk::list(xs);
    if (auto v = same(mss_generic(max_plus, 0, t, Via::scan, Kind::bag), mss_linear(xs), "scan"))
      return v;
    if (xs.size() <= 8)
      if (auto v = same(mss_generic(max_plus, 0, t, Via::brute, Kind::bag), mss_linear(xs), "brute"))
        return v;
    return std::nullopt;
  };
  return make_law<Labels>("mss-generic-vs-linear",
                          "generic mss on a list term is the classical linear mss",
                          Expectation::holds, p);
}

// --- distributivity -------------------------------------------------------

inline Node<Label, Collection<Label>> collect(const Node<Label, Labels>& n, const Semiring& s, Kind k) {
  return bimap([&s](Label a) { return into(s, a); },
               [&](const Labels& v) { return Collection<Label>(k, into(s, v)); }, n);
}

inline LawCase rectangle_distributivity() {
  using In = std::pair<Node<Label, Labels>, Label>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return In(random_coll_node(rng, shape_for(i), -6, 6), rng.between(-3, 3));
  };
  p.check = [](const In& in) -> Verdict {
    for (const auto& inst : gated_instances()) {
      const auto& s = inst.s;
      const auto r = add_reduce(s);
      const auto n = collect(in.first, s, inst.kind);
      const auto f = generic_product_alg(s, into(s, in.second));
      const Label lhs = reduce(r, fmap(f, distribute_node(n, inst.kind)));
      const Label rhs =
          f(bimap(Identity{}, [&r](const Collection<Label>& c) { return reduce(r, c); }, n));
      if (auto v = same(lhs, rhs, where(inst))) return v;
    }
    // Sum of naturals against the maximum of nonempty collections of naturals.
    const auto nat = bimap([](Label a) { return a < 0 ? -a : a; },
                           [](Labels v) {
                             for (auto& x : v) x = x < 0 ? -x : x;
                             return v;
                           },
                           in.first);
    if (std::any_of(nat.kids.begin(), nat.kids.end(), [](const Labels& v) { return v.empty(); }))
      return std::nullopt;
    const ReduceOp<> max0{"max from 0", [](Label a, Label b) { return std::max(a, b); }, 0};
    for (Kind k : all_kinds) {
      const auto n = bimap(Identity{}, [k](const Labels& v) { return Collection<Label>(k, v); }, nat);
      const Label lhs = reduce(max0, fmap([](const Node<Label, Label>& m) { return sum_alg(m); },
                                          distribute_node(n, k)));
      const Label rhs =
          sum_alg(bimap(Identity{}, [&](const Collection<Label>& c) { return reduce(max0, c); }, n));
      if (auto v = same(lhs, rhs, "sum/max " + std::string(to_string(k)))) return v;
    }
    return std::nullopt;
  };
  return make_law<In>("rectangle-distributivity",
                      "reduce . M f . distribute = f . F id reduce for the generic product f",
                      Expectation::holds, p);
}

inline LawCase face7_lists() {
  // Every intermediate expression of the diagram chase, evaluated on the same input.
  using In = std::pair<std::pair<Node<Label, Labels>, Label>, std::vector<Labels>>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    In in;
    in.first = {random_coll_node(rng, shape_for(i), -5, 5), rng.between(-3, 3)};
    in.second.resize(rng.below(5));
    for (auto& x : in.second) x = random_labels(rng, 3, -5, 5);
    return in;
  };
  p.check = [](const In& in) -> Verdict {
    for (const auto& inst : gated_instances()) {
      const auto& s = inst.s;
      const Kind k = inst.kind;
      const auto r = add_reduce(s);
      const Label b = into(s, in.first.second);
      const auto n = collect(in.first.first, s, k);
      const auto f = generic_product_alg(s, b);
      auto red = [&r](const Collection<Label>& c) { return reduce(r, c); };
      auto prod = [&s, b](const Labels& xs) { return foldr_list(s.mul, b, xs); };
      auto odot = [&](const Collection<Label>& x, Label a) { return s.mul(red(x), a); };
      const auto lifted = bimap([k](Label a) { return singleton(k, a); }, Identity{}, n);
      const auto cs = contents_node(lifted);

      const Label e1 = red(fmap(f, distribute_node(n, k)));
      const Label e2 = red(fmap(f, bidistribute_node(lifted, k)));
      const Label e3 = red(fmap(prod, fmap([](const Node<Label, Label>& m) { return contents_node(m); },
                                           bidistribute_node(lifted, k))));
      const Label e4 = red(fmap(prod, dist_list(cs, k)));
      Labels reduced;
      for (const auto& c : cs) reduced.push_back(red(c));
      const Label e5 = prod(reduced);
      const Label e6 = prod(contents_node(bimap(red, red, lifted)));
      const Label e7 = prod(contents_node(bimap(Identity{}, red, n)));
      const Label e8 = f(bimap(Identity{}, red, n));
      const Label fused = foldr_list(odot, b, cs);
      const Label chain[] = {e2, e3, e4, e5, e6, e7, e8, fused};
      for (std::size_t i = 0; i < std::size(chain); ++i)
        if (auto v = same(chain[i], e1, where(inst) + " step " + std::to_string(i + 2))) return v;

      std::vector<Collection<Label>> xs;
      for (const auto& x : in.second) xs.emplace_back(k, into(s, x));
      const Label top = red(fmap(prod, dist_list(xs, k)));
      Labels left;
      for (const auto& x : xs) left.push_back(red(x));
      if (auto v = same(top, prod(left), where(inst) + " list face")) return v;
      if (auto v = same(top, foldr_list(odot, b, xs), where(inst) + " fused list face")) return v;
    }
    return std::nullopt;
  };
  return make_law<In>("face7-lists",
                      "the distributivity diagram chase, step by step, and its list face",
                      Expectation::holds, p);
}

inline LawCase delta2_via_bidist() {
  Property<Node<Label, Labels>> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_coll_node(rng, shape_for(i), -4, 4); };
  p.check = [](const Node<Label, Labels>& raw) -> Verdict {
    for (Kind k : all_kinds) {
      const auto n = bimap(Identity{}, [k](const Labels& v) { return Collection<Label>(k, v); }, raw);
      const auto lifted = bimap([k](Label a) { return singleton(k, a); }, Identity{}, n);
      if (auto v = same(distribute_node(n, k), bidistribute_node(lifted, k),
                        std::string(to_string(k))))
        return v;
    }
    std::size_t expected = 1;
    for (const auto& v : raw.kids) expected *= v.size();
    const auto n =
        bimap(Identity{}, [](const Labels& v) { return Collection<Label>(Kind::list, v); }, raw);
    return same(distribute_node(n, Kind::list).size(), expected, "list count");
  };
  return make_law<Node<Label, Labels>>("delta2-via-bidist",
                                       "distributing the children is distributing everything "
                                       "after making the label a singleton",
                                       Expectation::holds, p);
}

inline LawCase distlist_defs_equiv() {
  Property<std::vector<Labels>> p;
  p.gen = [](Rng& rng, std::uint64_t) {
    std::vector<Labels> xs(rng.below(5));
    for (auto& x : xs) x = random_labels(rng, 3, -3, 3);
    return xs;
  };
  p.check = [](const std::vector<Labels>& raw) -> Verdict {
    for (Kind k : all_kinds) {
      std::vector<Collection<Label>> xs;
      for (const auto& x : raw) xs.emplace_back(k, x);
      if (auto v = same(dist_list(xs, k), dist_list_lift(xs, k), std::string(to_string(k)))) return v;
      if (auto v = same(dist_list(std::vector<Collection<Label>>{}, k), singleton(k, Labels{}),
                        "base case"))
        return v;
    }
    return std::nullopt;
  };
  return make_law<std::vector<Labels>>("distlist-defs-equiv",
                                       "the foldr-of-cp and liftM2 definitions of list "
                                       "distribution agree",
                                       Expectation::holds, p);
}

inline Verdict cp_distributes(const Semiring& s, Kind k, const Labels& xs, const Labels& ys,
                              bool checked) {
  const auto r = add_reduce(s);
  auto red = [&](const Collection<Label>& c) { return checked ? reduce(r, c) : reduce_unchecked(r, c); };
  const Collection<Label> x(k, into(s, xs)), y(k, into(s, ys));
  const Label lhs =
      red(fmap([&s](const std::pair<Label, Label>& q) { return s.mul(q.first, q.second); }, cp(x, y)));
  return same(lhs, s.mul(red(x), red(y)), where({s, k}));
}

inline LawCase cp_distributivity() {
  using In = std::pair<Labels, Labels>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) {
    return In(random_labels(rng, 4, -5, 5), random_labels(rng, 4, -5, 5));
  };
  p.check = [](const In& in) -> Verdict {
    for (const auto& inst : gated_instances())
      if (auto v = cp_distributes(inst.s, inst.kind, in.first, in.second, true)) return v;
    return std::nullopt;
  };
  return make_law<In>("cp-distributivity", "reduce . M (*) . cp = (*) . (reduce x reduce)",
                      Expectation::holds, p);
}

inline LawCase cp_distributivity_set_plus_times() {
  using In = std::pair<Labels, Labels>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) {
    return In(random_labels(rng, 4, -4, 4), random_labels(rng, 4, -4, 4));
  };
  p.check = [](const In& in) -> Verdict {
    return cp_distributes(plus_times, Kind::set, in.first, in.second, false);
  };
  return make_law<In>("cp-distributivity-set-plus-times",
                      "cp distributivity breaks for sets under + and *: equal products collapse",
                      Expectation::fails_with_witness, p);
}

inline Verdict collection_distributes(const Semiring& s, Kind k, Label a0, const Labels& xs,
                                      bool checked) {
  const auto r = add_reduce(s);
  auto red = [&](const Collection<Label>& c) { return checked ? reduce(r, c) : reduce_unchecked(r, c); };
  const Label a = into(s, a0);
  const Collection<Label> x(k, into(s, xs));
  if (auto v = same(red(fmap([&](Label b) { return s.mul(a, b); }, x)), s.mul(a, red(x)),
                    where({s, k}) + " left"))
    return v;
  return same(red(fmap([&](Label b) { return s.mul(b, a); }, x)), s.mul(red(x), a),
              where({s, k}) + " right");
}

inline LawCase collection_distributivity() {
  using In = std::pair<Label, Labels>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) { return In(rng.between(-5, 5), random_labels(rng, 5, -5, 5)); };
  p.check = [](const In& in) -> Verdict {
    for (const auto& inst : gated_instances())
      if (auto v = collection_distributes(inst.s, inst.kind, in.first, in.second, true)) return v;
    return std::nullopt;
  };
  return make_law<In>("collection-distributivity", "reduce . M (a*) = (a*) . reduce, on both sides",
                      Expectation::holds, p);
}

inline LawCase collection_distributivity_set_plus_times() {
  using In = std::pair<Label, Labels>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) { return In(rng.between(-5, 5), random_labels(rng, 5, -5, 5)); };
  p.check = [](const In& in) -> Verdict {
    return collection_distributes(plus_times, Kind::set, in.first, in.second, false);
  };
  // Multiplying by a fixed integer is injective unless it is zero, and then
  // both sides are zero, so no duplicates are created.
  return make_law<In>("collection-distributivity-set-plus-times",
                      "scaling a set of integers cannot merge elements, so + still distributes",
                      Expectation::holds, p);
}

inline LawCase contents_naturality() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) { return random_term(rng, plain_gen(shape_for(i))); };
  p.check = [](const Term& t) -> Verdict {
    const Node<Label, Label> layer =
        bimap(Identity{}, [](const Term& k) { return fold(sum_alg, k); }, t.node());
    const auto l = scan(sum_alg, t);
    for (const auto& [name, g] : sample_relabels()) {
      auto mapped = [&g = g](Labels xs) {
        for (auto& x : xs) x = g(x);
        return xs;
      };
      if (auto v = same(contents_term(map_term(g, t)), mapped(contents_term(t)), name + " term"))
        return v;
      if (auto v = same(contents_node(bimap(g, g, layer)), mapped(contents_node(layer)), name + " node"))
        return v;
      for (Kind k : all_kinds)
        if (auto v = same(contents_labelled(map_labelled(g, l), k), fmap(g, contents_labelled(l, k)),
                          name + " labelled " + std::string(to_string(k))))
          return v;
    }
    return std::nullopt;
  };
  return make_law<Term>("contents-naturality", "contents commutes with relabelling",
                        Expectation::holds, p);
}

inline LawCase delta_respects_contents() {
  using In = std::pair<Node<Label, Labels>, Labels>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return In(random_coll_node(rng, shape_for(i), -3, 3), random_labels(rng, 3, -3, 3));
  };
  p.check = [](const In& in) -> Verdict {
    for (Kind k : all_kinds) {
      const std::string kn(to_string(k));
      const Node<Collection<Label>, Collection<Label>> n =
          bimap([&](Label) { return Collection<Label>(k, in.second); },
                [k](const Labels& v) { return Collection<Label>(k, v); }, in.first);
      const auto cs = contents_node(n);
      const auto via_node =
          fmap([](const Node<Label, Label>& m) { return contents_node(m); }, bidistribute_node(n, k));
      if (auto v = same(via_node, dist_list(cs, k), kn + " contents . delta")) return v;

      // The same through list layers: each cons cell is distributed with delta.
      using Seq = Collection<Labels>;
      Seq acc = singleton(k, Labels{});
      for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        const Node<Seq, Seq> cell{Tag::cons, fmap([](Label a) { return Labels{a}; }, *it), {acc}};
        acc = fmap(
            [](const Node<Labels, Labels>& m) {
              Labels out;
              for (const auto& part : contents_node(m)) out.insert(out.end(), part.begin(), part.end());
              return out;
            },
            bidistribute_node(cell, k));
      }
      if (auto v = same(acc, dist_list(cs, k), kn + " list layers")) return v;
    }
    return std::nullopt;
  };
  return make_law<In>("delta-respects-contents", "M contents . delta = delta_List . contents",
                      Expectation::holds, p);
}

// --- generic Horner and mss -------------------------------------------------

inline std::vector<Kind> kinds_for(const Semiring& s) {
  std::vector<Kind> out{Kind::list, Kind::bag};
  if (s.idempotent_add) out.push_back(Kind::set);
  return out;
}

inline LawCase horner_generic_vs_prune() {
  using In = std::pair<Term, Label>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return In(random_term(rng, prune_gen(shape_for(i), -2, 2, 12, 2000)), rng.between(-2, 2));
  };
  p.check = [](const In& in) -> Verdict {
    for (const auto& s : all_semirings) {
      const Term t = into(s, in.first);
      for (Label b : {s.one, s.add(s.one, s.one), into(s, in.second)})
        for (Kind k : kinds_for(s))
          if (auto v = same(horner_generic(s, b, t), horner_by_prunings(s, b, t, k),
                            where({s, k}) + " b=" + std::to_string(b)))
            return v;
    }
    return std::nullopt;
  };
  return make_law<In>("hornerGeneric-vs-prune",
                      "fold ((b +) . f) = reduce . M (fold_H (maybe b f)) . prune",
                      Expectation::holds, p);
}

inline LawCase horner_b_value_dependence() {
  using In = std::pair<Term, Label>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return In(random_term(rng, prune_gen(shape_for(i), -3, 3, 12, 2000)), rng.between(-3, 0));
  };
  p.check = [](const In& in) -> Verdict {
    if (in.second > 0) return std::nullopt;  // the claim is about b <= 0
    return same(horner_generic(max_plus, in.second, in.first), horner_generic(max_plus, 0, in.first),
                "value with b vs value with 0");
  };
  return make_law<In>("horner-b-value-dependence",
                      "the generic Horner value itself changes with b under max-plus",
                      Expectation::fails_with_witness, p);
}

inline LawCase mss_generic_scan_vs_brute() {
  using In = std::pair<Term, Label>;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return In(random_term(rng, prune_gen(shape_for(i), -2, 2, 10, 600)), rng.between(-2, 2));
  };
  p.check = [](const In& in) -> Verdict {
    for (const auto& s : all_semirings) {
      const Term t = into(s, in.first);
      for (Label b : {default_b(s), into(s, in.second)})
        for (Kind k : kinds_for(s))
          if (auto v = same(mss_generic(s, b, t, Via::scan, k), mss_generic(s, b, t, Via::brute, k),
                            where({s, k}) + " b=" + std::to_string(b)))
            return v;
    }
    return std::nullopt;
  };
  return make_law<In>("mssGeneric-scan-vs-brute",
                      "reduce . M (fold_H (maybe b f)) . segs = reduce . contents . scan ((b +) . f)",
                      Expectation::holds, p);
}

inline LawCase set_plus_nonidempotent() {
  Property<Labels> p;
  p.gen = [](Rng& rng, std::uint64_t) { return random_labels(rng, 4, -4, 4); };
  p.check = [](const Labels& xs) -> Verdict {
    const Collection<Label> x(Kind::set, xs);
    const auto r = plus_reduce();
    const Label once = reduce_unchecked(r, x);
    return same(reduce_unchecked(r, unite(x, x)), checked_add(once, once),
                "sum of x union x vs twice the sum of x");
  };
  return make_law<Labels>("set-plus-nonidempotent",
                          "+ cannot be a set reduction: union is idempotent, + is not",
                          Expectation::fails_with_witness, p);
}

// --- pruning ----------------------------------------------------------------

inline Term ex7_tree() {
  using namespace mk;
  return fork<Term>(1, leaf(2), fork<Term>(3, leaf(1), leaf(4)));
}

inline std::vector<Term> prune_fixtures() {
  std::vector<Term> out{ex7_tree(), ex7_tree().node().kids[1], mk::leaf(2)};
  Labels xs;
  for (Label i = 0; i <= 6; ++i) {
    out.push_back(mk::list(xs));
    xs.push_back(i + 1);
  }
  return out;
}

inline LawCase prune_counts() {
  Property<Term> p;
  p.exhaustive = prune_fixtures;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return random_term(rng, prune_gen(shape_for(i), -8, 8, 40, 20000));
  };
  p.check = [](const Term& t) -> Verdict {
    const std::size_t expected = bag_prune_count(t);
    for (Kind k : {Kind::list, Kind::bag})
      if (auto v = same(prune(t, k).size(), expected, std::string(to_string(k)) + " count vs recurrence"))
        return v;
    if (t.shape() == Shape::list)
      if (auto v = same(expected, contents_term(t).size() + 2, "list of length n has n+2")) return v;
    return std::nullopt;
  };
  return make_law<Term>("prune-counts",
                        "prune sizes follow 2 at a childless node and 1 + product over children",
                        Expectation::holds, p);
}

inline LawCase prune_fold_vs_recurrence() {
  Property<Term> p;
  p.exhaustive = prune_fixtures;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return random_term(rng, prune_gen(shape_for(i), -3, 3, 30, 3000));
  };
  p.check = [](const Term& t) -> Verdict {
    const auto rec = prune_recursive(t);
    for (Kind k : all_kinds)
      if (auto v = same(prune(t, k), Collection<Pruned>(k, rec), std::string(to_string(k)))) return v;
    return std::nullopt;
  };
  return make_law<Term>("prune-fold-vs-recurrence",
                        "the fold form of prune equals its recursive description",
                        Expectation::holds, p);
}

inline LawCase prune_subobject() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return random_term(rng, prune_gen(shape_for(i), -3, 3, 30, 3000));
  };
  p.check = [](const Term& t) -> Verdict {
    const auto all = prune(t, Kind::bag);
    for (const Pruned& q : all)
      if (!is_pruning_of(q, t)) return "not a pruning: " + to_sexpr(q);
    for (std::size_t i = 1; i < all.size(); ++i)
      if (all.items()[i] == all.items()[i - 1]) return "repeated pruning " + to_sexpr(all.items()[i]);
    return std::nullopt;
  };
  return make_law<Term>("prune-subobject",
                        "each pruning is the term with some subterms cut, and none repeats",
                        Expectation::holds, p);
}

inline LawCase prune_set_vs_bag() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return random_term(rng, prune_gen(shape_for(i), 0, 1, 30, 3000));
  };
  p.check = [](const Term& t) -> Verdict {
    return same(prune(t, Kind::set).size(), prune(t, Kind::bag).size(), "set vs bag count");
  };
  // Two prunings of one term differ in where they cut, so they are always
  // distinct values; repeated labels cannot make them collide.
  return make_law<Term>("prune-set-vs-bag",
                        "prunings of a term are pairwise distinct, so sets keep them all",
                        Expectation::holds, p);
}

inline LawCase segs_set_collapses() {
  Property<Term> p;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return random_term(rng, prune_gen(shape_for(i), 0, 1, 20, 1000));
  };
  p.check = [](const Term& t) -> Verdict {
    return same(segs(t, Kind::set).size(), segs(t, Kind::bag).size(), "set vs bag count");
  };
  return make_law<Term>("segs-set-collapses",
                        "segments from different subterms can coincide, so sets have fewer",
                        Expectation::fails_with_witness, p);
}

inline LawCase segs_count() {
  Property<Term> p;
  p.exhaustive = prune_fixtures;
  p.gen = [](Rng& rng, std::uint64_t i) {
    return random_term(rng, prune_gen(shape_for(i), -3, 3, 20, 1000));
  };
  p.check = [](const Term& t) -> Verdict {
    std::size_t expected = 0;
    for (const Term& s : contents_labelled(subterms(t))) expected += bag_prune_count(s);
    if (auto v = same(segs(t, Kind::bag).size(), expected, "sum over subterms")) return v;
    return same(bag_segs_count(t), expected, "count recurrence");
  };
  return make_law<Term>("segs-count", "segs has the prunings of every subterm",
                        Expectation::holds, p);
}

inline LawCase segs_list_classical() {
  Property<Labels> p;
  p.gen = [](Rng& rng, std::uint64_t) { return random_labels(rng, 7, -5, 5); };
  p.check = [](const Labels& xs) -> Verdict {
    const auto values = fmap([](const Pruned& q) { return pruned_fold(Label{0}, sum_alg, q); },
                             segs(mk::list(xs), Kind::bag));
    // Classical segments, plus each tail once more: the pruning that keeps the
    // whole tail down to nil sums the same as the one cutting just before nil.
    Labels expected;
    for (const auto& s : segs_list(xs)) expected.push_back(sum_list(s));
    for (const auto& t : tails_list(xs)) expected.push_back(sum_list(t));
    return same(values, Collection<Label>(Kind::bag, expected), "segment sums");
  };
  return make_law<Labels>("segs-list-classical",
                          "on lists, generic segment sums are the classical ones plus every tail",
                          Expectation::holds, p);
}

// --- semirings ----------------------------------------------------------------

inline LawCase semiring_axioms() {
  using In = std::pair<std::pair<Label, Label>, Label>;
  // 1000 stands for the additive unit of whichever semiring is being checked.
  constexpr Label unit_marker = 1000;
  Property<In> p;
  p.gen = [](Rng& rng, std::uint64_t) {
    auto one = [&] { return rng.chance(0.1) ? unit_marker : rng.between(-50, 50); };
    const Label a = one(), b = one();
    return In({a, b}, one());
  };
  p.check = [](const In& in) -> Verdict {
    for (const auto& s : all_semirings) {
      auto v_of = [&](Label x) { return x == unit_marker ? s.zero : into(s, x); };
      const Label a = v_of(in.first.first), b = v_of(in.first.second), c = v_of(in.second);
      const std::string n(s.name);
      if (auto v = same(s.add(s.add(a, b), c), s.add(a, s.add(b, c)), n + " add assoc")) return v;
      if (auto v = same(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)), n + " mul assoc")) return v;
      if (auto v = same(s.add(a, b), s.add(b, a), n + " add commutes")) return v;
      if (auto v = same(s.add(a, s.zero), a, n + " add unit")) return v;
      if (auto v = same(s.mul(a, s.one), a, n + " mul unit")) return v;
      if (auto v = same(s.mul(s.one, a), a, n + " mul unit left")) return v;
      if (auto v = same(s.mul(a, s.zero), s.zero, n + " zero absorbs")) return v;
      if (auto v = same(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)), n + " left distributive"))
        return v;
      if (auto v = same(s.mul(s.add(b, c), a), s.add(s.mul(b, a), s.mul(c, a)), n + " right distributive"))
        return v;
      if (s.idempotent_add)
        if (auto v = same(s.add(a, a), a, n + " add idempotent")) return v;
    }
    return std::nullopt;
  };
  return make_law<In>("semiring-axioms", "the built-in semirings satisfy the semiring laws",
                      Expectation::holds, p);
}

}  // namespace laws

/// Every law, in a fixed order.
inline const std::vector<LawCase>& law_registry() {
  static const std::vector<LawCase> registry = [] {
    using namespace laws;
    return std::vector<LawCase>{
        fold_universal_base(),
        fold_universal(),
        fold_fusion(),
        fold_map_fusion(),
        functor_laws(),
        unfold_roundtrip(),
        para_degenerate(),
        print_parse_roundtrip(),
        order_matches_string(),
        scan_lemma(),
        scan_skeleton(),
        subterms_count(),
        labelled_shape(),
        subterms_para_equiv(),
        subterms_unfold_equiv(),
        monad_laws(),
        join_distributes(),
        join_zero_axiom(),
        monad_algebra(),
        reduce_distributes(),
        reduce_unit_forced(),
        semiring_axioms(),
        horner_list_law(),
        poly_horner_law(),
        prefix_sum_law(),
        scanr_head(),
        mss_chain(),
        rectangle_distributivity(),
        face7_lists(),
        delta2_via_bidist(),
        distlist_defs_equiv(),
        cp_distributivity(),
        cp_distributivity_set_plus_times(),
        collection_distributivity(),
        collection_distributivity_set_plus_times(),
        contents_naturality(),
        delta_respects_contents(),
        horner_generic_vs_prune(),
        horner_b_value_dependence(),
        mss_generic_scan_vs_brute(),
        mss_generic_vs_linear(),
        set_plus_nonidempotent(),
        prune_counts(),
        prune_fold_vs_recurrence(),
        prune_subobject(),
        prune_set_vs_bag(),
        segs_count(),
        segs_list_classical(),
        segs_set_collapses(),
    };
  }();
  return registry;
}

inline const LawCase* find_law(std::string_view id) {
  for (const auto& c : law_registry())
    if (c.id == id) return &c;
  return nullptr;
}

inline LawReport run_law(std::string_view id, std::uint64_t seed, std::uint64_t trials) {
  const LawCase* c = find_law(id);
  if (!c) throw UnknownLaw(id);
  return c->run(seed, trials);
}

/// Runs the registry in order. With `only`, runs exactly the named laws
/// (optional ones included); without it, every non-optional law.
inline std::vector<LawReport> run_all(std::uint64_t seed, std::uint64_t trials,
                                      const std::optional<std::vector<std::string>>& only = std::nullopt) {
  if (only)
    for (const auto& id : *only)
      if (!find_law(id)) throw UnknownLaw(id);
  std::vector<LawReport> out;
  for (const auto& c : law_registry()) {
    const bool wanted =
        only ? std::find(only->begin(), only->end(), c.id) != only->end() : !c.optional;
    if (wanted) out.push_back(c.run(seed, trials));
  }
  return out;
}

}  // namespace gmss
