#include <gtest/gtest.h>

#include "gmss/generators.hpp"
#include "gmss/schemes.hpp"
#include "oracles.hpp"

using namespace gmss;

namespace {

Term ex7() { return parse_term("(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))", Shape::htree); }

TEST(Fold, Examples) {
  EXPECT_EQ(fold(sum_alg, mk::list({1, 2})), 3);
  EXPECT_EQ(fold(sum_alg, ex7()), 11);
  auto tag_of = [](const Node<Label, Label>& n) { return static_cast<Label>(n.tag) * 100; };
  EXPECT_EQ(fold(tag_of, mk::nil()), tag_of(Node<Label, Label>{Tag::nil, std::nullopt, {}}));
}

TEST(Fold, AgreesWithDirectRecursion) {
  Rng rng(3);
  for (Shape s : all_shapes) {
    TermGen g;
    g.shape = s;
    for (int i = 0; i < 200; ++i) {
      const Term t = random_term(rng, g);
      EXPECT_EQ(fold(sum_alg, t), oracle::label_sum(t));
      EXPECT_EQ(fold<std::size_t>(
                    [](const Node<Label, std::size_t>& n) {
                      std::size_t c = 1;
                      for (auto k : n.kids) c += k;
                      return c;
                    },
                    t),
                oracle::nodes(t));
      EXPECT_EQ(fold<Term>(in_term, t), t);
    }
  }
}

TEST(Fold, OverflowIsReported) {
  EXPECT_THROW(fold(sum_alg, mk::list({max_sentinel, 1})), OverflowError);
}

TEST(Unfold, Countdown) {
  auto countdown = [](Label n) {
    return n == 0 ? Node<Label, Label>{Tag::nil, std::nullopt, {}}
                  : Node<Label, Label>{Tag::cons, n, {n - 1}};
  };
  EXPECT_EQ(to_sexpr(unfold_bounded<Label>(countdown, 3, 10)), "(cons 3 (cons 2 (cons 1 nil)))");
  // The nil sits at level 3, so a bound of 3 is enough.
  EXPECT_NO_THROW(unfold_bounded<Label>(countdown, 3, 3));
  EXPECT_THROW(unfold_bounded<Label>(countdown, 3, 2), DepthExceeded);
}

TEST(Unfold, ImmediateNilAtAnyDepth) {
  auto stop = [](int) { return Node<Label, int>{Tag::nil, std::nullopt, {}}; };
  for (std::size_t d : {0u, 1u, 7u}) EXPECT_EQ(unfold_bounded<int>(stop, 0, d), mk::nil());
}

TEST(Unfold, ConstantConsHitsTheBound) {
  auto forever = [](int) { return Node<Label, int>{Tag::cons, 1, {0}}; };
  try {
    unfold_bounded<int>(forever, 0, 4);
    FAIL();
  } catch (const DepthExceeded& e) {
    EXPECT_EQ(e.max_depth(), 4u);
  }
}

TEST(Para, SeesOriginalChildren) {
  using Slot = std::pair<std::string, Term>;
  const auto seen = para<std::string>(
      [](const Node<Label, Slot>& n) {
        return n.kids.empty() ? std::string("-") : to_sexpr(n.kids[0].second);
      },
      mk::list({1, 2}));
  EXPECT_EQ(seen, "(cons 2 nil)");
}

TEST(MapTerm, RelabelsKeepingShape) {
  const Term t = map_term([](Label a) { return a * 10; }, ex7());
  EXPECT_EQ(to_sexpr(t), "(fork 10 (leaf 20) (fork 30 (leaf 10) (leaf 40)))");
}

TEST(Contents, NodeExamples) {
  EXPECT_TRUE(contents_node(Node<Label, Label>{Tag::nil, std::nullopt, {}}).empty());
  EXPECT_EQ(contents_node(Node<Label, Label>{Tag::cons, 4, {7}}), (std::vector<Label>{4, 7}));
  EXPECT_EQ(contents_node(Node<Label, Label>{Tag::fork, 3, {1, 4}}), (std::vector<Label>{3, 1, 4}));
  EXPECT_EQ(contents_node(Node<Label, Label>{Tag::bin, std::nullopt, {1, 4}}),
            (std::vector<Label>{1, 4}));
}

TEST(Contents, TermExamples) {
  EXPECT_TRUE(contents_term(mk::nil()).empty());
  EXPECT_EQ(contents_term(mk::list({4, -5})), (std::vector<Label>{4, -5}));
  EXPECT_EQ(contents_term(ex7()), (std::vector<Label>{1, 2, 3, 1, 4}));
  Rng rng(4);
  for (Shape s : all_shapes) {
    TermGen g;
    g.shape = s;
    for (int i = 0; i < 100; ++i) {
      const Term t = random_term(rng, g);
      std::vector<Label> expected;
      oracle::preorder_labels(t, expected);
      EXPECT_EQ(contents_term(t), expected);
    }
  }
}

TEST(Distribute, Examples) {
  const Node<Label, Collection<int>> nil{Tag::nil, std::nullopt, {}};
  const auto one = distribute_node(nil, Kind::bag);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.items()[0].tag, Tag::nil);

  const Node<Label, Collection<int>> c{Tag::cons, 1, {Collection<int>(Kind::bag, {10, 20})}};
  const auto two = distribute_node(c, Kind::bag);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two.items()[0].kids[0], 10);
  EXPECT_EQ(two.items()[1].kids[0], 20);

  const Node<Label, Collection<char>> b{
      Tag::bin, std::nullopt, {Collection<char>(Kind::list, {'a'}), Collection<char>(Kind::list, {'b', 'c'})}};
  const auto ab = distribute_node(b, Kind::list);
  ASSERT_EQ(ab.size(), 2u);
  EXPECT_EQ(ab.items()[0].kids, (std::vector<char>{'a', 'b'}));
  EXPECT_EQ(ab.items()[1].kids, (std::vector<char>{'a', 'c'}));
}

TEST(Distribute, ListCountAndOrder) {
  const Node<Label, Collection<int>> f{
      Tag::fork, 0, {Collection<int>(Kind::list, {1, 2, 3}), Collection<int>(Kind::list, {4, 5})}};
  const auto all = distribute_node(f, Kind::list);
  ASSERT_EQ(all.size(), 6u);
  std::vector<std::vector<int>> got;
  for (const auto& n : all) got.push_back(n.kids);
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}));
  const Node<Label, Collection<int>> with_empty{
      Tag::fork, 0, {Collection<int>(Kind::list, {1}), Collection<int>(Kind::list)}};
  EXPECT_TRUE(distribute_node(with_empty, Kind::list).empty());
}

TEST(Distribute, KindsMustAgree) {
  const Node<Label, Collection<int>> c{Tag::cons, 1, {Collection<int>(Kind::set, {1})}};
  EXPECT_THROW(distribute_node(c, Kind::bag), KindMismatch);
}

TEST(Distribute, BothPositions) {
  const Node<Collection<int>, Collection<int>> n{
      Tag::cons, Collection<int>(Kind::list, {1, 2}), {Collection<int>(Kind::list, {7})}};
  const auto all = bidistribute_node(n, Kind::list);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(contents_node(all.items()[0]), (std::vector<int>{1, 7}));
  EXPECT_EQ(contents_node(all.items()[1]), (std::vector<int>{2, 7}));
}

}  // namespace
