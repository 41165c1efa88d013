#include <gtest/gtest.h>

#include "gmss/generators.hpp"
#include "gmss/horner.hpp"
#include "gmss/laws.hpp"
#include "oracles.hpp"

using namespace gmss;

namespace {

using Labels = std::vector<Label>;
const Labels ex3{4, -5, 6, -3, 2, 0, -4, 5, -6, 5};

Label add(Label a, Label b) { return a + b; }

TEST(Lists, FoldrScanr) {
  EXPECT_EQ(foldr_list(add, Label{0}, Labels{1, 2, 3}), 6);
  EXPECT_EQ(foldr_list(add, Label{42}, Labels{}), 42);
  EXPECT_EQ(scanr_list(add, Label{0}, Labels{1, 2}), (Labels{3, 2, 0}));
  EXPECT_EQ(scanr_list(add, Label{9}, Labels{}), (Labels{9}));
  auto cons = [](Label a, Labels xs) {
    xs.insert(xs.begin(), a);
    return xs;
  };
  EXPECT_EQ(foldr_list(cons, Labels{}, ex3), ex3);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto xs = random_labels(rng, 30, -100, 100);
    const auto sc = scanr_list(add, Label{0}, xs);
    ASSERT_EQ(sc.size(), xs.size() + 1);
    EXPECT_EQ(sc.front(), foldr_list(add, Label{0}, xs));
  }
}

TEST(Lists, FoldrOverflows) {
  EXPECT_THROW(foldr_list(checked_add, Label{0}, Labels{max_sentinel - 1, 5}), OverflowError);
}

TEST(Lists, TailsInitsSegs) {
  EXPECT_EQ(tails_list({1, 2}), (Segments{{1, 2}, {2}, {}}));
  EXPECT_EQ(inits_list({}), (Segments{{}}));
  EXPECT_EQ(inits_list({1, 2}), (Segments{{}, {1}, {1, 2}}));
  EXPECT_EQ(segs_list({1, 2}), (Segments{{}, {1}, {1, 2}, {}, {2}, {}}));
  for (std::size_t n = 0; n < 8; ++n) {
    const Labels xs(n, 1);
    EXPECT_EQ(segs_list(xs).size(), (n + 1) * (n + 2) / 2);
  }
}

TEST(Mss, Examples) {
  EXPECT_EQ(mss_spec({}), 0);
  EXPECT_EQ(mss_spec(ex3), 6);
  EXPECT_EQ(mss_spec({-1, -2}), 0);
  EXPECT_EQ(mss_quadratic({}), 0);
  EXPECT_EQ(mss_quadratic(ex3), 6);
  EXPECT_EQ(mss_linear(ex3), 6);
  EXPECT_EQ(mss_linear({}), 0);
  EXPECT_EQ(mss_linear({5}), 5);
  // The one-pass prefix computation gives 5 on the same list.
  EXPECT_EQ(max_prefix_sum(ex3), 5);
}

TEST(Mss, AlgorithmsAgreeWithOracle) {
  for (const auto& xs : all_lists(5, -2, 2)) {
    const Label want = oracle::mss(xs);
    ASSERT_EQ(mss_spec(xs), want);
    ASSERT_EQ(mss_quadratic(xs), want);
    ASSERT_EQ(mss_linear(xs), want);
    ASSERT_EQ(max_prefix_sum(xs), oracle::max_prefix_sum(xs));
  }
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto xs = random_labels(rng, 64, -1000, 1000);
    const Label want = oracle::mss(xs);
    ASSERT_EQ(mss_spec(xs), want);
    ASSERT_EQ(mss_quadratic(xs), want);
    ASSERT_EQ(mss_linear(xs), want);
  }
}

TEST(Horner, Lists) {
  EXPECT_EQ(horner_list(plus_times, {2, 3}), 9);
  for (const Semiring& s : all_semirings) EXPECT_EQ(horner_list(s, {}), s.one);
  EXPECT_EQ(horner_list(max_plus, ex3), 5);
  EXPECT_EQ(poly_horner({}, 7), 0);
  EXPECT_EQ(poly_horner({5}, 7), 5);
  EXPECT_EQ(poly_horner({1, 2, 3}, 2), 17);
  for (const auto& xs : all_lists(5, 0, 3))
    ASSERT_EQ(horner_list(plus_times, xs), oracle::sum_of_prefix_products(xs));
}

TEST(Horner, ProductAlgebra) {
  const Node<Label, Label> nil{Tag::nil, std::nullopt, {}};
  EXPECT_EQ(generic_product_alg(plus_times, 13)(nil), 13);
  EXPECT_EQ(generic_product_alg(plus_times, 1)(Node<Label, Label>{Tag::cons, 4, {7}}), 28);
  EXPECT_EQ(generic_product_alg(max_plus, 0)(Node<Label, Label>{Tag::fork, 3, {1, 4}}), 8);
}

TEST(Horner, Generic) {
  EXPECT_EQ(horner_generic(max_plus, 0, mk::leaf(5)), 5);
  EXPECT_EQ(horner_generic(max_plus, 0, mk::nil()), 0);
  EXPECT_EQ(horner_generic(max_plus, 0, laws::ex7_tree()), 11);
  EXPECT_EQ(horner_by_prunings(max_plus, 0, laws::ex7_tree()), 11);
}

TEST(Horner, GenericMatchesPruningOracle) {
  Rng rng(8);
  for (Shape s : all_shapes)
    for (int i = 0; i < 40; ++i) {
      const Term t = random_term(rng, laws::prune_gen(s, -9, 9, 20, 2000));
      Label want = min_sentinel;
      for (const Pruned& p : prune(t, Kind::list)) want = std::max(want, oracle::pruned_sum(p, 0));
      ASSERT_EQ(horner_generic(max_plus, 0, t), want) << to_sexpr(t);
      ASSERT_EQ(horner_by_prunings(plus_times, 1, t), horner_generic(plus_times, 1, t));
    }
}

TEST(Semirings, Tropical) {
  EXPECT_EQ(max_plus.mul(min_sentinel, 5), min_sentinel);
  EXPECT_EQ(min_plus.mul(7, max_sentinel), max_sentinel);
  EXPECT_EQ(max_plus.add(min_sentinel, -3), -3);
  EXPECT_EQ(semiring_by_name("min-plus")->name, min_plus.name);
  EXPECT_FALSE(semiring_by_name("nope"));
  EXPECT_EQ(default_b(max_plus), 0);
  EXPECT_EQ(default_b(plus_times), 1);
}

TEST(MssGeneric, Examples) {
  const Term t = laws::ex7_tree();
  EXPECT_EQ(mss_generic(max_plus, 0, t, Via::scan, Kind::bag), 11);
  EXPECT_EQ(mss_generic(max_plus, 0, t, Via::brute, Kind::bag), 11);
  EXPECT_EQ(mss_generic(max_plus, 0, mk::list(ex3), Via::scan, Kind::bag), 6);
  EXPECT_EQ(mss_generic(max_plus, 0, mk::list(ex3), Via::brute, Kind::bag), 6);
}

TEST(MssGeneric, SetWithNonIdempotentSumIsRejected) {
  const Term t = mk::list({1});
  for (Via via : {Via::scan, Via::brute})
    EXPECT_THROW(mss_generic(plus_times, 1, t, via, Kind::set), DistributivityViolation);
  // Forced, the two methods disagree.
  const Label scan = mss_generic(plus_times, 1, t, Via::scan, Kind::set, {.force = true});
  const Label brute = mss_generic(plus_times, 1, t, Via::brute, Kind::set, {.force = true});
  EXPECT_EQ(scan, 5);
  EXPECT_EQ(brute, 1);
  EXPECT_EQ(mss_generic(plus_times, 1, t, Via::brute, Kind::bag), 5);
}

TEST(MssGeneric, ListsMatchClassical) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto xs = random_labels(rng, 40, -20, 20);
    ASSERT_EQ(mss_generic(max_plus, 0, mk::list(xs), Via::scan, Kind::bag), mss_linear(xs));
  }
}

TEST(MssGeneric, ScanMatchesBrute) {
  Rng rng(10);
  for (const Semiring& s : all_semirings)
    for (Kind k : all_kinds) {
      if (k == Kind::set && !s.idempotent_add) continue;
      for (int i = 0; i < 20; ++i) {
        const Term t = laws::into(s, random_term(rng, laws::prune_gen(laws::shape_for(i), -3, 3, 12, 500)));
        ASSERT_EQ(mss_generic(s, default_b(s), t, Via::scan, k), mss_generic(s, default_b(s), t, Via::brute, k))
            << s.name << " " << to_string(k) << " " << to_sexpr(t);
      }
    }
}

}  // namespace
