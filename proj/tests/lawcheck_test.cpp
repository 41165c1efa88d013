#include <map>
#include <set>

#include <gtest/gtest.h>

#include "gmss/laws.hpp"

using namespace gmss;

namespace {

TEST(Registry, IdsAreUnique) {
  std::set<std::string> seen;
  for (const LawCase& c : law_registry()) EXPECT_TRUE(seen.insert(c.id).second) << c.id;
}

TEST(Registry, EveryOperationHasALaw) {
  // Operation -> laws that exercise it.
  const std::map<std::string, std::vector<std::string>> covers{
      {"fold", {"fold-universal", "fold-universal-base", "fold-fusion", "fold-map-fusion"}},
      {"para", {"para-degenerate", "subterms-para-equiv"}},
      {"unfold_bounded", {"unfold-roundtrip", "subterms-unfold-equiv"}},
      {"map_term", {"functor-laws", "fold-map-fusion"}},
      {"to_sexpr/parse_term", {"print-parse-roundtrip", "order-matches-string"}},
      {"scan", {"scan-lemma", "scan-skeleton"}},
      {"subterms", {"subterms-count", "subterms-para-equiv", "subterms-unfold-equiv"}},
      {"unite/join", {"monad-laws", "join-distributes"}},
      {"reduce", {"monad-algebra", "reduce-distributes", "reduce-unit-forced"}},
      {"semirings", {"semiring-axioms"}},
      {"horner_list", {"horner-list", "poly-horner"}},
      {"scanr_list", {"prefix-sum", "scanr-head"}},
      {"mss", {"mss-chain"}},
      {"distribute_node", {"rectangle-distributivity", "delta2-via-bidist"}},
      {"dist_list", {"face7-lists", "distlist-defs-equiv"}},
      {"cp", {"cp-distributivity", "cp-distributivity-set-plus-times"}},
      {"collections", {"collection-distributivity", "collection-distributivity-set-plus-times"}},
      {"contents", {"contents-naturality", "delta-respects-contents"}},
      {"horner_generic", {"hornerGeneric-vs-prune", "horner-b-value-dependence"}},
      {"mss_generic", {"mssGeneric-scan-vs-brute", "mss-generic-vs-linear", "set-plus-nonidempotent"}},
      {"prune", {"prune-counts", "prune-fold-vs-recurrence", "prune-subobject", "prune-set-vs-bag"}},
      {"segs", {"segs-count", "segs-list-classical", "segs-set-collapses"}},
  };
  for (const auto& [op, ids] : covers)
    for (const auto& id : ids) EXPECT_NE(find_law(id), nullptr) << op << ": " << id;
}

TEST(Registry, ExpectedFailures) {
  for (const char* id : {"set-plus-nonidempotent", "cp-distributivity-set-plus-times",
                         "horner-b-value-dependence", "segs-set-collapses"})
    EXPECT_EQ(find_law(id)->expected, Expectation::fails_with_witness) << id;
  EXPECT_TRUE(find_law("join-zero-axiom")->optional);
}

TEST(RunLaw, ScanLemmaHolds) {
  const auto r = run_law("scan-lemma", 42, 500);
  EXPECT_EQ(r.outcome, Outcome::holds) << r.detail;
  EXPECT_EQ(r.trials, 500u);
  EXPECT_TRUE(r.met());
}

TEST(RunLaw, SingleTrial) {
  EXPECT_EQ(run_law("fold-universal-base", 0, 1).outcome, Outcome::holds);
}

TEST(RunLaw, SetPlusWitnessIsMinimal) {
  const auto r = run_law("set-plus-nonidempotent", 42, default_trials);
  ASSERT_EQ(r.outcome, Outcome::fails_with_witness);
  EXPECT_EQ(r.witness, "[1]");
  EXPECT_NE(r.detail.find("1 vs 2"), std::string::npos) << r.detail;
}

TEST(RunLaw, WitnessReplays) {
  for (const char* id : {"set-plus-nonidempotent", "cp-distributivity-set-plus-times", "segs-set-collapses",
                         "horner-b-value-dependence"}) {
    const auto r = run_law(id, 7, default_trials);
    ASSERT_EQ(r.outcome, Outcome::fails_with_witness) << id;
    EXPECT_TRUE(find_law(id)->replay(r.witness_value).has_value()) << id;
  }
}

TEST(RunLaw, UnknownId) {
  EXPECT_THROW(run_law("nosuch", 1, 1), UnknownLaw);
  EXPECT_THROW(run_all(1, 1, std::vector<std::string>{"scan-lemma", "nosuch"}), UnknownLaw);
}

TEST(RunAll, DefaultSeedMeetsEverything) {
  const auto reports = run_all(42, default_trials);
  EXPECT_TRUE(all_met(reports));
  for (const auto& r : reports) EXPECT_TRUE(r.met()) << r.id << " " << r.detail;
  std::size_t required = 0;
  for (const LawCase& c : law_registry()) required += !c.optional;
  EXPECT_EQ(reports.size(), required);
}

TEST(RunAll, EmptyFilter) {
  EXPECT_TRUE(run_all(42, default_trials, std::vector<std::string>{}).empty());
}

TEST(RunAll, FilterIncludesOptional) {
  const auto r = run_all(3, 20, std::vector<std::string>{"join-zero-axiom"});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].met());
}

TEST(RunAll, Deterministic) {
  const std::vector<std::string> ids{"fold-fusion", "prune-counts", "set-plus-nonidempotent", "mss-chain"};
  const auto a = run_all(99, 50, ids);
  const auto b = run_all(99, 50, ids);
  EXPECT_EQ(a, b);
  EXPECT_EQ(nlohmann::json(a).dump(), nlohmann::json(b).dump());
}

TEST(Reports, JsonRoundTrip) {
  for (const auto& r : run_all(5, 20, std::vector<std::string>{"scan-lemma", "segs-set-collapses"})) {
    const auto back = nlohmann::json::parse(nlohmann::json(r).dump()).get<LawReport>();
    EXPECT_EQ(back, r);
  }
}

TEST(Reports, Table) {
  const auto t = format_table(run_all(5, 20, std::vector<std::string>{"set-plus-nonidempotent"}));
  EXPECT_NE(t.find("set-plus-nonidempotent"), std::string::npos);
  EXPECT_NE(t.find("witness: [1]"), std::string::npos);
}

}  // namespace
