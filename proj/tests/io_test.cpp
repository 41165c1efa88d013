#include <gtest/gtest.h>

#include "gmss/io.hpp"

using namespace gmss;

namespace {

using Labels = std::vector<Label>;

TEST(ParseList, Separators) {
  EXPECT_EQ(parse_list("4,-5,6"), (Labels{4, -5, 6}));
  EXPECT_EQ(parse_list("4 -5  6"), (Labels{4, -5, 6}));
  EXPECT_EQ(parse_list(" [1, 2,3] "), (Labels{1, 2, 3}));
  EXPECT_EQ(parse_list("+7\n8"), (Labels{7, 8}));
}

TEST(ParseList, Blank) {
  EXPECT_TRUE(parse_list("").empty());
  EXPECT_TRUE(parse_list("   ").empty());
  EXPECT_TRUE(parse_list("[]").empty());
}

TEST(ParseList, Errors) {
  EXPECT_THROW(parse_list("1,,2"), ParseError);
  EXPECT_THROW(parse_list("1,2,"), ParseError);
  EXPECT_THROW(parse_list("1 x"), ParseError);
  EXPECT_THROW(parse_list("12a"), ParseError);
  EXPECT_THROW(parse_list("[1,2"), ParseError);
  EXPECT_THROW(parse_list("99999999999999999999"), ParseError);
}

TEST(ParseList, Extremes) {
  EXPECT_EQ(parse_list("-9223372036854775808,9223372036854775807"), (Labels{min_sentinel, max_sentinel}));
}

TEST(Reports, JsonRoundTrip) {
  const MssReport m{"linear", 6, 10};
  EXPECT_EQ(nlohmann::json::parse(nlohmann::json(m).dump()).get<MssReport>(), m);
  TreeReport t{"htree", "max-plus", "bag", "scan", 0, 11, 5, std::nullopt};
  EXPECT_EQ(nlohmann::json::parse(nlohmann::json(t).dump()).get<TreeReport>(), t);
  t.check = 11;
  EXPECT_EQ(nlohmann::json::parse(nlohmann::json(t).dump()).get<TreeReport>(), t);
  const PruneReport p{"htree", "bag", 2, {"E", "(leaf 2)"}};
  EXPECT_EQ(nlohmann::json::parse(nlohmann::json(p).dump()).get<PruneReport>(), p);
  const BenchRow b{"spec", 400, 1.25, 17};
  EXPECT_EQ(nlohmann::json::parse(nlohmann::json(b).dump()).get<BenchRow>(), b);
}

}  // namespace
