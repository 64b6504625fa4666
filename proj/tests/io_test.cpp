#include "fspace/asym_blocks.hpp"
#include "fspace/blocks.hpp"
#include "fspace/io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <regex>

namespace fspace {
namespace {

TEST(PosetJson, RoundTripsConstructedSpaces) {
  std::mt19937 rng(5);
  std::vector<Poset> cases = {build_F(0), build_F(3), build_realization(cyclic(3)).poset, Poset::from_covers({}, {})};
  for (int i = 0; i < 20; ++i)
    cases.push_back(testing::random_poset(rng, 1 + i, 0.3));
  for (const auto &p : cases)
    EXPECT_EQ(poset_from_json(poset_to_json(p)), p);
}

TEST(PosetJson, Schema) {
  auto text = poset_to_json(Poset::from_covers({"a", "b"}, {{"a", "b"}}));
  auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["points"], nlohmann::json({"a", "b"}));
  EXPECT_EQ(doc["covers"], nlohmann::json::array({nlohmann::json::array({"a", "b"})}));
}

TEST(PosetJson, RejectsBadInput) {
  EXPECT_THROW(poset_from_json("{not json"), std::invalid_argument);
  EXPECT_THROW(poset_from_json(R"({"points": ["a"]})"), std::invalid_argument);
  EXPECT_THROW(poset_from_json(R"({"points": ["a","b"], "covers": [["a"]]})"), std::invalid_argument);
  EXPECT_THROW(poset_from_json(R"({"points": ["a","b"], "covers": [["a","b"],["b","a"]]})"), std::invalid_argument);
}

TEST(DigraphJson, RoundTripsCayleyGraphs) {
  for (const auto &g : {cyclic(3), dihedral(6), symmetric(4)}) {
    auto c = cayley_graph(g);
    EXPECT_EQ(digraph_from_json(digraph_to_json(c)), c);
  }
  auto two_col = digraph_from_json(R"({"vertices": ["u","v"], "edges": [["u","v",1],["u","v",2],["v","u"]]})");
  EXPECT_EQ(two_col.edges().size(), 3u);
}

TEST(PermutationsJson, Parses) {
  auto gens = permutations_from_json("[[1,2,0],[1,0,2]]");
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0], (Permutation{1, 2, 0}));
  EXPECT_THROW(permutations_from_json(R"({"a": 1})"), std::invalid_argument);
}

TEST(Dot, F3HasTwoRanksAndAllCovers) {
  auto dot = poset_to_dot(build_F(3), "F_3");
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  std::regex rank(R"(\{ rank=same;([^}]*)\})");
  std::vector<std::size_t> rank_sizes;
  for (std::sregex_iterator it(dot.begin(), dot.end(), rank), end; it != end; ++it) {
    auto body = (*it)[1].str();
    rank_sizes.push_back(static_cast<std::size_t>(std::count(body.begin(), body.end(), ';')));
  }
  EXPECT_EQ(rank_sizes, (std::vector<std::size_t>{7, 7}));
  std::regex edge(R"re("([^"]+)" -> "([^"]+)")re");
  std::size_t edges = 0;
  for (std::sregex_iterator it(dot.begin(), dot.end(), edge), end; it != end; ++it) {
    EXPECT_TRUE((*it)[1].str().ends_with("/bot"));
    EXPECT_TRUE((*it)[2].str().ends_with("/top"));
    ++edges;
  }
  EXPECT_EQ(edges, 29u);
}

TEST(Dot, CayleyColors) {
  auto dot = digraph_to_dot(cayley_graph(dihedral(6)));
  EXPECT_NE(dot.find("color=red"), std::string::npos);
  EXPECT_NE(dot.find("color=blue"), std::string::npos);
}

TEST(CycleNotation, Formats) {
  std::vector<std::string> names{"a", "b", "c", "d"};
  EXPECT_EQ(cycle_notation({0, 1, 2, 3}, names), "()");
  EXPECT_EQ(cycle_notation({1, 2, 0, 3}, names), "(a b c)");
  EXPECT_EQ(cycle_notation({1, 0, 3, 2}, names), "(a b)(c d)");
}

} // namespace
} // namespace fspace
