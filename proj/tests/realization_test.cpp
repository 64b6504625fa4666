#include "fspace/realization.hpp"

#include <gtest/gtest.h>

namespace fspace {
namespace {

TEST(VerifyRealization, CyclicThree) {
  auto report = verify_realization(cyclic(3));
  EXPECT_TRUE(report.minimal);
  EXPECT_EQ(report.induced_automorphisms, 3u);
  EXPECT_EQ(report.engine_order, 3u);
  EXPECT_TRUE(report.blocks_preserved);
  EXPECT_TRUE(report.passed());
  const auto text = report.to_text();
  EXPECT_TRUE(text.ends_with("order(Aut) = 3 = |G| : PASS\n")) << text;
}

TEST(VerifyRealization, DihedralSix) {
  auto report = verify_realization(dihedral(6));
  EXPECT_TRUE(report.minimal);
  EXPECT_EQ(report.induced_automorphisms, 6u);
  EXPECT_TRUE(report.induced_distinct);
  EXPECT_EQ(report.engine_order, 6u);
  EXPECT_TRUE(report.passed());
}

TEST(VerifyRealization, TrivialGroupRejected) {
  EXPECT_THROW(verify_realization(cyclic(1)), std::invalid_argument);
}

TEST(VerifyRealization, BudgetReportsSize) {
  try {
    verify_realization(dihedral(6), 100);
    FAIL() << "expected a budget error";
  } catch (const std::length_error &e) {
    EXPECT_NE(std::string(e.what()).find("588"), std::string::npos);
  }
}

TEST(InducedTranslation, IdentityAndComposition) {
  auto g = dihedral(6);
  auto space = build_realization(g);
  auto id = induced_translation(g, space, g.identity());
  for (std::size_t i = 0; i < id.size(); ++i)
    EXPECT_EQ(id[i], i);
  // x -> x*a then x -> x*b equals x -> x*(a*b)
  auto tau = g.generators()[0], sigma = g.generators()[1];
  auto pa = induced_translation(g, space, tau);
  auto pb = induced_translation(g, space, sigma);
  auto pab = induced_translation(g, space, g.multiply(tau, sigma));
  for (std::size_t i = 0; i < pa.size(); ++i)
    EXPECT_EQ(pb[pa[i]], pab[i]);
  EXPECT_TRUE(preserves_blocks(space, pa));
}

TEST(InducedTranslation, EngineGeneratorsPreserveBlocks) {
  for (const auto &g : {cyclic(4), direct_product(cyclic(2), cyclic(2))}) {
    auto space = build_realization(g);
    auto aut = hasse_automorphisms(space.poset);
    EXPECT_EQ(aut.order, g.order());
    for (const auto &gen : aut.generators) {
      EXPECT_TRUE(preserves_blocks(space, gen));
      for (std::size_t x = 0; x < gen.size(); ++x)
        EXPECT_EQ(space.poset.level(gen[x]), space.poset.level(x));
    }
  }
}

TEST(VerifyRealization, Deterministic) {
  auto a = verify_realization(direct_product(cyclic(2), cyclic(2)));
  auto b = verify_realization(direct_product(cyclic(2), cyclic(2)));
  EXPECT_EQ(a.to_text(), b.to_text());
}

} // namespace
} // namespace fspace
