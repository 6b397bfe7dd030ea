#include <gtest/gtest.h>

#include "srpl/enumerate.hpp"
#include "srpl/io.hpp"

using namespace srpl;

namespace {

Query query(SimplicialComplex c, IdealKind ik, PowerKind pk, Property p, std::optional<int> m) {
  return Query{std::move(c), ik, pk, p, m};
}

constexpr auto sr = IdealKind::stanley_reisner;

}  // namespace

TEST(Classifier, FiveCycleSymbolicCubeIsNotCm) {
  const auto r = classify(query(five_cycle(), sr, PowerKind::symbolic, Property::cm, 3));
  EXPECT_EQ(r.verdict, Verdict::fails);
  EXPECT_EQ(r.theorem, theorem::symbolic_cm);
  EXPECT_NE(r.witness.find("not a matroid"), std::string::npos);
}

TEST(Classifier, SquareIsLeftToOracle) {
  const auto r = classify(query(example_buchsbaum_square(), sr, PowerKind::ordinary, Property::buchsbaum, 2));
  EXPECT_EQ(r.verdict, Verdict::oracle_only);
  EXPECT_EQ(r.theorem, "none");
  EXPECT_FALSE(is_cm(power(sr_ideal(example_buchsbaum_square()), 2)));
}

TEST(Classifier, ThreeBlocksFacetIdealHoldsForAllPowers) {
  const auto q = query(example_three_blocks(), IdealKind::facet, PowerKind::symbolic, Property::cm, std::nullopt);
  const auto r = classify(q);
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.theorem, theorem::facet_dual);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.back().find("dim 3"), std::string::npos);
  for (int m = 1; m <= 3; ++m) EXPECT_TRUE(is_cm(symbolic_power(facet_ideal(example_three_blocks()), m)));
}

TEST(Classifier, OracleComparisons) {
  auto a = verify_against_oracle(query(uniform_matroid(5, 2), sr, PowerKind::symbolic, Property::cm, 3));
  EXPECT_EQ(a.report.verdict, Verdict::holds);
  EXPECT_TRUE(a.oracle_verdict);
  EXPECT_EQ(a.agree, true);

  auto b = verify_against_oracle(query(five_cycle(), sr, PowerKind::ordinary, Property::cm, 3));
  EXPECT_EQ(b.report.verdict, Verdict::fails);
  EXPECT_FALSE(b.oracle_verdict);
  EXPECT_EQ(b.agree, true);

  const auto two = disjoint_union(uniform_matroid(4, 3), uniform_matroid(4, 3));
  auto c = verify_against_oracle(query(two, sr, PowerKind::symbolic, Property::gcm, 3));
  EXPECT_EQ(c.report.verdict, Verdict::holds);
  EXPECT_TRUE(c.oracle_verdict);
  EXPECT_EQ(c.agree, true);
  EXPECT_TRUE(c.report.oracle.ran);
}

TEST(Classifier, SmallPowersAreOracleOnly) {
  for (const auto& c : complex_classes_up_to(4))
    for (int m = 1; m <= 2; ++m)
      for (Property p : {Property::cm, Property::s2, Property::gcm, Property::buchsbaum})
        for (PowerKind k : {PowerKind::symbolic, PowerKind::ordinary})
          EXPECT_EQ(classify(query(c, sr, k, p, m)).verdict, Verdict::oracle_only);
}

TEST(Classifier, VerdictStableAcrossPowersAboveTwo) {
  for (const auto& c : complex_classes_up_to(5))
    for (PowerKind k : {PowerKind::symbolic, PowerKind::ordinary}) {
      const auto base = classify(query(c, sr, k, Property::cm, 3));
      for (int m = 4; m <= 8; ++m) EXPECT_EQ(classify(query(c, sr, k, Property::cm, m)).verdict, base.verdict);
      EXPECT_EQ(classify(query(c, sr, k, Property::cm, std::nullopt)).verdict, base.verdict);
    }
}

TEST(Classifier, NonDecidedVerdictsNameATheorem) {
  for (const auto& c : complex_classes_up_to(4))
    for (Property p : {Property::cm, Property::s2, Property::gcm, Property::buchsbaum, Property::quasi_buchsbaum}) {
      const auto r = classify(query(c, sr, PowerKind::symbolic, p, 3));
      if (r.verdict != Verdict::oracle_only) {
        EXPECT_NE(r.theorem, "none");
      }
    }
}

TEST(Classifier, MalformedQueries) {
  EXPECT_THROW(classify(query(cycle(4), IdealKind::facet, PowerKind::ordinary, Property::cm, 3)), std::invalid_argument);
  EXPECT_THROW(classify(query(SimplicialComplex::void_complex(2), sr, PowerKind::symbolic, Property::cm, 3)),
               std::invalid_argument);
  EXPECT_THROW(classify(query(cycle(4), sr, PowerKind::symbolic, Property::cm, 0)), std::invalid_argument);
  EXPECT_THROW(verify_against_oracle(query(cycle(4), sr, PowerKind::symbolic, Property::buchsbaum, 3)),
               std::invalid_argument);
  EXPECT_THROW(verify_against_oracle(query(cycle(4), sr, PowerKind::symbolic, Property::cm, std::nullopt)),
               std::invalid_argument);
}

TEST(Classifier, BuchsbaumCarriesNoOracleNote) {
  const auto r = classify(query(uniform_matroid(5, 2), sr, PowerKind::symbolic, Property::buchsbaum, 3));
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.theorem, theorem::symbolic_bbm);
  EXPECT_NE(r.notes.front().find("no algebraic oracle"), std::string::npos);
}

TEST(Classifier, GraphRoutes) {
  // ordinary Buchsbaum on graphs: m = 3 is not covered, m >= 4 is
  const auto c4 = cycle(4);
  EXPECT_EQ(classify(query(c4, sr, PowerKind::ordinary, Property::buchsbaum, 3)).verdict, Verdict::oracle_only);
  EXPECT_EQ(classify(query(c4, sr, PowerKind::ordinary, Property::buchsbaum, 4)).verdict, Verdict::holds);
  // ordinary gCM of graphs: paths and cycles
  EXPECT_EQ(classify(query(path(5), sr, PowerKind::ordinary, Property::gcm, 3)).verdict, Verdict::holds);
  EXPECT_EQ(classify(query(complete_graph(4), sr, PowerKind::ordinary, Property::gcm, 3)).verdict, Verdict::fails);
  // symbolic S2 in dimension one goes to the oracle
  EXPECT_EQ(classify(query(c4, sr, PowerKind::symbolic, Property::s2, 3)).verdict, Verdict::oracle_only);
  // cover ideal of a graph reports the 4-cycle criterion
  const auto cover = classify(query(cycle(5), IdealKind::cover, PowerKind::symbolic, Property::cm, 3));
  EXPECT_EQ(cover.verdict, Verdict::fails);
  EXPECT_EQ(cover.notes.back(), "disjoint edges in 4-cycles: no");
}

TEST(Classifier, FacetRoutesInLowDimension) {
  const auto k = disjoint_union(complete_graph(3), complete_graph(4));
  const auto r = classify(query(k, IdealKind::facet, PowerKind::symbolic, Property::cm, 3));
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.theorem, theorem::facet_graph);
  const auto u = classify(query(uniform_matroid(4, 2), IdealKind::facet, PowerKind::symbolic, Property::cm, 3));
  EXPECT_EQ(u.verdict, Verdict::holds);
  EXPECT_EQ(u.theorem, theorem::facet_2dim);
  const auto p = classify(query(path(4), IdealKind::facet, PowerKind::symbolic, Property::cm, 3));
  EXPECT_EQ(p.verdict, Verdict::fails);
}
