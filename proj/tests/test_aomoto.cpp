#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cover_spectra;
using namespace fixtures;

TEST(Aomoto, PathOnThreeVertices) {
  MultiGraph p = p3();
  auto c = maximal_refined_aomoto(p, th(0));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->subset, ids(p, {"1", "3"}));
  EXPECT_EQ(c->frontier, ids(p, {"2"}));
  EXPECT_EQ(c->surplus, 1);
  EXPECT_TRUE(c->refined);
  auto d = density_of_states(p, th(0));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->tau, Rational(1, 3));
}

TEST(Aomoto, TriangleHasNone) {
  EXPECT_FALSE(maximal_refined_aomoto(k3(), th(0)));
  EXPECT_FALSE(find_aomoto_bruteforce(k3(), th(0)));
  EXPECT_FALSE(density_of_states(k3(), th(0)));
}

TEST(Aomoto, Fig1) {
  MultiGraph g = fig1();
  auto c = maximal_refined_aomoto(g, th(-1));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->subset, ids(g, {"1", "2", "4", "5"}));
  EXPECT_EQ(c->components.size(), 2u);
  EXPECT_EQ(c->surplus, 1);
  EXPECT_EQ(density_of_states(g, th(-1))->tau, Rational(1, 5));
  EXPECT_FALSE(maximal_refined_aomoto(g, th(3)));
}

TEST(Aomoto, RefineKeepsSurplus) {
  MultiGraph g = simple(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  PolynomialCache cache(g);
  auto whole = evaluate_aomoto(cache, cache.all(), th(0), cache.all());
  ASSERT_TRUE(whole);
  EXPECT_FALSE(whole->refined);
  auto r = refine_aomoto(cache, cache.all(), th(0), *whole);
  EXPECT_TRUE(r.refined);
  EXPECT_EQ(r.subset, ids(g, {"1", "3", "5"}));
  EXPECT_GE(r.surplus, whole->surplus);

  AomotoCertificate bogus;
  bogus.subset = ids(g, {"1", "2", "3"});
  EXPECT_THROW(refine_aomoto(cache, cache.all(), th(0), bogus), Error);
}

TEST(Aomoto, StarIsAlreadyRefined) {
  MultiGraph g = simple(4, {{1, 2}, {1, 3}, {1, 4}});
  auto c = maximal_refined_aomoto(g, th(0));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->subset, ids(g, {"2", "3", "4"}));
  EXPECT_EQ(c->surplus, 2);
  EXPECT_EQ(density_of_states(g, th(0))->tau, Rational(1, 2));
}

TEST(Aomoto, CertificateValidation) {
  MultiGraph g = fig1();
  PolynomialCache cache(g);
  auto c = maximal_refined_aomoto(cache, cache.all(), th(-1));
  ASSERT_TRUE(c);
  EXPECT_TRUE(validate_certificate(cache, cache.all(), th(-1), *c).passed);
  auto wrong = *c;
  wrong.surplus = 2;
  EXPECT_FALSE(validate_certificate(cache, cache.all(), th(-1), wrong).passed);
  wrong = *c;
  wrong.subset = ids(g, {"1", "2", "3"});
  EXPECT_FALSE(validate_certificate(cache, cache.all(), th(-1), wrong).passed);
}

TEST(Aomoto, RobustUnderCycleDeletion) {
  MultiGraph g = fig1();
  PolynomialCache cache(g);
  std::optional<CyclePath> right;
  for (const auto& c : enumerate_cycles(g))
    if (contains(c.vertex_set(), g.index_of("4"))) right = c;
  ASSERT_TRUE(right);
  EXPECT_TRUE(check_robustness_under_cycle_deletion(cache, cache.all(), th(-1), *right).passed);
  EXPECT_THROW(check_robustness_under_cycle_deletion(cache, cache.all(), th(0), *right), Error);
}

TEST(Aomoto, SearchesAgreeWithOracle) {
  for (std::size_t k = 0; k < 80; ++k) {
    MultiGraph g = corpus_graph(k, 9);
    PolynomialCache cache(g);
    for (const auto& t : theta_sample(cache.matching(cache.all()), 2)) {
      bool expected = oracle::has_aomoto_subset(g, [&](std::uint64_t mask) {
        return multiplicity_at(oracle::matching_polynomial(induced_subgraph(g, mask)), t);
      });
      auto brute = find_aomoto_bruteforce(cache, cache.all(), t);
      auto refined = maximal_refined_aomoto(cache, cache.all(), t);
      EXPECT_EQ(brute.has_value(), expected) << k << " " << t.str();
      EXPECT_EQ(refined.has_value(), expected) << k << " " << t.str();
      if (refined) {
        EXPECT_TRUE(validate_certificate(cache, cache.all(), t, *refined).passed);
        EXPECT_EQ(refined->surplus, max_aomoto_surplus_bruteforce(cache, cache.all(), t).value()) << k;
        EXPECT_EQ(refine_aomoto(cache, cache.all(), t, *brute).surplus >= brute->surplus, true);
      }
    }
  }
}

TEST(Aomoto, RefineStarShrinksToLeaves) {
  MultiGraph g = simple(4, {{1, 2}, {1, 3}, {1, 4}});
  PolynomialCache cache(g);
  auto whole = evaluate_aomoto(cache, cache.all(), th(0), cache.all());
  ASSERT_TRUE(whole);
  EXPECT_FALSE(whole->refined);
  auto r = refine_aomoto(cache, cache.all(), th(0), *whole);
  EXPECT_EQ(r.subset, ids(g, {"2", "3", "4"}));
  EXPECT_EQ(r.surplus, 2);
  auto again = refine_aomoto(cache, cache.all(), th(0), r);
  EXPECT_EQ(again.subset, r.subset);
}

TEST(Aomoto, RefinedCertificateStructure) {
  int nested = 0;
  for (std::size_t k = 0; k < 80; ++k) {
    MultiGraph g = corpus_graph(k, 9, 7000);
    PolynomialCache cache(g);
    for (const auto& t : theta_sample(cache.matching(cache.all()), 0)) {
      auto top = maximal_refined_aomoto(cache, cache.all(), t);
      if (!top) continue;
      // Each component is exactly one critical component of the partition.
      GEPartition p = classify(cache, cache.all(), t);
      for (VertexSet comp : top->components)
        EXPECT_NE(std::find(p.critical_components.begin(), p.critical_components.end(), comp),
                  p.critical_components.end())
            << k;
      auto small = refine_aomoto(cache, cache.all(), t, *find_aomoto_bruteforce(cache, cache.all(), t));
      auto both = evaluate_aomoto(cache, cache.all(), t, small.subset | top->subset);
      ASSERT_TRUE(both) << k;
      EXPECT_TRUE(both->refined) << k;
      EXPECT_EQ((small.subset & ~top->subset), 0u) << "maximal subset does not contain " << k;
      if (small.subset != top->subset) {
        EXPECT_LT(small.surplus, top->surplus) << k;
        ++nested;
      }
    }
  }
  EXPECT_GT(nested, 0);
}
