#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cover_spectra;
using namespace fixtures;

TEST(Classify, PathAndTriangle) {
  MultiGraph p = p3();
  auto gp = classify(p, th(0));
  EXPECT_EQ(gp.zero_set, ids(p, {"1", "3"}));
  EXPECT_EQ(gp.inf_set, ids(p, {"2"}));
  EXPECT_EQ(gp.pm_set, 0u);
  EXPECT_EQ(gp.m_theta, 1);

  MultiGraph k = k3();
  auto gk = classify(k, th(0));
  EXPECT_EQ(gk.zero_set, k.all());
  EXPECT_EQ(gk.frontier_of_zero, 0u);
  EXPECT_EQ(gk.m_theta, 1);
  EXPECT_TRUE(gk.is_critical());

  auto one = classify(MultiGraph::with_vertices(1), th(1));
  EXPECT_EQ(one.pm_set, 1u);
  EXPECT_EQ(one.m_theta, 0);
}

TEST(Classify, Fig1) {
  MultiGraph g = fig1();
  auto p = classify(g, th(-1));
  EXPECT_EQ(p.zero_set, ids(g, {"1", "2", "4", "5"}));
  EXPECT_EQ(p.inf_set, ids(g, {"3"}));
  EXPECT_EQ(p.m_theta, 1);
  EXPECT_EQ(p.critical_components.size(), 2u);
}

TEST(Classify, CharacteristicAnalogueFailsOnFig1) {
  // For phi every vertex deletion lowers the multiplicity of -1, so the zero class
  // is the whole graph: one critical component that is not a tree, although -1 is
  // an eigenvalue of the covers.
  MultiGraph g = fig1();
  auto p = classify(g, th(-1), PolyKind::Characteristic);
  EXPECT_EQ(p.m_theta, 3);
  EXPECT_EQ(p.zero_set, g.all());
  ASSERT_EQ(p.critical_components.size(), 1u);
  EXPECT_FALSE(is_forest_within(g, p.critical_components[0]));
  EXPECT_NE(p.m_theta, static_cast<int>(p.critical_components.size()) - set_size(p.frontier_of_zero));
}

TEST(Criticality, Examples) {
  EXPECT_TRUE(is_theta_critical(k3(), th(0)));
  EXPECT_FALSE(is_theta_critical(simple(2, {{1, 2}}), th(0)));
  MultiGraph c = MultiGraph::with_vertices(1);
  c.set_weight(0, Rational(4));
  EXPECT_TRUE(is_theta_critical(c, th(4)));
}

TEST(Contraction, Examples) {
  MultiGraph e = simple(2, {{1, 2}});
  PolynomialCache ce(e);
  EXPECT_EQ(contraction_lambda(ce, ce.all(), 0, 1, Rational(2)), Rational(-1));
  MultiGraph p = p3();
  PolynomialCache cp(p);
  EXPECT_EQ(contraction_lambda(cp, cp.all(), 0, 2, Rational(3)), Rational(-1, 9));
  MultiGraph two = MultiGraph::with_vertices(2);
  PolynomialCache ct(two);
  EXPECT_EQ(contraction_lambda(ct, ct.all(), 0, 1, Rational(1)), Rational(0));
  EXPECT_THROW(contraction_lambda(cp, cp.all(), 0, 2, Rational(0)), Error);
}

TEST(Contraction, IdentityOnCorpus) {
  // mu(G) mu(G-ij) = mu(G-i) mu(G-j) + lambda_{i~j} mu(G-ij)^2 at every non-pole.
  for (std::size_t k = 0; k < 30; ++k) {
    MultiGraph g = corpus_graph(k, 8);
    if (g.vertex_count() < 2) continue;
    PolynomialCache cache(g);
    const VertexSet all = cache.all();
    for (long x : {-5, -2, 3, 7}) {
      Rational x0(x, 3);
      Rational den = cache.matching(all & ~bit(0) & ~bit(1))(x0);
      if (den.is_zero()) continue;
      Rational lhs = cache.matching(all)(x0) * den;
      Rational rhs = cache.matching(all & ~bit(0))(x0) * cache.matching(all & ~bit(1))(x0) +
                     contraction_lambda(cache, all, 0, 1, x0) * den * den;
      EXPECT_EQ(lhs, rhs) << k << " at " << x0.str();
    }
  }
}

TEST(Structure, SuiteOnCorpus) {
  for (std::size_t k = 0; k < 60; ++k) {
    MultiGraph g = corpus_graph(k, 9);
    PolynomialCache cache(g);
    auto thetas = theta_sample(cache.matching(cache.all()), 2);
    for (const auto& t : thetas) {
      GEPartition p = classify(cache, cache.all(), t);  // asserts the identity and frontier inclusion
      EXPECT_TRUE(check_matched_special(g, p).passed) << k;
      EXPECT_TRUE(check_stability(cache, p).passed) << k << " " << t.str();
      for (VertexSet h : p.critical_components) {
        EXPECT_EQ(cache.multiplicity(PolyKind::Matching, h, t), 1);
        VertexSet z = bit(lowest(h));
        EXPECT_TRUE(check_critical_remove(cache, p, z).passed);
        EXPECT_TRUE(check_critical_remove(cache, p, h).passed);
        if (t.is_rational()) {
          EXPECT_TRUE(check_critical_stability(cache, p, z).passed) << k;
        }
      }
    }
  }
}

TEST(Structure, CriticalRemoveExample) {
  MultiGraph g = disjoint_union(k3(), MultiGraph::with_vertices(1));
  PolynomialCache cache(g);
  auto p = classify(cache, cache.all(), th(0));
  EXPECT_EQ(p.m_theta, 2);
  auto rep = check_critical_remove(cache, p, bit(0));
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(cache.multiplicity(PolyKind::Matching, cache.all() & ~bit(0), th(0)), 1);
  EXPECT_THROW(check_critical_remove(cache, p, bit(0) | bit(3)), Error);
}

TEST(Structure, MatchedSpecialP3) {
  MultiGraph p = p3();
  auto part = classify(p, th(0));
  EXPECT_TRUE(check_matched_special(p, part).passed);
  EXPECT_EQ(part.critical_components.size(), 2u);
}
