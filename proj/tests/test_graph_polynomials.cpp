#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cover_spectra;
using namespace fixtures;

TEST(MatchingPolynomial, SmallGraphs) {
  EXPECT_EQ(matching_polynomial(MultiGraph()), poly({1}));
  EXPECT_EQ(matching_polynomial(simple(2, {{1, 2}})), poly({-1, 0, 1}));
  EXPECT_EQ(matching_polynomial(p3()), poly({0, -2, 0, 1}));
  EXPECT_EQ(matching_polynomial(k3()), poly({0, -3, 0, 1}));
  EXPECT_EQ(matching_polynomial(digon()), poly({-2, 0, 1}));
  MultiGraph loop = MultiGraph::with_vertices(1);
  loop.set_weight(0, Rational(5));
  loop.add_edge(0, 0);
  EXPECT_EQ(matching_polynomial(loop), poly({-5, 1}));
}

TEST(MatchingPolynomial, AgreesWithOracleAndBruteForce) {
  for (std::size_t k = 0; k < 80; ++k) {
    MultiGraph g = corpus_graph(k, 10);
    if (g.edge_count() > 20) continue;
    Polynomial mu = matching_polynomial(g);
    EXPECT_EQ(mu, matching_polynomial_bruteforce(g)) << k;
    EXPECT_EQ(mu, oracle::matching_polynomial(g)) << k;
  }
}

TEST(MatchingPolynomial, ForestDpMatchesCache) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    InstanceSpec spec;
    spec.model = GeneratorModel::Forest;
    spec.n = 3 + seed % 9;
    spec.seed = seed;
    MultiGraph g = generate_instance(spec);
    PolynomialCache cache(g);
    EXPECT_EQ(matching_polynomial_forest(g), cache.matching(cache.all()));
    EXPECT_EQ(matching_value_forest(g, Rational(3, 7)), cache.matching(cache.all())(Rational(3, 7)));
  }
}

TEST(CharacteristicPolynomial, Fig1Factorizations) {
  MultiGraph g = fig1();
  auto phi = characteristic_polynomial(g);
  EXPECT_EQ(factor_low_degree(phi).str(), "(x+1)^3*(x-1)*(x-3)");
  EXPECT_EQ(factor_low_degree(characteristic_polynomial(delete_vertices(g, std::vector<std::string>{"3"}))).str(),
            "(x+1)^2*(x-1)^2");
  EXPECT_EQ(characteristic_polynomial(MultiGraph::with_vertices(1)), poly({0, 1}));
}

TEST(CharacteristicPolynomial, AgreesWithDeterminantOracle) {
  for (std::size_t k = 0; k < 40; ++k) {
    MultiGraph g = corpus_graph(k, 9);
    EXPECT_EQ(characteristic_polynomial(g), oracle::characteristic_polynomial(g)) << k;
  }
}

TEST(MolecularPolynomial, ZeroWeightsGiveMatchingPolynomial) {
  for (std::size_t k = 0; k < 20; ++k) {
    MultiGraph g = corpus_graph(k, 8);
    EXPECT_EQ(molecular_polynomial(g, zero_cycle_weights(g)), matching_polynomial(g));
  }
}

TEST(MolecularPolynomial, HararyWeightsGiveCharacteristicPolynomial) {
  EXPECT_EQ(molecular_polynomial(k3(), harary_cycle_weights(k3())), poly({-2, -3, 0, 1}));
  for (std::size_t k = 0; k < 40; ++k) {
    MultiGraph g = corpus_graph(k, 8);
    EXPECT_EQ(molecular_polynomial(g, harary_cycle_weights(g)), oracle::characteristic_polynomial(g)) << k;
  }
}

TEST(MolecularPolynomial, AgreesWithDirectExpansion) {
  std::mt19937_64 rng(5);
  for (std::size_t k = 0; k < 40; ++k) {
    MultiGraph g = corpus_graph(k, 8);
    if (g.edge_count() > 18) continue;
    CycleWeightAssignment w;
    oracle::EdgeSetWeights ow;
    for (const auto& c : enumerate_cycles(g)) {
      Rational v(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
      w[c.edges] = v;
      auto key = c.edges;
      std::sort(key.begin(), key.end());
      ow[key] = v;
    }
    EXPECT_EQ(molecular_polynomial(g, w), oracle::molecular_direct(g, ow)) << k;
  }
  MultiGraph g = k3();
  EXPECT_THROW(molecular_polynomial(g, CycleWeightAssignment{}), Error);
}

TEST(TwistedCharacteristic, Examples) {
  MultiGraph loop = MultiGraph::with_vertices(1);
  loop.add_edge(0, 0);
  EXPECT_EQ(twisted_characteristic(loop, {2}), poly({2, 1}));
  MultiGraph g = k3();
  auto sp = spanning_forest(g).s_plus;
  std::vector<int> turns(3, 0);
  EXPECT_EQ(twisted_characteristic(g, turns), characteristic_polynomial(g));
  turns[sp[0]] = 2;
  EXPECT_EQ(twisted_characteristic(g, turns), poly({2, -3, 0, 1}));
}

TEST(TwistedCharacteristic, AgreesWithDeterminantOracle) {
  static const GaussianRational phases[4] = {GaussianRational(1), GaussianRational::i(), GaussianRational(-1),
                                             -GaussianRational::i()};
  std::mt19937_64 rng(11);
  for (std::size_t k = 0; k < 30; ++k) {
    MultiGraph g = corpus_graph(k, 8);
    std::vector<int> turns(g.edge_count());
    std::vector<GaussianRational> ph;
    for (auto& t : turns) {
      t = static_cast<int>(rng() % 4);
      ph.push_back(phases[t]);
    }
    EXPECT_EQ(twisted_characteristic(g, turns), oracle::characteristic_polynomial(g, ph)) << k;
  }
}

TEST(Alpha, ProjectiveValues) {
  MultiGraph p = p3();
  EXPECT_EQ(alpha_at(p, "1", th(0)).kind, AlphaValue::Kind::Zero);
  EXPECT_EQ(alpha_at(p, "2", th(0)).kind, AlphaValue::Kind::Infinity);
  MultiGraph one = MultiGraph::with_vertices(1);
  EXPECT_EQ(alpha_at(one, "1", th(1)), AlphaValue::finite(Rational(1)));
}

TEST(PathTree, SmallShapes) {
  auto t = path_tree(k3(), 0);
  EXPECT_EQ(t.tree.vertex_count(), 5u);
  EXPECT_TRUE(is_forest(t.tree));
  auto single = path_tree(MultiGraph::with_vertices(1), 0);
  EXPECT_EQ(single.tree.vertex_count(), 1u);
}

TEST(PathTree, RootRatioMatchesGraph) {
  // mu(G)/mu(G - i) equals the same ratio at the root of the path tree.
  for (std::size_t k = 0; k < 30; ++k) {
    MultiGraph g = corpus_graph(k, 7);
    auto t = path_tree(g, 0);
    MultiGraph t_minus;
    for (std::size_t v = 1; v < t.tree.vertex_count(); ++v) t_minus.add_vertex(t.tree.vertex(v).id, t.tree.vertex(v).r);
    for (const auto& e : t.tree.edges())
      if (e.u != t.root && e.v != t.root) t_minus.add_edge(e.id, e.u - 1, e.v - 1, e.rho);
    PolynomialCache cache(g);
    for (long x : {-3, 2, 5}) {
      Rational den = cache.matching(cache.all() & ~bit(0))(Rational(x));
      Rational tden = matching_value_forest(t_minus, Rational(x));
      if (den.is_zero() || tden.is_zero()) continue;
      EXPECT_EQ(cache.matching(cache.all())(Rational(x)) / den, matching_value_forest(t.tree, Rational(x)) / tden)
          << k << " at " << x;
    }
  }
}
