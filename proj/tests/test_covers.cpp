#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cover_spectra;
using namespace fixtures;

namespace {

void expect_covering_map(const QuotientCover& qc) {
  ASSERT_EQ(qc.cover.vertex_count(), qc.vertex_projection.size());
  ASSERT_EQ(qc.cover.edge_count(), qc.edge_projection.size());
  for (std::size_t e = 0; e < qc.cover.edge_count(); ++e) {
    const Edge& up = qc.cover.edge(e);
    const Edge& down = qc.base.edge(qc.edge_projection[e]);
    EXPECT_EQ(qc.vertex_projection[up.u], down.u);
    EXPECT_EQ(qc.vertex_projection[up.v], down.v);
    EXPECT_EQ(up.rho, down.rho);
  }
  // Every cover vertex has the degree of its image.
  std::vector<int> up_deg(qc.cover.vertex_count()), down_deg(qc.base.vertex_count());
  for (const auto& e : qc.cover.edges()) ++up_deg[e.u], ++up_deg[e.v];
  for (const auto& e : qc.base.edges()) ++down_deg[e.u], ++down_deg[e.v];
  for (std::size_t v = 0; v < qc.cover.vertex_count(); ++v) EXPECT_EQ(up_deg[v], down_deg[qc.vertex_projection[v]]);
}

}  // namespace

TEST(QuotientCover, TrivialModulusIsTheGraph) {
  MultiGraph g = fig1();
  auto qc = build_quotient_cover(g, 1);
  EXPECT_EQ(qc.cover.vertex_count(), g.vertex_count());
  EXPECT_EQ(qc.cover.edge_count(), g.edge_count());
  EXPECT_EQ(characteristic_polynomial(qc.cover), characteristic_polynomial(g));
  expect_covering_map(qc);
}

TEST(QuotientCover, TriangleDoubleCoverIsHexagon) {
  auto qc = build_quotient_cover(k3(), 2);
  EXPECT_EQ(qc.cover.vertex_count(), 6u);
  EXPECT_TRUE(is_connected(qc.cover));
  EXPECT_EQ(characteristic_polynomial(qc.cover), characteristic_polynomial(cycle(6)));
  expect_covering_map(qc);
  EXPECT_EQ(qc.cover.vertex(0).id, "1@0");
}

TEST(QuotientCover, TreesAreTheirOwnCovers) {
  MultiGraph t = simple(4, {{1, 2}, {1, 3}, {3, 4}});
  auto qc = build_quotient_cover(t, 4);
  EXPECT_TRUE(qc.s_plus.empty());
  EXPECT_EQ(qc.cover.vertex_count(), 4u);
}

TEST(QuotientCover, LoopsAndDigons) {
  MultiGraph loop = MultiGraph::with_vertices(1);
  loop.add_edge(0, 0);
  auto ql = build_quotient_cover(loop, 4);
  EXPECT_EQ(ql.cover.vertex_count(), 4u);
  EXPECT_EQ(characteristic_polynomial(ql.cover), characteristic_polynomial(cycle(4)));
  auto qd = build_quotient_cover(digon(), 2);
  EXPECT_EQ(characteristic_polynomial(qd.cover), characteristic_polynomial(cycle(4)));
  expect_covering_map(qd);
}

TEST(QuotientCover, CapAndBadModulus) {
  MultiGraph pet = load_graph(std::string(DATA_DIR) + "/petersen.json");
  try {
    build_quotient_cover(pet, 4);
    FAIL() << "expected a cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoverTooLarge);
  }
  EXPECT_THROW(build_quotient_cover(k3(), 0), Error);
  EXPECT_THROW(character_factorization_check(k3(), 3), Error);
}

TEST(CharacterFactorization, Fig1) {
  for (int n : {1, 2, 4}) {
    auto r = character_factorization_check(fig1(), n);
    EXPECT_TRUE(r.passed) << n;
    EXPECT_EQ(r.characters, static_cast<std::size_t>(n * n));
    // -1 stays an eigenvalue of every cover.
    EXPECT_GE(multiplicity_at(r.cover_polynomial, th(-1)), 1);
  }
}

TEST(CharacterFactorization, WeightedCorpus) {
  int tested = 0;
  for (std::size_t k = 0; tested < 25 && k < 200; ++k) {
    MultiGraph g = corpus_graph(k, 7);
    if (spanning_forest(g).s_plus.size() > 2) continue;
    EXPECT_TRUE(character_factorization_check(g, 2).passed) << k;
    if (spanning_forest(g).s_plus.size() <= 1) {
      EXPECT_TRUE(character_factorization_check(g, 4).passed) << k;
    }
    ++tested;
  }
  EXPECT_EQ(tested, 25);
}

TEST(CoverBall, Shapes) {
  MultiGraph k2 = simple(2, {{1, 2}});
  EXPECT_EQ(build_cover_ball(k2, 0, 5).ball.vertex_count(), 2u);

  auto c3 = build_cover_ball(k3(), 0, 3);
  EXPECT_EQ(c3.ball.vertex_count(), 7u);
  EXPECT_TRUE(is_forest(c3.ball));

  MultiGraph tree = simple(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}});
  auto b = build_cover_ball(tree, 0, 4);
  EXPECT_EQ(b.ball.vertex_count(), 5u);
  EXPECT_EQ(characteristic_polynomial(b.ball), characteristic_polynomial(tree));

  MultiGraph loop = MultiGraph::with_vertices(1);
  loop.add_edge("l1", 0, 0);
  auto l = build_cover_ball(loop, 0, 2);
  EXPECT_EQ(l.ball.vertex_count(), 5u);
  EXPECT_EQ(l.ball.vertex(1).id, "1>l1+");

  auto d = build_cover_ball(digon(), 0, 2);
  EXPECT_EQ(d.ball.vertex_count(), 5u);
}

TEST(CoverBall, ProjectionRespectsWeights) {
  MultiGraph g = digon(GaussianRational(1), GaussianRational::i());
  auto b = build_cover_ball(g, 0, 3);
  for (std::size_t e = 0; e < b.ball.edge_count(); ++e) {
    const Edge& up = b.ball.edge(e);
    const Edge& down = g.edge(b.edge_projection[e]);
    EXPECT_EQ(up.rho.norm2(), down.rho.norm2());
    EXPECT_TRUE(b.vertex_projection[up.u] == down.u || b.vertex_projection[up.u] == down.v);
  }
}

TEST(CoverBall, Cap) {
  MultiGraph pet = load_graph(std::string(DATA_DIR) + "/petersen.json");
  EXPECT_THROW(build_cover_ball(pet, 0, 12), Error);
  EXPECT_THROW(build_cover_ball(pet, 99, 1), Error);
}

TEST(SpectralProbe, Hits) {
  auto p = spectral_probe(fig1(), th(-1));
  EXPECT_EQ(p.dimension, 5u);
  EXPECT_EQ(p.hits, 3u);
  EXPECT_LT(p.min_distance, 1e-9);
  auto q = spectral_probe(k3(), th(0));
  EXPECT_EQ(q.hits, 0u);
  EXPECT_NEAR(q.min_distance, 1.0, 1e-9);
  auto cover = build_quotient_cover(fig1(), 2);
  EXPECT_GE(spectral_probe(cover.cover, th(-1)).hits, 1u);
}
