#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace cover_spectra;
using namespace fixtures;

TEST(Decide, Fig1IsAnEigenvalue) {
  MultiGraph g = fig1();
  Decision d = decide(g, th(-1));
  ASSERT_TRUE(d.is_eigenvalue());
  EXPECT_EQ(d.positive->subset, ids(g, {"1", "2", "4", "5"}));
  EXPECT_EQ(d.positive->frontier, ids(g, {"3"}));
  EXPECT_EQ(d.positive->surplus, 1);
  PolynomialCache cache(g);
  EXPECT_TRUE(validate_decision(cache, d).passed);
}

TEST(Decide, TriangleAtZero) {
  MultiGraph g = k3();
  Decision d = decide(g, th(0));
  ASSERT_FALSE(d.is_eigenvalue());
  ASSERT_EQ(d.negative->cycles.size(), 1u);
  EXPECT_EQ(d.witness->support, g.all());
  EXPECT_EQ(d.witness->residual_multiplicity, 0);
}

TEST(Decide, NonRootGivesEmptyCertificate) {
  MultiGraph g = p3();
  Decision d = decide(g, th(1));
  ASSERT_FALSE(d.is_eigenvalue());
  EXPECT_EQ(d.m_theta, 0);
  EXPECT_TRUE(d.negative->cycles.empty());
  EXPECT_EQ(d.witness->support, 0u);
}

TEST(Decide, CertificatesSurviveJson) {
  MultiGraph g = fig1();
  Decision d = decide(g, th(-1));
  auto back = certificate_from_json(g, certificate_json(g, *d.positive));
  PolynomialCache cache(g);
  EXPECT_TRUE(validate_certificate(cache, cache.all(), th(-1), back).passed);

  MultiGraph t = disjoint_union(k3(), digon());
  PolynomialCache ct(t);
  Decision n = decide(ct, th(0));
  ASSERT_FALSE(n.is_eigenvalue());
  auto cert = cycle_certificate_from_json(t, cycle_certificate_json(t, *n.negative));
  EXPECT_TRUE(validate_cycle_certificate(ct, th(0), cert).passed);
  EXPECT_THROW(cycle_certificate_from_json(t, Json::parse(R"({"cycles":[["zz"]],"residual_multiplicity":0})")), Error);
}

TEST(Verify, Examples) {
  auto r = verify_equivalences(fig1(), th(-1));
  EXPECT_TRUE(r.c_aomoto && r.d_refined && r.e_matching && r.f_characteristic && r.h_molecular && r.g_probe);
  EXPECT_TRUE(r.consistent);

  auto k = verify_equivalences(k3(), th(0));
  EXPECT_FALSE(k.c_aomoto || k.d_refined || k.e_matching || k.f_characteristic || k.h_molecular);
  EXPECT_TRUE(k.consistent);
  ASSERT_TRUE(k.e_witness);
  EXPECT_EQ(k.e_witness->support, k3().all());

  InstanceSpec spec;
  spec.model = GeneratorModel::Forest;
  spec.n = 7;
  MultiGraph f = generate_instance(spec);
  PolynomialCache cache(f);
  for (const auto& t : theta_sample(cache.matching(cache.all()), 1)) {
    auto fr = verify_equivalences(f, t);
    EXPECT_TRUE(fr.consistent);
    EXPECT_EQ(fr.c_aomoto, is_root(cache.matching(cache.all()), t));
  }
}

TEST(Verify, AlgebraicTheta) {
  auto r = verify_equivalences(digon(), ThetaSpec::parse("minpoly:-2,0,1:1,2"));
  EXPECT_TRUE(r.consistent);
  EXPECT_FALSE(r.c_aomoto);
  auto p = verify_equivalences(p3(), ThetaSpec::parse("minpoly:-2,0,1:1,2"));
  EXPECT_TRUE(p.consistent);
  EXPECT_TRUE(p.c_aomoto);
}

TEST(Generator, Deterministic) {
  for (auto model : {GeneratorModel::ErdosRenyi, GeneratorModel::Forest, GeneratorModel::Regular,
                     GeneratorModel::ThetaCriticalGlue}) {
    InstanceSpec spec;
    spec.model = model;
    spec.n = 8;
    spec.seed = 7;
    EXPECT_EQ(graph_to_json(generate_instance(spec)), graph_to_json(generate_instance(spec))) << to_string(model);
  }
  InstanceSpec a, b;
  a.seed = 1;
  b.seed = 2;
  a.n = b.n = 9;
  EXPECT_NE(graph_to_json(generate_instance(a)), graph_to_json(generate_instance(b)));
  EXPECT_EQ(parse_model("theta-critical-glue"), GeneratorModel::ThetaCriticalGlue);
  EXPECT_THROW(parse_model("nope"), Error);
}

TEST(Generator, ModelShapes) {
  InstanceSpec f;
  f.model = GeneratorModel::Forest;
  f.n = 6;
  MultiGraph forest = generate_instance(f);
  EXPECT_EQ(forest.vertex_count(), 6u);
  EXPECT_TRUE(is_forest(forest));

  InstanceSpec r;
  r.model = GeneratorModel::Regular;
  r.n = 8;
  r.weighted = false;
  MultiGraph reg = generate_instance(r);
  for (std::size_t v = 0; v < reg.vertex_count(); ++v) {
    int deg = 0;
    for (const auto& e : reg.edges()) deg += (e.u == v) + (e.v == v);
    EXPECT_EQ(deg, 3);
  }

  InstanceSpec big;
  big.n = limits().max_vertices + 1;
  EXPECT_THROW(generate_instance(big), Error);
}

TEST(Generator, GlueInstancesAreCritical) {
  for (long t : {0, 1, -1}) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      InstanceSpec spec;
      spec.model = GeneratorModel::ThetaCriticalGlue;
      spec.theta = Rational(t);
      spec.n = 3 + seed;
      spec.seed = seed;
      MultiGraph g = generate_instance(spec);
      EXPECT_TRUE(is_connected(g));
      auto p = classify(g, ThetaSpec::rational(Rational(t)));
      EXPECT_TRUE(p.is_critical());
      EXPECT_EQ(p.m_theta, 1);
    }
  }
}

TEST(Corpus, DefaultConfigPasses) {
  CorpusSummary s = run_corpus(CorpusConfig{});
  EXPECT_TRUE(s.passed());
  for (const auto& f : s.failures) ADD_FAILURE() << f.seed << " " << f.invariant << ": " << f.message;
  EXPECT_EQ(s.instances, 40u);
  EXPECT_GT(s.checks, 200u);
}

TEST(Corpus, EmptyCorpusWarns) {
  CorpusConfig c;
  c.count = 0;
  CorpusSummary s = run_corpus(c);
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.warnings.size(), 1u);
}

TEST(Corpus, LambdaSignMutationIsFlagged) {
  CorpusConfig c;
  c.count = 12;
  c.mutate_lambda_sign = true;
  CorpusSummary s = run_corpus(c);
  EXPECT_FALSE(s.passed());
  bool harary = false;
  for (const auto& f : s.failures) harary |= f.invariant == "harary_consistency";
  EXPECT_TRUE(harary);
  // The hook is scoped to the run.
  EXPECT_EQ(matching_polynomial(simple(2, {{1, 2}})), poly({-1, 0, 1}));
}
