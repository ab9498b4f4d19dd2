#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cover_spectra/decide.hpp"
#include "cover_spectra/equivalence.hpp"
#include "cover_spectra/error.hpp"
#include "cover_spectra/gallai_edmonds.hpp"
#include "cover_spectra/generator.hpp"
#include "cover_spectra/graph_polynomials.hpp"

namespace cover_spectra {

struct CorpusConfig {
  std::size_t count = 40;
  std::uint64_t seed = 1;
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 8;
  bool mutate_lambda_sign = false;  // fault injection: flips the sign of lambda_e in mu
};

struct CorpusFailure {
  std::uint64_t seed = 0;
  std::string model;
  std::size_t vertices = 0;
  std::string invariant;
  std::string message;
};

struct CorpusSummary {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<CorpusFailure> failures;
  std::vector<std::string> warnings;
  bool passed() const { return failures.empty(); }
};

inline InstanceSpec corpus_instance(const CorpusConfig& config, std::size_t index) {
  static const Rational glue_thetas[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
  InstanceSpec spec;
  const std::size_t span = config.max_vertices >= config.min_vertices ? config.max_vertices - config.min_vertices + 1 : 1;
  spec.n = config.min_vertices + index % span;
  spec.seed = config.seed + index;
  switch (index % 4) {
    case 0: spec.model = GeneratorModel::ErdosRenyi; break;
    case 1: spec.model = GeneratorModel::Forest; break;
    case 2:
      spec.model = GeneratorModel::ThetaCriticalGlue;
      spec.theta = glue_thetas[(index / 4) % 4];
      break;
    default:
      spec.model = GeneratorModel::Regular;
      spec.weighted = false;
      spec.degree = spec.n % 2 == 0 ? 3 : 2;
      if (spec.n < 4) spec.degree = 2;
      break;
  }
  return spec;
}

/// Runs the invariant suite over generated instances and reports failures with seeds.
inline CorpusSummary run_corpus(const CorpusConfig& config) {
  CorpusSummary summary;
  if (config.count == 0) {
    summary.warnings.push_back("empty corpus: nothing was checked");
    return summary;
  }
  ScopedLambdaMutation mutation(config.mutate_lambda_sign);
  for (std::size_t index = 0; index < config.count; ++index) {
    const InstanceSpec spec = corpus_instance(config, index);
    MultiGraph g;
    try {
      g = generate_instance(spec);
    } catch (const Error& ex) {
      summary.warnings.push_back("seed " + std::to_string(spec.seed) + ": generator gave up: " + ex.what());
      continue;
    }
    ++summary.instances;
    auto record = [&](const std::string& invariant, const std::string& message) {
      summary.failures.push_back({spec.seed, to_string(spec.model), g.vertex_count(), invariant, message});
    };
    auto check = [&](const std::string& invariant, const std::function<void()>& body) {
      ++summary.checks;
      try {
        body();
      } catch (const Error& ex) {
        record(invariant, std::string(to_string(ex.kind())) + ": " + ex.what());
      }
    };

    EquivalenceVerifier verifier(g, spec.seed);
    PolynomialCache& cache = verifier.cache();
    const Polynomial& mu = cache.matching(cache.all());

    check("heilmann_lieb_real_roots", [&] {
      if (real_root_count_with_multiplicity(mu) != mu.degree()) record("heilmann_lieb_real_roots", "mu has non-real roots");
    });
    check("harary_consistency", [&] {
      if (molecular_polynomial(cache, enumerate_cycles(g), harary_cycle_weights(g)) != cache.characteristic(cache.all()))
        record("harary_consistency", "molecular polynomial with Harary weights differs from det(xI - A)");
    });
    std::vector<ThetaSpec> thetas;
    check("theta_sample", [&] { thetas = theta_sample(mu); });
    for (const auto& theta : thetas) {
      check("equivalence@" + theta.str(), [&] {
        auto rep = verifier.verify(theta);
        if (!rep.consistent) record("equivalence@" + theta.str(), rep.notes.empty() ? "inconsistent" : rep.notes[0]);
      });
      check("decide@" + theta.str(), [&] {
        Decision d = decide(cache, theta);
        auto rep = validate_decision(cache, d);
        if (!rep.passed) record("decide@" + theta.str(), rep.failures[0]);
      });
      check("gallai_edmonds@" + theta.str(), [&] {
        GEPartition p = classify(cache, cache.all(), theta);
        auto rep = check_matched_special(g, p);
        if (!rep.passed) record("gallai_edmonds@" + theta.str(), rep.failures[0]);
      });
    }
  }
  return summary;
}

}  // namespace cover_spectra
