#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cover_spectra/aomoto.hpp"
#include "cover_spectra/critical_cycles.hpp"
#include "cover_spectra/error.hpp"
#include "cover_spectra/gallai_edmonds.hpp"
#include "cover_spectra/graph_polynomials.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/theta.hpp"

namespace cover_spectra {

/// Union of the certificate cycles; theta is not a root of mu of its complement.
struct TwoRegularWitness {
  VertexSet support = 0;
  std::vector<std::size_t> edges;
  int residual_multiplicity = 0;
};

struct Decision {
  enum class Kind { RefinedAomoto, DisjointCriticalCycles };
  Kind kind = Kind::RefinedAomoto;
  ThetaSpec theta;
  int m_theta = 0;
  std::optional<AomotoCertificate> positive;
  std::optional<CycleCertificate> negative;
  std::optional<TwoRegularWitness> witness;

  bool is_eigenvalue() const { return kind == Kind::RefinedAomoto; }
};

inline std::string to_string(Decision::Kind k) {
  return k == Decision::Kind::RefinedAomoto ? "RefinedAomoto" : "DisjointCriticalCycles";
}

/// Positive certificate when a refined theta-Aomoto subset exists, otherwise k
/// disjoint theta-critical cycles and the two-regular witness they form.
inline Decision decide(PolynomialCache& cache, const ThetaSpec& theta, bool oracle_checks = true) {
  const MultiGraph& g = cache.graph();
  Decision d;
  d.theta = theta;
  const VertexSet all = cache.all();
  d.m_theta = cache.multiplicity(PolyKind::Matching, all, theta);
  if (auto pos = maximal_refined_aomoto(cache, all, theta)) {
    d.kind = Decision::Kind::RefinedAomoto;
    d.positive = *pos;
    return d;
  }
  d.kind = Decision::Kind::DisjointCriticalCycles;
  d.negative = find_disjoint_critical_cycles(cache, all, theta, oracle_checks);
  TwoRegularWitness w;
  for (const auto& c : d.negative->cycles) {
    w.support |= c.vertex_set();
    w.edges.insert(w.edges.end(), c.edges.begin(), c.edges.end());
  }
  w.residual_multiplicity = cache.multiplicity(PolyKind::Matching, all & ~w.support, theta);
  require(w.residual_multiplicity == 0, ErrorKind::InternalInvariant,
          "theta is still a root after removing the certificate cycles of " + std::to_string(g.vertex_count()) +
              "-vertex graph");
  d.witness = w;
  return d;
}

inline Decision decide(const MultiGraph& g, const ThetaSpec& theta) {
  PolynomialCache cache(g);
  return decide(cache, theta);
}

/// Independent re-check of a cycle certificate by exact recomputation.
inline CheckReport validate_cycle_certificate(PolynomialCache& cache, const ThetaSpec& theta, const CycleCertificate& c,
                                              bool require_complete = true) {
  CheckReport r{"cycle_certificate"};
  const MultiGraph& g = cache.graph();
  VertexSet used = 0;
  for (const auto& cyc : c.cycles) {
    if (!is_valid_cycle(g, cyc)) {
      r.fail("entry is not a cycle of the graph");
      continue;
    }
    if (cyc.vertex_set() & used) r.fail("cycles are not vertex-disjoint");
    used |= cyc.vertex_set();
  }
  const VertexSet all = cache.all();
  int residual = cache.multiplicity(PolyKind::Matching, all & ~used, theta);
  if (residual != c.residual_multiplicity)
    r.fail("residual multiplicity is " + std::to_string(residual) + ", certificate says " +
           std::to_string(c.residual_multiplicity));
  if (require_complete) {
    int m = cache.multiplicity(PolyKind::Matching, all, theta);
    if (static_cast<int>(c.cycles.size()) != m)
      r.fail(std::to_string(c.cycles.size()) + " cycles for multiplicity " + std::to_string(m));
    if (residual != 0) r.fail("residual multiplicity is not zero");
  }
  return r;
}

inline CheckReport validate_decision(PolynomialCache& cache, const Decision& d) {
  if (d.kind == Decision::Kind::RefinedAomoto) {
    require(d.positive.has_value(), ErrorKind::InvalidCertificate, "positive decision without certificate");
    CheckReport r = validate_certificate(cache, cache.all(), d.theta, *d.positive);
    if (!d.positive->refined) r.fail("positive certificate is not refined");
    return r;
  }
  require(d.negative.has_value(), ErrorKind::InvalidCertificate, "negative decision without certificate");
  return validate_cycle_certificate(cache, d.theta, *d.negative);
}

}  // namespace cover_spectra
