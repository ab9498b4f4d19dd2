#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cover_spectra/error.hpp"
#include "cover_spectra/gallai_edmonds.hpp"
#include "cover_spectra/graph_polynomials.hpp"
#include "cover_spectra/limits.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/theta.hpp"

namespace cover_spectra {

struct AomotoCertificate {
  VertexSet subset = 0;
  std::vector<VertexSet> components;
  VertexSet frontier = 0;
  int surplus = 0;  // cc - |frontier|
  bool refined = false;
};

struct DensityReport {
  int tau_numerator = 0;
  Rational tau;
  AomotoCertificate maximizer;
};

/// Checks every defining condition of S inside g[host]; returns the certificate
/// (with the refined flag computed) or nothing if S is not a theta-Aomoto subset.
inline std::optional<AomotoCertificate> evaluate_aomoto(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta,
                                                        VertexSet s) {
  const MultiGraph& g = cache.graph();
  if (s == 0 || (s & ~host) != 0) return std::nullopt;
  if (!is_forest_within(g, s)) return std::nullopt;
  AomotoCertificate c;
  c.subset = s;
  c.components = components_within(g, s);
  c.frontier = frontier_within(g, host, s);
  c.surplus = static_cast<int>(c.components.size()) - set_size(c.frontier);
  if (c.surplus < 1) return std::nullopt;
  for (VertexSet comp : c.components)
    if (cache.multiplicity(PolyKind::Matching, comp, theta) < 1) return std::nullopt;
  bool refined = true;
  for (VertexSet comp : c.components)
    if (refined && !is_theta_critical(cache, comp, theta)) refined = false;
  if (refined && find_hall_violation(g, c.frontier, c.components)) refined = false;
  c.refined = refined;
  return c;
}

/// Independent check of a claimed certificate against recomputation.
inline CheckReport validate_certificate(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta,
                                        const AomotoCertificate& claim) {
  CheckReport r{"aomoto_certificate"};
  const MultiGraph& g = cache.graph();
  auto actual = evaluate_aomoto(cache, host, theta, claim.subset);
  if (!actual) {
    r.fail(describe(g, claim.subset) + " is not a theta-Aomoto subset");
    return r;
  }
  if (actual->frontier != claim.frontier) r.fail("frontier mismatch: actual " + describe(g, actual->frontier));
  if (actual->components != claim.components) r.fail("component list mismatch");
  if (actual->surplus != claim.surplus) r.fail("surplus mismatch: actual " + std::to_string(actual->surplus));
  if (claim.refined && !actual->refined) r.fail("claimed refined but is not");
  return r;
}

/// Scans subsets by size, then lexicographically on sorted vertex lists.
inline std::optional<AomotoCertificate> find_aomoto_bruteforce(PolynomialCache& cache, VertexSet host,
                                                               const ThetaSpec& theta) {
  const auto verts = members(host);
  const std::size_t n = verts.size();
  require(n <= limits().max_vertices, ErrorKind::GraphTooLarge, "brute-force Aomoto search is capped");
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t k = 0; k < size; ++k) idx[k] = k;
    while (true) {
      VertexSet s = 0;
      for (auto k : idx) s |= bit(verts[k]);
      if (auto c = evaluate_aomoto(cache, host, theta, s)) return c;
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

inline std::optional<AomotoCertificate> find_aomoto_bruteforce(const MultiGraph& g, const ThetaSpec& theta) {
  PolynomialCache cache(g);
  return find_aomoto_bruteforce(cache, cache.all(), theta);
}

/// Largest surplus over all theta-Aomoto subsets (oracle for the density value).
inline std::optional<int> max_aomoto_surplus_bruteforce(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta) {
  require(set_size(host) <= static_cast<int>(limits().max_oracle_vertices), ErrorKind::GraphTooLarge,
          "oracle surplus scan is capped");
  std::optional<int> best;
  for (VertexSet s = host; s; s = (s - 1) & host) {
    if (auto c = evaluate_aomoto(cache, host, theta, s))
      if (!best || c->surplus > *best) best = c->surplus;
  }
  return best;
}

/// Repeatedly removes the components adjacent to a smallest set U of frontier
/// vertices with |N(U)| <= |U|. Such a U never touches a component of any
/// refined subset inside `s`, so the result is the largest refined subset of s.
inline VertexSet prune_hall_violations(const MultiGraph& g, VertexSet host, VertexSet s) {
  while (s) {
    auto comps = components_within(g, s);
    auto u = find_hall_violation(g, frontier_within(g, host, s), comps);
    if (!u) break;
    for (VertexSet c : comps)
      if (neighborhood(g, *u) & c) s &= ~c;
  }
  return s;
}

/// Turns a theta-Aomoto subset into a refined one without lowering the surplus.
inline AomotoCertificate refine_aomoto(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta,
                                       const AomotoCertificate& input) {
  const MultiGraph& g = cache.graph();
  auto checked = evaluate_aomoto(cache, host, theta, input.subset);
  require(checked.has_value(), ErrorKind::InvalidCertificate, describe(g, input.subset) + " is not a theta-Aomoto subset");
  VertexSet s = 0;
  for (VertexSet tree : checked->components) s |= classify(cache, tree, theta).zero_set;
  s = prune_hall_violations(g, host, s);
  auto out = evaluate_aomoto(cache, host, theta, s);
  require(out && out->refined, ErrorKind::InternalInvariant, "refinement did not produce a refined subset");
  require(out->surplus >= checked->surplus, ErrorKind::InternalInvariant, "refinement lowered the surplus");
  return *out;
}

/// The unique maximal refined theta-Aomoto subset of g[host], if any.
inline std::optional<AomotoCertificate> maximal_refined_aomoto(PolynomialCache& cache, VertexSet host,
                                                               const ThetaSpec& theta) {
  const MultiGraph& g = cache.graph();
  GEPartition p = classify(cache, host, theta);
  VertexSet s = 0;
  for (VertexSet comp : p.critical_components)
    if (is_forest_within(g, comp)) s |= comp;
  s = prune_hall_violations(g, host, s);
  if (s == 0) return std::nullopt;
  auto out = evaluate_aomoto(cache, host, theta, s);
  require(out && out->refined, ErrorKind::InternalInvariant, "pruned tree components are not a refined subset");
  return out;
}

inline std::optional<AomotoCertificate> maximal_refined_aomoto(const MultiGraph& g, const ThetaSpec& theta) {
  PolynomialCache cache(g);
  return maximal_refined_aomoto(cache, cache.all(), theta);
}

inline std::optional<DensityReport> density_of_states(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta) {
  auto best = maximal_refined_aomoto(cache, host, theta);
  if (!best) return std::nullopt;
  DensityReport r;
  r.tau_numerator = best->surplus;
  r.tau = Rational(best->surplus, set_size(host));
  r.maximizer = *best;
  return r;
}

inline std::optional<DensityReport> density_of_states(const MultiGraph& g, const ThetaSpec& theta) {
  PolynomialCache cache(g);
  return density_of_states(cache, cache.all(), theta);
}

/// G minus C keeps a theta-Aomoto subset; also validates the witness that drops
/// the components of a known subset meeting C.
inline CheckReport check_robustness_under_cycle_deletion(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta,
                                                         const CyclePath& c) {
  CheckReport r{"robust_aomoto"};
  const MultiGraph& g = cache.graph();
  auto known = find_aomoto_bruteforce(cache, host, theta);
  require(known.has_value(), ErrorKind::PreconditionViolated, "graph has no theta-Aomoto subset");
  VertexSet rest = host & ~c.vertex_set();
  if (!find_aomoto_bruteforce(cache, rest, theta)) r.fail("G minus C has no theta-Aomoto subset");
  VertexSet witness = 0;
  for (VertexSet comp : known->components)
    if ((comp & c.vertex_set()) == 0) witness |= comp;
  if (!evaluate_aomoto(cache, rest, theta, witness))
    r.fail("constructive witness " + describe(g, witness) + " is not a theta-Aomoto subset of G minus C");
  return r;
}

}  // namespace cover_spectra
