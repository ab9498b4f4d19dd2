#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cover_spectra/error.hpp"
#include "cover_spectra/graph_polynomials.hpp"
#include "cover_spectra/limits.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/theta.hpp"

namespace cover_spectra {

enum class VertexClass { Zero, PlusMinus, Infinity };

inline std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Zero: return "0";
    case VertexClass::PlusMinus: return "+-";
    case VertexClass::Infinity: return "inf";
  }
  return "?";
}

/// The theta-Gallai-Edmonds data of the induced subgraph on `host`.
struct GEPartition {
  ThetaSpec theta;
  PolyKind kind = PolyKind::Matching;
  VertexSet host = 0;
  VertexSet zero_set = 0;
  VertexSet pm_set = 0;
  VertexSet inf_set = 0;
  std::vector<VertexSet> critical_components;
  VertexSet frontier_of_zero = 0;
  int m_theta = 0;

  VertexClass class_of(std::size_t i) const {
    if (contains(zero_set, i)) return VertexClass::Zero;
    if (contains(inf_set, i)) return VertexClass::Infinity;
    return VertexClass::PlusMinus;
  }
  bool is_critical() const { return zero_set == host; }
};

/// Single-vertex class in g[host]; a cheap query used along path scans.
inline VertexClass vertex_class(PolynomialCache& cache, VertexSet host, std::size_t i, const ThetaSpec& theta,
                                PolyKind kind = PolyKind::Matching) {
  int m = cache.multiplicity(kind, host, theta);
  int m_minus = cache.multiplicity(kind, host & ~bit(i), theta);
  if (m_minus == m - 1) return VertexClass::Zero;
  if (m_minus == m) return VertexClass::PlusMinus;
  if (kind == PolyKind::Matching)
    require(m_minus == m + 1, ErrorKind::InternalInvariant, "vertex deletion moved the multiplicity by more than one");
  return m_minus > m ? VertexClass::Infinity : VertexClass::Zero;
}

/// Classifies by comparing m_theta(G minus i) with m_theta(G). For the matching
/// polynomial the structural identities are asserted.
inline GEPartition classify(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta,
                            PolyKind kind = PolyKind::Matching) {
  const MultiGraph& g = cache.graph();
  GEPartition p;
  p.theta = theta;
  p.kind = kind;
  p.host = host;
  p.m_theta = cache.multiplicity(kind, host, theta);
  for_each_member(host, [&](std::size_t i) {
    switch (vertex_class(cache, host, i, theta, kind)) {
      case VertexClass::Zero: p.zero_set |= bit(i); break;
      case VertexClass::PlusMinus: p.pm_set |= bit(i); break;
      case VertexClass::Infinity: p.inf_set |= bit(i); break;
    }
  });
  p.critical_components = components_within(g, p.zero_set);
  p.frontier_of_zero = frontier_within(g, host, p.zero_set);
  if (kind == PolyKind::Matching) {
    require((p.frontier_of_zero & ~p.inf_set) == 0, ErrorKind::InternalInvariant,
            "frontier of the zero class is not inside the infinity class");
    int predicted = static_cast<int>(p.critical_components.size()) - set_size(p.frontier_of_zero);
    require(predicted == p.m_theta, ErrorKind::InternalInvariant,
            "multiplicity " + std::to_string(p.m_theta) + " differs from cc - |frontier| = " + std::to_string(predicted));
  }
  return p;
}

inline GEPartition classify(const MultiGraph& g, const ThetaSpec& theta, PolyKind kind = PolyKind::Matching) {
  PolynomialCache cache(g);
  return classify(cache, cache.all(), theta, kind);
}

inline bool is_theta_critical(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta) {
  bool critical = true;
  for_each_member(host, [&](std::size_t i) {
    if (critical && vertex_class(cache, host, i, theta) != VertexClass::Zero) critical = false;
  });
  return critical;
}

inline bool is_theta_critical(const MultiGraph& g, const ThetaSpec& theta) {
  PolynomialCache cache(g);
  return is_theta_critical(cache, cache.all(), theta);
}

/// lambda_{i~j}(x0) = -sum_{P in [i->j]} lambda_P (mu^{G-P}(x0) / mu^{G-{i,j}}(x0))^2
inline Rational contraction_lambda(PolynomialCache& cache, VertexSet host, std::size_t i, std::size_t j,
                                   const Rational& x0) {
  const MultiGraph& g = cache.graph();
  require(i != j, ErrorKind::SameVertex, "contraction needs distinct vertices");
  Rational denom = cache.matching(host & ~bit(i) & ~bit(j))(x0);
  require(!denom.is_zero(), ErrorKind::PoleAtSample, "mu of G minus {i,j} vanishes at " + x0.str());
  Rational total(0);
  for (const auto& p : enumerate_paths_between_within(g, host, i, j)) {
    Rational lambda_p(1);
    for (auto e : p.edges) lambda_p *= -g.edge(e).lambda();
    Rational ratio = cache.matching(host & ~p.vertex_set())(x0) / denom;
    total += lambda_p * ratio * ratio;
  }
  return -total;
}

// ---------------------------------------------------------------------------
// Reports

struct CheckReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;

  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  void fail(std::string message) {
    passed = false;
    failures.push_back(std::move(message));
  }
};

/// Smallest nonempty U of `frontier` adjacent to at most |U| + slack - 1 of the
/// given components, scanning by size then lexicographically.
inline std::optional<VertexSet> find_hall_violation(const MultiGraph& g, VertexSet frontier,
                                                    const std::vector<VertexSet>& comps, int slack = 1) {
  const auto fv = members(frontier);
  require(fv.size() <= limits().max_frontier, ErrorKind::FrontierTooLarge,
          "frontier of size " + std::to_string(fv.size()) + " exceeds the cap " + std::to_string(limits().max_frontier));
  std::vector<std::uint64_t> adj(fv.size(), 0);
  for (std::size_t a = 0; a < fv.size(); ++a)
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (g.neighbors(fv[a]) & comps[c]) adj[a] |= std::uint64_t{1} << c;
  const std::size_t n = fv.size();
  for (std::size_t size = 1; size <= n; ++size) {
    // Gosper's hack over n-bit words with `size` bits set.
    std::uint64_t word = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (word < limit) {
      std::uint64_t reach = 0;
      for (std::size_t a = 0; a < n; ++a)
        if ((word >> a) & 1U) reach |= adj[a];
      if (std::popcount(reach) < static_cast<int>(size) + slack) {
        VertexSet u = 0;
        for (std::size_t a = 0; a < n; ++a)
          if ((word >> a) & 1U) u |= bit(fv[a]);
        return u;
      }
      std::uint64_t c = word & (~word + 1);
      std::uint64_t r = word + c;
      word = (((r ^ word) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

/// Every nonempty U inside the frontier of the zero class meets at least |U|+1 critical components.
inline CheckReport check_matched_special(const MultiGraph& g, const GEPartition& p) {
  CheckReport r{"matched_special"};
  if (auto u = find_hall_violation(g, p.frontier_of_zero, p.critical_components)) {
    auto ids = g.ids_of(*u);
    std::string list;
    for (const auto& id : ids) list += (list.empty() ? "" : ",") + id;
    r.fail("U={" + list + "} meets too few critical components");
  }
  return r;
}

inline std::string describe(const MultiGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : g.ids_of(s)) {
    out += (first ? "" : ",") + id;
    first = false;
  }
  return out + "}";
}

/// alpha_j(G minus i) = alpha_j(G) for every i in the frontier of the zero class.
/// For algebraic theta only the Zero/Infinity/finite kind is compared.
inline CheckReport check_stability(PolynomialCache& cache, const GEPartition& p) {
  CheckReport r{"stability"};
  const MultiGraph& g = cache.graph();
  auto alpha = [&](VertexSet host, std::size_t j) {
    if (p.theta.is_rational()) return alpha_at(cache, host, j, p.theta);
    int m = cache.multiplicity(PolyKind::Matching, host, p.theta);
    int mm = cache.multiplicity(PolyKind::Matching, host & ~bit(j), p.theta);
    return m > mm ? AlphaValue::zero() : (m < mm ? AlphaValue::infinity() : AlphaValue::finite(Rational(0)));
  };
  for_each_member(p.frontier_of_zero, [&](std::size_t i) {
    for_each_member(p.host & ~bit(i), [&](std::size_t j) {
      AlphaValue before = alpha(p.host, j);
      AlphaValue after = alpha(p.host & ~bit(i), j);
      if (!(before == after))
        r.fail("deleting " + g.vertex(i).id + " changes alpha_" + g.vertex(j).id + " from " + before.str() + " to " +
               after.str());
    });
  });
  return r;
}

/// The critical component of p containing z (z nonempty), or fails.
inline VertexSet critical_component_containing(const MultiGraph& g, const GEPartition& p, VertexSet z) {
  for (VertexSet h : p.critical_components)
    if (z != 0 && (z & ~h) == 0) return h;
  fail(ErrorKind::NotInsideCriticalComponent, describe(g, z) + " is not inside one critical component");
}

/// m(G - Z) - m(G) = m(H - Z) - m(H) for Z inside a critical component H.
inline CheckReport check_critical_remove(PolynomialCache& cache, const GEPartition& p, VertexSet z) {
  CheckReport r{"critical_remove"};
  if (z == 0) return r;
  const MultiGraph& g = cache.graph();
  VertexSet h = critical_component_containing(g, p, z);
  const ThetaSpec& t = p.theta;
  int lhs = cache.multiplicity(PolyKind::Matching, p.host & ~z, t) - cache.multiplicity(PolyKind::Matching, p.host, t);
  int rhs = cache.multiplicity(PolyKind::Matching, h & ~z, t) - cache.multiplicity(PolyKind::Matching, h, t);
  if (lhs != rhs)
    r.fail("Z=" + describe(g, z) + ": host side " + std::to_string(lhs) + ", component side " + std::to_string(rhs));
  if (cache.multiplicity(PolyKind::Matching, h, t) != 1) r.fail("critical component " + describe(g, h) + " has m != 1");
  return r;
}

/// alpha_i(G - Z) = alpha_i(H - Z) for every i in H - Z (rational theta).
inline CheckReport check_critical_stability(PolynomialCache& cache, const GEPartition& p, VertexSet z) {
  CheckReport r{"critical_stability"};
  if (z == 0) return r;
  require(p.theta.is_rational(), ErrorKind::PreconditionViolated, "critical stability compares finite alpha values");
  const MultiGraph& g = cache.graph();
  VertexSet h = critical_component_containing(g, p, z);
  for_each_member(h & ~z, [&](std::size_t i) {
    AlphaValue host_side = alpha_at(cache, p.host & ~z, i, p.theta);
    AlphaValue comp_side = alpha_at(cache, h & ~z, i, p.theta);
    if (!(host_side == comp_side))
      r.fail("Z=" + describe(g, z) + ", i=" + g.vertex(i).id + ": " + host_side.str() + " vs " + comp_side.str());
  });
  return r;
}

}  // namespace cover_spectra
