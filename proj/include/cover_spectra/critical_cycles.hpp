#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cover_spectra/aomoto.hpp"
#include "cover_spectra/error.hpp"
#include "cover_spectra/gallai_edmonds.hpp"
#include "cover_spectra/graph_polynomials.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/theta.hpp"

namespace cover_spectra {

struct PathWeightTrace {
  CyclePath path;
  std::vector<VertexClass> classes;  // class of i_j in G minus {i_1..i_{j-1}}
  int w_theta = 0;
};

struct CycleCertificate {
  std::vector<CyclePath> cycles;
  int residual_multiplicity = 0;
};

/// W_theta(P) along successive deletions; asserts m(G - P) = m(G) + W.
inline PathWeightTrace path_weight(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta, const CyclePath& p) {
  validate_path(cache.graph(), p);
  require((p.vertex_set() & ~host) == 0, ErrorKind::NotAPath, "path leaves the graph");
  PathWeightTrace t;
  t.path = p;
  VertexSet cur = host;
  for (auto v : p.vertices) {
    VertexClass c = vertex_class(cache, cur, v, theta);
    t.classes.push_back(c);
    if (c == VertexClass::Infinity) ++t.w_theta;
    if (c == VertexClass::Zero) --t.w_theta;
    cur &= ~bit(v);
  }
  require(cache.multiplicity(PolyKind::Matching, cur, theta) ==
              cache.multiplicity(PolyKind::Matching, host, theta) + t.w_theta,
          ErrorKind::InternalInvariant, "m(G - P) differs from m(G) + W(P)");
  return t;
}

/// A path i -> j whose deletion leaves multiplicity 0, for m(G) = 1 and i, j in the zero class.
inline CyclePath find_critical_path(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta, std::size_t i,
                                    std::size_t j) {
  const MultiGraph& g = cache.graph();
  require(cache.multiplicity(PolyKind::Matching, host, theta) == 1, ErrorKind::PreconditionViolated,
          "critical paths need m_theta = 1");
  require(vertex_class(cache, host, i, theta) == VertexClass::Zero &&
              vertex_class(cache, host, j, theta) == VertexClass::Zero,
          ErrorKind::PreconditionViolated, "critical path endpoints must be in the zero class");
  if (i == j) return {PathKind::Path, {i}, {}};
  std::optional<CyclePath> found;
  for_each_path_from(g, host, i, [&](const CyclePath& p) {
    if (found) return false;
    if (p.vertices.back() != j) return true;
    if (cache.multiplicity(PolyKind::Matching, host & ~p.vertex_set(), theta) == 0) found = p;
    return false;
  });
  if (!found) fail(ErrorKind::ExhaustedWithoutWitness, "no critical path between " + g.vertex(i).id + " and " + g.vertex(j).id);
  return *found;
}

namespace detail {

inline std::optional<std::size_t> lowest_edge_between(const MultiGraph& g, std::size_t a, std::size_t b) {
  for (std::size_t e : g.incident(a)) {
    const Edge& edge = g.edge(e);
    if (!edge.is_loop() && edge.other(a) == b) return e;
  }
  return std::nullopt;
}

/// Some cycle of g[host]: a loop, else a parallel pair, else a DFS back edge.
inline std::optional<CyclePath> find_any_cycle(const MultiGraph& g, VertexSet host) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop() && contains(host, edge.u)) return CyclePath{PathKind::Cycle, {edge.u}, {e}};
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop() || !contains(host, edge.u) || !contains(host, edge.v)) continue;
    auto first = lowest_edge_between(g, edge.u, edge.v);
    if (first && *first != e) return CyclePath{PathKind::Cycle, {edge.u, edge.v}, {*first, e}};
  }
  std::vector<int> parent_edge(g.vertex_count(), -1);
  std::vector<int> depth(g.vertex_count(), -1);
  std::optional<CyclePath> out;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    for (std::size_t e : g.incident(v)) {
      if (out) return;
      const Edge& edge = g.edge(e);
      if (edge.is_loop() || static_cast<int>(e) == parent_edge[v]) continue;
      std::size_t w = edge.other(v);
      if (!contains(host, w)) continue;
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        parent_edge[w] = static_cast<int>(e);
        dfs(w);
      } else if (depth[w] < depth[v]) {
        CyclePath c{PathKind::Cycle, {}, {}};
        std::size_t cur = v;
        std::vector<std::size_t> vs{v}, es;
        while (cur != w) {
          std::size_t pe = static_cast<std::size_t>(parent_edge[cur]);
          es.push_back(pe);
          cur = g.edge(pe).other(cur);
          vs.push_back(cur);
        }
        // vs runs v -> w along tree edges; close with the back edge w -> v.
        c.vertices = vs;
        c.edges = es;
        c.edges.push_back(e);
        out = c;
      }
    }
  };
  for_each_member(host, [&](std::size_t s) {
    if (out || depth[s] >= 0) return;
    depth[s] = 0;
    dfs(s);
  });
  return out;
}

/// Builds i_1..i_k, v, Q.., u, back to i_1 and checks it is a critical cycle.
inline std::optional<CyclePath> close_up(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta,
                                         const CyclePath& prefix) {
  const MultiGraph& g = cache.graph();
  const VertexSet rest = host & ~prefix.vertex_set();
  if (cache.multiplicity(PolyKind::Matching, rest, theta) != 1) return std::nullopt;
  const std::size_t first = prefix.vertices.front();
  const std::size_t last = prefix.vertices.back();
  auto pick = [&](std::size_t end) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for_each_member(g.neighbors(end) & rest, [&](std::size_t w) {
      if (!best && vertex_class(cache, rest, w, theta) == VertexClass::Zero) best = w;
    });
    return best;
  };
  auto u = pick(first);
  auto v = pick(last);
  if (!u || !v) return std::nullopt;
  CyclePath q = find_critical_path(cache, rest, theta, *v, *u);
  CyclePath c{PathKind::Cycle, prefix.vertices, prefix.edges};
  c.edges.push_back(*lowest_edge_between(g, last, *v));
  for (std::size_t k = 0; k < q.vertices.size(); ++k) {
    c.vertices.push_back(q.vertices[k]);
    if (k < q.edges.size()) c.edges.push_back(q.edges[k]);
  }
  c.edges.push_back(*lowest_edge_between(g, *u, first));
  if (!is_valid_cycle(g, c)) return std::nullopt;
  if (cache.multiplicity(PolyKind::Matching, host & ~c.vertex_set(), theta) != 0) return std::nullopt;
  return canonical_cycle(c);
}

}  // namespace detail

/// A theta-critical cycle of a connected theta-critical graph that is not a tree.
inline CyclePath find_critical_cycle(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta) {
  const MultiGraph& g = cache.graph();
  require(components_within(g, host).size() == 1, ErrorKind::Disconnected, "critical cycle search needs a connected graph");
  require(is_theta_critical(cache, host, theta), ErrorKind::NotCritical, "graph is not theta-critical at " + theta.str());
  require(!is_forest_within(g, host), ErrorKind::IsATree, "a theta-critical tree has no cycle");
  const int m = cache.multiplicity(PolyKind::Matching, host, theta);

  auto c0 = detail::find_any_cycle(g, host);
  require(c0.has_value(), ErrorKind::InternalInvariant, "non-forest without a cycle");
  if (cache.multiplicity(PolyKind::Matching, host & ~c0->vertex_set(), theta) == m - 1) return canonical_cycle(*c0);

  // Unroll C0 from every start and direction; cut at the first infinity step.
  const std::size_t k = c0->vertices.size();
  for (std::size_t start = 0; start < k; ++start) {
    for (int dir : {1, -1}) {
      CyclePath p{PathKind::Path, {c0->vertices[start]}, {}};
      VertexSet cur = host & ~bit(p.vertices[0]);
      for (std::size_t step = 1; step < k; ++step) {
        std::size_t idx = dir > 0 ? (start + step) % k : (start + k - step) % k;
        std::size_t edge_idx = dir > 0 ? (start + step - 1) % k : idx;
        std::size_t v = c0->vertices[idx];
        p.vertices.push_back(v);
        p.edges.push_back(c0->edges[edge_idx]);
        VertexClass cls = vertex_class(cache, cur, v, theta);
        cur &= ~bit(v);
        if (cls == VertexClass::Infinity) {
          if (auto c = detail::close_up(cache, host, theta, p)) return *c;
          break;
        }
      }
    }
  }

  // Fall back to every path of minimum length with W = 0.
  std::vector<CyclePath> shortest;
  std::size_t best_len = SIZE_MAX;
  for_each_member(host, [&](std::size_t s) {
    for_each_path_from(g, host, s, [&](const CyclePath& p) {
      if (p.vertices.size() > best_len) return false;
      if (p.vertices.size() >= 2 && cache.multiplicity(PolyKind::Matching, host & ~p.vertex_set(), theta) == m) {
        if (p.vertices.size() < best_len) {
          best_len = p.vertices.size();
          shortest.clear();
        }
        shortest.push_back(p);
        return false;
      }
      return true;
    });
  });
  for (const auto& p : shortest)
    if (auto c = detail::close_up(cache, host, theta, p)) return *c;
  fail(ErrorKind::ExhaustedWithoutWitness, "no theta-critical cycle found");
}

inline CyclePath find_critical_cycle(const MultiGraph& g, const ThetaSpec& theta) {
  PolynomialCache cache(g);
  return find_critical_cycle(cache, cache.all(), theta);
}

/// k = m_theta(G) disjoint cycles whose removal leaves multiplicity 0, for G without
/// a theta-Aomoto subset. With oracle checks, every intermediate graph is confirmed
/// to still have no theta-Aomoto subset.
inline CycleCertificate find_disjoint_critical_cycles(PolynomialCache& cache, VertexSet host, const ThetaSpec& theta,
                                                      bool oracle_checks = true) {
  const MultiGraph& g = cache.graph();
  require(!maximal_refined_aomoto(cache, host, theta).has_value(), ErrorKind::AomotoSubsetExists,
          "theta = " + theta.str() + " has a positive certificate");
  const bool use_oracle = oracle_checks && set_size(host) <= static_cast<int>(limits().max_oracle_vertices);
  CycleCertificate out;
  VertexSet cur = host;
  int m = cache.multiplicity(PolyKind::Matching, cur, theta);
  while (m > 0) {
    GEPartition p = classify(cache, cur, theta);
    std::optional<VertexSet> h;
    for (VertexSet comp : p.critical_components)
      if (!h && !is_forest_within(g, comp)) h = comp;
    require(h.has_value(), ErrorKind::InternalInvariant, "every critical component is a tree");
    CyclePath c = find_critical_cycle(cache, *h, theta);
    cur &= ~c.vertex_set();
    int next = cache.multiplicity(PolyKind::Matching, cur, theta);
    require(next == m - 1, ErrorKind::InternalInvariant, "cycle removal did not lower the multiplicity by one");
    if (use_oracle)
      require(!find_aomoto_bruteforce(cache, cur, theta).has_value(), ErrorKind::InternalInvariant,
              "a theta-Aomoto subset appeared after removing a critical cycle");
    out.cycles.push_back(std::move(c));
    m = next;
  }
  out.residual_multiplicity = m;
  return out;
}

inline CycleCertificate find_disjoint_critical_cycles(const MultiGraph& g, const ThetaSpec& theta) {
  PolynomialCache cache(g);
  return find_disjoint_critical_cycles(cache, cache.all(), theta);
}

// ---------------------------------------------------------------------------
// Classical factor-critical case

/// First perfect matching of g[s] in deterministic search order, as edge indices.
inline std::optional<std::vector<std::size_t>> perfect_matching(const MultiGraph& g, VertexSet s) {
  std::vector<std::size_t> chosen;
  std::function<bool(VertexSet)> rec = [&](VertexSet left) {
    if (left == 0) return true;
    std::size_t v = lowest(left);
    for (std::size_t e : g.incident(v)) {
      const Edge& edge = g.edge(e);
      if (edge.is_loop()) continue;
      std::size_t w = edge.other(v);
      if (!contains(left, w)) continue;
      chosen.push_back(e);
      if (rec(left & ~bit(v) & ~bit(w))) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (set_size(s) % 2 != 0 || !rec(s)) return std::nullopt;
  return chosen;
}

/// Odd cycle through adjacent i, j in a factor-critical graph whose complement has a
/// perfect matching: the M_i / M_j alternating path closed by the edge ji.
inline CyclePath factor_critical_odd_cycle(const MultiGraph& g, std::size_t i, std::size_t j) {
  for (const auto& v : g.vertices())
    require(v.r.is_zero(), ErrorKind::PreconditionViolated, "factor-critical routine expects zero vertex weights");
  for (const auto& e : g.edges())
    require(e.rho == GaussianRational(1), ErrorKind::PreconditionViolated, "factor-critical routine expects unit edges");
  auto closing = detail::lowest_edge_between(g, i, j);
  require(i != j && closing.has_value(), ErrorKind::NotAdjacent, g.vertex(i).id + " and " + g.vertex(j).id + " are not adjacent");
  const VertexSet all = g.all();
  std::vector<std::vector<std::size_t>> near(g.vertex_count());
  for_each_member(all, [&](std::size_t v) {
    auto m = perfect_matching(g, all & ~bit(v));
    require(m.has_value(), ErrorKind::NotFactorCritical, "G minus " + g.vertex(v).id + " has no perfect matching");
    near[v] = *m;
  });
  // Walk the alternating path from i: M_j edge, then M_i edge, and so on until j.
  auto partner = [&](const std::vector<std::size_t>& m, std::size_t v) -> std::optional<std::size_t> {
    for (auto e : m)
      if (g.edge(e).u == v || g.edge(e).v == v) return e;
    return std::nullopt;
  };
  CyclePath c{PathKind::Cycle, {i}, {}};
  std::size_t cur = i;
  bool use_j = true;
  while (cur != j) {
    auto e = partner(use_j ? near[j] : near[i], cur);
    require(e.has_value(), ErrorKind::InternalInvariant, "alternating path broke off");
    c.edges.push_back(*e);
    cur = g.edge(*e).other(cur);
    c.vertices.push_back(cur);
    use_j = !use_j;
  }
  c.edges.push_back(*closing);
  require(is_valid_cycle(g, c) && c.vertices.size() % 2 == 1, ErrorKind::InternalInvariant, "alternating cycle is not odd");
  return canonical_cycle(c);
}

}  // namespace cover_spectra
