#pragma once

// Slow reference computations used only by tests. None of them call into the
// library's polynomial or enumeration routines.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/polynomial.hpp"
#include "cover_spectra/rational.hpp"

namespace oracle {

using cover_spectra::GaussianRational;
using cover_spectra::MultiGraph;
using cover_spectra::Polynomial;
using cover_spectra::Rational;

/// Sum over edge subsets that form matchings: prod(lambda_e) prod(x - r_v) over uncovered v.
inline Polynomial matching_polynomial(const MultiGraph& g) {
  const std::size_t m = g.edge_count();
  Polynomial total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> used(g.vertex_count(), false);
    Rational w(1);
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (!((mask >> e) & 1U)) continue;
      const auto& edge = g.edge(e);
      if (edge.u == edge.v || used[edge.u] || used[edge.v]) {
        ok = false;
        break;
      }
      used[edge.u] = used[edge.v] = true;
      w *= -(edge.rho.re() * edge.rho.re() + edge.rho.im() * edge.rho.im());
    }
    if (!ok) continue;
    Polynomial term = Polynomial::constant(w);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (!used[v]) term = term * Polynomial{-g.vertex(v).r, Rational(1)};
    total = total + term;
  }
  return total;
}

/// Determinant of a Gaussian-rational matrix by fraction-exact elimination.
inline GaussianRational determinant(std::vector<std::vector<GaussianRational>> a) {
  const std::size_t n = a.size();
  GaussianRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return GaussianRational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    GaussianRational inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      GaussianRational f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  return det;
}

/// Hermitian adjacency with phase multipliers on edges (all ones by default).
inline std::vector<std::vector<GaussianRational>> adjacency(const MultiGraph& g,
                                                            const std::vector<GaussianRational>& phase = {}) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<GaussianRational>> a(n, std::vector<GaussianRational>(n));
  for (std::size_t v = 0; v < n; ++v) a[v][v] = GaussianRational(g.vertex(v).r);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    GaussianRational w = phase.empty() ? edge.rho : edge.rho * phase[e];
    if (edge.u == edge.v) {
      a[edge.u][edge.u] = a[edge.u][edge.u] + w + w.conj();
    } else {
      a[edge.u][edge.v] = a[edge.u][edge.v] + w;
      a[edge.v][edge.u] = a[edge.v][edge.u] + w.conj();
    }
  }
  return a;
}

/// det(xI - A) from n + 1 exact evaluations and Lagrange interpolation.
inline Polynomial characteristic_polynomial(const MultiGraph& g, const std::vector<GaussianRational>& phase = {}) {
  const std::size_t n = g.vertex_count();
  auto a = adjacency(g, phase);
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational x(static_cast<long>(k));
    auto m = a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? GaussianRational(x) : GaussianRational(0)) - a[i][j];
    GaussianRational d = determinant(m);
    if (!d.im().is_zero()) throw std::runtime_error("non-real determinant");
    xs.push_back(x);
    ys.push_back(d.re());
  }
  Polynomial out;
  for (std::size_t i = 0; i <= n; ++i) {
    Polynomial basis = Polynomial::constant(ys[i]);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis = basis * Polynomial{-xs[j], Rational(1)} * (Rational(1) / (xs[i] - xs[j]));
    }
    out = out + basis;
  }
  return out;
}

/// Edge sets of all cycles: connected edge subsets where every touched vertex has
/// degree two (a loop counts two at its vertex). Returned as sorted edge lists.
inline std::set<std::vector<std::size_t>> cycle_edge_sets(const MultiGraph& g) {
  const std::size_t m = g.edge_count();
  if (m > 22) throw std::runtime_error("cycle oracle supports at most 22 edges");
  std::set<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<std::size_t> edges;
    for (std::size_t e = 0; e < m; ++e)
      if ((mask >> e) & 1U) {
        edges.push_back(e);
        deg[g.edge(e).u] += 1;
        deg[g.edge(e).v] += 1;
      }
    bool ok = true;
    std::vector<std::size_t> touched;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (deg[v] != 0 && deg[v] != 2) ok = false;
      if (deg[v] == 2) touched.push_back(v);
    }
    if (!ok) continue;
    // connectivity over the chosen edges
    std::vector<std::size_t> parent(g.vertex_count());
    for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto e : edges) parent[find(g.edge(e).u)] = find(g.edge(e).v);
    std::size_t root = find(touched[0]);
    for (auto v : touched)
      if (find(v) != root) ok = false;
    if (ok) out.insert(edges);
  }
  return out;
}

/// Weight of an undirected cycle keyed by its sorted edge list.
using EdgeSetWeights = std::map<std::vector<std::size_t>, Rational>;

/// Sum over spanning subgraphs made of isolated vertices (x - r), single edges
/// (lambda_e, the directed 2-cycle on one edge) and directed cycles of the given
/// weights; a loop has one orientation, every other cycle two.
inline Polynomial molecular_direct(const MultiGraph& g, const EdgeSetWeights& weights) {
  const auto cycles = cycle_edge_sets(g);
  struct Piece {
    std::uint64_t vertices;
    Rational coeff;
  };
  std::vector<Piece> pieces;
  for (const auto& c : cycles) {
    auto it = weights.find(c);
    Rational w = it == weights.end() ? Rational(0) : it->second;
    if (w.is_zero()) continue;
    std::uint64_t vs = 0;
    for (auto e : c) vs |= (std::uint64_t{1} << g.edge(e).u) | (std::uint64_t{1} << g.edge(e).v);
    pieces.push_back({vs, c.size() == 1 ? w : w * Rational(2)});
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (edge.u == edge.v) continue;
    pieces.push_back({(std::uint64_t{1} << edge.u) | (std::uint64_t{1} << edge.v),
                      -(edge.rho.re() * edge.rho.re() + edge.rho.im() * edge.rho.im())});
  }
  const std::size_t n = g.vertex_count();
  std::function<Polynomial(std::uint64_t)> rec = [&](std::uint64_t covered) -> Polynomial {
    std::size_t v = 0;
    while (v < n && ((covered >> v) & 1U)) ++v;
    if (v == n) return Polynomial::constant(Rational(1));
    const std::uint64_t bitv = std::uint64_t{1} << v;
    Polynomial total = Polynomial{-g.vertex(v).r, Rational(1)} * rec(covered | bitv);
    for (const auto& p : pieces) {
      if (!(p.vertices & bitv) || (p.vertices & covered)) continue;
      total = total + rec(covered | p.vertices) * p.coeff;
    }
    return total;
  };
  return rec(0);
}

/// Whether some theta-Aomoto subset exists, by scanning all vertex subsets.
/// `mult(mask)` returns m_theta of the induced subgraph on mask.
template <typename MultiplicityAt>
bool has_aomoto_subset(const MultiGraph& g, MultiplicityAt mult) {
  const std::size_t n = g.vertex_count();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    // forest: edges inside s (loops count as cycles) = |s| - components
    std::vector<std::size_t> parent(n);
    for (std::size_t v = 0; v < n; ++v) parent[v] = v;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    bool forest = true;
    for (const auto& e : g.edges()) {
      if (!((s >> e.u) & 1U) || !((s >> e.v) & 1U)) continue;
      std::size_t a = find(e.u), b = find(e.v);
      if (a == b) {
        forest = false;
        break;
      }
      parent[a] = b;
    }
    if (!forest) continue;
    std::map<std::size_t, std::uint64_t> comps;
    for (std::size_t v = 0; v < n; ++v)
      if ((s >> v) & 1U) comps[find(v)] |= std::uint64_t{1} << v;
    std::uint64_t frontier = 0;
    for (const auto& e : g.edges()) {
      bool in_u = (s >> e.u) & 1U, in_v = (s >> e.v) & 1U;
      if (in_u && !in_v) frontier |= std::uint64_t{1} << e.v;
      if (in_v && !in_u) frontier |= std::uint64_t{1} << e.u;
    }
    if (static_cast<int>(comps.size()) <= std::popcount(frontier)) continue;
    bool all_roots = true;
    for (const auto& [root, comp] : comps)
      if (mult(comp) < 1) all_roots = false;
    if (all_roots) return true;
  }
  return false;
}

}  // namespace oracle
