#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cover_spectra/cover_spectra.hpp"

namespace fixtures {

using namespace cover_spectra;

inline MultiGraph simple(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  MultiGraph g = MultiGraph::with_vertices(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

/// Two triangles 1-2-3 and 3-4-5 sharing vertex 3, with r_3 = 1.
inline MultiGraph fig1() {
  MultiGraph g = simple(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  g.set_weight(2, Rational(1));
  return g;
}

inline MultiGraph k3() { return simple(3, {{1, 2}, {2, 3}, {1, 3}}); }
inline MultiGraph p3() { return simple(3, {{1, 2}, {2, 3}}); }
inline MultiGraph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t k = 1; k <= n; ++k) e.push_back({k, k % n + 1});
  return simple(n, e);
}

inline MultiGraph digon(GaussianRational a = GaussianRational(1), GaussianRational b = GaussianRational(1)) {
  MultiGraph g = MultiGraph::with_vertices(2);
  g.add_edge(0, 1, a);
  g.add_edge(0, 1, b);
  return g;
}

inline MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  MultiGraph g;
  for (const auto& v : a.vertices()) g.add_vertex("a" + v.id, v.r);
  for (const auto& v : b.vertices()) g.add_vertex("b" + v.id, v.r);
  for (const auto& e : a.edges()) g.add_edge("a" + e.id, e.u, e.v, e.rho);
  for (const auto& e : b.edges()) g.add_edge("b" + e.id, a.vertex_count() + e.u, a.vertex_count() + e.v, e.rho);
  return g;
}

inline Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

inline ThetaSpec th(long v) { return ThetaSpec::rational(Rational(v)); }

inline VertexSet ids(const MultiGraph& g, std::vector<std::string> names) { return g.mask_of(names); }

/// Mixed-model instance stream shared by property tests.
inline MultiGraph corpus_graph(std::size_t index, std::size_t max_n = 10, std::uint64_t base_seed = 1000) {
  InstanceSpec spec;
  spec.seed = base_seed + index;
  spec.n = 3 + index % (max_n - 2);
  switch (index % 4) {
    case 0:
      spec.model = GeneratorModel::ErdosRenyi;
      spec.edge_probability = spec.n > 7 ? Rational(1, 4) : Rational(1, 3);
      break;
    case 1: spec.model = GeneratorModel::Forest; break;
    case 2:
      spec.model = GeneratorModel::ThetaCriticalGlue;
      spec.theta = Rational(static_cast<long>(index / 4 % 3) - 1);
      break;
    default:
      spec.model = GeneratorModel::ErdosRenyi;
      spec.edge_probability = Rational(1, 2);
      spec.n = std::min<std::size_t>(spec.n, 7);
      break;
  }
  return generate_instance(spec);
}

}  // namespace fixtures
