#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cover_spectra/error.hpp"
#include "cover_spectra/limits.hpp"
#include "cover_spectra/rational.hpp"

namespace cover_spectra {

/// Subset of a host graph's vertices, as a bitmask over its vertex ordering.
using VertexSet = std::uint64_t;

constexpr std::size_t kMaxMaskVertices = 64;

inline VertexSet bit(std::size_t index) { return VertexSet{1} << index; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool contains(VertexSet s, std::size_t index) { return (s >> index) & 1U; }
inline std::size_t lowest(VertexSet s) { return static_cast<std::size_t>(std::countr_zero(s)); }

template <typename F>
void for_each_member(VertexSet s, F&& f) {
  while (s) {
    f(lowest(s));
    s &= s - 1;
  }
}

inline std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  for_each_member(s, [&](std::size_t v) { out.push_back(v); });
  return out;
}

struct Vertex {
  std::string id;
  Rational r;
};

struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
  GaussianRational rho{1};

  bool is_loop() const { return u == v; }
  Rational lambda() const { return -rho.norm2(); }
  std::size_t other(std::size_t w) const { return w == u ? v : u; }
  /// Weight of the arc leaving `from`; the reverse arc carries the conjugate.
  GaussianRational arc_weight(std::size_t from) const { return from == u ? rho : rho.conj(); }
};

class MultiGraph {
 public:
  MultiGraph() = default;

  /// Vertices "1".."n" with weight 0.
  static MultiGraph with_vertices(std::size_t n) {
    MultiGraph g;
    for (std::size_t k = 1; k <= n; ++k) g.add_vertex(std::to_string(k));
    return g;
  }

  std::size_t add_vertex(std::string id, Rational r = Rational(0)) {
    require(vertex_index_.find(id) == vertex_index_.end(), ErrorKind::InputError, "duplicate vertex id '" + id + "'");
    vertex_index_.emplace(id, vertices_.size());
    vertices_.push_back({std::move(id), std::move(r)});
    incident_.emplace_back();
    neighbors_.push_back(0);
    return vertices_.size() - 1;
  }

  std::size_t add_edge(std::string id, std::size_t u, std::size_t v, GaussianRational rho = GaussianRational(1)) {
    require(u < vertices_.size() && v < vertices_.size(), ErrorKind::UnknownVertex, "edge endpoint out of range");
    require(!rho.is_zero(), ErrorKind::InputError, "edge '" + id + "' has zero weight");
    require(edge_index_.find(id) == edge_index_.end(), ErrorKind::InputError, "duplicate edge id '" + id + "'");
    edge_index_.emplace(id, edges_.size());
    edges_.push_back({std::move(id), u, v, std::move(rho)});
    std::size_t e = edges_.size() - 1;
    incident_[u].push_back(e);
    if (u != v) {
      incident_[v].push_back(e);
      if (u < kMaxMaskVertices && v < kMaxMaskVertices) {
        neighbors_[u] |= bit(v);
        neighbors_[v] |= bit(u);
      }
    }
    return e;
  }

  /// Adds an edge with an automatic id "e<k>".
  std::size_t add_edge(std::size_t u, std::size_t v, GaussianRational rho = GaussianRational(1)) {
    std::string id = "e" + std::to_string(edges_.size() + 1);
    while (edge_index_.count(id)) id += "'";
    return add_edge(std::move(id), u, v, std::move(rho));
  }

  std::size_t connect(std::string id, const std::string& u, const std::string& v,
                      GaussianRational rho = GaussianRational(1)) {
    return add_edge(std::move(id), index_of(u), index_of(v), std::move(rho));
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  void set_weight(std::size_t i, Rational r) { vertices_.at(i).r = std::move(r); }
  void set_rho(std::size_t e, GaussianRational rho) {
    require(!rho.is_zero(), ErrorKind::InputError, "zero edge weight");
    edges_.at(e).rho = std::move(rho);
  }

  /// Incident edge indices in increasing order; a loop is listed once.
  const std::vector<std::size_t>& incident(std::size_t i) const { return incident_.at(i); }
  /// Non-loop neighbors as a mask (graphs with at most 64 vertices).
  VertexSet neighbors(std::size_t i) const { return neighbors_.at(i); }

  std::size_t index_of(const std::string& id) const {
    auto it = vertex_index_.find(id);
    require(it != vertex_index_.end(), ErrorKind::UnknownVertex, "unknown vertex '" + id + "'");
    return it->second;
  }
  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
  std::size_t edge_index_of(const std::string& id) const {
    auto it = edge_index_.find(id);
    require(it != edge_index_.end(), ErrorKind::InputError, "unknown edge '" + id + "'");
    return it->second;
  }

  bool fits_mask() const { return vertices_.size() <= kMaxMaskVertices; }
  void require_mask() const {
    require(fits_mask(), ErrorKind::GraphTooLarge,
            "subset algorithms support at most 64 vertices, got " + std::to_string(vertices_.size()));
  }
  VertexSet all() const {
    require_mask();
    return vertices_.size() == 64 ? ~VertexSet{0} : bit(vertices_.size()) - 1;
  }

  VertexSet mask_of(const std::vector<std::string>& ids) const {
    require_mask();
    VertexSet s = 0;
    for (const auto& id : ids) s |= bit(index_of(id));
    return s;
  }
  std::vector<std::string> ids_of(VertexSet s) const {
    std::vector<std::string> out;
    for_each_member(s, [&](std::size_t v) { out.push_back(vertices_[v].id); });
    return out;
  }

  bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<VertexSet> neighbors_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

// ---------------------------------------------------------------------------
// Subgraphs, frontiers, components

/// Induced subgraph on `keep`; ids and relative order are preserved.
inline MultiGraph induced_subgraph(const MultiGraph& g, VertexSet keep) {
  g.require_mask();
  MultiGraph h;
  std::vector<std::size_t> remap(g.vertex_count(), SIZE_MAX);
  for_each_member(keep, [&](std::size_t v) { remap[v] = h.add_vertex(g.vertex(v).id, g.vertex(v).r); });
  for (const auto& e : g.edges()) {
    if (contains(keep, e.u) && contains(keep, e.v)) h.add_edge(e.id, remap[e.u], remap[e.v], e.rho);
  }
  return h;
}

inline MultiGraph delete_vertices(const MultiGraph& g, VertexSet s) {
  require((s & ~g.all()) == 0, ErrorKind::UnknownVertex, "deleted set is not inside the graph");
  return induced_subgraph(g, g.all() & ~s);
}

inline MultiGraph delete_vertices(const MultiGraph& g, const std::vector<std::string>& ids) {
  return delete_vertices(g, g.mask_of(ids));
}

inline VertexSet neighborhood(const MultiGraph& g, VertexSet s) {
  VertexSet n = 0;
  for_each_member(s, [&](std::size_t v) { n |= g.neighbors(v); });
  return n;
}

/// Vertices outside s with a neighbor in s, inside the universe `within`.
inline VertexSet frontier_within(const MultiGraph& g, VertexSet within, VertexSet s) {
  return neighborhood(g, s) & within & ~s;
}

inline VertexSet frontier(const MultiGraph& g, VertexSet s) {
  require((s & ~g.all()) == 0, ErrorKind::UnknownVertex, "set is not inside the graph");
  return frontier_within(g, g.all(), s);
}

inline VertexSet component_of(const MultiGraph& g, VertexSet within, std::size_t start) {
  VertexSet seen = bit(start);
  VertexSet layer = seen;
  while (layer) {
    VertexSet next = neighborhood(g, layer) & within & ~seen;
    seen |= next;
    layer = next;
  }
  return seen;
}

/// Components of g[within], ordered by their smallest vertex index.
inline std::vector<VertexSet> components_within(const MultiGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (rest) {
    VertexSet c = component_of(g, within, lowest(rest));
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

inline std::vector<VertexSet> components(const MultiGraph& g) {
  if (g.vertex_count() == 0) return {};
  return components_within(g, g.all());
}

inline bool is_connected(const MultiGraph& g) { return components(g).size() <= 1; }

/// Number of edge records with both endpoints in s (loops included).
inline std::size_t edges_within(const MultiGraph& g, VertexSet s) {
  std::size_t count = 0;
  for (const auto& e : g.edges())
    if (contains(s, e.u) && contains(s, e.v)) ++count;
  return count;
}

/// g[s] has no cycle, counting loops and parallel pairs as cycles.
inline bool is_forest_within(const MultiGraph& g, VertexSet s) {
  return edges_within(g, s) + components_within(g, s).size() == static_cast<std::size_t>(set_size(s));
}

inline bool is_forest(const MultiGraph& g) { return g.vertex_count() == 0 || is_forest_within(g, g.all()); }

// ---------------------------------------------------------------------------
// Paths and cycles

enum class PathKind { Path, Cycle };

/// A path or cycle given by vertex indices and edge indices of a host graph.
/// Paths: edges[k] joins vertices[k] and vertices[k+1]. Cycles: edges[k] joins
/// vertices[k] and vertices[(k+1) % len]; a loop has one vertex and one edge.
struct CyclePath {
  PathKind kind = PathKind::Path;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;

  std::size_t length() const { return kind == PathKind::Cycle ? edges.size() : vertices.size(); }
  VertexSet vertex_set() const {
    VertexSet s = 0;
    for (auto v : vertices) s |= bit(v);
    return s;
  }
  friend bool operator==(const CyclePath&, const CyclePath&) = default;
};

inline std::vector<std::string> vertex_ids(const MultiGraph& g, const CyclePath& p) {
  std::vector<std::string> out;
  for (auto v : p.vertices) out.push_back(g.vertex(v).id);
  return out;
}

inline std::vector<std::string> edge_ids(const MultiGraph& g, const CyclePath& p) {
  std::vector<std::string> out;
  for (auto e : p.edges) out.push_back(g.edge(e).id);
  return out;
}

/// Checks that p is a simple path of g (a single vertex is a path).
inline void validate_path(const MultiGraph& g, const CyclePath& p) {
  require(p.kind == PathKind::Path, ErrorKind::NotAPath, "expected a path");
  require(!p.vertices.empty() && p.edges.size() + 1 == p.vertices.size(), ErrorKind::NotAPath,
          "path needs one more vertex than edges");
  VertexSet seen = 0;
  for (auto v : p.vertices) {
    require(v < g.vertex_count(), ErrorKind::NotAPath, "path vertex out of range");
    require(!contains(seen, v), ErrorKind::NotAPath, "path repeats a vertex");
    seen |= bit(v);
  }
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    require(p.edges[k] < g.edge_count(), ErrorKind::NotAPath, "path edge out of range");
    const Edge& e = g.edge(p.edges[k]);
    bool ok = (e.u == p.vertices[k] && e.v == p.vertices[k + 1]) || (e.v == p.vertices[k] && e.u == p.vertices[k + 1]);
    require(ok && !e.is_loop(), ErrorKind::NotAPath, "edge " + e.id + " does not join consecutive path vertices");
  }
}

/// Checks that c is a cycle of g under the loop / parallel-pair conventions.
inline bool is_valid_cycle(const MultiGraph& g, const CyclePath& c) {
  if (c.kind != PathKind::Cycle || c.edges.empty() || c.edges.size() != c.vertices.size()) return false;
  const std::size_t k = c.edges.size();
  VertexSet seen = 0;
  for (auto v : c.vertices) {
    if (v >= g.vertex_count() || contains(seen, v)) return false;
    seen |= bit(v);
  }
  std::vector<std::size_t> es = c.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t j = 0; j < k; ++j) {
    if (c.edges[j] >= g.edge_count()) return false;
    const Edge& e = g.edge(c.edges[j]);
    std::size_t a = c.vertices[j];
    std::size_t b = c.vertices[(j + 1) % k];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }
  return true;
}

/// Minimal rotation/reflection of the edge sequence; ties broken by vertex sequence.
inline CyclePath canonical_cycle(const CyclePath& c) {
  const std::size_t k = c.edges.size();
  CyclePath best = c;
  bool first = true;
  for (int dir : {1, -1}) {
    for (std::size_t r = 0; r < k; ++r) {
      CyclePath cand;
      cand.kind = PathKind::Cycle;
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t idx = dir > 0 ? (r + j) % k : (r + k - j) % k;
        cand.edges.push_back(c.edges[idx]);
        std::size_t vidx = dir > 0 ? (r + j) % k : (r + 1 + k - j) % k;
        cand.vertices.push_back(c.vertices[vidx]);
      }
      if (first || std::tie(cand.edges, cand.vertices) < std::tie(best.edges, best.vertices)) {
        best = std::move(cand);
        first = false;
      }
    }
  }
  return best;
}

/// Closed walk as the sequence of (edge, from-vertex) arcs along the stored orientation.
inline GaussianRational cycle_arc_product(const MultiGraph& g, const CyclePath& c) {
  GaussianRational prod(1);
  for (std::size_t j = 0; j < c.edges.size(); ++j) prod *= g.edge(c.edges[j]).arc_weight(c.vertices[j]);
  return prod;
}

/// All cycles of g[within] in canonical form, ordered by length then edge sequence.
inline std::vector<CyclePath> enumerate_cycles_within(const MultiGraph& g, VertexSet within) {
  g.require_mask();
  std::vector<CyclePath> out;
  auto push = [&](CyclePath c) {
    require(out.size() < limits().max_enumeration, ErrorKind::GraphTooLarge, "cycle enumeration exceeds the cap");
    out.push_back(canonical_cycle(c));
  };
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!contains(within, edges[e].u) || !contains(within, edges[e].v)) continue;
    if (edges[e].is_loop()) {
      push({PathKind::Cycle, {edges[e].u}, {e}});
      continue;
    }
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      bool parallel = (edges[f].u == edges[e].u && edges[f].v == edges[e].v) ||
                      (edges[f].u == edges[e].v && edges[f].v == edges[e].u);
      if (parallel) push({PathKind::Cycle, {edges[e].u, edges[e].v}, {e, f}});
    }
  }
  // Simple cycles of length >= 3, rooted at their smallest vertex.
  for_each_member(within, [&](std::size_t s) {
    VertexSet allowed = within & ~(bit(s + 1) - 1);
    std::vector<std::size_t> vs{s};
    std::vector<std::size_t> es;
    std::function<void(std::size_t, VertexSet)> dfs = [&](std::size_t cur, VertexSet used) {
      for (std::size_t e : g.incident(cur)) {
        const Edge& edge = edges[e];
        if (edge.is_loop()) continue;
        std::size_t nxt = edge.other(cur);
        if (nxt == s) {
          if (es.size() >= 2 && es.front() < e) {
            CyclePath c{PathKind::Cycle, vs, es};
            c.edges.push_back(e);
            push(std::move(c));
          }
          continue;
        }
        if (!contains(allowed, nxt) || contains(used, nxt)) continue;
        vs.push_back(nxt);
        es.push_back(e);
        dfs(nxt, used | bit(nxt));
        vs.pop_back();
        es.pop_back();
      }
    };
    dfs(s, bit(s));
  });
  std::sort(out.begin(), out.end(), [](const CyclePath& a, const CyclePath& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

inline std::vector<CyclePath> enumerate_cycles(const MultiGraph& g) {
  if (g.vertex_count() == 0) return {};
  return enumerate_cycles_within(g, g.all());
}

/// Vertex-disjoint union of cycles; the empty packing is allowed.
struct TwoRegularSubgraph {
  std::vector<CyclePath> cycles;

  VertexSet vertex_set() const {
    VertexSet s = 0;
    for (const auto& c : cycles) s |= c.vertex_set();
    return s;
  }
  bool empty() const { return cycles.empty(); }
};

/// Packings as index lists into `cycles`; the empty packing comes first.
inline std::vector<std::vector<std::size_t>> enumerate_packings(const std::vector<CyclePath>& cycles) {
  std::vector<VertexSet> masks;
  for (const auto& c : cycles) masks.push_back(c.vertex_set());
  std::vector<std::vector<std::size_t>> out{{}};
  std::vector<std::size_t> current;
  std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t start, VertexSet used) {
    for (std::size_t k = start; k < cycles.size(); ++k) {
      if (masks[k] & used) continue;
      current.push_back(k);
      require(out.size() < limits().max_enumeration, ErrorKind::GraphTooLarge, "packing enumeration exceeds the cap");
      out.push_back(current);
      rec(k + 1, used | masks[k]);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

inline std::vector<TwoRegularSubgraph> enumerate_two_regular(const MultiGraph& g) {
  auto cycles = enumerate_cycles(g);
  std::vector<TwoRegularSubgraph> out;
  for (const auto& packing : enumerate_packings(cycles)) {
    TwoRegularSubgraph t;
    for (auto k : packing) t.cycles.push_back(cycles[k]);
    out.push_back(std::move(t));
  }
  return out;
}

/// Visits every simple path of g[within] starting at `start` (including the
/// one-vertex path) in deterministic DFS order. The visitor returns false to prune.
template <typename Visitor>
void for_each_path_from(const MultiGraph& g, VertexSet within, std::size_t start, Visitor&& visit) {
  CyclePath p{PathKind::Path, {start}, {}};
  std::function<void(VertexSet)> dfs = [&](VertexSet used) {
    if (!visit(static_cast<const CyclePath&>(p))) return;
    std::size_t cur = p.vertices.back();
    for (std::size_t e : g.incident(cur)) {
      const Edge& edge = g.edge(e);
      if (edge.is_loop()) continue;
      std::size_t nxt = edge.other(cur);
      if (!contains(within, nxt) || contains(used, nxt)) continue;
      p.vertices.push_back(nxt);
      p.edges.push_back(e);
      dfs(used | bit(nxt));
      p.vertices.pop_back();
      p.edges.pop_back();
    }
  };
  dfs(bit(start));
}

inline std::vector<CyclePath> enumerate_paths_between_within(const MultiGraph& g, VertexSet within, std::size_t i,
                                                             std::size_t j) {
  require(i != j, ErrorKind::SameVertex, "paths need distinct endpoints");
  std::vector<CyclePath> out;
  for_each_path_from(g, within, i, [&](const CyclePath& p) {
    if (p.vertices.back() == j) {
      require(out.size() < limits().max_enumeration, ErrorKind::GraphTooLarge, "path enumeration exceeds the cap");
      out.push_back(p);
      return false;
    }
    return true;
  });
  return out;
}

inline std::vector<CyclePath> enumerate_paths_between(const MultiGraph& g, std::size_t i, std::size_t j) {
  require(i < g.vertex_count() && j < g.vertex_count(), ErrorKind::UnknownVertex, "path endpoint out of range");
  return enumerate_paths_between_within(g, g.all(), i, j);
}

inline std::vector<CyclePath> enumerate_paths_between(const MultiGraph& g, const std::string& i, const std::string& j) {
  return enumerate_paths_between(g, g.index_of(i), g.index_of(j));
}

struct SpanningForest {
  std::vector<std::size_t> forest;  // edge indices
  std::vector<std::size_t> s_plus;  // non-forest edge indices, increasing
};

/// Greedy maximal spanning forest in edge-index order; loops are never forest edges.
inline SpanningForest spanning_forest(const MultiGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  SpanningForest out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::size_t a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) {
      out.s_plus.push_back(e);
    } else {
      parent[a] = b;
      out.forest.push_back(e);
    }
  }
  return out;
}

}  // namespace cover_spectra
