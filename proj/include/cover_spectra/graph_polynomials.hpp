#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cover_spectra/charpoly.hpp"
#include "cover_spectra/error.hpp"
#include "cover_spectra/limits.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/polynomial.hpp"
#include "cover_spectra/theta.hpp"

namespace cover_spectra {

enum class PolyKind { Matching, Characteristic };

inline std::string to_string(PolyKind kind) { return kind == PolyKind::Matching ? "matching" : "characteristic"; }

namespace detail {

// Fault-injection switch for mutation testing: flips the sign of every lambda_e
// inside the matching recursion.
inline bool& lambda_sign_mutation() {
  static thread_local bool flag = false;
  return flag;
}

inline Rational effective_lambda(const Edge& e) {
  Rational l = e.lambda();
  return lambda_sign_mutation() ? -l : l;
}

}  // namespace detail

class ScopedLambdaMutation {
 public:
  explicit ScopedLambdaMutation(bool on) : previous_(detail::lambda_sign_mutation()) {
    detail::lambda_sign_mutation() = on;
  }
  ~ScopedLambdaMutation() { detail::lambda_sign_mutation() = previous_; }
  ScopedLambdaMutation(const ScopedLambdaMutation&) = delete;
  ScopedLambdaMutation& operator=(const ScopedLambdaMutation&) = delete;

 private:
  bool previous_;
};

// ---------------------------------------------------------------------------
// Matrices

/// A^G restricted to `keep` (row order follows vertex order). A loop adds rho + conj(rho).
inline HermitianMatrix adjacency_matrix(const MultiGraph& g, const std::vector<std::size_t>& keep,
                                        const std::vector<int>* quarter_turns = nullptr) {
  std::vector<std::size_t> pos(g.vertex_count(), SIZE_MAX);
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = k;
  HermitianMatrix a(keep.size(), std::vector<GaussianRational>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) a[k][k] = GaussianRational(g.vertex(keep[k]).r);
  static const GaussianRational phases[4] = {GaussianRational(1), GaussianRational::i(), GaussianRational(-1),
                                             -GaussianRational::i()};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    std::size_t a_pos = pos[edge.u], b_pos = pos[edge.v];
    if (a_pos == SIZE_MAX || b_pos == SIZE_MAX) continue;
    GaussianRational w = edge.rho;
    if (quarter_turns != nullptr) w *= phases[(((*quarter_turns)[e] % 4) + 4) % 4];
    if (edge.is_loop()) {
      a[a_pos][a_pos] += w + w.conj();
    } else {
      a[a_pos][b_pos] += w;
      a[b_pos][a_pos] += w.conj();
    }
  }
  return a;
}

inline std::vector<std::size_t> all_indices(const MultiGraph& g) {
  std::vector<std::size_t> v(g.vertex_count());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = k;
  return v;
}

inline Polynomial characteristic_polynomial(const MultiGraph& g) {
  return charpoly(adjacency_matrix(g, all_indices(g)));
}

/// Exact twisted characteristic polynomial with phase i^quarter_turns[e] on edge e.
inline Polynomial twisted_characteristic(const MultiGraph& g, const std::vector<int>& quarter_turns) {
  require(quarter_turns.size() == g.edge_count(), ErrorKind::InputError, "one phase per edge is required");
  return charpoly(adjacency_matrix(g, all_indices(g), &quarter_turns));
}

/// Eigenvalues of A_xi with phase exp(i*angle[e]) on edge e (double precision).
inline std::vector<double> twisted_eigenvalues(const MultiGraph& g, const std::vector<double>& angles) {
  require(angles.size() == g.edge_count(), ErrorKind::InputError, "one phase per edge is required");
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) a(k, k) = g.vertex(static_cast<std::size_t>(k)).r.to_double();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    std::complex<double> w(edge.rho.re().to_double(), edge.rho.im().to_double());
    w *= std::polar(1.0, angles[e]);
    auto u = static_cast<Eigen::Index>(edge.u), v = static_cast<Eigen::Index>(edge.v);
    if (edge.is_loop()) {
      a(u, u) += 2.0 * w.real();
    } else {
      a(u, v) += w;
      a(v, u) += std::conj(w);
    }
  }
  if (n == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  return out;
}

inline FloatPolynomial twisted_characteristic_float(const MultiGraph& g, const std::vector<double>& angles) {
  return FloatPolynomial::from_roots(twisted_eigenvalues(g, angles));
}

// ---------------------------------------------------------------------------
// Matching polynomials

namespace detail {

/// Rooted-forest DP: A_v = mu(subtree), B_v = mu(subtree minus v). Works for any
/// ring-like T with (x - r) supplied by `vertex_term`.
template <typename T, typename VertexTerm>
T forest_matching(const MultiGraph& g, VertexTerm vertex_term) {
  const std::size_t n = g.vertex_count();
  std::vector<int> parent_edge(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (std::size_t e : g.incident(v)) {
        std::size_t w = g.edge(e).other(v);
        if (seen[w]) continue;
        seen[w] = true;
        parent_edge[w] = static_cast<int>(e);
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t v : order)
    if (parent_edge[v] >= 0) children[g.edge(static_cast<std::size_t>(parent_edge[v])).other(v)].push_back(v);
  std::vector<T> a(n), b(n);
  T one = vertex_term(SIZE_MAX);
  T total = one;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    const auto& ch = children[v];
    std::vector<T> prefix(ch.size() + 1, one), suffix(ch.size() + 1, one);
    for (std::size_t k = 0; k < ch.size(); ++k) prefix[k + 1] = prefix[k] * a[ch[k]];
    for (std::size_t k = ch.size(); k-- > 0;) suffix[k] = suffix[k + 1] * a[ch[k]];
    b[v] = prefix[ch.size()];
    T acc = vertex_term(v) * b[v];
    for (std::size_t k = 0; k < ch.size(); ++k) {
      const Edge& e = g.edge(static_cast<std::size_t>(parent_edge[ch[k]]));
      acc = acc + (b[ch[k]] * (prefix[k] * suffix[k + 1])) * effective_lambda(e);
    }
    a[v] = acc;
    if (parent_edge[v] < 0) total = total * a[v];
  }
  return total;
}

}  // namespace detail

/// Matching polynomial of a forest in O(n^2) coefficient operations.
inline Polynomial matching_polynomial_forest(const MultiGraph& g) {
  require(spanning_forest(g).s_plus.empty(), ErrorKind::PreconditionViolated, "forest DP needs a forest");
  return detail::forest_matching<Polynomial>(g, [&](std::size_t v) {
    if (v == SIZE_MAX) return Polynomial::constant(Rational(1));
    return Polynomial{-g.vertex(v).r, Rational(1)};
  });
}

/// mu^g(x0) for a forest, without building the polynomial.
inline Rational matching_value_forest(const MultiGraph& g, const Rational& x0) {
  require(spanning_forest(g).s_plus.empty(), ErrorKind::PreconditionViolated, "forest DP needs a forest");
  return detail::forest_matching<Rational>(g, [&](std::size_t v) {
    if (v == SIZE_MAX) return Rational(1);
    return x0 - g.vertex(v).r;
  });
}

/// Memoized matching and characteristic polynomials of all induced subgraphs of one host.
class PolynomialCache {
 public:
  explicit PolynomialCache(MultiGraph g) : g_(std::move(g)) {
    g_.require_mask();
    require(g_.vertex_count() <= limits().max_vertices, ErrorKind::GraphTooLarge,
            "graph has " + std::to_string(g_.vertex_count()) + " vertices, cap is " +
                std::to_string(limits().max_vertices));
    pivots_.resize(g_.vertex_count());
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      const Edge& edge = g_.edge(e);
      if (edge.is_loop()) continue;
      pivots_[edge.u].push_back({edge.v, detail::effective_lambda(edge)});
      pivots_[edge.v].push_back({edge.u, detail::effective_lambda(edge)});
    }
  }

  const MultiGraph& graph() const { return g_; }
  VertexSet all() const { return g_.vertex_count() == 0 ? 0 : g_.all(); }

  const Polynomial& matching(VertexSet s) {
    auto it = mu_.find(s);
    if (it != mu_.end()) return it->second;
    Polynomial result;
    if (s == 0) {
      result = Polynomial::constant(Rational(1));
    } else {
      std::size_t i = lowest(s);
      VertexSet rest = s & ~bit(i);
      result = Polynomial{-g_.vertex(i).r, Rational(1)} * matching(rest);
      for (const auto& [j, lambda] : pivots_[i]) {
        if (!contains(rest, j)) continue;
        result += matching(rest & ~bit(j)) * lambda;
      }
    }
    return mu_.emplace(s, std::move(result)).first->second;
  }

  const Polynomial& characteristic(VertexSet s) {
    auto it = phi_.find(s);
    if (it != phi_.end()) return it->second;
    return phi_.emplace(s, charpoly(adjacency_matrix(g_, members(s)))).first->second;
  }

  const Polynomial& polynomial(PolyKind kind, VertexSet s) {
    return kind == PolyKind::Matching ? matching(s) : characteristic(s);
  }

  int multiplicity(PolyKind kind, VertexSet s, const ThetaSpec& theta) {
    auto& table = multiplicities_[{theta.str(), kind}];
    auto it = table.find(s);
    if (it != table.end()) return it->second;
    int m = multiplicity_at(polynomial(kind, s), theta);
    table.emplace(s, m);
    return m;
  }

 private:
  struct Pivot {
    std::size_t j;
    Rational lambda;
  };

  MultiGraph g_;
  std::vector<std::vector<Pivot>> pivots_;
  std::unordered_map<VertexSet, Polynomial> mu_;
  std::unordered_map<VertexSet, Polynomial> phi_;
  std::map<std::pair<std::string, PolyKind>, std::unordered_map<VertexSet, int>> multiplicities_;
};

inline Polynomial matching_polynomial(const MultiGraph& g) {
  if (g.vertex_count() == 0) return Polynomial::constant(Rational(1));
  if (spanning_forest(g).s_plus.empty()) return matching_polynomial_forest(g);
  PolynomialCache cache(g);
  return cache.matching(cache.all());
}

/// Direct sum over all matchings (oracle); at most 14 vertices.
inline Polynomial matching_polynomial_bruteforce(const MultiGraph& g) {
  require(g.vertex_count() <= 14, ErrorKind::GraphTooLarge, "brute-force matching polynomial supports 14 vertices");
  Polynomial total;
  std::vector<bool> covered(g.vertex_count(), false);
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t e, Rational weight) {
    if (e == g.edge_count()) {
      Polynomial term = Polynomial::constant(weight);
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) term *= Polynomial{-g.vertex(v).r, Rational(1)};
      total += term;
      return;
    }
    rec(e + 1, weight);
    const Edge& edge = g.edge(e);
    if (edge.is_loop() || covered[edge.u] || covered[edge.v]) return;
    covered[edge.u] = covered[edge.v] = true;
    rec(e + 1, weight * detail::effective_lambda(edge));
    covered[edge.u] = covered[edge.v] = false;
  };
  rec(0, Rational(1));
  return total;
}

// ---------------------------------------------------------------------------
// Molecular polynomial

/// Real weight per undirected cycle, keyed by canonical edge-index sequence.
using CycleWeightAssignment = std::map<std::vector<std::size_t>, Rational>;

inline CycleWeightAssignment zero_cycle_weights(const MultiGraph& g) {
  CycleWeightAssignment w;
  for (const auto& c : enumerate_cycles(g)) w[c.edges] = Rational(0);
  return w;
}

/// Weights that turn the molecular polynomial into det(xI - A).
inline Rational harary_weight(const MultiGraph& g, const CyclePath& c) {
  if (c.edges.size() == 1) return Rational(-2) * g.edge(c.edges[0]).rho.re();
  return -cycle_arc_product(g, c).re();
}

inline CycleWeightAssignment harary_cycle_weights(const MultiGraph& g) {
  CycleWeightAssignment w;
  for (const auto& c : enumerate_cycles(g)) w[c.edges] = harary_weight(g, c);
  return w;
}

/// Number of directed traversals represented by one undirected cycle.
inline int orientation_count(const CyclePath& c) { return c.edges.size() == 1 ? 1 : 2; }

/// Gutman expansion: sum over packings of weighted cycles of mu(G minus packing).
inline Polynomial molecular_polynomial(PolynomialCache& cache, const std::vector<CyclePath>& cycles,
                                       const CycleWeightAssignment& w) {
  std::vector<CyclePath> active;
  std::vector<Rational> factor;
  for (const auto& c : cycles) {
    auto it = w.find(c.edges);
    require(it != w.end(), ErrorKind::MissingCycleWeight, "no weight for a cycle of length " + std::to_string(c.edges.size()));
    if (it->second.is_zero()) continue;
    active.push_back(c);
    factor.push_back(it->second * Rational(orientation_count(c)));
  }
  Polynomial total;
  const VertexSet all = cache.all();
  for (const auto& packing : enumerate_packings(active)) {
    Rational coeff(1);
    VertexSet used = 0;
    for (auto k : packing) {
      coeff *= factor[k];
      used |= active[k].vertex_set();
    }
    total += cache.matching(all & ~used) * coeff;
  }
  return total;
}

inline Polynomial molecular_polynomial(const MultiGraph& g, const CycleWeightAssignment& w) {
  PolynomialCache cache(g);
  return molecular_polynomial(cache, enumerate_cycles(g), w);
}

// ---------------------------------------------------------------------------
// Continued fractions and path trees

struct AlphaValue {
  enum class Kind { Zero, Infinity, Finite };
  Kind kind = Kind::Finite;
  Rational value;

  static AlphaValue zero() { return {Kind::Zero, Rational(0)}; }
  static AlphaValue infinity() { return {Kind::Infinity, Rational(0)}; }
  static AlphaValue finite(Rational v) { return {Kind::Finite, std::move(v)}; }

  friend bool operator==(const AlphaValue& a, const AlphaValue& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
  std::string str() const {
    switch (kind) {
      case Kind::Zero: return "0";
      case Kind::Infinity: return "inf";
      case Kind::Finite: return value.str();
    }
    return "?";
  }
};

/// Value at rational theta of p / (x - theta)^m.
inline Rational deflated_value(const Polynomial& p, const Rational& theta, int m) {
  Polynomial q = p;
  for (int k = 0; k < m; ++k) q = poly_divexact(q, Polynomial::linear_factor(theta));
  return q(theta);
}

/// alpha_i of the induced subgraph on `host` at theta, decided by multiplicities.
inline AlphaValue alpha_at(PolynomialCache& cache, VertexSet host, std::size_t i, const ThetaSpec& theta,
                           PolyKind kind = PolyKind::Matching) {
  require(contains(host, i), ErrorKind::UnknownVertex, "alpha vertex is not in the graph");
  int m = cache.multiplicity(kind, host, theta);
  int m_minus = cache.multiplicity(kind, host & ~bit(i), theta);
  if (m > m_minus) return AlphaValue::zero();
  if (m < m_minus) return AlphaValue::infinity();
  require(theta.is_rational(), ErrorKind::FiniteValueUnavailable,
          "finite alpha value needs a rational theta, got " + theta.str());
  Rational num = deflated_value(cache.polynomial(kind, host), theta.value(), m);
  Rational den = deflated_value(cache.polynomial(kind, host & ~bit(i)), theta.value(), m);
  return AlphaValue::finite(num / den);
}

inline AlphaValue alpha_at(const MultiGraph& g, const std::string& i, const ThetaSpec& theta) {
  PolynomialCache cache(g);
  return alpha_at(cache, cache.all(), g.index_of(i), theta);
}

struct PathTree {
  MultiGraph tree;
  std::size_t root = 0;
};

/// Tree of simple paths from i; each tree edge copies the rho of the graph edge it extends by.
inline PathTree path_tree(const MultiGraph& g, std::size_t i) {
  require(i < g.vertex_count(), ErrorKind::UnknownVertex, "path tree root out of range");
  const std::size_t cap = std::max<std::size_t>(limits().max_enumeration / 10, 1);
  PathTree out;
  out.root = out.tree.add_vertex(g.vertex(i).id, g.vertex(i).r);
  std::vector<std::size_t> node_stack{out.root};
  std::vector<std::string> name_stack{g.vertex(i).id};
  for_each_path_from(g, g.all(), i, [&](const CyclePath& p) {
    const std::size_t depth = p.vertices.size();
    node_stack.resize(depth);
    name_stack.resize(depth);
    if (depth > 1) {
      require(out.tree.vertex_count() < cap, ErrorKind::GraphTooLarge, "path tree exceeds the cap");
      const Edge& e = g.edge(p.edges.back());
      std::size_t v = p.vertices.back();
      std::string name = name_stack[depth - 2] + ">" + e.id;
      std::size_t node = out.tree.add_vertex(name, g.vertex(v).r);
      out.tree.add_edge("t" + std::to_string(out.tree.edge_count() + 1), node_stack[depth - 2], node, e.rho);
      node_stack[depth - 1] = node;
      name_stack[depth - 1] = name;
    }
    return true;
  });
  return out;
}

}  // namespace cover_spectra
