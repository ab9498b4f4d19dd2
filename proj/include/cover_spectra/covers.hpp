#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "cover_spectra/error.hpp"
#include "cover_spectra/graph_polynomials.hpp"
#include "cover_spectra/limits.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/theta.hpp"

namespace cover_spectra {

struct QuotientCover {
  MultiGraph base;
  int modulus = 1;
  std::vector<std::size_t> s_plus;                 // base edges carrying a generator
  MultiGraph cover;
  std::vector<std::size_t> vertex_projection;      // cover vertex -> base vertex
  std::vector<std::size_t> edge_projection;        // cover edge -> base edge
};

struct CoverBall {
  MultiGraph base;
  std::size_t root = 0;
  int radius = 0;
  MultiGraph ball;
  std::vector<std::size_t> vertex_projection;
  std::vector<std::size_t> edge_projection;
};

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (out > cap / std::max<std::size_t>(base, 1)) return cap + 1;
    out *= base;
  }
  return out;
}

inline std::string group_label(std::size_t code, int n, std::size_t k) {
  std::string out;
  for (std::size_t s = 0; s < k; ++s) {
    if (s) out += ",";
    out += std::to_string(code % static_cast<std::size_t>(n));
    code /= static_cast<std::size_t>(n);
  }
  return out;
}

}  // namespace detail

/// The cover for phi: F -> (Z/n)^{S+} sending the s-th non-forest edge to the s-th
/// unit vector and forest edges to 0. Vertex (v, g) is named "v@g_1,...,g_k".
inline QuotientCover build_quotient_cover(const MultiGraph& g, int n) {
  require(n >= 1, ErrorKind::InputError, "cover modulus must be at least 1");
  QuotientCover out;
  out.base = g;
  out.modulus = n;
  out.s_plus = spanning_forest(g).s_plus;
  const std::size_t k = out.s_plus.size();
  const std::size_t cap = limits().max_cover_vertices;
  const std::size_t group = detail::checked_power(static_cast<std::size_t>(n), k, cap);
  require(group <= cap && group * g.vertex_count() <= cap, ErrorKind::CoverTooLarge,
          "cover would exceed " + std::to_string(cap) + " vertices");
  std::vector<int> generator(g.edge_count(), -1);
  for (std::size_t s = 0; s < k; ++s) generator[out.s_plus[s]] = static_cast<int>(s);
  std::vector<std::size_t> stride(k + 1, 1);
  for (std::size_t s = 0; s < k; ++s) stride[s + 1] = stride[s] * static_cast<std::size_t>(n);

  auto index = [&](std::size_t v, std::size_t code) { return code * g.vertex_count() + v; };
  for (std::size_t code = 0; code < group; ++code)
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      out.cover.add_vertex(g.vertex(v).id + "@" + detail::group_label(code, n, k), g.vertex(v).r);
      out.vertex_projection.push_back(v);
    }
  for (std::size_t code = 0; code < group; ++code)
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      std::size_t target = code;
      if (generator[e] >= 0) {
        const std::size_t s = static_cast<std::size_t>(generator[e]);
        const std::size_t digit = (code / stride[s]) % static_cast<std::size_t>(n);
        target = code - digit * stride[s] + ((digit + 1) % static_cast<std::size_t>(n)) * stride[s];
      }
      out.cover.add_edge(edge.id + "@" + detail::group_label(code, n, k), index(edge.u, code), index(edge.v, target),
                         edge.rho);
      out.edge_projection.push_back(e);
    }
  return out;
}

struct FactorizationReport {
  int modulus = 1;
  std::size_t characters = 0;
  Polynomial cover_polynomial;
  Polynomial character_product;
  bool passed = false;
};

/// phi of the (Z/n)^{S+} cover against the product of twisted polynomials over all characters.
inline FactorizationReport character_factorization_check(const MultiGraph& g, int n) {
  require(n == 1 || n == 2 || n == 4, ErrorKind::InputError, "exact character phases need n in {1, 2, 4}");
  QuotientCover qc = build_quotient_cover(g, n);
  FactorizationReport r;
  r.modulus = n;
  r.cover_polynomial = characteristic_polynomial(qc.cover);
  const std::size_t k = qc.s_plus.size();
  const std::size_t group = detail::checked_power(static_cast<std::size_t>(n), k, SIZE_MAX / 2);
  r.characters = group;
  r.character_product = Polynomial::constant(Rational(1));
  std::vector<int> turns(g.edge_count(), 0);
  for (std::size_t code = 0; code < group; ++code) {
    std::size_t rest = code;
    for (std::size_t s = 0; s < k; ++s) {
      turns[qc.s_plus[s]] = static_cast<int>(rest % static_cast<std::size_t>(n)) * (4 / n);
      rest /= static_cast<std::size_t>(n);
    }
    r.character_product *= twisted_characteristic(g, turns);
  }
  r.passed = r.cover_polynomial == r.character_product;
  return r;
}

/// Tree of non-backtracking walks of length at most `radius` from `root`. A walk
/// backtracks only when it reverses the arc it just used, so a parallel edge or the
/// other orientation of a loop is a legal continuation.
inline CoverBall build_cover_ball(const MultiGraph& g, std::size_t root, int radius) {
  require(radius >= 0, ErrorKind::InputError, "ball radius must be nonnegative");
  require(root < g.vertex_count(), ErrorKind::UnknownVertex, "ball root out of range");
  const std::size_t cap = limits().max_ball_vertices;
  CoverBall out;
  out.base = g;
  out.root = root;
  out.radius = radius;
  struct Node {
    std::size_t cover_index;
    std::size_t at;
    int via_edge;      // -1 at the root
    bool via_forward;  // traversed u -> v
    std::string name;
  };
  std::vector<Node> frontier{{0, root, -1, true, g.vertex(root).id}};
  out.ball.add_vertex(g.vertex(root).id, g.vertex(root).r);
  out.vertex_projection.push_back(root);
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (std::size_t e : g.incident(node.at)) {
        const Edge& edge = g.edge(e);
        std::vector<bool> directions;
        if (edge.is_loop()) {
          directions = {true, false};
        } else {
          directions = {edge.u == node.at};
        }
        for (bool forward : directions) {
          if (node.via_edge == static_cast<int>(e) && node.via_forward != forward) continue;
          const std::size_t to = forward ? edge.v : edge.u;
          require(out.ball.vertex_count() < cap, ErrorKind::BallTooLarge,
                  "ball exceeds " + std::to_string(cap) + " vertices");
          std::string name = node.name + ">" + edge.id + (edge.is_loop() ? (forward ? "+" : "-") : "");
          std::size_t child = out.ball.add_vertex(name, g.vertex(to).r);
          out.vertex_projection.push_back(to);
          out.ball.add_edge("b" + std::to_string(out.ball.edge_count() + 1), node.cover_index, child,
                            forward ? edge.rho : edge.rho.conj());
          out.edge_projection.push_back(e);
          next.push_back({child, to, static_cast<int>(e), forward, name});
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

struct ProbeReport {
  std::size_t dimension = 0;
  double theta = 0.0;
  std::vector<double> eigenvalues;
  double min_distance = std::numeric_limits<double>::infinity();
  std::size_t hits = 0;
  double tolerance = 1e-9;
};

/// Floating-point spectrum of the adjacency matrix; illustrative only.
inline ProbeReport spectral_probe(const MultiGraph& g, const ThetaSpec& theta, double tolerance = 1e-9) {
  require(g.vertex_count() <= limits().max_probe_dimension, ErrorKind::GraphTooLarge,
          "probe dimension exceeds " + std::to_string(limits().max_probe_dimension));
  ProbeReport r;
  r.dimension = g.vertex_count();
  r.theta = theta.approx();
  r.tolerance = tolerance;
  r.eigenvalues = twisted_eigenvalues(g, std::vector<double>(g.edge_count(), 0.0));
  for (double ev : r.eigenvalues) {
    double d = std::abs(ev - r.theta);
    r.min_distance = std::min(r.min_distance, d);
    if (d <= tolerance) ++r.hits;
  }
  return r;
}

}  // namespace cover_spectra
