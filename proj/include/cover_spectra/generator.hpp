#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cover_spectra/error.hpp"
#include "cover_spectra/gallai_edmonds.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/theta.hpp"

namespace cover_spectra {

enum class GeneratorModel { Forest, ErdosRenyi, Regular, ThetaCriticalGlue };

inline std::string to_string(GeneratorModel m) {
  switch (m) {
    case GeneratorModel::Forest: return "forest";
    case GeneratorModel::ErdosRenyi: return "erdos-renyi";
    case GeneratorModel::Regular: return "regular";
    case GeneratorModel::ThetaCriticalGlue: return "theta-critical-glue";
  }
  return "?";
}

inline GeneratorModel parse_model(const std::string& s) {
  if (s == "forest") return GeneratorModel::Forest;
  if (s == "erdos-renyi") return GeneratorModel::ErdosRenyi;
  if (s == "regular") return GeneratorModel::Regular;
  if (s == "theta-critical-glue") return GeneratorModel::ThetaCriticalGlue;
  fail(ErrorKind::InputError, "unknown generator model '" + s + "'");
}

struct InstanceSpec {
  GeneratorModel model = GeneratorModel::ErdosRenyi;
  std::size_t n = 6;
  std::uint64_t seed = 1;
  Rational edge_probability{1, 3};  // erdos-renyi
  std::size_t degree = 3;           // regular
  Rational theta{0};                // theta-critical-glue
  bool weighted = true;             // vertex weights and rho drawn from small rationals
  bool multigraph = true;           // allow loops and parallel edges (erdos-renyi)
  std::size_t rejection_budget = 200;
};

namespace detail {

class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(const Rational& p) {
    const std::uint64_t den = p.denominator().get_ui();
    return below(den) < p.numerator().get_ui();
  }
  Rational small_weight() {
    static const Rational pool[] = {Rational(2), Rational(-2), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)};
    return pool[below(6)];
  }
  Rational vertex_weight() { return chance(Rational(1, 2)) ? Rational(0) : small_weight(); }
  GaussianRational rho() {
    Rational a = small_weight();
    return chance(Rational(1, 4)) ? GaussianRational(Rational(0), a) : GaussianRational(a);
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline MultiGraph forest_instance(const InstanceSpec& spec, InstanceRng& rng) {
  MultiGraph g = MultiGraph::with_vertices(spec.n);
  for (std::size_t v = 1; v < spec.n; ++v) {
    if (!rng.chance(Rational(6, 7))) continue;
    g.add_edge(rng.below(v), v, spec.weighted ? rng.rho() : GaussianRational(1));
  }
  if (spec.weighted)
    for (std::size_t v = 0; v < spec.n; ++v) g.set_weight(v, rng.vertex_weight());
  return g;
}

inline MultiGraph erdos_renyi_instance(const InstanceSpec& spec, InstanceRng& rng) {
  MultiGraph g = MultiGraph::with_vertices(spec.n);
  for (std::size_t u = 0; u < spec.n; ++u)
    for (std::size_t v = u + 1; v < spec.n; ++v) {
      if (!rng.chance(spec.edge_probability)) continue;
      g.add_edge(u, v, spec.weighted ? rng.rho() : GaussianRational(1));
      if (spec.multigraph && rng.chance(Rational(1, 12))) g.add_edge(u, v, spec.weighted ? rng.rho() : GaussianRational(1));
    }
  if (spec.multigraph)
    for (std::size_t v = 0; v < spec.n; ++v)
      if (rng.chance(Rational(1, 10))) g.add_edge(v, v, spec.weighted ? rng.rho() : GaussianRational(1));
  if (spec.weighted)
    for (std::size_t v = 0; v < spec.n; ++v) g.set_weight(v, rng.vertex_weight());
  return g;
}

/// Simple d-regular graph by the pairing model with restarts.
inline MultiGraph regular_instance(const InstanceSpec& spec, InstanceRng& rng) {
  const std::size_t n = spec.n, d = spec.degree;
  require(d < n && (n * d) % 2 == 0, ErrorKind::InputError, "no simple d-regular graph with these parameters");
  for (std::size_t attempt = 0; attempt < spec.rejection_budget; ++attempt) {
    std::vector<std::size_t> points;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k < d; ++k) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng.engine());
    bool ok = true;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < points.size() && ok; k += 2) {
      std::size_t a = points[k], b = points[k + 1];
      if (a == b || adj[a][b]) ok = false;
      else adj[a][b] = adj[b][a] = true;
    }
    if (!ok) continue;
    MultiGraph g = MultiGraph::with_vertices(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (adj[a][b]) g.add_edge(a, b);
    return g;
  }
  fail(ErrorKind::RejectionBudgetExceeded, "no simple regular graph within the rejection budget");
}

/// Odd ear decomposition: an odd cycle followed by odd open or closed ears. The
/// result is factor-critical; with every vertex weight theta and |rho| = 1 it is
/// theta-critical.
inline MultiGraph glue_candidate(const InstanceSpec& spec, InstanceRng& rng) {
  const std::size_t n = std::max<std::size_t>(spec.n, 1);
  MultiGraph g;
  auto rho = [&]() {
    if (!spec.weighted) return GaussianRational(1);
    static const GaussianRational units[] = {GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                                             -GaussianRational::i()};
    return units[rng.below(4)];
  };
  auto fresh = [&]() { return g.add_vertex(std::to_string(g.vertex_count() + 1), spec.theta); };
  std::size_t first = std::min<std::size_t>(n % 2 == 1 ? n : n - 1, 3 + 2 * rng.below(2));
  if (first < 3) first = 1;
  std::vector<std::size_t> ring;
  for (std::size_t k = 0; k < first; ++k) ring.push_back(fresh());
  for (std::size_t k = 0; k + 1 < ring.size(); ++k) g.add_edge(ring[k], ring[k + 1], rho());
  if (ring.size() >= 3) g.add_edge(ring.back(), ring.front(), rho());
  while (g.vertex_count() + 2 <= n) {
    // ear with 2t new interior vertices and 2t+1 edges
    std::size_t room = (n - g.vertex_count()) / 2;
    std::size_t t = 1 + rng.below(std::min<std::size_t>(room, 2));
    std::size_t a = rng.below(g.vertex_count());
    std::size_t b = rng.chance(Rational(1, 2)) ? a : rng.below(g.vertex_count());
    std::size_t prev = a;
    for (std::size_t k = 0; k < 2 * t; ++k) {
      std::size_t v = fresh();
      g.add_edge(prev, v, rho());
      prev = v;
    }
    g.add_edge(prev, b, rho());
  }
  // Extra chords inside an odd ear structure keep it factor-critical.
  if (g.vertex_count() >= 4 && rng.chance(Rational(1, 3))) {
    std::size_t a = rng.below(g.vertex_count()), b = rng.below(g.vertex_count());
    if (a != b) g.add_edge(a, b, rho());
  }
  return g;
}

}  // namespace detail

/// Deterministic in the seed. The glue model checks theta-criticality post hoc and
/// resamples within the rejection budget.
inline MultiGraph generate_instance(const InstanceSpec& spec) {
  require(spec.n <= limits().max_vertices, ErrorKind::GraphTooLarge, "instance size exceeds the vertex cap");
  detail::InstanceRng rng(spec.seed);
  switch (spec.model) {
    case GeneratorModel::Forest: return detail::forest_instance(spec, rng);
    case GeneratorModel::ErdosRenyi: return detail::erdos_renyi_instance(spec, rng);
    case GeneratorModel::Regular: return detail::regular_instance(spec, rng);
    case GeneratorModel::ThetaCriticalGlue: {
      const ThetaSpec theta = ThetaSpec::rational(spec.theta);
      for (std::size_t attempt = 0; attempt < spec.rejection_budget; ++attempt) {
        MultiGraph g = detail::glue_candidate(spec, rng);
        if (!is_connected(g)) continue;
        PolynomialCache cache(g);
        if (cache.multiplicity(PolyKind::Matching, cache.all(), theta) == 1 &&
            is_theta_critical(cache, cache.all(), theta))
          return g;
      }
      fail(ErrorKind::RejectionBudgetExceeded, "no theta-critical instance within the rejection budget");
    }
  }
  fail(ErrorKind::InputError, "unknown generator model");
}

}  // namespace cover_spectra
