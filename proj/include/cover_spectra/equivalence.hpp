#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cover_spectra/aomoto.hpp"
#include "cover_spectra/decide.hpp"
#include "cover_spectra/graph_polynomials.hpp"
#include "cover_spectra/multigraph.hpp"
#include "cover_spectra/theta.hpp"

namespace cover_spectra {

struct EquivalenceReport {
  ThetaSpec theta;
  bool c_aomoto = false;        // some theta-Aomoto subset (brute force)
  bool d_refined = false;       // maximal refined subset exists
  bool e_matching = false;      // root of mu(G - Gamma) for every 2-regular Gamma
  bool f_characteristic = false;  // root of phi(G - Gamma) for every 2-regular Gamma
  bool h_molecular = false;     // root of every packing coefficient of M
  bool g_probe = false;         // numeric and exact twisted samples (advisory)
  bool consistent = false;
  std::optional<TwoRegularWitness> e_witness;  // a Gamma with mu(G - Gamma)(theta) != 0
  std::optional<AomotoCertificate> certificate;
  std::vector<std::string> notes;
};

/// Caches everything that depends only on the graph so many theta values are cheap.
class EquivalenceVerifier {
 public:
  explicit EquivalenceVerifier(MultiGraph g, std::uint64_t seed = 1, std::size_t exact_grid = 16,
                               std::size_t float_samples = 4)
      : cache_(std::move(g)), seed_(seed), exact_grid_(exact_grid), float_samples_(float_samples) {
    const MultiGraph& gr = cache_.graph();
    cycles_ = enumerate_cycles(gr);
    for (const auto& packing : enumerate_packings(cycles_)) {
      VertexSet s = 0;
      for (auto k : packing) s |= cycles_[k].vertex_set();
      packings_.push_back({packing, s});
    }
    s_plus_ = spanning_forest(gr).s_plus;
  }

  PolynomialCache& cache() { return cache_; }
  const MultiGraph& graph() const { return cache_.graph(); }
  std::size_t packing_count() const { return packings_.size(); }

  EquivalenceReport verify(const ThetaSpec& theta) {
    EquivalenceReport r;
    r.theta = theta;
    const VertexSet all = cache_.all();
    const MultiGraph& g = cache_.graph();

    if (auto c = find_aomoto_bruteforce(cache_, all, theta)) {
      r.c_aomoto = true;
      r.certificate = *c;
    }
    if (auto d = maximal_refined_aomoto(cache_, all, theta)) {
      r.d_refined = true;
      r.certificate = *d;
    }

    r.e_matching = true;
    r.f_characteristic = true;
    for (const auto& [packing, support] : packings_) {
      if (r.e_matching && cache_.multiplicity(PolyKind::Matching, all & ~support, theta) == 0) {
        r.e_matching = false;
        TwoRegularWitness w;
        w.support = support;
        for (auto k : packing) w.edges.insert(w.edges.end(), cycles_[k].edges.begin(), cycles_[k].edges.end());
        r.e_witness = w;
      }
      if (r.f_characteristic && cache_.multiplicity(PolyKind::Characteristic, all & ~support, theta) == 0)
        r.f_characteristic = false;
      if (!r.e_matching && !r.f_characteristic) break;
    }

    r.h_molecular = molecular_condition(theta);
    r.g_probe = probe(theta);

    const bool exact = r.c_aomoto;
    r.consistent = r.d_refined == exact && r.e_matching == exact && r.f_characteristic == exact &&
                   r.h_molecular == exact && (!exact || r.g_probe);
    if (!r.consistent) {
      r.notes.push_back("conditions disagree on " + std::to_string(g.vertex_count()) + "-vertex graph at " +
                        theta.str());
    }
    return r;
  }

 private:
  struct Packing {
    std::vector<std::size_t> cycles;
    VertexSet support;
  };

  /// M is multilinear in the cycle weights with coefficient c_P * mu(G - P) on the
  /// monomial of packing P. Each coefficient is isolated by inclusion-exclusion over
  /// evaluations of M at 0/1 weight vectors supported on P.
  bool molecular_condition(const ThetaSpec& theta) {
    for (const auto& pk : packings_) {
      const std::size_t k = pk.cycles.size();
      Polynomial coefficient;
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        CycleWeightAssignment w;
        std::vector<CyclePath> chosen;
        for (std::size_t b = 0; b < k; ++b)
          if ((mask >> b) & 1U) {
            chosen.push_back(cycles_[pk.cycles[b]]);
            w[cycles_[pk.cycles[b]].edges] = Rational(1);
          }
        Polynomial value = molecular_polynomial(cache_, chosen, w);
        if ((k - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0)
          coefficient += value;
        else
          coefficient -= value;
      }
      if (coefficient.is_zero()) continue;
      if (multiplicity_at(coefficient, theta) == 0) return false;
    }
    return true;
  }

  const std::vector<Polynomial>& exact_twists() {
    if (twists_ready_) return twists_;
    twists_ready_ = true;
    const MultiGraph& g = cache_.graph();
    const std::size_t k = s_plus_.size();
    std::size_t full = 1;
    bool small = true;
    for (std::size_t s = 0; s < k && small; ++s) {
      full *= 4;
      if (full > exact_grid_) small = false;
    }
    std::mt19937_64 rng(seed_);
    std::vector<int> turns(g.edge_count(), 0);
    const std::size_t count = small ? full : exact_grid_;
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t code = t;
      for (std::size_t s = 0; s < k; ++s) {
        turns[s_plus_[s]] = small ? static_cast<int>(code % 4) : static_cast<int>(rng() % 4);
        code /= 4;
      }
      twists_.push_back(twisted_characteristic(g, turns));
    }
    for (std::size_t t = 0; t < float_samples_; ++t) {
      std::vector<double> angles(g.edge_count(), 0.0);
      for (auto e : s_plus_) angles[e] = std::uniform_real_distribution<double>(0.0, 2 * std::numbers::pi)(rng);
      float_spectra_.push_back(twisted_eigenvalues(g, angles));
    }
    return twists_;
  }

  /// Exact {1, i, -1, -i} phase grid plus random float phases (tolerance 1e-6).
  bool probe(const ThetaSpec& theta) {
    for (const auto& p : exact_twists())
      if (multiplicity_at(p, theta) == 0) return false;
    const double t = theta.approx();
    for (const auto& spectrum : float_spectra_) {
      double best = std::numeric_limits<double>::infinity();
      for (double ev : spectrum) best = std::min(best, std::abs(ev - t));
      if (best >= 1e-6) return false;
    }
    return true;
  }

  PolynomialCache cache_;
  std::uint64_t seed_;
  std::size_t exact_grid_;
  std::size_t float_samples_;
  std::vector<CyclePath> cycles_;
  std::vector<Packing> packings_;
  std::vector<std::size_t> s_plus_;
  bool twists_ready_ = false;
  std::vector<Polynomial> twists_;
  std::vector<std::vector<double>> float_spectra_;
};

inline EquivalenceReport verify_equivalences(const MultiGraph& g, const ThetaSpec& theta, std::uint64_t seed = 1) {
  EquivalenceVerifier v(g, seed);
  return v.verify(theta);
}

/// Every rational root of mu, every root of its rational quadratic factors, and
/// `non_roots` rationals that are not roots.
inline std::vector<ThetaSpec> theta_sample(const Polynomial& mu, std::size_t non_roots = 3) {
  std::vector<ThetaSpec> out;
  auto f = factor_low_degree(mu);
  for (const auto& r : f.rational_roots()) out.push_back(ThetaSpec::rational(r));
  for (const auto& q : f.quadratic)
    for (const auto& iv : isolate_real_roots(q.factor)) out.push_back(ThetaSpec::algebraic(q.factor, iv.lo, iv.hi));
  static const Rational candidates[] = {Rational(-3), Rational(1, 3), Rational(5, 2), Rational(-7, 4), Rational(0),
                                        Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                        Rational(-1, 2), Rational(3), Rational(7, 3), Rational(-5, 3)};
  std::size_t added = 0;
  for (const auto& c : candidates) {
    if (added == non_roots) break;
    if (!mu(c).is_zero()) {
      out.push_back(ThetaSpec::rational(c));
      ++added;
    }
  }
  return out;
}

}  // namespace cover_spectra
