#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cover_spectra/error.hpp"
#include "cover_spectra/rational.hpp"

namespace cover_spectra {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending order with no trailing zeros. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Rational c) { return Polynomial(std::vector<Rational>{std::move(c)}); }
  static Polynomial x() { return Polynomial{Rational(0), Rational(1)}; }
  static Polynomial monomial(Rational c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }
  /// x - root
  static Polynomial linear_factor(const Rational& root) { return Polynomial{-root, Rational(1)}; }

  static Polynomial from_integers(const std::vector<mpz_class>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  const Rational& leading() const {
    require(!is_zero(), ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Rational operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  int sign_at(const Rational& at) const { return (*this)(at).sign(); }

  double eval(double at) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->to_double();
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    Rational inv = leading().inverse();
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c *= inv;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const { return *this * Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Compact form in descending powers, e.g. "x^3-3*x-2".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      bool negative = c.sign() < 0;
      Rational mag = c.abs();
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? "-" : "+";
      }
      bool unit = mag == Rational(1);
      if (k == 0) {
        out += mag.str();
      } else {
        if (!unit) out += mag.str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require(!b.is_zero(), ErrorKind::DivideByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  Rational inv_lead = b.leading().inverse();
  const std::size_t bd = bc.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational factor = rem[k + bd] * inv_lead;
    if (factor.is_zero()) continue;
    quot[k] = factor;
    for (std::size_t j = 0; j <= bd; ++j) rem[k + j] -= factor * bc[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

/// Exact quotient p / q; fails with NotDivisible when q does not divide p.
inline Polynomial poly_divexact(const Polynomial& p, const Polynomial& q) {
  require(!q.is_zero(), ErrorKind::DivideByZero, "poly_divexact by the zero polynomial");
  auto [quot, rem] = divmod(p, q);
  require(rem.is_zero(), ErrorKind::NotDivisible, "(" + q.str() + ") does not divide (" + p.str() + ")");
  return quot;
}

inline bool divides(const Polynomial& q, const Polynomial& p) { return (p % q).is_zero(); }

/// Monic greatest common divisor (zero when both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

inline Polynomial squarefree_part(const Polynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroPolynomial, "squarefree part of zero");
  if (p.degree() <= 0) return Polynomial::constant(Rational(1));
  return poly_divexact(p, gcd(p, p.derivative())).monic();
}

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(Rational(1));
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

// ---------------------------------------------------------------------------
// Integer helpers

inline mpz_class mpz_abs(const mpz_class& z) { return z < 0 ? mpz_class(-z) : z; }

/// Content-free integer coefficients with positive leading coefficient.
inline std::vector<mpz_class> primitive_integer_coefficients(const Polynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroPolynomial, "primitive form of zero");
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.numerator() * (lcm_den / c.denominator());
    out.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

/// Positive divisors of |n| by trial division (n != 0).
inline std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  mpz_class m = mpz_abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline mpz_class round_nearest(const Rational& q) {
  mpz_class two_num = 2 * q.numerator() + q.denominator();
  mpz_class den = 2 * q.denominator();
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), two_num.get_mpz_t(), den.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// Sturm sequences and real roots

/// Strict bound on the absolute value of every complex root.
inline Rational root_bound(const Polynomial& p) {
  require(p.degree() >= 0, ErrorKind::ZeroPolynomial, "root bound of zero");
  Rational max_ratio(0);
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = (p.coeffs()[static_cast<std::size_t>(k)] / lead).abs();
    if (r > max_ratio) max_ratio = r;
  }
  return max_ratio + Rational(1);
}

inline std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroPolynomial, "Sturm sequence of zero");
  std::vector<Polynomial> seq{p};
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    Polynomial r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    // Negate and rescale by a positive factor; only signs matter.
    r *= Rational(-1) / r.leading().abs();
    seq.push_back(std::move(r));
  }
  return seq;
}

inline int sign_variations(const std::vector<Polynomial>& seq, const Rational& at) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Number of distinct real roots in the open interval (lo, hi).
inline int root_count_in_interval(const Polynomial& p, const Rational& lo, const Rational& hi) {
  require(!p.is_zero(), ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  require(p.sign_at(lo) != 0, ErrorKind::EndpointIsRoot, "lower endpoint " + lo.str() + " is a root");
  require(p.sign_at(hi) != 0, ErrorKind::EndpointIsRoot, "upper endpoint " + hi.str() + " is a root");
  if (!(lo < hi)) return 0;
  auto seq = sturm_sequence(p);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

inline int distinct_real_root_count(const Polynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  if (p.degree() <= 0) return 0;
  Rational b = root_bound(p);
  return root_count_in_interval(p, -b, b);
}

/// Real roots counted with multiplicity: sum over the gcd chain p, gcd(p,p'), ...
inline int real_root_count_with_multiplicity(const Polynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  int total = 0;
  Polynomial g = p;
  while (g.degree() > 0) {
    total += distinct_real_root_count(g);
    g = gcd(g, g.derivative());
  }
  return total;
}

/// Isolating interval for one real root. Endpoints are never roots unless
/// lo == hi, in which case the root is exactly lo.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Disjoint isolating intervals for the distinct real roots, sorted ascending.
inline std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroPolynomial, "root isolation of zero");
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  Polynomial sq = squarefree_part(p);
  auto seq = sturm_sequence(sq);
  Rational b = root_bound(sq);
  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-b, b, sign_variations(seq, -b) - sign_variations(seq, b)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    // Split at a non-root point; rational roots are finite so one of these works.
    Rational split;
    for (long k = 1;; ++k) {
      split = cur.lo + (cur.hi - cur.lo) * Rational(k, 2 * k + 1) + (cur.hi - cur.lo) * Rational(1, 4);
      if (sq.sign_at(split) != 0) break;
    }
    int left = sign_variations(seq, cur.lo) - sign_variations(seq, split);
    stack.push_back({split, cur.hi, cur.count - left});
    stack.push_back({cur.lo, split, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

/// Bisects an isolating interval of a squarefree polynomial down to the given width.
inline RootInterval refine_root(const Polynomial& squarefree, RootInterval iv, const Rational& width) {
  if (iv.exact()) return iv;
  int s_lo = squarefree.sign_at(iv.lo);
  while (iv.hi - iv.lo > width) {
    Rational mid = iv.midpoint();
    int s = squarefree.sign_at(mid);
    if (s == 0) return {mid, mid};
    if (s == s_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

// ---------------------------------------------------------------------------
// Irreducibility over Q

namespace detail {

inline mpz_class eval_integer(const std::vector<mpz_class>& f, const mpz_class& at) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * at + *it;
  return acc;
}

inline bool has_rational_root(const std::vector<mpz_class>& f) {
  if (f.front() == 0) return true;
  Polynomial p = Polynomial::from_integers(f);
  for (const auto& num : positive_divisors(f.front())) {
    for (const auto& den : positive_divisors(f.back())) {
      for (int s : {1, -1}) {
        if (p(Rational(mpz_class(s * num), den)).is_zero()) return true;
      }
    }
  }
  return false;
}

/// Kronecker's method: is there an integer factor of exactly degree d?
inline bool has_factor_of_degree(const std::vector<mpz_class>& f, int d) {
  const Polynomial fp = Polynomial::from_integers(f);
  const int n = static_cast<int>(f.size()) - 1;
  struct Sample {
    mpz_class at;
    std::vector<mpz_class> divisors;
  };
  std::vector<Sample> samples;
  for (long k = 0; k <= 4L * n + 4; ++k) {
    mpz_class at = (k % 2 == 0) ? mpz_class(k / 2) : mpz_class(-(k + 1) / 2);
    mpz_class v = eval_integer(f, at);
    if (v == 0) return true;  // rational root, so reducible for n >= 2
    samples.push_back({at, positive_divisors(v)});
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& a, const Sample& b) { return a.divisors.size() < b.divisors.size(); });
  samples.resize(static_cast<std::size_t>(d + 1));

  std::size_t budget = 20'000'000;
  std::vector<mpz_class> values(samples.size());
  // Lagrange interpolation through (at_k, values_k), then test divisibility.
  auto test_candidate = [&]() {
    Polynomial q;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      Polynomial basis = Polynomial::constant(Rational(values[k]));
      for (std::size_t m = 0; m < samples.size(); ++m) {
        if (m == k) continue;
        basis *= Polynomial{Rational(-samples[m].at), Rational(1)};
        basis *= Rational(1) / Rational(samples[k].at - samples[m].at);
      }
      q += basis;
    }
    if (q.degree() != d) return false;
    for (const auto& c : q.coeffs())
      if (!c.is_integer()) return false;
    return divides(q, fp);
  };
  auto recurse = [&](auto&& self, std::size_t k) -> bool {
    if (k == samples.size()) {
      require(budget-- > 0, ErrorKind::DegreeTooLarge, "irreducibility search budget exhausted");
      return test_candidate();
    }
    for (const auto& div : samples[k].divisors) {
      for (int s : {1, -1}) {
        if (k == 0 && s < 0) continue;  // q and -q are the same factor
        values[k] = s * div;
        if (self(self, k + 1)) return true;
      }
    }
    return false;
  };
  return recurse(recurse, 0);
}

}  // namespace detail

/// Irreducibility over Q for nonconstant polynomials of degree at most 8.
inline bool irreducibility_check(const Polynomial& p) {
  require(p.degree() >= 1, ErrorKind::PreconditionViolated, "irreducibility of a constant polynomial");
  require(p.degree() <= 8, ErrorKind::DegreeTooLarge,
          "irreducibility is supported up to degree 8, got " + std::to_string(p.degree()));
  auto f = primitive_integer_coefficients(p);
  const int n = p.degree();
  if (n == 1) return true;
  if (detail::has_rational_root(f)) return false;
  if (n <= 3) return true;
  for (int d = 2; d <= n / 2; ++d)
    if (detail::has_factor_of_degree(f, d)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Floating-point polynomials (probe only)

struct FloatPolynomial {
  std::vector<double> coeffs;  // ascending

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  double operator()(double at) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  static FloatPolynomial from_roots(const std::vector<double>& roots) {
    FloatPolynomial p{{1.0}};
    for (double r : roots) {
      std::vector<double> next(p.coeffs.size() + 1, 0.0);
      for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        next[k + 1] += p.coeffs[k];
        next[k] -= r * p.coeffs[k];
      }
      p.coeffs = std::move(next);
    }
    return p;
  }
};

// ---------------------------------------------------------------------------
// Extraction of rational-linear and quadratic factors

struct PolynomialFactor {
  Polynomial factor;  // monic
  int multiplicity = 0;
};

struct LowDegreeFactorization {
  Rational leading{1};
  std::vector<PolynomialFactor> linear;     // sorted by root, ascending
  std::vector<PolynomialFactor> quadratic;  // irreducible over Q
  Polynomial rest;                          // monic leftover

  bool complete() const { return rest.degree() == 0; }

  std::vector<Rational> rational_roots() const {
    std::vector<Rational> roots;
    for (const auto& f : linear) roots.push_back(-f.factor.coeff(0));
    return roots;
  }

  std::string str() const {
    std::string out;
    auto append = [&](const Polynomial& f, int mult) {
      if (!out.empty()) out += "*";
      out += "(" + f.str() + ")";
      if (mult > 1) out += "^" + std::to_string(mult);
    };
    for (const auto& f : linear) append(f.factor, f.multiplicity);
    for (const auto& f : quadratic) append(f.factor, f.multiplicity);
    if (rest.degree() > 0) append(rest, 1);
    if (leading != Rational(1) || out.empty()) out = leading.str() + (out.empty() ? "" : "*" + out);
    return out;
  }
};

/// Splits off every rational root and every irreducible quadratic factor with
/// real roots. Candidates come from refined root intervals; every factor is
/// confirmed by exact division.
inline LowDegreeFactorization factor_low_degree(const Polynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroPolynomial, "factorization of zero");
  LowDegreeFactorization out;
  out.leading = p.leading();
  Polynomial work = p.monic();
  if (work.degree() <= 0) {
    out.rest = work;
    return out;
  }
  auto strip = [&](const Polynomial& factor) {
    int mult = 0;
    while (work.degree() >= factor.degree()) {
      auto [q, r] = divmod(work, factor);
      if (!r.is_zero()) break;
      work = std::move(q);
      ++mult;
    }
    return mult;
  };

  Polynomial sq = squarefree_part(work);
  auto ints = primitive_integer_coefficients(sq);
  const mpz_class lead = ints.back();
  const auto lead_divisors = positive_divisors(lead);
  Rational bound = root_bound(sq);
  auto intervals = isolate_real_roots(sq);

  std::vector<bool> used(intervals.size(), false);
  // Rational roots have denominators dividing lead; they are at least 1/lead^2 apart.
  Rational width = Rational(1) / Rational(mpz_class(4 * lead * lead));
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    RootInterval iv = refine_root(sq, intervals[k], width);
    intervals[k] = iv;
    std::optional<Rational> root;
    if (iv.exact()) {
      root = iv.lo;
    } else {
      for (const auto& den : lead_divisors) {
        Rational cand(round_nearest(iv.midpoint() * Rational(den)), den);
        if (sq(cand).is_zero()) {
          root = cand;
          break;
        }
      }
    }
    if (!root) continue;
    used[k] = true;
    Polynomial f = Polynomial::linear_factor(*root);
    out.linear.push_back({f, strip(f)});
  }

  // Quadratic factors c*x^2 - s*x + t with c | lead.
  Rational fine = Rational(1) / (Rational(mpz_class(16 * lead)) * (bound + Rational(1)) * (bound + Rational(1)));
  for (std::size_t a = 0; a < intervals.size(); ++a) {
    if (used[a]) continue;
    intervals[a] = refine_root(sq, intervals[a], fine);
  }
  for (std::size_t a = 0; a < intervals.size(); ++a) {
    if (used[a]) continue;
    for (std::size_t b = a + 1; b < intervals.size() && !used[a]; ++b) {
      if (used[b]) continue;
      Rational s = intervals[a].midpoint() + intervals[b].midpoint();
      Rational t = intervals[a].midpoint() * intervals[b].midpoint();
      for (const auto& c : lead_divisors) {
        Rational rs(round_nearest(s * Rational(c)), c);
        Rational rt(round_nearest(t * Rational(c)), c);
        Polynomial q{rt, -rs, Rational(1)};
        if (!divides(q, sq)) continue;
        used[a] = used[b] = true;
        out.quadratic.push_back({q, strip(q)});
        break;
      }
    }
  }
  out.rest = work;
  return out;
}

}  // namespace cover_spectra
