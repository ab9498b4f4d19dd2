#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cover_spectra/error.hpp"
#include "cover_spectra/polynomial.hpp"
#include "cover_spectra/rational.hpp"

namespace cover_spectra {

/// A real algebraic number: either an exact rational, or the unique root of an
/// irreducible integer polynomial inside an isolating rational interval.
class ThetaSpec {
 public:
  ThetaSpec() = default;

  static ThetaSpec rational(Rational value) {
    ThetaSpec t;
    t.value_ = std::move(value);
    t.minpoly_ = Polynomial::linear_factor(t.value_);
    t.lo_ = t.value_;
    t.hi_ = t.value_;
    return t;
  }

  /// Validates irreducibility and isolation. Degree-one inputs collapse to a rational.
  static ThetaSpec algebraic(const Polynomial& minpoly, const Rational& lo, const Rational& hi) {
    require(minpoly.degree() >= 1, ErrorKind::InputError, "minimal polynomial must be nonconstant");
    require(lo < hi, ErrorKind::InputError, "isolating interval needs lo < hi");
    Polynomial prim = Polynomial::from_integers(primitive_integer_coefficients(minpoly));
    require(prim.sign_at(lo) != 0 && prim.sign_at(hi) != 0, ErrorKind::InputError,
            "interval endpoints must not be roots of " + prim.str());
    require(root_count_in_interval(prim, lo, hi) == 1, ErrorKind::InputError,
            "interval (" + lo.str() + "," + hi.str() + ") must isolate exactly one root of " + prim.str());
    if (prim.degree() == 1) return rational(-prim.coeff(0) / prim.coeff(1));
    require(irreducibility_check(prim), ErrorKind::InputError, prim.str() + " is reducible over Q");
    ThetaSpec t;
    t.algebraic_ = true;
    t.minpoly_ = prim;
    t.lo_ = lo;
    t.hi_ = hi;
    return t;
  }

  /// Accepts "p/q" or "minpoly:c0,c1,...:lo,hi" (ascending integer coefficients).
  static ThetaSpec parse(const std::string& text) {
    const std::string prefix = "minpoly:";
    if (text.rfind(prefix, 0) != 0) return rational(Rational::parse(text));
    std::string body = text.substr(prefix.size());
    auto colon = body.find(':');
    require(colon != std::string::npos, ErrorKind::InputError, "expected minpoly:c0,c1,...:lo,hi");
    auto split = [](const std::string& s) {
      std::vector<std::string> parts;
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ',')) parts.push_back(item);
      return parts;
    };
    std::vector<Rational> coeffs;
    for (const auto& c : split(body.substr(0, colon))) {
      Rational q = Rational::parse(c);
      require(q.is_integer(), ErrorKind::InputError, "minpoly coefficients must be integers");
      coeffs.push_back(q);
    }
    auto bounds = split(body.substr(colon + 1));
    require(bounds.size() == 2, ErrorKind::InputError, "expected interval lo,hi");
    return algebraic(Polynomial(coeffs), Rational::parse(bounds[0]), Rational::parse(bounds[1]));
  }

  bool is_rational() const { return !algebraic_; }

  const Rational& value() const {
    require(!algebraic_, ErrorKind::FiniteValueUnavailable, "theta " + str() + " is not rational");
    return value_;
  }

  /// For rational theta this is x - theta.
  const Polynomial& minpoly() const { return minpoly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  double approx() const {
    if (!algebraic_) return value_.to_double();
    RootInterval iv = refine_root(minpoly_, {lo_, hi_}, Rational(1, 1L << 50));
    return iv.midpoint().to_double();
  }

  std::string str() const {
    if (!algebraic_) return value_.str();
    std::string s = "minpoly:";
    for (std::size_t k = 0; k < minpoly_.coeffs().size(); ++k) {
      if (k) s += ",";
      s += minpoly_.coeffs()[k].str();
    }
    return s + ":" + lo_.str() + "," + hi_.str();
  }

  friend bool operator==(const ThetaSpec& a, const ThetaSpec& b) {
    if (a.algebraic_ != b.algebraic_) return false;
    if (!a.algebraic_) return a.value_ == b.value_;
    if (!(a.minpoly_ == b.minpoly_)) return false;
    // Same root iff the intervals overlap in a part containing it.
    Rational lo = a.lo_ > b.lo_ ? a.lo_ : b.lo_;
    Rational hi = a.hi_ < b.hi_ ? a.hi_ : b.hi_;
    if (!(lo < hi)) return false;
    return root_count_in_interval(a.minpoly_, lo, hi) == 1;
  }

 private:
  bool algebraic_ = false;
  Rational value_;
  Polynomial minpoly_;
  Rational lo_;
  Rational hi_;
};

/// Multiplicity of theta as a root of p.
inline int multiplicity_at(const Polynomial& p, const ThetaSpec& theta) {
  require(!p.is_zero(), ErrorKind::ZeroPolynomial, "multiplicity of a root of the zero polynomial");
  if (theta.is_rational()) {
    // Horner deflation by (x - theta).
    const Rational& t = theta.value();
    std::vector<Rational> c = p.coeffs();
    int mult = 0;
    while (c.size() > 1) {
      std::vector<Rational> q(c.size() - 1);
      Rational acc(0);
      for (std::size_t k = c.size(); k-- > 1;) {
        acc = acc * t + c[k];
        q[k - 1] = acc;
      }
      if (!(acc * t + c[0]).is_zero()) break;
      c = std::move(q);
      ++mult;
    }
    return mult;
  }
  Polynomial work = p;
  int mult = 0;
  while (work.degree() >= theta.minpoly().degree()) {
    auto [q, r] = divmod(work, theta.minpoly());
    if (!r.is_zero()) break;
    work = std::move(q);
    ++mult;
  }
  return mult;
}

inline bool is_root(const Polynomial& p, const ThetaSpec& theta) { return multiplicity_at(p, theta) > 0; }

}  // namespace cover_spectra
