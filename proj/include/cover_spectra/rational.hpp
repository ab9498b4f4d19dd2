#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "cover_spectra/error.hpp"

namespace cover_spectra {

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }
  // GMP expression templates (e.g. -z or a*b) evaluate here.
  template <typename T, typename U>
  explicit Rational(const __gmp_expr<T, U>& expr) : value_(expr) {
    value_.canonicalize();
  }

  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    require(denominator != 0, ErrorKind::DivideByZero, "rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  Rational(long numerator, long denominator)
      : Rational(mpz_class(numerator), mpz_class(denominator)) {}

  /// Parses "p/q", "p", or a signed variant of either.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto strip = [](std::string& t) {
      while (!t.empty() && (t.front() == ' ' || t.front() == '+')) t.erase(t.begin());
      while (!t.empty() && t.back() == ' ') t.pop_back();
    };
    strip(s);
    require(!s.empty(), ErrorKind::InputError, "empty rational literal");
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
      mpz_class z;
      std::string t = part;
      strip(t);
      bool ok = !t.empty() && z.set_str(t, 10) == 0;
      require(ok, ErrorKind::InputError, "malformed rational literal '" + std::string(text) + "'");
      return z;
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    mpz_class num = parse_int(s.substr(0, slash));
    mpz_class den = parse_int(s.substr(slash + 1));
    require(den != 0, ErrorKind::InputError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  std::string str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  Rational inverse() const {
    require(!is_zero(), ErrorKind::DivideByZero, "inverse of zero");
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), ErrorKind::DivideByZero, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  mpq_class value_;
};

/// Integer power of a rational, exponent >= 0.
inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

/// Gaussian rational re + i*im; carries arc weights.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : re_(re) {}                  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    Rational n = norm2();
    require(!n.is_zero(), ErrorKind::DivideByZero, "inverse of zero");
    return {re_ / n, -im_ / n};
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? std::string() : re_.str();
    if (im_.sign() > 0 && !s.empty()) s += "+";
    return s + im_.str() + "i";
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
  }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace cover_spectra

template <>
struct std::hash<cover_spectra::Rational> {
  std::size_t operator()(const cover_spectra::Rational& q) const noexcept {
    return std::hash<std::string>{}(q.str());
  }
};
