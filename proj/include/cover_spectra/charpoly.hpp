#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cover_spectra/error.hpp"
#include "cover_spectra/polynomial.hpp"
#include "cover_spectra/rational.hpp"

namespace cover_spectra {

using HermitianMatrix = std::vector<std::vector<GaussianRational>>;

namespace detail {

struct GaussInt {
  mpz_class re;
  mpz_class im;
};

/// Common denominator d with d*M integral, and the scaled Gaussian-integer matrix.
inline std::vector<std::vector<GaussInt>> scale_to_integers(const HermitianMatrix& m, mpz_class& d) {
  d = 1;
  for (const auto& row : m)
    for (const auto& z : row) {
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), z.re().denominator().get_mpz_t());
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), z.im().denominator().get_mpz_t());
    }
  std::vector<std::vector<GaussInt>> b(m.size(), std::vector<GaussInt>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto& z = m[i][j];
      b[i][j].re = z.re().numerator() * (d / z.re().denominator());
      b[i][j].im = z.im().numerator() * (d / z.im().denominator());
    }
  return b;
}

/// Undo the scaling: coefficient of x^k is c_k / d^(n-k).
inline Polynomial unscale(const std::vector<mpz_class>& c, const mpz_class& d) {
  const std::size_t n = c.size() - 1;
  std::vector<Rational> out(c.size());
  mpz_class power = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    out[k] = Rational(c[k], power);
    power *= d;
  }
  return Polynomial(std::move(out));
}

// -- arithmetic modulo a 62-bit prime

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

inline mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

/// Primes p = 1 mod 4 below 2^62, descending, each with a square root of -1.
struct ModPrime {
  std::uint64_t p;
  std::uint64_t sqrt_minus_one;
};

inline const std::vector<ModPrime>& gaussian_primes(std::size_t count) {
  static std::vector<ModPrime> primes;
  mpz_class cand = (mpz_class(1) << 62) - 3;  // = 1 mod 4
  if (!primes.empty()) cand = to_mpz(primes.back().p) - 4;
  while (primes.size() < count) {
    if (mpz_probab_prime_p(cand.get_mpz_t(), 30)) {
      std::uint64_t p = cand.get_ui();
      for (std::uint64_t a = 2;; ++a) {
        std::uint64_t s = pow_mod(a, (p - 1) / 4, p);
        if (mul_mod(s, s, p) == p - 1) {
          primes.push_back({p, s});
          break;
        }
      }
    }
    cand -= 4;
  }
  return primes;
}

/// Characteristic polynomial of a square matrix over Z/p via Hessenberg reduction.
inline std::vector<std::uint64_t> charpoly_mod(std::vector<std::vector<std::uint64_t>> h, std::uint64_t p) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    std::uint64_t inv = inv_mod(h[j + 1][j], p);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h[k][j] == 0) continue;
      std::uint64_t u = mul_mod(h[k][j], inv, p);
      for (std::size_t c = 0; c < n; ++c) h[k][c] = sub_mod(h[k][c], mul_mod(u, h[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = add_mod(h[r][j + 1], mul_mod(u, h[r][k], p), p);
    }
  }
  // p_m(x) = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod subdiagonal) p_{m-i-1}
  std::vector<std::vector<std::uint64_t>> polys{{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    std::vector<std::uint64_t> cur(m + 1, 0);
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = add_mod(cur[k + 1], prev[k], p);
      cur[k] = sub_mod(cur[k], mul_mod(h[m - 1][m - 1], prev[k], p), p);
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, h[m - i][m - i - 1], p);
      std::uint64_t coef = mul_mod(h[m - i - 1][m - 1], t, p);
      if (coef == 0) continue;
      const auto& q = polys[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] = sub_mod(cur[k], mul_mod(coef, q[k], p), p);
    }
    polys.push_back(std::move(cur));
  }
  return polys[n];
}

}  // namespace detail

/// det(xI - M) by Faddeev-LeVerrier over Gaussian integers after scaling.
inline Polynomial charpoly_faddeev(const HermitianMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(Rational(1));
  mpz_class d;
  auto b = detail::scale_to_integers(m, d);
  using detail::GaussInt;
  std::vector<std::vector<GaussInt>> mk(n, std::vector<GaussInt>(n));
  for (std::size_t i = 0; i < n; ++i) mk[i][i].re = 1;
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<GaussInt>> prod(n, std::vector<GaussInt>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        GaussInt acc;
        for (std::size_t l = 0; l < n; ++l) {
          const GaussInt& x = b[i][l];
          const GaussInt& y = mk[l][j];
          if ((x.re == 0 && x.im == 0) || (y.re == 0 && y.im == 0)) continue;
          acc.re += x.re * y.re - x.im * y.im;
          acc.im += x.re * y.im + x.im * y.re;
        }
        prod[i][j] = std::move(acc);
      }
    GaussInt trace;
    for (std::size_t i = 0; i < n; ++i) {
      trace.re += prod[i][i].re;
      trace.im += prod[i][i].im;
    }
    require(trace.im == 0, ErrorKind::NonVanishingImaginaryPart, "Faddeev trace has an imaginary part");
    mpz_class kk = static_cast<unsigned long>(k);
    require(mpz_divisible_p(trace.re.get_mpz_t(), kk.get_mpz_t()) != 0, ErrorKind::InternalInvariant,
            "Faddeev trace not divisible by k");
    c[n - k] = -trace.re / kk;
    for (std::size_t i = 0; i < n; ++i) prod[i][i].re += c[n - k];
    std::swap(mk, prod);
  }
  return detail::unscale(c, d);
}

/// det(xI - M) modulo many primes p = 1 mod 4 (i maps to sqrt(-1)), recombined by CRT.
inline Polynomial charpoly_multimodular(const HermitianMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(Rational(1));
  mpz_class d;
  auto b = detail::scale_to_integers(m, d);
  // |coefficient| <= C(n,k) R^(n-k) with R the largest absolute row sum.
  double log_r = 0.0;
  for (const auto& row : b) {
    mpz_class sum = 0;
    for (const auto& z : row) sum += mpz_abs(z.re) + mpz_abs(z.im);
    double bits = sum == 0 ? 0.0 : static_cast<double>(mpz_sizeinbase(sum.get_mpz_t(), 2));
    log_r = std::max(log_r, bits);
  }
  double bound_bits = static_cast<double>(n) * (1.0 + log_r) + 2.0;
  std::size_t prime_count = static_cast<std::size_t>(bound_bits / 61.0) + 2;
  const auto& primes = detail::gaussian_primes(prime_count);

  std::vector<mpz_class> acc(n + 1, 0);
  mpz_class modulus = 1;
  for (std::size_t t = 0; t < prime_count; ++t) {
    const auto [p, s] = primes[t];
    std::vector<std::vector<std::uint64_t>> bm(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        bm[i][j] = detail::add_mod(detail::reduce(b[i][j].re, p),
                                   detail::mul_mod(detail::reduce(b[i][j].im, p), s, p), p);
    auto cp = detail::charpoly_mod(std::move(bm), p);
    mpz_class pz = detail::to_mpz(p);
    mpz_class inv;
    mpz_class mod_p = modulus % pz;
    mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t k = 0; k <= n; ++k) {
      mpz_class diff = detail::to_mpz(cp[k]) - acc[k];
      mpz_class step;
      mpz_fdiv_r(step.get_mpz_t(), mpz_class(diff * inv).get_mpz_t(), pz.get_mpz_t());
      acc[k] += modulus * step;
    }
    modulus *= pz;
  }
  mpz_class half = modulus / 2;
  for (auto& c : acc)
    if (c > half) c -= modulus;
  return detail::unscale(acc, d);
}

/// Exact characteristic polynomial; Faddeev for small matrices, multimodular otherwise.
inline Polynomial charpoly(const HermitianMatrix& m) {
  return m.size() <= 20 ? charpoly_faddeev(m) : charpoly_multimodular(m);
}

}  // namespace cover_spectra
