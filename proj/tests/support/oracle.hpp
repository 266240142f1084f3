// Independent reference values built on GMP. Nothing here touches the library's
// arithmetic, so agreement is evidence rather than tautology.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "hiprec/big_fixed.hpp"

namespace oracle {

inline mpz_class pow10(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

inline mpz_class to_mpz(const piapprox::hiprec::BigInt& x) { return mpz_class(x.to_string()); }

inline mpq_class to_mpq(const piapprox::hiprec::BigFixed& x) {
  mpq_class q(to_mpz(x.significand()), pow10(static_cast<unsigned>(x.scale())));
  q.canonicalize();
  return q;
}

// round_half_even(num / den) for den > 0.
inline mpz_class div_half_even(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int c = cmp(2 * r, den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return q;
}

// Decimal text of a scaled integer: sig * 10^-dp.
inline std::string scaled_text(const mpz_class& sig, int dp) {
  std::string digits = mpz_class(abs(sig)).get_str();
  if (digits.size() <= static_cast<std::size_t>(dp)) digits.insert(0, static_cast<std::size_t>(dp) + 1 - digits.size(), '0');
  if (dp > 0) digits.insert(digits.size() - static_cast<std::size_t>(dp), 1, '.');
  return sgn(sig) < 0 ? "-" + digits : digits;
}

inline std::string round_text(const mpq_class& q, int dp) {
  return scaled_text(div_half_even(q.get_num() * pow10(static_cast<unsigned>(dp)), q.get_den()), dp);
}

inline mpq_class wallis(std::uint64_t n) {
  mpq_class p(2);
  for (std::uint64_t k = 1; k <= n; ++k) {
    const mpz_class four_k2 = mpz_class(4) * k * k;
    p *= mpq_class(four_k2, four_k2 - 1);
  }
  p.canonicalize();
  return p;
}

inline mpq_class leibniz(std::uint64_t n) {
  mpq_class s(0);
  for (std::uint64_t k = 0; k <= n; ++k) {
    mpq_class term(k % 2 == 0 ? 4 : -4, 2 * k + 1);
    term.canonicalize();
    s += term;
  }
  return s;
}

inline mpz_class factorial(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// t_k = (2k)! / (2^(2k) (k!)^2 (2k+1)) * (1/2)^(2k+1)
inline mpq_class arcsine_term(unsigned long k) {
  const mpz_class fk = factorial(k);
  mpz_class den = fk * fk * (2 * k + 1);
  den <<= 4 * k + 1;
  mpq_class t(factorial(2 * k), den);
  t.canonicalize();
  return t;
}

inline mpq_class newton(unsigned long n) {
  mpq_class s(0);
  for (unsigned long k = 0; k <= n; ++k) s += arcsine_term(k);
  return 6 * s;
}

// 4 / (1 + 1^2/(2 + 3^2/(2 + ... (2d-1)^2/2))), evaluated from the bottom up.
inline mpq_class euler_cf(unsigned long d) {
  mpq_class tail(0);
  for (unsigned long k = d; k >= 2; --k) {
    const mpz_class a = mpz_class(2 * k - 1) * (2 * k - 1);
    tail = mpq_class(a) / (2 + tail);
  }
  // Level 1 has partial numerator 1^2 over b_0 = 1.
  const mpq_class k1 = d >= 1 ? mpq_class(1) / (2 + tail) : mpq_class(0);
  mpq_class v = mpq_class(4) / (1 + k1);
  v.canonicalize();
  return v;
}

// 2^(n+1) sqrt(2 - r_n) with r_0 = 0, r_m = sqrt(2 + r_(m-1)). Value rounded to dp, from nested radicals carried on scaled integers with
// 2n + 40 extra digits.
inline std::string viete(unsigned long n, int dp) {
  const unsigned p = static_cast<unsigned>(dp) + 2 * static_cast<unsigned>(n) + 40;
  const mpz_class one = pow10(p);
  mpz_class r = 0;  // r_0
  for (unsigned long m = 1; m <= n; ++m) {
    mpz_class radicand = (2 * one + r) * one;
    mpz_sqrt(r.get_mpz_t(), radicand.get_mpz_t());
  }
  mpz_class inner = (2 * one - r) * one;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), inner.get_mpz_t());
  mpz_class value = root << (n + 1);
  return scaled_text(div_half_even(value, pow10(p - static_cast<unsigned>(dp))), dp);
}

inline mpq_class zeta_sum(unsigned s, std::uint64_t n) {
  mpq_class sum(0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), k, s);
    sum += mpq_class(1, d);
  }
  sum.canonicalize();
  return sum;
}

// (c * sum)^(1/s) rounded to dp via an integer root with 30 extra digits.
inline std::string zeta(unsigned s, unsigned c, std::uint64_t n, int dp) {
  const unsigned p = static_cast<unsigned>(dp) + 30;
  const mpq_class x = c * zeta_sum(s, n);
  const mpz_class scaled = x.get_num() * pow10(s * p) / x.get_den();
  mpz_class root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), s);
  return scaled_text(div_half_even(root, pow10(p - static_cast<unsigned>(dp))), dp);
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239), integer arithmetic at `digits` + 10.
inline mpz_class pi_scaled(unsigned digits) {
  const unsigned p = digits + 10;
  const mpz_class one = pow10(p);
  auto atan_inv = [&](unsigned long x) {
    mpz_class sum = 0;
    mpz_class power = one / x;  // one / x^(2k+1)
    const unsigned long x2 = x * x;
    for (unsigned long k = 0; power != 0; ++k) {
      const mpz_class term = power / (2 * k + 1);
      if (k % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
      power /= x2;
    }
    return sum;
  };
  const mpz_class pi = 16 * atan_inv(5) - 4 * atan_inv(239);
  return pi / pow10(10);
}

inline mpq_class pi(unsigned digits) { return mpq_class(pi_scaled(digits), pow10(digits)); }

// Random decimal digit string of the given length, no leading zero unless length 1.
inline std::string random_digits(std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> digit(0, 9);
  std::string s;
  for (int i = 0; i < length; ++i) {
    int d = digit(rng);
    if (i == 0 && length > 1 && d == 0) d = 1;
    s.push_back(static_cast<char>('0' + d));
  }
  return s;
}

}  // namespace oracle
