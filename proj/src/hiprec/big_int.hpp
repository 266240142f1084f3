#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace piapprox::hiprec {

/// Arbitrary-size signed integer stored as sign + magnitude in base 10^9 limbs.
///
/// The decimal base keeps scaling by powers of ten cheap, which is the hot path
/// for the fixed-point layer built on top. Zero has an empty magnitude and is
/// never negative.
class BigInt {
 public:
  using Limb = std::uint32_t;
  static constexpr Limb kBase = 1'000'000'000;
  static constexpr int kBaseDigits = 9;

  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)

  static BigInt from_u64(std::uint64_t value);
  static BigInt pow10(unsigned exponent);
  /// Parses an optionally signed run of decimal digits. Throws Error(kParse).
  static BigInt parse(std::string_view text);

  bool is_zero() const noexcept { return mag_.empty(); }
  bool is_negative() const noexcept { return negative_; }
  int sign() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }
  bool is_odd() const noexcept { return !mag_.empty() && (mag_[0] & 1U) != 0; }

  /// Number of decimal digits in |x|; zero has one digit.
  std::size_t decimal_digits() const noexcept;
  /// Approximate log10(|x|); x must be non-zero.
  long double log10_abs() const noexcept;
  /// True when |x| fits in 64 bits; `out` receives |x|.
  bool magnitude_u64(std::uint64_t& out) const noexcept;

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

  /// Truncating division (quotient rounds toward zero, remainder takes the
  /// dividend's sign). Throws Error(kDivisionByZero).
  static std::pair<BigInt, BigInt> divmod(const BigInt& dividend, const BigInt& divisor);
  friend BigInt operator/(const BigInt& lhs, const BigInt& rhs) { return divmod(lhs, rhs).first; }
  friend BigInt operator%(const BigInt& lhs, const BigInt& rhs) { return divmod(lhs, rhs).second; }

  /// In-place |x| *= factor.
  void mul_small(std::uint64_t factor);
  /// In-place |x| /= divisor (truncating); returns the magnitude of the remainder.
  std::uint64_t div_small(std::uint64_t divisor);
  /// In-place multiplication by 10^exponent.
  void shift_decimal_left(unsigned exponent);
  /// Truncating division by 10^exponent. Returns the remainder magnitude as a
  /// comparison against half of 10^exponent: -1 below, 0 exactly half, +1 above;
  /// `inexact` is set when any discarded digit is non-zero.
  int shift_decimal_right(unsigned exponent, bool& inexact);

  BigInt pow(unsigned exponent) const;

  std::string to_string() const;

  friend bool operator==(const BigInt& a, const BigInt& b) noexcept = default;
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept;

 private:
  using Magnitude = std::vector<Limb>;

  static int compare_mag(const Magnitude& a, const Magnitude& b) noexcept;
  static void add_mag(Magnitude& a, const Magnitude& b);
  // Requires |a| >= |b|.
  static void sub_mag(Magnitude& a, const Magnitude& b);
  static Magnitude mul_mag(const Magnitude& a, const Magnitude& b);
  static void divmod_mag(const Magnitude& u, const Magnitude& v, Magnitude& quot, Magnitude& rem);
  void trim() noexcept;

  bool negative_ = false;
  Magnitude mag_;
};

/// floor(sqrt(n)) for n >= 0. Throws Error(kDomain) for negative input.
BigInt isqrt(const BigInt& n);
/// floor(n^(1/degree)) for n >= 0, degree >= 1.
BigInt iroot(const BigInt& n, unsigned degree);

}  // namespace piapprox::hiprec
