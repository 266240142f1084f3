#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hiprec/big_int.hpp"

namespace piapprox::hiprec {

/// Working precision: every result is rounded half-even to
/// working_dp + guard_dp fractional digits.
class PrecisionCtx {
 public:
  /// Throws Error(kInvalidArgument) unless working_dp >= 1 and guard_dp >= 0.
  PrecisionCtx(int working_dp, int guard_dp);

  int working_dp() const noexcept { return working_dp_; }
  int guard_dp() const noexcept { return guard_dp_; }
  int scale() const noexcept { return working_dp_ + guard_dp_; }

  PrecisionCtx with_guard(int guard_dp) const { return PrecisionCtx(working_dp_, guard_dp); }

  friend bool operator==(const PrecisionCtx&, const PrecisionCtx&) = default;

 private:
  int working_dp_;
  int guard_dp_;
};

/// Guard digits sized for a run that samples up to `max_n`: 10 + ceil(log10(max_n)).
int default_guard_dp(std::uint64_t max_n);

/// Exact decimal fixed-point value significand * 10^-scale. Immutable.
class BigFixed {
 public:
  BigFixed() = default;
  BigFixed(BigInt significand, int scale);

  static BigFixed from_int(std::int64_t value) { return BigFixed(BigInt(value), 0); }
  /// Accepts `[+-]digits[.digits][e[+-]digits]`. The scale is the number of
  /// fractional digits written (after applying the exponent). Throws Error(kParse).
  static BigFixed parse(std::string_view text);

  const BigInt& significand() const noexcept { return significand_; }
  int scale() const noexcept { return scale_; }
  bool is_zero() const noexcept { return significand_.is_zero(); }
  bool is_negative() const noexcept { return significand_.is_negative(); }
  int sign() const noexcept { return significand_.sign(); }

  BigFixed operator-() const { return BigFixed(-significand_, scale_); }
  BigFixed abs() const { return BigFixed(significand_.abs(), scale_); }

  /// Same significand and scale, not merely the same value.
  bool identical(const BigFixed& other) const noexcept {
    return scale_ == other.scale_ && significand_ == other.significand_;
  }

  /// Value equality and ordering, independent of scale.
  friend bool operator==(const BigFixed& a, const BigFixed& b);
  friend std::strong_ordering operator<=>(const BigFixed& a, const BigFixed& b);

 private:
  BigInt significand_;
  int scale_ = 0;
};

// Every operation returns its exact result rounded half-even to ctx.scale().

BigFixed fx_from_ratio(const BigInt& numerator, const BigInt& denominator, const PrecisionCtx& ctx);
BigFixed fx_add(const BigFixed& a, const BigFixed& b, const PrecisionCtx& ctx);
BigFixed fx_sub(const BigFixed& a, const BigFixed& b, const PrecisionCtx& ctx);
BigFixed fx_mul(const BigFixed& a, const BigFixed& b, const PrecisionCtx& ctx);
BigFixed fx_div(const BigFixed& a, const BigFixed& b, const PrecisionCtx& ctx);
/// x * numerator / denominator with a single rounding; the iteration workhorse.
BigFixed fx_mul_ratio(const BigFixed& x, std::uint64_t numerator, std::uint64_t denominator,
                      const PrecisionCtx& ctx);
BigFixed fx_pow_int(const BigFixed& x, unsigned exponent, const PrecisionCtx& ctx);

/// Floor of sqrt(x) at ctx scale, so |r - sqrt(x)| < 1 ulp. x >= 0 or Error(kDomain).
BigFixed fx_sqrt(const BigFixed& x, const PrecisionCtx& ctx);
/// r-th root truncated toward zero at ctx scale. r == 0 is Error(kInvalidArgument);
/// negative x with even r is Error(kDomain).
BigFixed fx_nth_root(const BigFixed& x, unsigned r, const PrecisionCtx& ctx);

std::strong_ordering fx_cmp(const BigFixed& a, const BigFixed& b);
/// Half-even rounding to `dp` fractional digits (dp >= 0).
BigFixed fx_round(const BigFixed& x, int dp);
/// Truncation toward zero to `dp` fractional digits.
BigFixed fx_truncate(const BigFixed& x, int dp);
/// Rescales without loss when dp >= x.scale(), otherwise rounds half-even.
BigFixed fx_rescale(const BigFixed& x, int dp);
/// Plain decimal text with exactly `dp` fractional digits, rounded half-even.
std::string fx_to_string(const BigFixed& x, int dp);
/// Shorthand for fx_to_string(x, x.scale()).
std::string fx_to_string(const BigFixed& x);

}  // namespace piapprox::hiprec
