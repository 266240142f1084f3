#include "hiprec/big_fixed.hpp"

#include <algorithm>
#include <cctype>

#include "common/error.hpp"

namespace piapprox::hiprec {

namespace {

// Moves `sig` from `from` fractional digits to `to`, rounding half-even when digits drop.
BigInt rescale_significand(BigInt sig, int from, int to) {
  if (to >= from) {
    sig.shift_decimal_left(static_cast<unsigned>(to - from));
    return sig;
  }
  const bool negative = sig.is_negative();
  bool inexact = false;
  const int half = sig.shift_decimal_right(static_cast<unsigned>(from - to), inexact);
  if (half > 0 || (half == 0 && sig.is_odd())) sig += BigInt(negative ? -1 : 1);
  return sig;
}

BigInt truncate_significand(BigInt sig, int from, int to) {
  if (to >= from) {
    sig.shift_decimal_left(static_cast<unsigned>(to - from));
    return sig;
  }
  bool inexact = false;
  sig.shift_decimal_right(static_cast<unsigned>(from - to), inexact);
  return sig;
}

// round_half_even(num / den)
BigInt divide_rounded(BigInt num, const BigInt& den) {
  if (den.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
  const bool negative = num.is_negative() != den.is_negative();
  std::uint64_t small = 0;
  if (den.magnitude_u64(small)) {
    num = num.abs();
    const std::uint64_t rem = num.div_small(small);
    const std::uint64_t other = small - rem;
    if (rem > other || (rem == other && num.is_odd())) num += BigInt(1);
    return negative ? -num : num;
  }
  auto [q, r] = BigInt::divmod(num.abs(), den.abs());
  const BigInt twice = r + r;
  const auto c = twice <=> den.abs();
  if (c > 0 || (c == 0 && q.is_odd())) q += BigInt(1);
  return negative ? -q : q;
}

}  // namespace

PrecisionCtx::PrecisionCtx(int working_dp, int guard_dp) : working_dp_(working_dp), guard_dp_(guard_dp) {
  if (working_dp < 1) fail(ErrorCode::kInvalidArgument, "working_dp must be >= 1");
  if (guard_dp < 0) fail(ErrorCode::kInvalidArgument, "guard_dp must be >= 0");
}

int default_guard_dp(std::uint64_t max_n) {
  int digits = 0;
  std::uint64_t power = 1;
  while (power < max_n) {
    ++digits;
    if (power > ~std::uint64_t{0} / 10) break;
    power *= 10;
  }
  return 10 + digits;
}

BigFixed::BigFixed(BigInt significand, int scale) : significand_(std::move(significand)), scale_(scale) {
  if (scale < 0) fail(ErrorCode::kInvalidArgument, "scale must be non-negative");
  if (significand_.is_zero()) scale_ = 0;
}

BigFixed BigFixed::parse(std::string_view text) {
  std::string_view rest = text;
  std::string digits;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    if (rest.front() == '-') digits.push_back('-');
    rest.remove_prefix(1);
  }
  std::size_t int_digits = 0;
  while (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest.front()))) {
    digits.push_back(rest.front());
    rest.remove_prefix(1);
    ++int_digits;
  }
  int frac_digits = 0;
  if (!rest.empty() && rest.front() == '.') {
    rest.remove_prefix(1);
    while (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest.front()))) {
      digits.push_back(rest.front());
      rest.remove_prefix(1);
      ++frac_digits;
    }
  }
  if (int_digits == 0 && frac_digits == 0) fail(ErrorCode::kParse, "not a decimal number: '" + std::string(text) + "'");
  long exponent = 0;
  if (!rest.empty() && (rest.front() == 'e' || rest.front() == 'E')) {
    rest.remove_prefix(1);
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
      negative = rest.front() == '-';
      rest.remove_prefix(1);
    }
    if (rest.empty()) fail(ErrorCode::kParse, "missing exponent in '" + std::string(text) + "'");
    while (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest.front()))) {
      exponent = exponent * 10 + (rest.front() - '0');
      if (exponent > 100000) fail(ErrorCode::kParse, "exponent out of range in '" + std::string(text) + "'");
      rest.remove_prefix(1);
    }
    if (negative) exponent = -exponent;
  }
  if (!rest.empty()) fail(ErrorCode::kParse, "trailing characters in '" + std::string(text) + "'");

  BigInt sig = BigInt::parse(digits);
  long scale = frac_digits - exponent;
  if (scale < 0) {
    sig.shift_decimal_left(static_cast<unsigned>(-scale));
    scale = 0;
  }
  return BigFixed(std::move(sig), static_cast<int>(scale));
}

std::strong_ordering fx_cmp(const BigFixed& a, const BigFixed& b) {
  if (a.scale() == b.scale()) return a.significand() <=> b.significand();
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  const int scale = std::max(a.scale(), b.scale());
  return rescale_significand(a.significand(), a.scale(), scale) <=>
         rescale_significand(b.significand(), b.scale(), scale);
}

bool operator==(const BigFixed& a, const BigFixed& b) { return fx_cmp(a, b) == 0; }
std::strong_ordering operator<=>(const BigFixed& a, const BigFixed& b) { return fx_cmp(a, b); }

BigFixed fx_from_ratio(const BigInt& numerator, const BigInt& denominator, const PrecisionCtx& ctx) {
  if (denominator.is_zero()) fail(ErrorCode::kDivisionByZero, "ratio with zero denominator");
  BigInt num = numerator;
  num.shift_decimal_left(static_cast<unsigned>(ctx.scale()));
  return BigFixed(divide_rounded(std::move(num), denominator), ctx.scale());
}

BigFixed fx_add(const BigFixed& a, const BigFixed& b, const PrecisionCtx& ctx) {
  const int scale = std::max(a.scale(), b.scale());
  BigInt sum = rescale_significand(a.significand(), a.scale(), scale);
  sum += rescale_significand(b.significand(), b.scale(), scale);
  return BigFixed(rescale_significand(std::move(sum), scale, ctx.scale()), ctx.scale());
}

BigFixed fx_sub(const BigFixed& a, const BigFixed& b, const PrecisionCtx& ctx) { return fx_add(a, -b, ctx); }

BigFixed fx_mul(const BigFixed& a, const BigFixed& b, const PrecisionCtx& ctx) {
  return BigFixed(rescale_significand(a.significand() * b.significand(), a.scale() + b.scale(), ctx.scale()),
                  ctx.scale());
}

BigFixed fx_div(const BigFixed& a, const BigFixed& b, const PrecisionCtx& ctx) {
  if (b.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
  // a/b = (sa / sb) * 10^(bs - as); target significand is that times 10^scale.
  const int shift = ctx.scale() - a.scale() + b.scale();
  BigInt num = a.significand();
  BigInt den = b.significand();
  if (shift >= 0) {
    num.shift_decimal_left(static_cast<unsigned>(shift));
  } else {
    den.shift_decimal_left(static_cast<unsigned>(-shift));
  }
  return BigFixed(divide_rounded(std::move(num), den), ctx.scale());
}

BigFixed fx_mul_ratio(const BigFixed& x, std::uint64_t numerator, std::uint64_t denominator,
                      const PrecisionCtx& ctx) {
  if (denominator == 0) fail(ErrorCode::kDivisionByZero, "ratio with zero denominator");
  BigInt num = x.significand();
  num.mul_small(numerator);
  const int shift = ctx.scale() - x.scale();
  if (shift >= 0) {
    num.shift_decimal_left(static_cast<unsigned>(shift));
    return BigFixed(divide_rounded(std::move(num), BigInt::from_u64(denominator)), ctx.scale());
  }
  BigInt den = BigInt::from_u64(denominator);
  den.shift_decimal_left(static_cast<unsigned>(-shift));
  return BigFixed(divide_rounded(std::move(num), den), ctx.scale());
}

BigFixed fx_pow_int(const BigFixed& x, unsigned exponent, const PrecisionCtx& ctx) {
  if (exponent == 0) return fx_rescale(BigFixed::from_int(1), ctx.scale());
  return BigFixed(rescale_significand(x.significand().pow(exponent), x.scale() * static_cast<int>(exponent),
                                      ctx.scale()),
                  ctx.scale());
}

BigFixed fx_sqrt(const BigFixed& x, const PrecisionCtx& ctx) {
  if (x.is_negative()) fail(ErrorCode::kDomain, "square root of a negative value");
  return fx_nth_root(x, 2, ctx);
}

BigFixed fx_nth_root(const BigFixed& x, unsigned r, const PrecisionCtx& ctx) {
  if (r == 0) fail(ErrorCode::kInvalidArgument, "root degree must be positive");
  if (x.is_negative() && r % 2 == 0) fail(ErrorCode::kDomain, "even root of a negative value");
  // floor((|x| * 10^(r*scale))^(1/r)) is the root's significand at `scale`.
  const int radicand_scale = static_cast<int>(r) * ctx.scale();
  BigInt radicand = truncate_significand(x.significand().abs(), x.scale(), radicand_scale);
  BigInt root = iroot(radicand, r);
  return BigFixed(x.is_negative() ? -root : root, ctx.scale());
}

BigFixed fx_round(const BigFixed& x, int dp) {
  if (dp < 0) fail(ErrorCode::kInvalidArgument, "dp must be non-negative");
  if (dp >= x.scale()) return x;
  return BigFixed(rescale_significand(x.significand(), x.scale(), dp), dp);
}

BigFixed fx_truncate(const BigFixed& x, int dp) {
  if (dp < 0) fail(ErrorCode::kInvalidArgument, "dp must be non-negative");
  if (dp >= x.scale()) return x;
  return BigFixed(truncate_significand(x.significand(), x.scale(), dp), dp);
}

BigFixed fx_rescale(const BigFixed& x, int dp) {
  if (dp < 0) fail(ErrorCode::kInvalidArgument, "dp must be non-negative");
  return BigFixed(rescale_significand(x.significand(), x.scale(), dp), dp);
}

std::string fx_to_string(const BigFixed& x, int dp) {
  if (dp < 0) fail(ErrorCode::kInvalidArgument, "dp must be non-negative");
  const BigInt sig = rescale_significand(x.significand(), x.scale(), dp);
  std::string digits = sig.abs().to_string();
  if (digits.size() <= static_cast<std::size_t>(dp)) {
    digits.insert(0, static_cast<std::size_t>(dp) + 1 - digits.size(), '0');
  }
  if (dp > 0) digits.insert(digits.size() - static_cast<std::size_t>(dp), 1, '.');
  return sig.is_negative() ? "-" + digits : digits;
}

std::string fx_to_string(const BigFixed& x) { return fx_to_string(x, x.scale()); }

}  // namespace piapprox::hiprec
