#include "hiprec/big_int.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "common/error.hpp"

namespace piapprox::hiprec {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr u64 kPow10[] = {1ULL,
                          10ULL,
                          100ULL,
                          1000ULL,
                          10000ULL,
                          100000ULL,
                          1000000ULL,
                          10000000ULL,
                          100000000ULL,
                          1000000000ULL};

}  // namespace

BigInt::BigInt(std::int64_t value) {
  negative_ = value < 0;
  // Negate in unsigned space so INT64_MIN is well defined.
  u64 mag = negative_ ? (~static_cast<u64>(value) + 1) : static_cast<u64>(value);
  while (mag != 0) {
    mag_.push_back(static_cast<Limb>(mag % kBase));
    mag /= kBase;
  }
}

BigInt BigInt::from_u64(std::uint64_t value) {
  BigInt out;
  while (value != 0) {
    out.mag_.push_back(static_cast<Limb>(value % kBase));
    value /= kBase;
  }
  return out;
}

BigInt BigInt::pow10(unsigned exponent) {
  BigInt out;
  out.mag_.assign(exponent / kBaseDigits, 0);
  out.mag_.push_back(static_cast<Limb>(kPow10[exponent % kBaseDigits]));
  return out;
}

BigInt BigInt::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) fail(ErrorCode::kParse, "empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') fail(ErrorCode::kParse, "invalid digit in integer literal");
  }
  BigInt out;
  out.mag_.reserve(text.size() / kBaseDigits + 1);
  std::size_t end = text.size();
  while (end > 0) {
    std::size_t begin = end >= static_cast<std::size_t>(kBaseDigits) ? end - kBaseDigits : 0;
    Limb limb = 0;
    for (std::size_t i = begin; i < end; ++i) limb = limb * 10 + static_cast<Limb>(text[i] - '0');
    out.mag_.push_back(limb);
    end = begin;
  }
  out.trim();
  out.negative_ = negative && !out.is_zero();
  return out;
}

std::size_t BigInt::decimal_digits() const noexcept {
  if (mag_.empty()) return 1;
  std::size_t digits = (mag_.size() - 1) * kBaseDigits;
  Limb top = mag_.back();
  while (top != 0) {
    ++digits;
    top /= 10;
  }
  return digits;
}

long double BigInt::log10_abs() const noexcept {
  long double lead = mag_.back();
  int exponent = static_cast<int>(mag_.size() - 1) * kBaseDigits;
  if (mag_.size() >= 2) {
    lead = lead * kBase + mag_[mag_.size() - 2];
    exponent -= kBaseDigits;
  }
  return std::log10(lead) + exponent;
}

bool BigInt::magnitude_u64(std::uint64_t& out) const noexcept {
  if (mag_.size() > 3) return false;
  u128 acc = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) acc = acc * kBase + mag_[i];
  if (acc > static_cast<u128>(~u64{0})) return false;
  out = static_cast<u64>(acc);
  return true;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.negative_ = !out.negative_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.negative_ = false;
  return out;
}

int BigInt::compare_mag(const Magnitude& a, const Magnitude& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(Magnitude& a, const Magnitude& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  Limb carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Limb sum = a[i] + carry + (i < b.size() ? b[i] : 0);
    if (i >= b.size() && carry == 0) break;
    carry = sum >= kBase ? 1 : 0;
    a[i] = carry ? sum - kBase : sum;
  }
  if (carry) a.push_back(1);
}

void BigInt::sub_mag(Magnitude& a, const Magnitude& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i >= b.size() && borrow == 0) break;
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    borrow = diff < 0 ? 1 : 0;
    a[i] = static_cast<Limb>(borrow ? diff + kBase : diff);
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt::Magnitude BigInt::mul_mag(const Magnitude& a, const Magnitude& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> acc(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 carry = 0;
    const u64 ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      u64 cur = acc[i + j] + ai * b[j] + carry;
      carry = cur / kBase;
      acc[i + j] = cur % kBase;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      u64 cur = acc[k] + carry;
      carry = cur / kBase;
      acc[k] = cur % kBase;
      ++k;
    }
  }
  Magnitude out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Limb>(acc[i]);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth, TAOCP vol. 2, Algorithm D, specialised to base 10^9.
void BigInt::divmod_mag(const Magnitude& u, const Magnitude& v, Magnitude& quot, Magnitude& rem) {
  if (compare_mag(u, v) < 0) {
    quot.clear();
    rem = u;
    return;
  }
  if (v.size() == 1) {
    BigInt tmp;
    tmp.mag_ = u;
    u64 r = tmp.div_small(v[0]);
    quot = std::move(tmp.mag_);
    rem.clear();
    if (r != 0) rem.push_back(static_cast<Limb>(r));
    return;
  }

  const std::size_t n = v.size();
  const std::size_t m = u.size() - n;
  const u64 norm = kBase / (static_cast<u64>(v.back()) + 1);

  auto scaled = [norm](const Magnitude& src, std::size_t size) {
    Magnitude out(size, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      u64 cur = src[i] * norm + carry;
      out[i] = static_cast<Limb>(cur % kBase);
      carry = cur / kBase;
    }
    if (src.size() < size) out[src.size()] = static_cast<Limb>(carry);
    return out;
  };
  Magnitude un = scaled(u, u.size() + 1);
  Magnitude vn = scaled(v, n);

  quot.assign(m + 1, 0);
  const u64 vtop = vn[n - 1];
  const u64 vnext = vn[n - 2];
  for (std::size_t j = m + 1; j-- > 0;) {
    u64 num = static_cast<u64>(un[j + n]) * kBase + un[j + n - 1];
    u64 qhat = num / vtop;
    u64 rhat = num % vtop;
    while (qhat >= kBase || qhat * vnext > rhat * kBase + un[j + n - 2]) {
      --qhat;
      rhat += vtop;
      if (rhat >= kBase) break;
    }

    std::int64_t borrow = 0;
    u64 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      u64 prod = qhat * vn[i] + carry;
      carry = prod / kBase;
      std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow - static_cast<std::int64_t>(prod % kBase);
      borrow = t < 0 ? 1 : 0;
      un[i + j] = static_cast<Limb>(t < 0 ? t + kBase : t);
    }
    std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow - static_cast<std::int64_t>(carry);
    if (t < 0) {
      // qhat was one too large: add the divisor back.
      un[j + n] = static_cast<Limb>(t + kBase);
      --qhat;
      Limb c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Limb sum = un[i + j] + vn[i] + c;
        c = sum >= kBase ? 1 : 0;
        un[i + j] = c ? sum - kBase : sum;
      }
      un[j + n] = static_cast<Limb>((static_cast<u64>(un[j + n]) + c) % kBase);
    } else {
      un[j + n] = static_cast<Limb>(t);
    }
    quot[j] = static_cast<Limb>(qhat);
  }
  while (!quot.empty() && quot.back() == 0) quot.pop_back();

  BigInt r;
  r.mag_.assign(un.begin(), un.begin() + static_cast<std::ptrdiff_t>(n));
  r.trim();
  r.div_small(norm);
  rem = std::move(r.mag_);
}

void BigInt::trim() noexcept {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) negative_ = false;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (negative_ == rhs.negative_) {
    add_mag(mag_, rhs.mag_);
  } else if (compare_mag(mag_, rhs.mag_) >= 0) {
    sub_mag(mag_, rhs.mag_);
  } else {
    Magnitude tmp = rhs.mag_;
    sub_mag(tmp, mag_);
    mag_ = std::move(tmp);
    negative_ = rhs.negative_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  if (negative_ != rhs.negative_) {
    add_mag(mag_, rhs.mag_);
  } else if (compare_mag(mag_, rhs.mag_) >= 0) {
    sub_mag(mag_, rhs.mag_);
  } else {
    Magnitude tmp = rhs.mag_;
    sub_mag(tmp, mag_);
    mag_ = std::move(tmp);
    negative_ = !negative_;
  }
  trim();
  return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt out;
  out.mag_ = BigInt::mul_mag(lhs.mag_, rhs.mag_);
  out.negative_ = lhs.negative_ != rhs.negative_;
  out.trim();
  return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) { return *this = *this * rhs; }

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& dividend, const BigInt& divisor) {
  if (divisor.is_zero()) fail(ErrorCode::kDivisionByZero, "integer division by zero");
  BigInt q;
  BigInt r;
  divmod_mag(dividend.mag_, divisor.mag_, q.mag_, r.mag_);
  q.negative_ = dividend.negative_ != divisor.negative_;
  r.negative_ = dividend.negative_;
  q.trim();
  r.trim();
  return {std::move(q), std::move(r)};
}

void BigInt::mul_small(std::uint64_t factor) {
  if (factor == 0 || mag_.empty()) {
    mag_.clear();
    negative_ = false;
    return;
  }
  if (factor < (1ULL << 32)) {
    u64 carry = 0;
    for (Limb& limb : mag_) {
      u64 cur = static_cast<u64>(limb) * factor + carry;
      limb = static_cast<Limb>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry != 0) {
      mag_.push_back(static_cast<Limb>(carry % kBase));
      carry /= kBase;
    }
    return;
  }
  u128 carry = 0;
  for (Limb& limb : mag_) {
    u128 cur = static_cast<u128>(limb) * factor + carry;
    limb = static_cast<Limb>(cur % kBase);
    carry = cur / kBase;
  }
  while (carry != 0) {
    mag_.push_back(static_cast<Limb>(carry % kBase));
    carry /= kBase;
  }
}

std::uint64_t BigInt::div_small(std::uint64_t divisor) {
  if (divisor == 0) fail(ErrorCode::kDivisionByZero, "integer division by zero");
  if (divisor < (1ULL << 32)) {
    u64 rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
      u64 cur = rem * kBase + mag_[i];
      mag_[i] = static_cast<Limb>(cur / divisor);
      rem = cur % divisor;
    }
    trim();
    return rem;
  }
  u128 rem = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    u128 cur = rem * kBase + mag_[i];
    mag_[i] = static_cast<Limb>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<u64>(rem);
}

void BigInt::shift_decimal_left(unsigned exponent) {
  if (mag_.empty() || exponent == 0) return;
  if (exponent % kBaseDigits != 0) mul_small(kPow10[exponent % kBaseDigits]);
  mag_.insert(mag_.begin(), exponent / kBaseDigits, 0);
}

int BigInt::shift_decimal_right(unsigned exponent, bool& inexact) {
  inexact = false;
  if (exponent == 0) return -1;
  const std::size_t limb_shift = exponent / kBaseDigits;
  const unsigned digit_shift = exponent % kBaseDigits;
  auto limb_at = [this](std::size_t i) -> u64 { return i < mag_.size() ? mag_[i] : 0; };

  // Locate the most significant discarded digit and whether anything below it is non-zero.
  u64 top = 0;
  bool rest_nonzero = false;
  std::size_t lower_limbs = 0;
  if (digit_shift > 0) {
    const u64 part = limb_at(limb_shift) % kPow10[digit_shift];
    top = part / kPow10[digit_shift - 1];
    rest_nonzero = part % kPow10[digit_shift - 1] != 0;
    lower_limbs = limb_shift;
  } else {
    const u64 part = limb_at(limb_shift - 1);
    top = part / kPow10[kBaseDigits - 1];
    rest_nonzero = part % kPow10[kBaseDigits - 1] != 0;
    lower_limbs = limb_shift - 1;
  }
  for (std::size_t i = 0; i < lower_limbs && !rest_nonzero; ++i) rest_nonzero = limb_at(i) != 0;
  inexact = top != 0 || rest_nonzero;

  const bool was_negative = negative_;
  if (limb_shift >= mag_.size()) {
    mag_.clear();
  } else {
    mag_.erase(mag_.begin(), mag_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
    if (digit_shift > 0) div_small(kPow10[digit_shift]);
  }
  negative_ = was_negative;
  trim();

  if (top != 5) return top > 5 ? 1 : -1;
  return rest_nonzero ? 1 : 0;
}

BigInt BigInt::pow(unsigned exponent) const {
  BigInt result(1);
  BigInt base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::string BigInt::to_string() const {
  if (mag_.empty()) return "0";
  std::string out = negative_ ? "-" : "";
  out += std::to_string(mag_.back());
  char buf[16];
  for (std::size_t i = mag_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", static_cast<unsigned>(mag_[i]));
    out += buf;
  }
  return out;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept {
  if (a.negative_ != b.negative_) return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = BigInt::compare_mag(a.mag_, b.mag_);
  if (a.negative_) c = -c;
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

// Seed near n^(1/degree) taken from the operand's magnitude; Newton does the rest.
BigInt root_seed(const BigInt& n, unsigned degree) {
  const long double target = n.log10_abs() / degree;
  if (target < 17.0L) {
    return BigInt::from_u64(static_cast<u64>(std::pow(10.0L, target)) + 1);
  }
  const unsigned shift = static_cast<unsigned>(target) - 16;
  BigInt seed = BigInt::from_u64(static_cast<u64>(std::pow(10.0L, target - shift)) + 1);
  seed.shift_decimal_left(shift);
  return seed;
}

}  // namespace

BigInt isqrt(const BigInt& n) { return iroot(n, 2); }

BigInt iroot(const BigInt& n, unsigned degree) {
  if (degree == 0) fail(ErrorCode::kInvalidArgument, "root degree must be positive");
  if (n.is_negative()) fail(ErrorCode::kDomain, "root of a negative integer");
  if (degree == 1 || n.is_zero()) return n;

  const BigInt one(1);
  const BigInt deg(static_cast<std::int64_t>(degree));
  BigInt x = root_seed(n, degree);
  // Integer Newton step x' = ((d-1)x + n / x^(d-1)) / d; stop once successive
  // iterates are within one unit, then fix up to the exact floor.
  for (int iter = 0; iter < 400; ++iter) {
    BigInt next = (BigInt(static_cast<std::int64_t>(degree - 1)) * x + n / x.pow(degree - 1)) / deg;
    if (next.is_zero()) next = one;
    BigInt delta = (next - x).abs();
    x = std::move(next);
    if (delta <= one) break;
  }
  while (x.pow(degree) > n) x -= one;
  while ((x + one).pow(degree) <= n) x += one;
  return x;
}

}  // namespace piapprox::hiprec
