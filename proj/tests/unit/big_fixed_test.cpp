#include <gtest/gtest.h>

#include <random>

#include "common/error.hpp"
#include "harness/reference.hpp"
#include "hiprec/big_fixed.hpp"
#include "support/oracle.hpp"

using piapprox::Error;
using piapprox::ErrorCode;
using namespace piapprox::hiprec;

namespace {

BigFixed fx(const char* text) { return BigFixed::parse(text); }

std::string str(const BigFixed& x) { return fx_to_string(x); }

const PrecisionCtx k15(15, 0);

template <typename Fn>
void expect_error(ErrorCode code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(PrecisionCtx, Validates) {
  EXPECT_EQ(PrecisionCtx(15, 12).scale(), 27);
  expect_error(ErrorCode::kInvalidArgument, [] { PrecisionCtx(0, 0); });
  expect_error(ErrorCode::kInvalidArgument, [] { PrecisionCtx(15, -1); });
}

TEST(PrecisionCtx, DefaultGuard) {
  EXPECT_EQ(default_guard_dp(1), 10);
  EXPECT_EQ(default_guard_dp(5), 11);
  EXPECT_EQ(default_guard_dp(10), 11);
  EXPECT_EQ(default_guard_dp(100), 12);
  EXPECT_EQ(default_guard_dp(101), 13);
  EXPECT_EQ(default_guard_dp(10'000'000), 17);
}

TEST(BigFixed, ZeroIsCanonical) {
  const BigFixed z(BigInt(0), 12);
  EXPECT_EQ(z.scale(), 0);
  EXPECT_TRUE(z.identical(BigFixed()));
  EXPECT_TRUE(fx("-0.000").identical(BigFixed()));
  EXPECT_EQ(fx_cmp(fx("0"), fx("-0")), std::strong_ordering::equal);
  EXPECT_EQ(fx_to_string(fx("-0.0000001"), 3), "0.000");
}

TEST(BigFixed, Parse) {
  EXPECT_EQ(str(fx("3.14")), "3.14");
  EXPECT_EQ(fx("3.14").scale(), 2);
  EXPECT_EQ(str(fx("-2.50")), "-2.50");
  EXPECT_EQ(str(fx("1e-3")), "0.001");
  EXPECT_EQ(str(fx("2.5E+2")), "250");
  EXPECT_EQ(str(fx(".5")), "0.5");
  EXPECT_EQ(str(fx("7.")), "7");
  for (const char* bad : {"", "abc", "1.2.3", "1e", "--1", "1e+"}) {
    expect_error(ErrorCode::kParse, [&] { BigFixed::parse(bad); });
  }
}

TEST(FxFromRatio, Examples) {
  EXPECT_EQ(str(fx_from_ratio(8, 3, k15)), "2.666666666666667");
  EXPECT_EQ(fx_from_ratio(1, 1, PrecisionCtx(7, 3)), BigFixed::from_int(1));
  EXPECT_EQ(str(fx_from_ratio(-1, 4, k15)), "-0.250000000000000");
  expect_error(ErrorCode::kDivisionByZero, [] { fx_from_ratio(1, 0, k15); });
}

TEST(FxFromRatio, HalfEvenTies) {
  const PrecisionCtx one(1, 0);
  EXPECT_EQ(str(fx_from_ratio(1, 4, one)), "0.2");
  EXPECT_EQ(str(fx_from_ratio(3, 4, one)), "0.8");
  EXPECT_EQ(str(fx_from_ratio(-1, 4, one)), "-0.2");
  EXPECT_EQ(str(fx_from_ratio(-3, 4, one)), "-0.8");
}

TEST(FxArithmetic, Examples) {
  EXPECT_EQ(fx_add(fx("1.5"), fx("2.25"), k15), fx("3.75"));
  EXPECT_EQ(str(fx_add(fx("1.5"), fx("2.25"), PrecisionCtx(2, 0))), "3.75");
  EXPECT_TRUE(fx_mul(fx("123.456"), BigFixed(), k15).is_zero());
  // Exact product 1.999999999999999861967979879025 rounds up at 15 dp.
  EXPECT_EQ(str(fx_mul(fx("1.414213562373095"), fx("1.414213562373095"), k15)), "2.000000000000000");
  EXPECT_EQ(str(fx_truncate(fx_mul(fx("1.414213562373095"), fx("1.414213562373095"), PrecisionCtx(30, 0)), 15)),
            "1.999999999999999");
  EXPECT_EQ(str(fx_div(fx("1"), fx("3"), PrecisionCtx(10, 0))), "0.3333333333");
  EXPECT_EQ(fx_div(fx("-7.25"), fx("-7.25"), k15), BigFixed::from_int(1));
  EXPECT_EQ(str(fx_div(fx("4"), fx("1.5"), k15)), "2.666666666666667");
  expect_error(ErrorCode::kDivisionByZero, [] { fx_div(fx("1"), BigFixed(), k15); });
}

TEST(FxSqrt, Examples) {
  EXPECT_EQ(fx_sqrt(fx("1"), k15), BigFixed::from_int(1));
  EXPECT_EQ(str(fx_sqrt(fx("2"), k15)), "1.414213562373095");
  // Evaluated with guard digits and rounded to the reported 15 places.
  const PrecisionCtx guarded(15, 10);
  EXPECT_EQ(fx_to_string(fx_sqrt(fx("0.585786437626905"), guarded), 15), "0.765366864730180");
  expect_error(ErrorCode::kDomain, [] { fx_sqrt(fx("-0.01"), k15); });
}

TEST(FxNthRoot, Examples) {
  EXPECT_EQ(fx_nth_root(fx("256"), 8, k15), BigFixed::from_int(2));
  EXPECT_EQ(fx_nth_root(fx("3.25"), 1, k15), fx("3.25"));
  EXPECT_EQ(str(fx_nth_root(fx("-27"), 3, k15)), "-3.000000000000000");
  expect_error(ErrorCode::kDomain, [] { fx_nth_root(fx("-16"), 4, k15); });
  expect_error(ErrorCode::kInvalidArgument, [] { fx_nth_root(fx("16"), 0, k15); });
}

TEST(FxNthRoot, ZetaFourAtFive) {
  // 90 * (1 + 1/2^4 + ... + 1/5^4), fourth root, reported at 14 dp.
  const PrecisionCtx ctx(14, default_guard_dp(5));
  BigFixed sum;
  for (int k = 1; k <= 5; ++k) sum = fx_add(sum, fx_from_ratio(1, BigInt(k).pow(4), ctx), ctx);
  const BigFixed root = fx_nth_root(fx_mul_ratio(sum, 90, 1, ctx), 4, ctx);
  EXPECT_EQ(fx_to_string(root, 14), "3.14016117947426");
  EXPECT_EQ(fx_to_string(root, 14), oracle::zeta(4, 90, 5, 14));
}

TEST(FxRounding, Examples) {
  EXPECT_EQ(str(fx_round(fx("2.5"), 0)), "2");
  EXPECT_EQ(str(fx_round(fx("3.5"), 0)), "4");
  EXPECT_EQ(str(fx_round(fx("-2.5"), 0)), "-2");
  EXPECT_EQ(str(fx_round(fx("2.5000001"), 0)), "3");
  EXPECT_EQ(str(fx_truncate(fx("2.999"), 2)), "2.99");
  EXPECT_EQ(str(fx_truncate(fx("-2.999"), 2)), "-2.99");
  EXPECT_EQ(fx_to_string(fx("1.5"), 4), "1.5000");
  EXPECT_EQ(fx_to_string(fx("0.00049"), 3), "0.000");
  EXPECT_EQ(fx_to_string(fx("0.0005"), 3), "0.000");
  EXPECT_EQ(fx_to_string(fx("0.0015"), 3), "0.002");
  const auto ref = piapprox::harness::reference_pi(PrecisionCtx(15, 10));
  EXPECT_EQ(fx_to_string(ref.value, 15), "3.141592653589793");
}

TEST(FxCompare, TotalOrder) {
  EXPECT_LT(fx("-1"), fx("-0.5"));
  EXPECT_LT(fx("1.0999"), fx("1.1"));
  EXPECT_EQ(fx("1.10"), fx("1.1"));
  EXPECT_FALSE(fx("1.10").identical(fx("1.1")));
  EXPECT_GT(fx("10"), fx("9.999999999999999999999"));
}

// Properties over hand-rolled random inputs.

namespace {

class FixedProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{0xf1ced};

  BigFixed random_fixed(int max_digits, int max_scale, bool allow_negative = true) {
    std::uniform_int_distribution<int> len(1, max_digits);
    std::uniform_int_distribution<int> sc(0, max_scale);
    std::string digits = oracle::random_digits(rng, len(rng));
    if (allow_negative && rng() % 2 == 0) digits.insert(0, 1, '-');
    return BigFixed(BigInt::parse(digits), sc(rng));
  }

  PrecisionCtx random_ctx() {
    std::uniform_int_distribution<int> w(1, 30);
    std::uniform_int_distribution<int> g(0, 12);
    return PrecisionCtx(w(rng), g(rng));
  }
};

mpq_class ulp_q(int scale) { return mpq_class(1, oracle::pow10(static_cast<unsigned>(scale))); }

}  // namespace

TEST_F(FixedProperty, OperationsRoundHalfEvenLikeGmp) {
  for (int i = 0; i < 1000; ++i) {
    const BigFixed a = random_fixed(40, 30);
    const BigFixed b = random_fixed(30, 30);
    const PrecisionCtx ctx = random_ctx();
    const mpq_class qa = oracle::to_mpq(a), qb = oracle::to_mpq(b);
    ASSERT_EQ(fx_to_string(fx_add(a, b, ctx), ctx.scale()), oracle::round_text(qa + qb, ctx.scale()));
    ASSERT_EQ(fx_to_string(fx_sub(a, b, ctx), ctx.scale()), oracle::round_text(qa - qb, ctx.scale()));
    ASSERT_EQ(fx_to_string(fx_mul(a, b, ctx), ctx.scale()), oracle::round_text(qa * qb, ctx.scale()));
    if (!b.is_zero()) {
      ASSERT_EQ(fx_to_string(fx_div(a, b, ctx), ctx.scale()), oracle::round_text(qa / qb, ctx.scale()));
    }
    const std::uint64_t p = rng() % 1'000'000'000'000ULL;
    const std::uint64_t q = 1 + rng() % 1'000'000'000'000ULL;
    ASSERT_EQ(fx_to_string(fx_mul_ratio(a, p, q, ctx), ctx.scale()), oracle::round_text(qa * mpq_class(mpz_class(std::to_string(p)), mpz_class(std::to_string(q))), ctx.scale()));
  }
}

TEST_F(FixedProperty, SqrtUlpBounds) {
  for (int i = 0; i < 1000; ++i) {
    const BigFixed x = random_fixed(45, 30, false);
    const PrecisionCtx ctx = random_ctx();
    const BigFixed r = fx_sqrt(x, ctx);
    const mpq_class qr = oracle::to_mpq(r), qx = oracle::to_mpq(x);
    const mpq_class u = ulp_q(ctx.scale());
    ASSERT_LE(qr * qr, qx + 2 * u) << str(x) << " at scale " << ctx.scale();
    ASSERT_GT((qr + u) * (qr + u), qx - 2 * u) << str(x) << " at scale " << ctx.scale();
    // Floor: exact lower bound and strict upper bound.
    ASSERT_LE(qr * qr, qx);
    ASSERT_GT((qr + u) * (qr + u), qx);
  }
}

TEST_F(FixedProperty, NthRootUlpBounds) {
  std::uniform_int_distribution<unsigned> degree(2, 9);
  for (int i = 0; i < 1000; ++i) {
    const BigFixed x = random_fixed(45, 30, false);
    const PrecisionCtx ctx = random_ctx();
    const unsigned k = degree(rng);
    const BigFixed r = fx_nth_root(x, k, ctx);
    mpq_class lo = 1, hi = 1;
    const mpq_class qr = oracle::to_mpq(r);
    const mpq_class up = qr + ulp_q(ctx.scale());
    for (unsigned j = 0; j < k; ++j) {
      lo *= qr;
      hi *= up;
    }
    ASSERT_LE(lo, oracle::to_mpq(x)) << str(x) << " root " << k;
    ASSERT_GT(hi, oracle::to_mpq(x)) << str(x) << " root " << k;
  }
}

TEST_F(FixedProperty, RootOfPowerRecoversValue) {
  std::uniform_int_distribution<int> tenths(0, 10'000'000);
  for (int i = 0; i < 1000; ++i) {
    const BigFixed x(BigInt(tenths(rng)), 6);  // [0, 10]
    const unsigned r = 2 * (1 + static_cast<unsigned>(rng() % 4));
    const PrecisionCtx ctx(15, 5);
    const PrecisionCtx wide(15 * static_cast<int>(r) + 10, 0);
    const BigFixed back = fx_nth_root(fx_pow_int(x, r, wide), r, ctx);
    const mpq_class gap = abs(oracle::to_mpq(back) - oracle::to_mpq(x));
    ASSERT_LE(gap, ulp_q(ctx.scale())) << str(x) << " r=" << r;
  }
}

TEST_F(FixedProperty, RatioTimesDenominatorRecoversNumerator) {
  for (int i = 0; i < 1000; ++i) {
    const BigInt p = BigInt::parse((rng() % 2 ? "-" : "") + oracle::random_digits(rng, 1 + static_cast<int>(rng() % 30)));
    const BigInt q = BigInt::parse(oracle::random_digits(rng, 1 + static_cast<int>(rng() % 20)));
    if (q.is_zero()) continue;
    const PrecisionCtx ctx = random_ctx();
    const BigFixed x = fx_from_ratio(p, q, ctx);
    const mpq_class back = oracle::to_mpq(x) * oracle::to_mpz(q);
    ASSERT_LE(abs(back - oracle::to_mpz(p)), ulp_q(ctx.scale()) * abs(oracle::to_mpz(q)));
  }
}

TEST_F(FixedProperty, StringRoundTrip) {
  for (int i = 0; i < 1000; ++i) {
    const BigFixed x = random_fixed(50, 40);
    const BigFixed back = BigFixed::parse(fx_to_string(x, x.scale()));
    ASSERT_TRUE(back.identical(x)) << str(x);
  }
}

TEST_F(FixedProperty, ExactFitAdditionIsBitExact) {
  for (int i = 0; i < 1000; ++i) {
    const int scale = static_cast<int>(rng() % 20);
    const PrecisionCtx ctx(std::max(scale, 1), 0);
    auto draw = [&] {
      std::string d = oracle::random_digits(rng, 1 + static_cast<int>(rng() % 25));
      if (rng() % 2) d.insert(0, 1, '-');
      return BigFixed(BigInt::parse(d), scale);
    };
    const BigFixed a = draw(), b = draw(), c = draw();
    ASSERT_TRUE(fx_add(a, b, ctx).identical(fx_add(b, a, ctx)));
    ASSERT_TRUE(fx_add(fx_add(a, b, ctx), c, ctx).identical(fx_add(a, fx_add(b, c, ctx), ctx)));
  }
}

TEST_F(FixedProperty, CompareMatchesGmp) {
  for (int i = 0; i < 1000; ++i) {
    const BigFixed a = random_fixed(20, 15);
    const BigFixed b = random_fixed(20, 15);
    const int ours = fx_cmp(a, b) < 0 ? -1 : (fx_cmp(a, b) > 0 ? 1 : 0);
    const int theirs = cmp(oracle::to_mpq(a), oracle::to_mpq(b));
    ASSERT_EQ(ours, theirs < 0 ? -1 : (theirs > 0 ? 1 : 0));
  }
}
