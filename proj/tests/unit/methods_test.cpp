#include <gtest/gtest.h>

#include "common/error.hpp"
#include "methods/approximants.hpp"
#include "support/oracle.hpp"

using piapprox::Error;
using piapprox::ErrorCode;
using namespace piapprox::methods;
using piapprox::hiprec::default_guard_dp;
using piapprox::hiprec::fx_to_string;

namespace {

// Reported precision with the guard a table up to n = 100 would use.
const PrecisionCtx k15(15, 12);
const PrecisionCtx k14(14, 12);

std::string at15(const BigFixed& x) { return fx_to_string(x, 15); }

}  // namespace

TEST(MethodNames, RoundTrip) {
  for (MethodId m : kAllMethods) EXPECT_EQ(method_from_name(method_name(m)), m);
  EXPECT_EQ(method_from_name("newton_arcsine"), MethodId::kNewtonArcsine);
  EXPECT_EQ(method_from_name("gregory_leibniz"), MethodId::kLeibniz);
  EXPECT_FALSE(method_from_name("nosuch").has_value());
}

TEST(ZetaParams, FixedTable) {
  EXPECT_EQ(zeta_params(MethodId::kZeta2), (ZetaParams{2, 6}));
  EXPECT_EQ(zeta_params(MethodId::kZeta4), (ZetaParams{4, 90}));
  EXPECT_EQ(zeta_params(MethodId::kZeta6), (ZetaParams{6, 945}));
  EXPECT_EQ(zeta_params(MethodId::kZeta8), (ZetaParams{8, 9450}));
  EXPECT_FALSE(zeta_params(MethodId::kWallis).has_value());
  EXPECT_THROW(zeta_params_for_exponent(3), Error);
  EXPECT_THROW(zeta_pi({4, 91}, 5, k14), Error);
}

TEST(Wallis, Examples) {
  EXPECT_EQ(at15(wallis(1, k15)), "2.666666666666667");
  EXPECT_EQ(at15(wallis(5, k15)), "3.002175954556907");
  EXPECT_THROW(wallis(0, k15), Error);
}

TEST(Wallis, MatchesExactProduct) {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    ASSERT_EQ(at15(wallis(n, k15)), oracle::round_text(oracle::wallis(n), 15)) << "n=" << n;
  }
}

TEST(Wallis, TenMillion) {
  const PrecisionCtx ctx(15, default_guard_dp(10'000'000));
  EXPECT_EQ(at15(wallis(10'000'000, ctx)), "3.141592575049982");
}

TEST(Leibniz, Examples) {
  EXPECT_EQ(leibniz(0, k15), BigFixed::from_int(4));
  EXPECT_EQ(at15(leibniz(5, k15)), "2.976046176046176");
  // Exact partial sum; the golden row reads 3.151493401070910.
  EXPECT_EQ(at15(leibniz(100, k15)), "3.151493401070991");
}

TEST(Leibniz, MatchesExactSum) {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    ASSERT_EQ(at15(leibniz(n, k15)), oracle::round_text(oracle::leibniz(n), 15)) << "n=" << n;
  }
}

TEST(NewtonArcsine, Examples) {
  EXPECT_EQ(newton_arcsine(0, k15), BigFixed::from_int(3));
  EXPECT_EQ(at15(newton_arcsine(1, k15)), "3.125000000000000");
  EXPECT_EQ(at15(newton_arcsine(5, k15)), "3.141576715774866");
}

TEST(NewtonArcsine, RecurrenceMatchesFactorialForm) {
  Approximant gen(MethodId::kNewtonArcsine, k15);
  for (unsigned long k = 0; k <= 10; ++k) {
    gen.advance_to(k);
    const mpq_class exact = oracle::arcsine_term(k);
    const mpq_class ours = oracle::to_mpq(gen.newton_term());
    const mpq_class ulp(1, oracle::pow10(static_cast<unsigned>(k15.scale())));
    EXPECT_LE(abs(ours - exact), (k + 1) * ulp) << "t_" << k;
  }
  EXPECT_EQ(oracle::arcsine_term(1), mpq_class(1, 48));
}

TEST(NewtonArcsine, TermRatioBelowQuarter) {
  for (unsigned long k = 1; k <= 60; ++k) {
    EXPECT_LT(oracle::arcsine_term(k + 1) / oracle::arcsine_term(k), mpq_class(1, 4)) << "k=" << k;
  }
  Approximant gen(MethodId::kNewtonArcsine, k15);
  gen.advance_to(1);
  for (int k = 1; k <= 20; ++k) {
    const BigFixed prev = gen.newton_term();
    gen.step();
    EXPECT_LT(piapprox::hiprec::fx_mul_ratio(gen.newton_term(), 4, 1, k15), prev);
  }
}

TEST(NewtonArcsine, MatchesExactSum) {
  for (unsigned long n = 0; n <= 60; ++n) {
    ASSERT_EQ(at15(newton_arcsine(n, k15)), oracle::round_text(oracle::newton(n), 15)) << "n=" << n;
  }
}

TEST(EulerCF, Examples) {
  EXPECT_EQ(at15(euler_cf(1, k15)), "2.666666666666667");
  EXPECT_EQ(at15(euler_cf(2, k15)), "3.466666666666667");
  EXPECT_EQ(at15(euler_cf(5, k15)), at15(leibniz(5, k15)));
  EXPECT_EQ(at15(euler_cf(5, k15)), "2.976046176046176");
  EXPECT_THROW(euler_cf(0, k15), Error);
}

TEST(EulerCF, ConvergentsAreTheContinuedFraction) {
  Approximant gen(MethodId::kEulerCF, k15);
  for (unsigned long d = 1; d <= 40; ++d) {
    gen.advance_to(d);
    const auto [num, den] = gen.convergent();
    mpq_class ours(oracle::to_mpz(num), oracle::to_mpz(den));
    ours.canonicalize();
    ASSERT_EQ(ours, oracle::euler_cf(d)) << "d=" << d;
  }
}

TEST(EulerCF, EqualsLeibnizExactly) {
  // Euler transformation: the depth-d convergent is the d-th partial sum.
  for (unsigned long d = 1; d <= 20; ++d) {
    ASSERT_EQ(oracle::euler_cf(d), oracle::leibniz(d)) << "d=" << d;
    Approximant gen(MethodId::kEulerCF, k15);
    gen.advance_to(d);
    const auto [num, den] = gen.convergent();
    mpq_class ours(oracle::to_mpz(num), oracle::to_mpz(den));
    ours.canonicalize();
    ASSERT_EQ(ours, oracle::leibniz(d));
  }
}

TEST(EulerCF, EqualsLeibnizWithinReportedUlp) {
  const mpq_class ulp(1, oracle::pow10(15));
  for (std::uint64_t d = 1; d <= 100; ++d) {
    const mpq_class gap = abs(oracle::to_mpq(euler_cf(d, k15)) - oracle::to_mpq(leibniz(d, k15)));
    ASSERT_LE(gap, ulp) << "d=" << d;
  }
}

TEST(Viete, Examples) {
  // Exact nested radicals; the golden rows read 3.061467458921242 and 3.121445152263491.
  EXPECT_EQ(at15(viete(1, k15)), "3.061467458920718");
  EXPECT_EQ(at15(viete(2, k15)), "3.121445152258052");
  EXPECT_EQ(at15(viete(25, k15)), "3.141592653589793");
  EXPECT_THROW(viete(0, k15), Error);
}

TEST(Viete, MatchesHighPrecisionOracle) {
  for (unsigned long n = 1; n <= 100; ++n) {
    ASSERT_EQ(at15(viete(n, k15)), oracle::viete(n, 15)) << "n=" << n;
  }
}

TEST(Viete, GuardRule) {
  EXPECT_EQ(viete_guard_dp(1), 11);
  EXPECT_EQ(viete_guard_dp(25), 26);
  EXPECT_EQ(viete_guard_dp(100), 71);
  // Saturates at 15 dp from n = 25 on even with no caller guard.
  const PrecisionCtx bare(15, 0);
  for (std::uint64_t n = 25; n <= 60; ++n) EXPECT_EQ(at15(viete(n, bare)), "3.141592653589793") << "n=" << n;
}

TEST(Zeta, Examples) {
  EXPECT_EQ(fx_to_string(zeta_pi({2, 6}, 10, k14), 14), "3.04936163598207");
  EXPECT_EQ(fx_to_string(zeta_pi({8, 9450}, 5, k14), 14), "3.14159231269578");
  // sqrt(6 * 5269/3600); the golden row reads 3.09466952411370.
  EXPECT_EQ(fx_to_string(zeta_pi({2, 6}, 5, k14), 6), "2.963388");
  EXPECT_THROW(zeta_pi({2, 6}, 0, k14), Error);
}

TEST(Zeta, MatchesOracle) {
  for (const auto& p : kZetaTable) {
    for (std::uint64_t n = 1; n <= 100; ++n) {
      ASSERT_EQ(fx_to_string(zeta_pi(p, n, k14), 14), oracle::zeta(p.exponent, p.constant, n, 14))
          << "s=" << p.exponent << " n=" << n;
    }
  }
}

TEST(Generator, FreshStatesAndStepping) {
  Approximant w(MethodId::kWallis, k15);
  w.advance_to(5);
  EXPECT_EQ(w.n(), 5u);
  EXPECT_EQ(at15(w.value()), "3.002175954556907");

  Approximant l(MethodId::kLeibniz, k15);
  EXPECT_EQ(l.n(), 0u);
  EXPECT_EQ(l.value(), BigFixed::from_int(4));

  Approximant z(MethodId::kZeta8, k14);
  for (int i = 0; i < 10; ++i) z.step();
  EXPECT_EQ(z.n(), 10u);
  EXPECT_EQ(fx_to_string(z.value(), 14), "3.14159264970117");

  EXPECT_THROW(w.advance_to(4), Error);
  EXPECT_THROW(w.convergent(), Error);
  EXPECT_THROW(w.newton_term(), Error);
}

TEST(Generator, ResumedEqualsDirectBitExact) {
  for (MethodId m : kAllMethods) {
    Approximant gen(m, k15);
    for (std::uint64_t n : {1, 2, 3, 10, 17, 40, 77}) {
      gen.advance_to(n);
      ASSERT_TRUE(gen.value().identical(approximant(m, n, k15))) << method_name(m) << " n=" << n;
    }
  }
}

TEST(Generator, ValueDoesNotDisturbState) {
  Approximant a(MethodId::kViete, k15);
  Approximant b(MethodId::kViete, k15);
  for (int i = 0; i < 30; ++i) {
    a.step();
    b.step();
    (void)a.value();
  }
  EXPECT_TRUE(a.value().identical(b.value()));
}

TEST(FirstIndex, PerMethod) {
  EXPECT_EQ(first_index(MethodId::kLeibniz), 0u);
  EXPECT_EQ(first_index(MethodId::kNewtonArcsine), 0u);
  for (MethodId m : {MethodId::kWallis, MethodId::kEulerCF, MethodId::kViete, MethodId::kZeta2}) {
    EXPECT_EQ(first_index(m), 1u);
    try {
      approximant(m, 0, k15);
      ADD_FAILURE() << method_name(m);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
}
