#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>

#include "hiprec/big_fixed.hpp"

namespace piapprox::methods {

using hiprec::BigFixed;
using hiprec::BigInt;
using hiprec::PrecisionCtx;

enum class MethodId {
  kWallis,
  kLeibniz,
  kNewtonArcsine,
  kEulerCF,
  kViete,
  kZeta2,
  kZeta4,
  kZeta6,
  kZeta8,
};

inline constexpr std::array<MethodId, 9> kAllMethods = {
    MethodId::kWallis, MethodId::kLeibniz, MethodId::kNewtonArcsine, MethodId::kEulerCF, MethodId::kViete,
    MethodId::kZeta2,  MethodId::kZeta4,   MethodId::kZeta6,         MethodId::kZeta8,
};

std::string_view method_name(MethodId id) noexcept;
/// Canonical names plus a few aliases (`newton_arcsine`, `euler_cf`, ...).
std::optional<MethodId> method_from_name(std::string_view name) noexcept;

/// Smallest index accepted by the direct evaluators: 0 for the two series that
/// sum from k = 0, 1 for everything else.
std::uint64_t first_index(MethodId id) noexcept;

/// pi = (constant * sum_{k>=1} k^-exponent)^(1/exponent)
struct ZetaParams {
  unsigned exponent;
  unsigned constant;

  friend bool operator==(const ZetaParams&, const ZetaParams&) = default;
};

inline constexpr std::array<ZetaParams, 4> kZetaTable = {{{2, 6}, {4, 90}, {6, 945}, {8, 9450}}};

std::optional<ZetaParams> zeta_params(MethodId id) noexcept;
/// Throws Error(kInvalidArgument) for exponents outside {2, 4, 6, 8}.
ZetaParams zeta_params_for_exponent(unsigned exponent);

/// Extra guard digits the nested-radical evaluation needs at index n:
/// ceil(0.61 n) + 10, covering the digits lost in 2 - sqrt(2 + ...).
int viete_guard_dp(std::uint64_t n) noexcept;

/// Resumable generator for one method. step() advances the index by one with a
/// constant number of arithmetic operations; value() is a pure function of
/// (method, n, ctx).
class Approximant {
 public:
  Approximant(MethodId method, const PrecisionCtx& ctx);

  MethodId method() const noexcept { return method_; }
  const PrecisionCtx& ctx() const noexcept { return ctx_; }
  std::uint64_t n() const noexcept { return n_; }

  void step();
  /// Steps until n() == target. Throws Error(kInvalidArgument) if already past it.
  void advance_to(std::uint64_t target);
  BigFixed value() const;

  /// Exact convergent (4 * B_d, A_d) of the continued fraction; EulerCF only.
  std::pair<BigInt, BigInt> convergent() const;
  /// Current series term t_n; NewtonArcsine only.
  const BigFixed& newton_term() const;

 private:
  struct Wallis {
    BigFixed product;
  };
  struct Leibniz {
    BigFixed sum;
    BigFixed four;
  };
  struct Newton {
    BigFixed sum;
    BigFixed term;
  };
  struct EulerCF {
    BigInt num_prev, num, den_prev, den;
  };
  struct Viete {
    BigFixed radical;
  };
  struct Zeta {
    ZetaParams params;
    BigFixed sum;
  };
  using State = std::variant<Wallis, Leibniz, Newton, EulerCF, Viete, Zeta>;

  PrecisionCtx viete_ctx(std::uint64_t n) const;

  MethodId method_;
  PrecisionCtx ctx_;
  std::uint64_t n_ = 0;
  State state_;
};

BigFixed wallis(std::uint64_t n, const PrecisionCtx& ctx);
BigFixed leibniz(std::uint64_t n, const PrecisionCtx& ctx);
BigFixed newton_arcsine(std::uint64_t n, const PrecisionCtx& ctx);
BigFixed euler_cf(std::uint64_t depth, const PrecisionCtx& ctx);
BigFixed viete(std::uint64_t n, const PrecisionCtx& ctx);
BigFixed zeta_pi(ZetaParams params, std::uint64_t n, const PrecisionCtx& ctx);
/// Dispatches to the evaluator for `method`; enforces first_index().
BigFixed approximant(MethodId method, std::uint64_t n, const PrecisionCtx& ctx);

}  // namespace piapprox::methods
