#include "methods/approximants.hpp"

#include <algorithm>
#include <string>

#include "common/error.hpp"

namespace piapprox::methods {

using hiprec::fx_add;
using hiprec::fx_from_ratio;
using hiprec::fx_mul;
using hiprec::fx_mul_ratio;
using hiprec::fx_nth_root;
using hiprec::fx_rescale;
using hiprec::fx_sqrt;
using hiprec::fx_sub;

namespace {

struct NameEntry {
  std::string_view name;
  MethodId id;
};

constexpr NameEntry kNames[] = {
    {"wallis", MethodId::kWallis},
    {"leibniz", MethodId::kLeibniz},
    {"gregory_leibniz", MethodId::kLeibniz},
    {"newton", MethodId::kNewtonArcsine},
    {"newton_arcsine", MethodId::kNewtonArcsine},
    {"arcsine", MethodId::kNewtonArcsine},
    {"eulercf", MethodId::kEulerCF},
    {"euler_cf", MethodId::kEulerCF},
    {"euler", MethodId::kEulerCF},
    {"viete", MethodId::kViete},
    {"zeta2", MethodId::kZeta2},
    {"zeta4", MethodId::kZeta4},
    {"zeta6", MethodId::kZeta6},
    {"zeta8", MethodId::kZeta8},
};

// Keeps (2k+1)^2 and 8(k+1)(2k+3) inside 64 bits.
constexpr std::uint64_t kMaxSeriesIndex = 1'000'000'000;

BigFixed scaled_int(std::int64_t value, const PrecisionCtx& ctx) {
  return fx_rescale(BigFixed::from_int(value), ctx.scale());
}

}  // namespace

std::string_view method_name(MethodId id) noexcept {
  switch (id) {
    case MethodId::kWallis: return "wallis";
    case MethodId::kLeibniz: return "leibniz";
    case MethodId::kNewtonArcsine: return "newton";
    case MethodId::kEulerCF: return "eulercf";
    case MethodId::kViete: return "viete";
    case MethodId::kZeta2: return "zeta2";
    case MethodId::kZeta4: return "zeta4";
    case MethodId::kZeta6: return "zeta6";
    case MethodId::kZeta8: return "zeta8";
  }
  return "unknown";
}

std::optional<MethodId> method_from_name(std::string_view name) noexcept {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

std::uint64_t first_index(MethodId id) noexcept {
  return (id == MethodId::kLeibniz || id == MethodId::kNewtonArcsine) ? 0 : 1;
}

std::optional<ZetaParams> zeta_params(MethodId id) noexcept {
  switch (id) {
    case MethodId::kZeta2: return kZetaTable[0];
    case MethodId::kZeta4: return kZetaTable[1];
    case MethodId::kZeta6: return kZetaTable[2];
    case MethodId::kZeta8: return kZetaTable[3];
    default: return std::nullopt;
  }
}

ZetaParams zeta_params_for_exponent(unsigned exponent) {
  for (const auto& p : kZetaTable) {
    if (p.exponent == exponent) return p;
  }
  fail(ErrorCode::kInvalidArgument, "unsupported zeta exponent " + std::to_string(exponent));
}

int viete_guard_dp(std::uint64_t n) noexcept { return static_cast<int>((61 * n + 99) / 100) + 10; }

Approximant::Approximant(MethodId method, const PrecisionCtx& ctx) : method_(method), ctx_(ctx) {
  switch (method) {
    case MethodId::kWallis:
      state_ = Wallis{scaled_int(1, ctx)};
      break;
    case MethodId::kLeibniz: {
      BigFixed four = scaled_int(4, ctx);
      state_ = Leibniz{four, four};
      break;
    }
    case MethodId::kNewtonArcsine: {
      BigFixed half = fx_from_ratio(BigInt(1), BigInt(2), ctx);
      state_ = Newton{half, half};
      break;
    }
    case MethodId::kEulerCF:
      state_ = EulerCF{BigInt(1), BigInt(1), BigInt(0), BigInt(1)};
      break;
    case MethodId::kViete:
      state_ = Viete{BigFixed()};
      break;
    case MethodId::kZeta2:
    case MethodId::kZeta4:
    case MethodId::kZeta6:
    case MethodId::kZeta8:
      state_ = Zeta{*zeta_params(method), BigFixed()};
      break;
  }
}

PrecisionCtx Approximant::viete_ctx(std::uint64_t n) const {
  return ctx_.with_guard(std::max(ctx_.guard_dp(), viete_guard_dp(n)));
}

void Approximant::step() {
  const std::uint64_t k = n_ + 1;
  std::visit(
      [&](auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Wallis>) {
          if (k > kMaxSeriesIndex) fail(ErrorCode::kInvalidArgument, "wallis index too large");
          // (2k/(2k-1)) * (2k/(2k+1)) = 4k^2 / (4k^2 - 1)
          const std::uint64_t four_k2 = 4 * k * k;
          s.product = fx_mul_ratio(s.product, four_k2, four_k2 - 1, ctx_);
        } else if constexpr (std::is_same_v<S, Leibniz>) {
          const BigFixed term = fx_mul_ratio(s.four, 1, 2 * k + 1, ctx_);
          s.sum = (k % 2 == 0) ? fx_add(s.sum, term, ctx_) : fx_sub(s.sum, term, ctx_);
        } else if constexpr (std::is_same_v<S, Newton>) {
          if (k > kMaxSeriesIndex) fail(ErrorCode::kInvalidArgument, "arcsine index too large");
          // t_{j+1} = t_j (2j+1)^2 / (8 (j+1) (2j+3)) with j = k - 1
          const std::uint64_t j = k - 1;
          s.term = fx_mul_ratio(s.term, (2 * j + 1) * (2 * j + 1), 8 * (j + 1) * (2 * j + 3), ctx_);
          s.sum = fx_add(s.sum, s.term, ctx_);
        } else if constexpr (std::is_same_v<S, EulerCF>) {
          // A_k = 2 A_{k-1} + (2k-1)^2 A_{k-2}, same for B.
          const BigInt partial = BigInt::from_u64(2 * k - 1).pow(2);
          BigInt num = BigInt(2) * s.num + partial * s.num_prev;
          BigInt den = BigInt(2) * s.den + partial * s.den_prev;
          s.num_prev = std::exchange(s.num, std::move(num));
          s.den_prev = std::exchange(s.den, std::move(den));
        } else if constexpr (std::is_same_v<S, Viete>) {
          const PrecisionCtx inner = viete_ctx(k);
          s.radical = fx_sqrt(fx_add(BigFixed::from_int(2), s.radical, inner), inner);
        } else if constexpr (std::is_same_v<S, Zeta>) {
          const BigInt denominator = BigInt::from_u64(k).pow(s.params.exponent);
          s.sum = fx_add(s.sum, fx_from_ratio(BigInt(1), denominator, ctx_), ctx_);
        }
      },
      state_);
  ++n_;
}

void Approximant::advance_to(std::uint64_t target) {
  if (target < n_) {
    fail(ErrorCode::kInvalidArgument,
         "cannot rewind generator from n=" + std::to_string(n_) + " to n=" + std::to_string(target));
  }
  while (n_ < target) step();
}

BigFixed Approximant::value() const {
  return std::visit(
      [&](const auto& s) -> BigFixed {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Wallis>) {
          return fx_mul_ratio(s.product, 2, 1, ctx_);
        } else if constexpr (std::is_same_v<S, Leibniz>) {
          return s.sum;
        } else if constexpr (std::is_same_v<S, Newton>) {
          return fx_mul_ratio(s.sum, 6, 1, ctx_);
        } else if constexpr (std::is_same_v<S, EulerCF>) {
          return fx_from_ratio(BigInt(4) * s.den, s.num, ctx_);
        } else if constexpr (std::is_same_v<S, Viete>) {
          // 2^(n+1) sqrt(2 - r_n), the radical carried at the widened scale.
          const PrecisionCtx inner = viete_ctx(n_);
          const BigFixed root = fx_sqrt(fx_sub(BigFixed::from_int(2), s.radical, inner), inner);
          return fx_mul(BigFixed(BigInt(2).pow(static_cast<unsigned>(n_ + 1)), 0), root, ctx_);
        } else {
          const BigFixed scaled = fx_mul_ratio(s.sum, s.params.constant, 1, ctx_);
          return fx_nth_root(scaled, s.params.exponent, ctx_);
        }
      },
      state_);
}

std::pair<BigInt, BigInt> Approximant::convergent() const {
  const auto* s = std::get_if<EulerCF>(&state_);
  if (s == nullptr) fail(ErrorCode::kInvalidArgument, "convergent() requires the continued-fraction method");
  return {BigInt(4) * s->den, s->num};
}

const BigFixed& Approximant::newton_term() const {
  const auto* s = std::get_if<Newton>(&state_);
  if (s == nullptr) fail(ErrorCode::kInvalidArgument, "newton_term() requires the arcsine method");
  return s->term;
}

namespace {

BigFixed evaluate(MethodId method, std::uint64_t n, const PrecisionCtx& ctx) {
  if (n < first_index(method)) {
    fail(ErrorCode::kInvalidArgument,
         std::string(method_name(method)) + " requires n >= " + std::to_string(first_index(method)));
  }
  Approximant state(method, ctx);
  state.advance_to(n);
  return state.value();
}

}  // namespace

BigFixed wallis(std::uint64_t n, const PrecisionCtx& ctx) { return evaluate(MethodId::kWallis, n, ctx); }
BigFixed leibniz(std::uint64_t n, const PrecisionCtx& ctx) { return evaluate(MethodId::kLeibniz, n, ctx); }
BigFixed newton_arcsine(std::uint64_t n, const PrecisionCtx& ctx) {
  return evaluate(MethodId::kNewtonArcsine, n, ctx);
}
BigFixed euler_cf(std::uint64_t depth, const PrecisionCtx& ctx) { return evaluate(MethodId::kEulerCF, depth, ctx); }
BigFixed viete(std::uint64_t n, const PrecisionCtx& ctx) { return evaluate(MethodId::kViete, n, ctx); }

BigFixed zeta_pi(ZetaParams params, std::uint64_t n, const PrecisionCtx& ctx) {
  const ZetaParams checked = zeta_params_for_exponent(params.exponent);
  if (checked.constant != params.constant) {
    fail(ErrorCode::kInvalidArgument, "zeta constant does not match exponent " + std::to_string(params.exponent));
  }
  for (MethodId id : {MethodId::kZeta2, MethodId::kZeta4, MethodId::kZeta6, MethodId::kZeta8}) {
    if (zeta_params(id) == checked) return evaluate(id, n, ctx);
  }
  fail(ErrorCode::kInvalidArgument, "unsupported zeta parameters");
}

BigFixed approximant(MethodId method, std::uint64_t n, const PrecisionCtx& ctx) { return evaluate(method, n, ctx); }

}  // namespace piapprox::methods
