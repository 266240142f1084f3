#include "harness/reference.hpp"

#include <algorithm>
#include <string>

#include "common/error.hpp"
#include "methods/approximants.hpp"

namespace piapprox::harness {

namespace {

void check_prefix(const BigFixed& value, std::string_view origin) {
  if (value.scale() < 15 || hiprec::fx_to_string(hiprec::fx_truncate(value, 15), 15) != kPiPrefix15) {
    fail(ErrorCode::kReferenceIntegrity,
         "reference pi (" + std::string(origin) + ") does not start with " + std::string(kPiPrefix15));
  }
}

BigFixed compute_pi(const PrecisionCtx& ctx) {
  // Extra digits beyond what any caller reads so stationarity at
  // working_dp + 2 is judged on digits that rounding cannot disturb.
  const int stationary_dp = std::max(ctx.working_dp(), 15) + 2;
  const int scale = std::max(ctx.scale(), stationary_dp) + 4;
  const PrecisionCtx inner(scale, 0);
  methods::Approximant series(methods::MethodId::kNewtonArcsine, inner);
  BigFixed previous = series.value();
  for (;;) {
    series.step();
    BigFixed current = series.value();
    const bool agree = hiprec::fx_truncate(previous, stationary_dp).identical(hiprec::fx_truncate(current, stationary_dp));
    // The tail after step k is below 6 t_k / 3, so a vanished term means every
    // later partial sum shares these digits too.
    if (agree && series.newton_term().is_zero()) return current;
    previous = std::move(current);
  }
}

}  // namespace

ReferencePi reference_pi(const PrecisionCtx& ctx, std::optional<std::string_view> literal) {
  if (literal) {
    BigFixed value;
    try {
      value = BigFixed::parse(*literal);
    } catch (const Error& e) {
      fail(ErrorCode::kReferenceIntegrity, std::string("reference literal: ") + e.what());
    }
    if (value <= BigFixed::from_int(3) || value >= BigFixed::from_int(4)) {
      fail(ErrorCode::kReferenceIntegrity, "reference literal '" + std::string(*literal) + "' is outside (3, 4)");
    }
    check_prefix(value, "literal");
    if (value.scale() < ctx.scale()) value = hiprec::fx_rescale(value, ctx.scale());
    return {std::move(value), ReferenceProvenance::kUserLiteral, ctx.working_dp()};
  }
  const BigFixed exact = compute_pi(ctx);
  check_prefix(exact, "computed");
  return {hiprec::fx_round(exact, std::max(ctx.scale(), 17)), ReferenceProvenance::kComputed, ctx.working_dp()};
}

}  // namespace piapprox::harness
