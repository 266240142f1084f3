#pragma once

#include <optional>
#include <string_view>

#include "hiprec/big_fixed.hpp"

namespace piapprox::harness {

using hiprec::BigFixed;
using hiprec::PrecisionCtx;

enum class ReferenceProvenance { kComputed, kUserLiteral };

/// Reference value of pi that errors and digit counts are measured against.
struct ReferencePi {
  BigFixed value;
  ReferenceProvenance provenance;
  int working_dp;
};

inline constexpr std::string_view kPiPrefix15 = "3.141592653589793";

/// Computed mode sums the arcsine series until it is stationary beyond
/// working_dp + 2 digits. Literal mode wraps the given decimal. Either way the
/// first 15 fractional digits are checked; failure is Error(kReferenceIntegrity).
ReferencePi reference_pi(const PrecisionCtx& ctx, std::optional<std::string_view> literal = std::nullopt);

}  // namespace piapprox::harness
