#pragma once

#include "harness/reference.hpp"

namespace piapprox::harness {

struct PctError {
  BigFixed signed_pct;  // (1 - x/ref) * 100, positive below pi
  BigFixed abs_pct;
};

/// Computed at ctx scale; exactly zero when x equals the reference.
PctError pct_error(const BigFixed& x, const ReferencePi& ref, const PrecisionCtx& ctx);

/// Leading fractional digits of x that agree with the reference, both truncated
/// at ref.working_dp. 0 when the integer parts differ.
int digits_correct(const BigFixed& x, const ReferencePi& ref);

}  // namespace piapprox::harness
