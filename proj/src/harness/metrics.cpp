#include "harness/metrics.hpp"

#include <algorithm>
#include <string>

namespace piapprox::harness {

using hiprec::fx_div;
using hiprec::fx_mul_ratio;
using hiprec::fx_sub;

PctError pct_error(const BigFixed& x, const ReferencePi& ref, const PrecisionCtx& ctx) {
  // (ref - x) * 100 / ref keeps the subtraction exact before the one division.
  const PrecisionCtx wide(std::max({ref.value.scale(), x.scale(), ctx.scale(), 1}), 0);
  const BigFixed diff = fx_sub(ref.value, x, wide);
  BigFixed signed_pct = fx_div(fx_mul_ratio(diff, 100, 1, wide), ref.value, ctx);
  BigFixed abs_pct = signed_pct.abs();
  return {std::move(signed_pct), std::move(abs_pct)};
}

int digits_correct(const BigFixed& x, const ReferencePi& ref) {
  const int dp = ref.working_dp;
  const std::string a = hiprec::fx_to_string(hiprec::fx_truncate(x, dp), dp);
  const std::string b = hiprec::fx_to_string(hiprec::fx_truncate(ref.value, dp), dp);
  const std::size_t dot_a = a.find('.');
  const std::size_t dot_b = b.find('.');
  if (a.compare(0, dot_a, b, 0, dot_b) != 0) return 0;
  int count = 0;
  for (std::size_t i = 1; dot_a + i < a.size() && dot_b + i < b.size(); ++i) {
    if (a[dot_a + i] != b[dot_b + i]) break;
    ++count;
  }
  return count;
}

}  // namespace piapprox::harness
