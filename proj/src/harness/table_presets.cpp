#include "harness/table_presets.hpp"

#include <string>

#include "common/error.hpp"

namespace piapprox::harness {

using methods::MethodId;

hiprec::PrecisionCtx TablePreset::ctx() const {
  return hiprec::PrecisionCtx(working_dp, hiprec::default_guard_dp(schedule.back()));
}

TablePreset table_preset(int id) {
  const std::vector<MethodId> zetas = {MethodId::kZeta2, MethodId::kZeta4, MethodId::kZeta6, MethodId::kZeta8};
  switch (id) {
    case 1: return {1, {MethodId::kWallis}, long_schedule(), 15};
    case 2: return {2, {MethodId::kLeibniz}, long_schedule(), 15};
    case 3: return {3, {MethodId::kNewtonArcsine}, long_schedule(), 15};
    case 4: return {4, {MethodId::kEulerCF}, short_schedule(), 15};
    case 5: return {5, {MethodId::kViete}, short_schedule(), 15};
    case 6: return {6, zetas, zeta_schedule(), 14};
    case 7: return {7, zetas, zeta_schedule(), 14};
    default: fail(ErrorCode::kInvalidArgument, "table id must be 1..7, got " + std::to_string(id));
  }
}

}  // namespace piapprox::harness
