#pragma once

#include <vector>

#include "harness/schedule.hpp"
#include "hiprec/big_fixed.hpp"
#include "methods/approximants.hpp"

namespace piapprox::harness {

inline constexpr int kTableCount = 7;

/// Methods, sampling points and printed precision of one built-in table.
struct TablePreset {
  int id;
  std::vector<methods::MethodId> methods;
  Schedule schedule;
  int working_dp;

  /// working_dp plus the default guard for the schedule's largest n.
  hiprec::PrecisionCtx ctx() const;
};

/// Throws Error(kInvalidArgument) unless 1 <= id <= 7.
TablePreset table_preset(int id);

}  // namespace piapprox::harness
