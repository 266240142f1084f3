#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace piapprox::harness {

/// Strictly increasing, non-empty list of indices at which a method is sampled.
class Schedule {
 public:
  /// Throws Error(kInvalidArgument) if `points` is empty or not strictly increasing.
  explicit Schedule(std::vector<std::uint64_t> points);

  /// Grammar: comma list of `N` or `start:stop:step` (stop inclusive).
  /// Throws Error(kParse) on malformed input.
  static Schedule parse(std::string_view expr);

  const std::vector<std::uint64_t>& points() const noexcept { return points_; }
  std::uint64_t front() const noexcept { return points_.front(); }
  std::uint64_t back() const noexcept { return points_.back(); }
  std::size_t size() const noexcept { return points_.size(); }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<std::uint64_t> points_;
};

/// {5, 10, ..., 100} + {10^3, ..., 10^7}: the single-method series/product tables.
Schedule long_schedule();
/// {1, ..., 10} + {15, 20, ..., 100}: continued fraction and nested radicals.
Schedule short_schedule();
/// {5, 10, ..., 100}: the zeta tables.
Schedule zeta_schedule();

}  // namespace piapprox::harness
