#include "harness/schedule.hpp"

#include <charconv>
#include <string>

#include "common/error.hpp"

namespace piapprox::harness {

namespace {

std::uint64_t parse_index(std::string_view token, std::string_view expr) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    fail(ErrorCode::kParse, "malformed schedule '" + std::string(expr) + "': bad index '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Schedule::Schedule(std::vector<std::uint64_t> points) : points_(std::move(points)) {
  if (points_.empty()) fail(ErrorCode::kInvalidArgument, "schedule is empty");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i] <= points_[i - 1]) {
      fail(ErrorCode::kInvalidArgument, "schedule must be strictly increasing (" + std::to_string(points_[i - 1]) +
                                            " then " + std::to_string(points_[i]) + ")");
    }
  }
}

Schedule Schedule::parse(std::string_view expr) {
  std::vector<std::uint64_t> points;
  std::size_t pos = 0;
  while (pos <= expr.size()) {
    std::size_t comma = expr.find(',', pos);
    if (comma == std::string_view::npos) comma = expr.size();
    const std::string_view item = expr.substr(pos, comma - pos);
    const std::size_t c1 = item.find(':');
    if (c1 == std::string_view::npos) {
      points.push_back(parse_index(item, expr));
    } else {
      const std::size_t c2 = item.find(':', c1 + 1);
      if (c2 == std::string_view::npos || item.find(':', c2 + 1) != std::string_view::npos) {
        fail(ErrorCode::kParse, "malformed schedule '" + std::string(expr) + "': range must be start:stop:step");
      }
      const std::uint64_t start = parse_index(item.substr(0, c1), expr);
      const std::uint64_t stop = parse_index(item.substr(c1 + 1, c2 - c1 - 1), expr);
      const std::uint64_t step = parse_index(item.substr(c2 + 1), expr);
      if (step == 0 || stop < start) {
        fail(ErrorCode::kParse, "malformed schedule '" + std::string(expr) + "': empty or non-advancing range");
      }
      for (std::uint64_t n = start; n <= stop; n += step) {
        points.push_back(n);
        if (stop - n < step) break;
      }
    }
    pos = comma + 1;
  }
  try {
    return Schedule(std::move(points));
  } catch (const Error& e) {
    fail(ErrorCode::kParse, "malformed schedule '" + std::string(expr) + "': " + e.what());
  }
}

Schedule long_schedule() {
  std::vector<std::uint64_t> points;
  for (std::uint64_t n = 5; n <= 100; n += 5) points.push_back(n);
  for (std::uint64_t n = 1000; n <= 10'000'000; n *= 10) points.push_back(n);
  return Schedule(std::move(points));
}

Schedule short_schedule() {
  std::vector<std::uint64_t> points;
  for (std::uint64_t n = 1; n <= 10; ++n) points.push_back(n);
  for (std::uint64_t n = 15; n <= 100; n += 5) points.push_back(n);
  return Schedule(std::move(points));
}

Schedule zeta_schedule() {
  std::vector<std::uint64_t> points;
  for (std::uint64_t n = 5; n <= 100; n += 5) points.push_back(n);
  return Schedule(std::move(points));
}

}  // namespace piapprox::harness
