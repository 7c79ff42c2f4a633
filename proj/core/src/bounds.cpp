#include "gridwalk/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridwalk {

std::int64_t axis_term(std::int64_t copies, std::int64_t range) {
  if (copies < 1 || range < 1) {
    throw std::invalid_argument("axis_term requires copies, range >= 1");
  }
  const std::int64_t half_down = range / 2;
  const std::int64_t half_up = range - half_down;
  return 2 * copies * half_down * half_up - (range % 2 == 0 ? 1 : 0);
}

std::int64_t upper_bound(const GridDims& dims) {
  require_valid_dims(dims);
  return axis_term(dims.n, dims.m) + axis_term(dims.m, dims.n);
}

std::int64_t lower_target(const GridDims& dims) {
  require_valid_dims(dims);
  const std::int64_t a = std::min(dims.m, dims.n);
  const std::int64_t b = std::max(dims.m, dims.n);
  if (a == 1) {
    return b == 1 ? 0 : b * b / 2 - 1;
  }
  if (a == 2) {
    return (b + 1) * (b + 1) - 4;
  }
  // mn(m+n)/2, divided where it stays integral.
  const std::int64_t cells = a * b;
  const std::int64_t total =
      cells % 2 == 0 ? cells / 2 * (a + b) : cells * ((a + b) / 2);
  const bool a_even = a % 2 == 0;
  const bool b_even = b % 2 == 0;
  if (a_even && b_even) return total - 3;
  if (!a_even && !b_even) return total - (a + b) / 2 - 1;
  const std::int64_t even_side = a_even ? a : b;
  return total - even_side / 2 - 1;
}

TheoremStatus theorem_status(const GridDims& dims) {
  TheoremStatus status;
  status.dims = dims;
  status.lower_target = lower_target(dims);
  status.upper = upper_bound(dims);
  const std::int64_t gap = status.upper - status.lower_target;
  if (gap != 0 && gap != 1) {
    throw std::logic_error("bound gap for " + std::to_string(dims.m) + "x" +
                           std::to_string(dims.n) + " is " +
                           std::to_string(gap) + ", expected 0 or 1");
  }
  status.exactness =
      gap == 0 ? Exactness::Exact : Exactness::TwoPointInterval;
  return status;
}

std::int64_t mcneil(std::int64_t n) {
  if (n < 2 || n > kMcneilMaxN) {
    throw std::domain_error("mcneil(n) needs 2 <= n <= " +
                            std::to_string(kMcneilMaxN) + ", got " +
                            std::to_string(n));
  }
  const std::int64_t cube = n * n * n;
  return n % 2 == 0 ? cube - 3 : cube - n - 1;
}

}  // namespace gridwalk
