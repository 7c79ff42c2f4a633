#pragma once

#include <cstdint>

#include "gridwalk/grid.hpp"

namespace gridwalk {

// Maximum total |step| over arrangements of `copies` copies of {1..range},
// as a closed form: 2 * copies * floor(range/2) * ceil(range/2) - [range even].
// Note: for copies == 1 and odd range >= 3 the closed form sits one above
// the true single-copy maximum floor(range^2/2) - 1; see the test suite.
std::int64_t axis_term(std::int64_t copies, std::int64_t range);

// Closed-form upper bound on any walk length: the two axes cannot each beat
// their one-dimensional maxima.  Equals axis_term(n, m) + axis_term(m, n).
std::int64_t upper_bound(const GridDims& dims);

// Best walk length guaranteed by an explicit construction (the value the
// generators in constructions.hpp achieve exactly):
//   1 x 1            -> 0
//   1 x n (n >= 2)   -> floor(n^2/2) - 1
//   2 x n (n >= 2)   -> (n+1)^2 - 4
//   even x even >= 3 -> mn(m+n)/2 - 3
//   odd  x odd  >= 3 -> mn(m+n)/2 - (m+n)/2 - 1
//   odd  x even >= 3 -> mn(m+n)/2 - even_side/2 - 1
// Orientation is canonicalized internally; the function is symmetric.
std::int64_t lower_target(const GridDims& dims);

enum class Exactness { Exact, TwoPointInterval };

struct TheoremStatus {
  GridDims dims;
  std::int64_t lower_target = 0;
  std::int64_t upper = 0;
  Exactness exactness = Exactness::TwoPointInterval;
};

// Combines the two bounds; the gap is always 0 or 1.  Exact when they meet
// (mixed parity with both sides >= 3, and single-row grids of even length).
TheoremStatus theorem_status(const GridDims& dims);

// McNeil's conjectured square-grid maximum: n^3 - 3 for even n,
// n^3 - n - 1 for odd n.  Defined for 2 <= n <= 2'097'151 (cube must fit
// in 64 bits); anything else throws std::domain_error.
std::int64_t mcneil(std::int64_t n);

inline constexpr std::int64_t kMcneilMaxN = 2'097'151;

}  // namespace gridwalk
