#pragma once

#include <cstdint>
#include <vector>

#include "gridwalk/grid.hpp"

namespace gridwalk {

// An arrangement of `copies` copies of {1..range}.
struct MultisetSequence {
  std::int64_t copies = 1;
  std::int64_t range = 1;
  std::vector<std::int64_t> values;
};

std::int64_t adjacent_abs_sum(const std::vector<std::int64_t>& values);

// Arrangement maximizing the sum of adjacent absolute differences.  The
// achieved sum equals axis_term(m, n) except in the single-copy odd-range
// case, where the true maximum floor(n^2/2) - 1 is achieved instead.
MultisetSequence construct_multiset_sequence(std::int64_t m, std::int64_t n);

// Explicit labelings achieving lower_target for their parameter class.
// All five generators reject parameters outside their class with
// std::invalid_argument.

// 1 x n path; length floor(n^2/2) - 1 (0 for n == 1).
Labeling construct_path(std::int64_t n);

// 2 x n for odd n >= 3; length (n+1)^2 - 4.
// Row 1: evens n-1..2 descending, then n+1, 2n, then evens n+3..2n-2.
// Row 2: odds 2n-1..n+2 descending, then odds 1..n ascending.
Labeling construct_2xn_odd(std::int64_t n);

// m x n with both sides even (m, n >= 2); length mn(m+n)/2 - 3.
// Odd labels sweep the top-left quadrant (rows m/2..1, columns n/2..1) and
// then the top-right quadrant (rows m/2..1, columns n/2+1..n); each odd
// label's successor lands in the diagonally opposite quadrant, half a grid
// away in both coordinates.
Labeling construct_even_even(std::int64_t m, std::int64_t n);

// m x n with both sides odd (m, n >= 3); length mn(m+n)/2 - (m+n)/2 - 1.
// Layout: odd labels 1..r-1 sweep the upper-left block (rows (m+1)/2..1,
// columns (n-1)/2..1) with even partners a fixed ((m-1)/2, (n+1)/2)
// translation away; labels r+1..r+m-1 zigzag the middle column around the
// center cell (which holds mn); the remaining labels pair the upper-right
// and lower-left blocks.  r = (m+1)(n-1)/2.
Labeling construct_odd_odd(std::int64_t m, std::int64_t n);

// m x n with m odd >= 3 and n even >= 4; length mn(m+n)/2 - n/2 - 1.
// Odd labels 1..r sweep the upper-left region (middle row first, skipping
// its first cell) while evens 2..r+1 sweep the lower-right region in
// parallel; odds r+2..mn-3 and evens r+3..mn-2 pair the bottom-left and
// top-right blocks; mn-1 sits at the middle row's left edge, mn right of
// center.  r = (m+1)n/2 - 3.
Labeling construct_odd_even(std::int64_t m, std::int64_t n);

// Dispatch to the matching generator, transposing when the grid arrives in
// the opposite orientation.  The result is always a valid labeling with
// walk_length(result) == lower_target(dims).
Labeling construct_optimal(const GridDims& dims);

}  // namespace gridwalk
