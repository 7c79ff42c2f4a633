#include "gridwalk/constructions.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace gridwalk {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

std::int64_t adjacent_abs_sum(const std::vector<std::int64_t>& values) {
  std::int64_t total = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    total += std::llabs(values[k] - values[k - 1]);
  }
  return total;
}

MultisetSequence construct_multiset_sequence(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "construct_multiset_sequence requires m, n >= 1");
  MultisetSequence seq;
  seq.copies = m;
  seq.range = n;
  seq.values.reserve(static_cast<std::size_t>(m * n));
  if (n == 1) {
    seq.values.assign(static_cast<std::size_t>(m), 1);
    return seq;
  }
  const std::int64_t h = n / 2;
  if (n % 2 == 0) {
    // Strict high/low alternation: every step crosses the midline; the
    // sequence starts at the least high value and ends at the greatest low
    // value, which is the cheapest possible pair of endpoints.
    for (std::int64_t c = 0; c < m; ++c) {
      for (std::int64_t k = 1; k <= h; ++k) {
        seq.values.push_back(h + k);
        seq.values.push_back(k);
      }
    }
    return seq;
  }
  // Odd range: the middle value sits between a high and a low for free, so
  // park one copy at each end (both ends when m >= 2) and slot the rest
  // into high->low gaps.
  const std::int64_t mid = h + 1;
  const std::int64_t interior = m >= 2 ? m - 2 : 0;
  seq.values.push_back(mid);
  for (std::int64_t c = 0; c < m; ++c) {
    for (std::int64_t k = 1; k <= h; ++k) {
      seq.values.push_back(mid + k);
      if (k == 1 && c >= 1 && c <= interior) seq.values.push_back(mid);
      seq.values.push_back(k);
    }
  }
  if (m >= 2) seq.values.push_back(mid);
  return seq;
}

Labeling construct_path(std::int64_t n) {
  require(n >= 1, "construct_path requires n >= 1");
  require_valid_dims(GridDims{1, n});
  // The single-copy arrangement doubles as the visiting order: step t of
  // the walk stands on column values[t].
  const MultisetSequence seq = construct_multiset_sequence(1, n);
  Labeling lab = make_labeling(GridDims{1, n});
  for (std::int64_t t = 1; t <= n; ++t) {
    lab.at(1, seq.values[static_cast<std::size_t>(t - 1)]) = t;
  }
  return lab;
}

Labeling construct_2xn_odd(std::int64_t n) {
  require(n >= 3 && n % 2 == 1, "construct_2xn_odd requires odd n >= 3");
  require_valid_dims(GridDims{2, n});
  Labeling lab = make_labeling(GridDims{2, n});
  // Row 1: evens n-1..2 descending | n+1, 2n | evens n+3..2n-2 ascending.
  std::int64_t col = 1;
  for (std::int64_t v = n - 1; v >= 2; v -= 2) lab.at(1, col++) = v;
  lab.at(1, col++) = n + 1;
  lab.at(1, col++) = 2 * n;
  for (std::int64_t v = n + 3; v <= 2 * n - 2; v += 2) lab.at(1, col++) = v;
  // Row 2: odds 2n-1..n+2 descending | odds 1..n ascending.
  col = 1;
  for (std::int64_t v = 2 * n - 1; v >= n + 2; v -= 2) lab.at(2, col++) = v;
  for (std::int64_t v = 1; v <= n; v += 2) lab.at(2, col++) = v;
  return lab;
}

Labeling construct_even_even(std::int64_t m, std::int64_t n) {
  require(m >= 2 && n >= 2 && m % 2 == 0 && n % 2 == 0,
          "construct_even_even requires even m, n >= 2");
  require_valid_dims(GridDims{m, n});
  Labeling lab = make_labeling(GridDims{m, n});
  const std::int64_t hm = m / 2;
  const std::int64_t hn = n / 2;
  std::int64_t label = 1;
  // Top-left quadrant, swept bottom-to-top and right-to-left, odd labels;
  // each partner even label lands half a grid away diagonally (bottom
  // right).  Label 1 ends at (m/2, n/2), its partner 2 at (m, n).
  for (std::int64_t i = hm; i >= 1; --i) {
    for (std::int64_t j = hn; j >= 1; --j) {
      lab.at(i, j) = label;
      lab.at(i + hm, j + hn) = label + 1;
      label += 2;
    }
  }
  // Top-right quadrant, same sweep direction per row but left-to-right,
  // partners in the bottom-left quadrant.
  for (std::int64_t i = hm; i >= 1; --i) {
    for (std::int64_t j = hn + 1; j <= n; ++j) {
      lab.at(i, j) = label;
      lab.at(i + hm, j - hn) = label + 1;
      label += 2;
    }
  }
  return lab;
}

Labeling construct_odd_odd(std::int64_t m, std::int64_t n) {
  require(m >= 3 && n >= 3 && m % 2 == 1 && n % 2 == 1,
          "construct_odd_odd requires odd m, n >= 3");
  require_valid_dims(GridDims{m, n});
  Labeling lab = make_labeling(GridDims{m, n});
  const std::int64_t mid_row = (m + 1) / 2;
  const std::int64_t mid_col = (n + 1) / 2;
  const std::int64_t r = (m + 1) * (n - 1) / 2;
  const std::int64_t cells = m * n;
  // Upper-left block (rows 1..mid_row, columns 1..mid_col-1), swept
  // bottom-to-top and right-to-left with odd labels 1, 3, ..., r-1.  Evens
  // pair a fixed translation into the lower-right block, so 1 sits just
  // left of the center and its partner 2 at (m, n).
  std::int64_t label = 1;
  for (std::int64_t i = mid_row; i >= 1; --i) {
    for (std::int64_t j = mid_col - 1; j >= 1; --j) {
      lab.at(i, j) = label;
      lab.at(i + (m - 1) / 2, j + (n + 1) / 2) = label + 1;
      label += 2;
    }
  }
  // Middle column: labels r+1..r+m-1 zigzag between the top half and the
  // bottom half, one row deeper on each bounce; the center holds mn.
  label = r + 1;
  for (std::int64_t i = 1; i < mid_row; ++i) {
    lab.at(i, mid_col) = label;          // r+1, r+3, ...
    lab.at(i + mid_row, mid_col) = label + 1;  // r+2, r+4, ...
    label += 2;
  }
  lab.at(mid_row, mid_col) = cells;
  // Upper-right block (rows 1..mid_row-1, columns mid_col+1..n), swept
  // bottom-to-top and right-to-left with labels r+m, r+m+2, ..., mn-2.
  // Partners translate into the lower-left block; the last pair puts mn-2
  // at (1, mid_col+1) and mn-1 at (mid_row+1, 1).
  label = r + m;
  for (std::int64_t i = mid_row - 1; i >= 1; --i) {
    for (std::int64_t j = n; j >= mid_col + 1; --j) {
      lab.at(i, j) = label;
      lab.at(i + (m + 1) / 2, j - (n + 1) / 2) = label + 1;
      label += 2;
    }
  }
  return lab;
}

Labeling construct_odd_even(std::int64_t m, std::int64_t n) {
  require(m >= 3 && m % 2 == 1, "construct_odd_even requires odd m >= 3");
  require(n >= 4 && n % 2 == 0, "construct_odd_even requires even n >= 4");
  require_valid_dims(GridDims{m, n});
  Labeling lab = make_labeling(GridDims{m, n});
  const std::int64_t mid_row = (m + 1) / 2;
  const std::int64_t hn = n / 2;
  const std::int64_t cells = m * n;
  // Odd labels 1, 3, ..., r sweep the upper-left region right-to-left,
  // middle row first and skipping its leftmost cell (reserved for mn-1);
  // even labels 2, 4, ..., r+1 sweep the lower-right region bottom-to-top
  // right-to-left, skipping (mid_row, hn+1) (reserved for mn).  The two
  // sweeps cover regions of equal size, pairing k-th odd with k-th even.
  std::vector<Cell> odd_cells;
  for (std::int64_t j = hn; j >= 2; --j) odd_cells.push_back({mid_row, j});
  for (std::int64_t i = mid_row - 1; i >= 1; --i) {
    for (std::int64_t j = hn; j >= 1; --j) odd_cells.push_back({i, j});
  }
  std::vector<Cell> even_cells;
  for (std::int64_t i = m; i >= mid_row; --i) {
    for (std::int64_t j = n; j >= hn + 1; --j) {
      if (i == mid_row && j == hn + 1) continue;
      even_cells.push_back({i, j});
    }
  }
  std::int64_t label = 1;
  for (std::size_t k = 0; k < odd_cells.size(); ++k) {
    lab.at(odd_cells[k].i, odd_cells[k].j) = label;
    lab.at(even_cells[k].i, even_cells[k].j) = label + 1;
    label += 2;
  }
  // Odds r+2..mn-3 sweep the bottom-left block bottom-to-top; evens
  // r+3..mn-2 sweep the top-right block top-to-bottom; both right-to-left.
  std::vector<Cell> low_cells;
  for (std::int64_t i = m; i > mid_row; --i) {
    for (std::int64_t j = hn; j >= 1; --j) low_cells.push_back({i, j});
  }
  std::vector<Cell> high_cells;
  for (std::int64_t i = 1; i < mid_row; ++i) {
    for (std::int64_t j = n; j >= hn + 1; --j) high_cells.push_back({i, j});
  }
  for (std::size_t k = 0; k < low_cells.size(); ++k) {
    lab.at(low_cells[k].i, low_cells[k].j) = label;
    lab.at(high_cells[k].i, high_cells[k].j) = label + 1;
    label += 2;
  }
  lab.at(mid_row, 1) = cells - 1;
  lab.at(mid_row, hn + 1) = cells;
  return lab;
}

Labeling construct_optimal(const GridDims& dims) {
  require_valid_dims(dims);
  const std::int64_t m = dims.m;
  const std::int64_t n = dims.n;
  if (m == 1) return construct_path(n);
  if (n == 1) return transpose(construct_path(m));
  if (m % 2 == 0 && n % 2 == 0) return construct_even_even(m, n);
  if (m == 2) return construct_2xn_odd(n);
  if (n == 2) return transpose(construct_2xn_odd(m));
  if (m % 2 == 1 && n % 2 == 1) return construct_odd_odd(m, n);
  if (m % 2 == 1) return construct_odd_even(m, n);
  return transpose(construct_odd_even(n, m));
}

}  // namespace gridwalk
