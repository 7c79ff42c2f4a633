#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "gridwalk/grid.hpp"

namespace gridwalk {

enum class SolveMethod { BitmaskDP, BruteForce };

struct SolveResult {
  GridDims dims;
  std::int64_t optimum = 0;
  Labeling witness;  // valid labeling with walk_length == optimum
  SolveMethod method = SolveMethod::BitmaskDP;
  std::chrono::duration<double> elapsed{0};
};

// Cell caps for the subset DP.  The default keeps the state table around
// 40 MiB; the hard ceiling is an absolute memory guard.
inline constexpr int kDefaultCellCap = 20;
inline constexpr int kHardCellCap = 22;

// Bytes the DP state table would need for `cells` cells.
std::int64_t solver_memory_estimate(std::int64_t cells);

class CellCapExceeded : public std::runtime_error {
 public:
  CellCapExceeded(std::int64_t cells, int cap, std::int64_t estimated_bytes,
                  const std::string& what)
      : std::runtime_error(what),
        cells_(cells),
        cap_(cap),
        estimated_bytes_(estimated_bytes) {}

  std::int64_t cells() const { return cells_; }
  int cap() const { return cap_; }
  std::int64_t estimated_bytes() const { return estimated_bytes_; }

 private:
  std::int64_t cells_;
  int cap_;
  std::int64_t estimated_bytes_;
};

// Exact maximum walk length via dynamic programming over (visited set,
// last cell) states.  Deterministic: ties resolve toward the lowest
// row-major cell index, so repeated calls return the identical witness.
// Grids above the cap are refused with CellCapExceeded (never silently
// approximated); caps above kHardCellCap are rejected outright.
SolveResult solve_exact(const GridDims& dims, int cell_cap = kDefaultCellCap);

// Independent oracle: enumerates all (m*n)! visiting orders.  m*n <= 9.
std::int64_t brute_force(const GridDims& dims);

// Independent oracle for the axis maxima: enumerates all distinct
// arrangements of m copies of {1..n}.  m*n <= 10.
std::int64_t multiset_brute_force(std::int64_t m, std::int64_t n);

struct IntervalResolution {
  GridDims dims;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t optimum = 0;
  bool exact_case = false;        // lower == upper
  bool attained_upper = false;    // optimum == upper > lower
  std::optional<std::int64_t> mcneil_value;  // set when m == n >= 2
  SolveResult solve;
};

// Solves the grid and reports where the optimum falls inside
// [lower_target, upper_bound].  An optimum outside the interval would mean
// an internal bug and throws std::logic_error.
IntervalResolution resolve_interval(const GridDims& dims,
                                    int cell_cap = kDefaultCellCap);

}  // namespace gridwalk
