#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridwalk/grid.hpp"

namespace gridwalk {

struct SweepRow {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool exact = false;
  std::optional<std::int64_t> solved;      // empty when above the solve cap
  std::int64_t construct_len = 0;
  std::optional<std::int64_t> conjecture;  // mcneil(n), squares only
};

struct SweepOptions {
  // Grids with at most this many cells also get an exact solve.  Zero
  // disables solving entirely.  Must not exceed kHardCellCap.
  int solve_cap = 12;
};

// One row per (m, n) in the inclusive ranges, sorted by (m, n).  Every row
// re-checks that the constructed labeling hits lower_target; a mismatch is
// an internal bug and throws std::logic_error.
std::vector<SweepRow> build_sweep(std::int64_t m_lo, std::int64_t m_hi,
                                  std::int64_t n_lo, std::int64_t n_hi,
                                  const SweepOptions& options = {});

inline constexpr char kSweepCsvHeader[] =
    "m,n,lower,upper,exact,solved,construct_len,conjecture";

// Byte-stable renderings.  CSV: pinned header, empty fields for
// inapplicable columns, one row per line, trailing newline.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_table(const std::vector<SweepRow>& rows);

}  // namespace gridwalk
