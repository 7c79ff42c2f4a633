#include "gridwalk/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "gridwalk/bounds.hpp"

namespace gridwalk {

namespace {

std::string human_bytes(std::int64_t bytes) {
  const char* units[] = {"B", "KiB", "MiB", "GiB", "TiB"};
  double value = static_cast<double>(bytes);
  int unit = 0;
  while (value >= 1024.0 && unit < 4) {
    value /= 1024.0;
    ++unit;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f %s", value, units[unit]);
  return buf;
}

// Row-major cell index -> 1-based cell.
Cell cell_of(std::int64_t index, const GridDims& dims) {
  return Cell{index / dims.n + 1, index % dims.n + 1};
}

}  // namespace

std::int64_t solver_memory_estimate(std::int64_t cells) {
  return (std::int64_t{1} << cells) * cells *
         static_cast<std::int64_t>(sizeof(std::uint16_t));
}

SolveResult solve_exact(const GridDims& dims, int cell_cap) {
  require_valid_dims(dims);
  if (cell_cap < 1 || cell_cap > kHardCellCap) {
    throw std::invalid_argument("cell cap must be in [1, " +
                                std::to_string(kHardCellCap) + "], got " +
                                std::to_string(cell_cap));
  }
  const std::int64_t cells = dims.cell_count();
  if (cells > cell_cap) {
    // Beyond ~50 cells the byte count overflows; clamp the figure, the
    // refusal is unconditional anyway.
    const std::int64_t estimate =
        solver_memory_estimate(std::min<std::int64_t>(cells, 50));
    throw CellCapExceeded(
        cells, cell_cap, estimate,
        std::to_string(dims.m) + "x" + std::to_string(dims.n) + " has " +
            std::to_string(cells) + " cells, above the cap of " +
            std::to_string(cell_cap) + "; the state table alone would need " +
            (cells > 50 ? "over " : "") + human_bytes(estimate));
  }
  const auto start = std::chrono::steady_clock::now();
  const int N = static_cast<int>(cells);

  // Pairwise Manhattan distances between row-major cells.
  std::vector<std::int16_t> dist(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      dist[static_cast<std::size_t>(a) * N + b] = static_cast<std::int16_t>(
          manhattan(cell_of(a, dims), cell_of(b, dims)));
    }
  }

  // dp[mask * N + last]: best total over walks visiting exactly `mask`
  // and standing on `last`.  Every state is reachable (any visiting order
  // is a walk), so plain zero-init works as the base case.
  const std::size_t full = std::size_t{1} << N;
  std::vector<std::uint16_t> dp(full * static_cast<std::size_t>(N), 0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singleton: base case 0
    for (int last = 0; last < N; ++last) {
      if (!(mask >> last & 1)) continue;
      const std::size_t prev_mask = mask ^ (std::size_t{1} << last);
      const std::int16_t* drow = &dist[static_cast<std::size_t>(last) * N];
      std::uint16_t best = 0;
      for (int prev = 0; prev < N; ++prev) {
        if (!(prev_mask >> prev & 1)) continue;
        const std::uint16_t cand = static_cast<std::uint16_t>(
            dp[prev_mask * N + prev] + drow[prev]);
        if (cand > best) best = cand;
      }
      dp[mask * N + last] = best;
    }
  }

  const std::size_t full_mask = full - 1;
  int end = 0;
  std::uint16_t best = dp[full_mask * N];
  for (int c = 1; c < N; ++c) {
    if (dp[full_mask * N + c] > best) {  // strict: lowest index wins ties
      best = dp[full_mask * N + c];
      end = c;
    }
  }

  // Reconstruct backwards; ties again resolve to the lowest cell index.
  std::vector<int> order_rev{end};
  std::size_t mask = full_mask;
  int last = end;
  while ((mask & (mask - 1)) != 0) {
    const std::size_t prev_mask = mask ^ (std::size_t{1} << last);
    const std::int16_t* drow = &dist[static_cast<std::size_t>(last) * N];
    int chosen = -1;
    for (int prev = 0; prev < N; ++prev) {
      if (!(prev_mask >> prev & 1)) continue;
      if (dp[prev_mask * N + prev] + drow[prev] == dp[mask * N + last]) {
        chosen = prev;
        break;
      }
    }
    order_rev.push_back(chosen);
    mask = prev_mask;
    last = chosen;
  }

  Walk walk;
  walk.dims = dims;
  walk.cells.reserve(order_rev.size());
  for (auto it = order_rev.rbegin(); it != order_rev.rend(); ++it) {
    walk.cells.push_back(cell_of(*it, dims));
  }

  SolveResult result;
  result.dims = dims;
  result.optimum = best;
  result.witness = labeling_from_walk(walk);
  result.method = SolveMethod::BitmaskDP;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::int64_t brute_force(const GridDims& dims) {
  require_valid_dims(dims);
  const std::int64_t cells = dims.cell_count();
  if (cells > 9) {
    throw std::invalid_argument("brute_force handles at most 9 cells, got " +
                                std::to_string(cells));
  }
  const int N = static_cast<int>(cells);
  std::vector<std::int64_t> di(static_cast<std::size_t>(N));
  std::vector<std::int64_t> dj(static_cast<std::size_t>(N));
  for (int c = 0; c < N; ++c) {
    di[static_cast<std::size_t>(c)] = c / dims.n;
    dj[static_cast<std::size_t>(c)] = c % dims.n;
  }
  std::vector<int> order(static_cast<std::size_t>(N));
  std::iota(order.begin(), order.end(), 0);
  std::int64_t best = 0;
  do {
    std::int64_t total = 0;
    for (int k = 1; k < N; ++k) {
      const int a = order[static_cast<std::size_t>(k - 1)];
      const int b = order[static_cast<std::size_t>(k)];
      total += std::llabs(di[a] - di[b]) + std::llabs(dj[a] - dj[b]);
    }
    best = std::max(best, total);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::int64_t multiset_brute_force(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1 || m * n > 10) {
    throw std::invalid_argument(
        "multiset_brute_force requires m, n >= 1 and m*n <= 10");
  }
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(m * n));
  for (std::int64_t v = 1; v <= n; ++v) {
    for (std::int64_t c = 0; c < m; ++c) values.push_back(v);
  }
  std::int64_t best = 0;
  do {  // next_permutation over the sorted multiset: distinct arrangements
    std::int64_t total = 0;
    for (std::size_t k = 1; k < values.size(); ++k) {
      total += std::llabs(values[k] - values[k - 1]);
    }
    best = std::max(best, total);
  } while (std::next_permutation(values.begin(), values.end()));
  return best;
}

IntervalResolution resolve_interval(const GridDims& dims, int cell_cap) {
  IntervalResolution res;
  res.dims = dims;
  res.lower = lower_target(dims);
  res.upper = upper_bound(dims);
  res.solve = solve_exact(dims, cell_cap);
  res.optimum = res.solve.optimum;
  res.exact_case = res.lower == res.upper;
  if (res.optimum != res.lower && res.optimum != res.upper) {
    throw std::logic_error(
        "optimum " + std::to_string(res.optimum) + " for " +
        std::to_string(dims.m) + "x" + std::to_string(dims.n) +
        " falls outside {" + std::to_string(res.lower) + ", " +
        std::to_string(res.upper) + "}");
  }
  res.attained_upper = !res.exact_case && res.optimum == res.upper;
  if (dims.m == dims.n && dims.m >= 2) {
    res.mcneil_value = mcneil(dims.m);
  }
  return res;
}

}  // namespace gridwalk
