#include "gridwalk/report.hpp"

#include <cstdio>
#include <stdexcept>

#include "gridwalk/bounds.hpp"
#include "gridwalk/constructions.hpp"
#include "gridwalk/solver.hpp"

namespace gridwalk {

std::vector<SweepRow> build_sweep(std::int64_t m_lo, std::int64_t m_hi,
                                  std::int64_t n_lo, std::int64_t n_hi,
                                  const SweepOptions& options) {
  if (m_lo < 1 || n_lo < 1 || m_lo > m_hi || n_lo > n_hi) {
    throw std::invalid_argument("sweep ranges must be non-empty and >= 1");
  }
  if (options.solve_cap < 0 || options.solve_cap > kHardCellCap) {
    throw std::invalid_argument("sweep solve cap must be in [0, " +
                                std::to_string(kHardCellCap) + "]");
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>((m_hi - m_lo + 1) * (n_hi - n_lo + 1)));
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
      const GridDims dims{m, n};
      require_valid_dims(dims);
      const TheoremStatus status = theorem_status(dims);
      SweepRow row;
      row.m = m;
      row.n = n;
      row.lower = status.lower_target;
      row.upper = status.upper;
      row.exact = status.exactness == Exactness::Exact;
      row.construct_len = walk_length(construct_optimal(dims));
      if (row.construct_len != row.lower) {
        throw std::logic_error(
            "construction for " + std::to_string(m) + "x" + std::to_string(n) +
            " reached " + std::to_string(row.construct_len) + ", target " +
            std::to_string(row.lower));
      }
      if (options.solve_cap > 0 && dims.cell_count() <= options.solve_cap) {
        row.solved = solve_exact(dims, options.solve_cap).optimum;
      }
      if (m == n && n >= 2 && n <= kMcneilMaxN) {
        row.conjecture = mcneil(n);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

namespace {

std::string opt_str(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const SweepRow& row : rows) {
    out += std::to_string(row.m);
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.lower);
    out += ',';
    out += std::to_string(row.upper);
    out += ',';
    out += row.exact ? "exact" : "interval";
    out += ',';
    out += opt_str(row.solved);
    out += ',';
    out += std::to_string(row.construct_len);
    out += ',';
    out += opt_str(row.conjecture);
    out += '\n';
  }
  return out;
}

std::string sweep_to_table(const std::vector<SweepRow>& rows) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%4s %4s %10s %10s %-8s %10s %13s %10s\n",
                "m", "n", "lower", "upper", "exact", "solved",
                "construct_len", "conjecture");
  std::string out = buf;
  for (const SweepRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%4lld %4lld %10lld %10lld %-8s %10s %13lld %10s\n",
                  static_cast<long long>(row.m), static_cast<long long>(row.n),
                  static_cast<long long>(row.lower),
                  static_cast<long long>(row.upper),
                  row.exact ? "exact" : "interval",
                  opt_str(row.solved).c_str(),
                  static_cast<long long>(row.construct_len),
                  opt_str(row.conjecture).c_str());
    out += buf;
  }
  return out;
}

}  // namespace gridwalk
