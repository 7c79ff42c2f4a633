// gridwalk: command-line front end for the grid labeling-walk toolkit.
//
// Subcommands: bounds, construct, eval, solve, sweep, compare-oeis.
// Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
// 2 usage/input error, 3 internal identity violation, 4 resource guard.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <gridwalk/bounds.hpp>
#include <gridwalk/constructions.hpp>
#include <gridwalk/grid.hpp>
#include <gridwalk/reference.hpp>
#include <gridwalk/report.hpp>
#include <gridwalk/solver.hpp>

namespace {

using namespace gridwalk;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed on " + path);
  return ss.str();
}

// "a..b" with both endpoints full integers; anything else is a usage error.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  auto parse_int = [&](const std::string& part) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw std::invalid_argument("range must be A..B with integer endpoints, got '" + text + "'");
    return value;
  };
  if (dots == std::string::npos)
    throw std::invalid_argument("range must be A..B with integer endpoints, got '" + text + "'");
  auto lo = parse_int(text.substr(0, dots));
  auto hi = parse_int(text.substr(dots + 2));
  if (lo > hi)
    throw std::invalid_argument("empty range '" + text + "' (left endpoint exceeds right)");
  return {lo, hi};
}

std::string bounds_line(const TheoremStatus& st) {
  if (st.exactness == Exactness::Exact)
    return "exact M=" + std::to_string(st.lower_target);
  return "r=" + std::to_string(st.lower_target) +
         " upper=" + std::to_string(st.upper) + " interval";
}

int cmd_bounds(std::int64_t m, std::int64_t n) {
  require_valid_dims({m, n});
  std::cout << bounds_line(theorem_status({m, n})) << "\n";
  return 0;
}

int cmd_construct(std::int64_t m, std::int64_t n, const std::string& out_path) {
  require_valid_dims({m, n});
  const GridDims dims{m, n};
  Labeling lab = construct_optimal(dims);
  const std::int64_t len = walk_length(lab);
  const std::int64_t target = lower_target(dims);
  const std::string text = format_labeling(lab);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
    if (!out.flush()) throw std::runtime_error("write failed on " + out_path);
  }
  std::cout << "length=" << len << " target=" << target << "\n";
  if (len != target)
    throw std::logic_error("construction self-check failed for " + std::to_string(m) + "x" +
                           std::to_string(n) + ": length " + std::to_string(len) +
                           " != target " + std::to_string(target));
  return 0;
}

int cmd_eval(const std::string& path) {
  Labeling lab = parse_labeling(read_file(path));
  std::cout << walk_length(lab) << "\n";
  return 0;
}

int cmd_solve(std::int64_t m, std::int64_t n, int cap, const std::string& cache_path) {
  require_valid_dims({m, n});
  IntervalResolution res = resolve_interval({m, n}, cap);
  std::cout << "M=" << res.optimum << (res.attained_upper ? ", equals upper" : ", equals r")
            << "\n";
  std::cout << bounds_line(theorem_status({m, n})) << "\n";
  if (res.mcneil_value) {
    std::cout << "mcneil(" << n << ")=" << *res.mcneil_value
              << (res.optimum == *res.mcneil_value ? ", matches" : ", differs") << "\n";
  }
  std::cerr << "solved " << m << "x" << n << " in " << res.solve.elapsed.count() << " s\n";
  if (!cache_path.empty()) {
    CacheLoadResult loaded = load_cache(cache_path);
    loaded.cache.upsert({res.dims, res.optimum, res.solve.method, current_utc_timestamp()});
    save_cache(cache_path, loaded.cache);
    std::cerr << "cache: " << cache_path << " now holds " << loaded.cache.records.size()
              << " record(s)\n";
  }
  return 0;
}

int cmd_sweep(const std::string& m_range, const std::string& n_range, const std::string& format,
              int cap) {
  auto [m_lo, m_hi] = parse_range(m_range);
  auto [n_lo, n_hi] = parse_range(n_range);
  SweepOptions options;
  options.solve_cap = cap;
  auto rows = build_sweep(m_lo, m_hi, n_lo, n_hi, options);
  std::cout << (format == "csv" ? sweep_to_csv(rows) : sweep_to_table(rows));
  return 0;
}

int cmd_compare_oeis(const std::string& path, const std::string& cache_path) {
  SequenceTable table = parse_bfile(read_file(path));
  ConjectureReport report = compare_with_conjecture(table);
  for (const auto& row : report.rows) {
    std::cout << "n=" << row.index << " value=" << row.value << " expected=" << row.expected
              << (row.match ? " match" : " MISMATCH") << "\n";
  }
  for (auto index : report.skipped)
    std::cerr << "skipped n=" << index << " (outside the conjecture's domain)\n";
  if (!cache_path.empty()) {
    CacheLoadResult loaded = load_cache(cache_path);
    if (!loaded.file_found) {
      std::cerr << "cache: " << cache_path << " not found, nothing to cross-check\n";
    } else {
      for (const auto& [key, rec] : loaded.cache.records) {
        if (rec.dims.m != rec.dims.n) continue;
        auto it = table.entries.find(rec.dims.n);
        if (it == table.entries.end()) continue;
        std::cout << "n=" << rec.dims.n << " solver=" << rec.optimum << " file=" << it->second
                  << (rec.optimum == it->second ? " agree" : " CONFLICT") << "\n";
      }
    }
  }
  std::cout << "matches=" << report.matches << " mismatches=" << report.mismatches << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bounds, constructions, and solvers for maximum grid labeling walks"};
  app.require_subcommand(1);

  std::int64_t m = 0, n = 0;
  std::string out_path, cache_path, input_path, m_range, n_range;
  std::string format = "table";
  int solve_cap = kDefaultCellCap;
  int sweep_cap = 12;

  auto* bounds = app.add_subcommand("bounds", "print lower target, upper bound, exactness");
  bounds->add_option("m", m, "rows")->required();
  bounds->add_option("n", n, "columns")->required();

  auto* construct = app.add_subcommand("construct", "emit an optimal labeling and its length");
  construct->add_option("m", m, "rows")->required();
  construct->add_option("n", n, "columns")->required();
  construct->add_option("--out", out_path, "write the labeling to this file instead of stdout");

  auto* eval = app.add_subcommand("eval", "evaluate the walk length of a labeling file");
  eval->add_option("file", input_path, "labeling text file")->required();

  auto* solve = app.add_subcommand("solve", "exact optimum via subset dynamic programming");
  solve->add_option("m", m, "rows")->required();
  solve->add_option("n", n, "columns")->required();
  solve->add_option("--cap", solve_cap, "refuse grids with more cells than this")
      ->capture_default_str();
  solve->add_option("--cache", cache_path, "persist the result into this cache file");

  auto* sweep = app.add_subcommand("sweep", "tabulate bounds/constructions over dim ranges");
  sweep->add_option("m-range", m_range, "rows as A..B")->required();
  sweep->add_option("n-range", n_range, "columns as A..B")->required();
  sweep->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();
  sweep->add_option("--cap", sweep_cap, "also solve grids with at most this many cells (0 = none)")
      ->capture_default_str();

  auto* compare = app.add_subcommand("compare-oeis", "check a b-file against the cube conjecture");
  compare->add_option("file", input_path, "b-file path")->required();
  compare->add_option("--cache", cache_path, "also cross-check cached solver results");

  try {
    app.parse(argc, argv);
    if (bounds->parsed()) return cmd_bounds(m, n);
    if (construct->parsed()) return cmd_construct(m, n, out_path);
    if (eval->parsed()) return cmd_eval(input_path);
    if (solve->parsed()) return cmd_solve(m, n, solve_cap, cache_path);
    if (sweep->parsed()) return cmd_sweep(m_range, n_range, format, sweep_cap);
    if (compare->parsed()) return cmd_compare_oeis(input_path, cache_path);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const CellCapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
