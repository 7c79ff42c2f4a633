#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gridwalk/grid.hpp"
#include "gridwalk/solver.hpp"

namespace gridwalk {

// An integer sequence keyed by index, as read from an OEIS b-file.
struct SequenceTable {
  std::map<std::int64_t, std::int64_t> entries;
};

enum class BFileErrorKind { MalformedLine, DuplicateIndex, NegativeValue };

class BFileError : public std::runtime_error {
 public:
  BFileError(BFileErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  BFileErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }  // 1-based

 private:
  BFileErrorKind kind_;
  std::size_t line_;
};

// b-file format: one "index value" pair per line; '#' comment lines and
// blank lines are ignored.  Malformed lines and duplicate indices are
// reported with their line number.
SequenceTable parse_bfile(const std::string& text);
std::string render_bfile(const SequenceTable& table);

struct ConjectureRow {
  std::int64_t index = 0;
  std::int64_t value = 0;
  std::int64_t expected = 0;  // mcneil(index)
  bool match = false;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;       // ascending by index
  std::vector<std::int64_t> skipped;     // indices outside mcneil's domain
  std::int64_t matches = 0;
  std::int64_t mismatches = 0;
};

// Compares each in-domain entry against mcneil(index).  Pure function of
// the table; indices below 2 (or beyond the cube guard) are listed as
// skipped rather than judged.
ConjectureReport compare_with_conjecture(const SequenceTable& table);

struct CacheRecord {
  GridDims dims;  // canonical: m <= n
  std::int64_t optimum = 0;
  SolveMethod method = SolveMethod::BitmaskDP;
  std::string timestamp;  // ISO-8601 UTC, no whitespace

  bool operator==(const CacheRecord&) const = default;
};

// At most one record per canonical dims pair.
struct ResultsCache {
  std::map<std::pair<std::int64_t, std::int64_t>, CacheRecord> records;

  void upsert(CacheRecord rec);
  std::optional<CacheRecord> find(const GridDims& dims) const;

  bool operator==(const ResultsCache&) const = default;
};

enum class CacheErrorKind { Io, Parse, Validation };

class CacheError : public std::runtime_error {
 public:
  CacheError(CacheErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  CacheErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }  // 1-based; 0 when not line-tied

 private:
  CacheErrorKind kind_;
  std::size_t line_;
};

// Cache text format, version-stamped on the first line:
//   # gridwalk results cache v1
//   <m> <n> <optimum> <dp|brute> <timestamp>
// Serialization is canonical (records sorted by dims), so round trips are
// byte-stable.  Records violating the lower/upper sandwich are rejected.
std::string serialize_cache(const ResultsCache& cache);
ResultsCache parse_cache(const std::string& text);

struct CacheLoadResult {
  ResultsCache cache;
  bool file_found = false;
};

// Missing file -> empty cache, file_found == false.  Unreadable or corrupt
// content -> CacheError (never a silent reset).
CacheLoadResult load_cache(const std::filesystem::path& path);
void save_cache(const std::filesystem::path& path, const ResultsCache& cache);

std::string current_utc_timestamp();

}  // namespace gridwalk
