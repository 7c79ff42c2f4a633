#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridwalk {

// Grid dimensions: m rows by n columns.  Cells use 1-based coordinates
// (i, j) with i in [1, m] and j in [1, n]; row-major storage is internal.
struct GridDims {
  std::int64_t m = 1;
  std::int64_t n = 1;

  std::int64_t cell_count() const { return m * n; }
  bool operator==(const GridDims&) const = default;
};

// A grid is accepted when both sides are positive and the cell count fits
// comfortably in 32 bits; everything downstream relies on this guard.
bool dims_valid(const GridDims& dims);
void require_valid_dims(const GridDims& dims);  // throws std::invalid_argument

struct Cell {
  std::int64_t i = 1;
  std::int64_t j = 1;

  bool operator==(const Cell&) const = default;
};

std::int64_t manhattan(const Cell& a, const Cell& b);

// A labeling assigns each cell a label; a *valid* labeling uses each label
// in {1, ..., m*n} exactly once.  Construct via make_labeling / parse, or
// fill `labels` directly and check with validate().
struct Labeling {
  GridDims dims;
  std::vector<std::int64_t> labels;  // row-major: labels[(i-1)*n + (j-1)]

  std::int64_t& at(std::int64_t i, std::int64_t j) {
    return labels[static_cast<std::size_t>((i - 1) * dims.n + (j - 1))];
  }
  std::int64_t at(std::int64_t i, std::int64_t j) const {
    return labels[static_cast<std::size_t>((i - 1) * dims.n + (j - 1))];
  }
  bool operator==(const Labeling&) const = default;
};

Labeling make_labeling(const GridDims& dims);  // all entries zero (invalid)

// The walk induced by a labeling: cells[t-1] is the cell labeled t.
struct Walk {
  GridDims dims;
  std::vector<Cell> cells;
};

struct ValidationReport {
  bool shape_mismatch = false;        // labels.size() != m*n
  std::vector<std::int64_t> duplicated;
  std::vector<std::int64_t> missing;
  std::vector<std::int64_t> out_of_range;

  bool ok() const {
    return !shape_mismatch && duplicated.empty() && missing.empty() &&
           out_of_range.empty();
  }
  std::string message() const;
};

ValidationReport validate(const Labeling& lab);

// Bijection between valid labelings and walks.  Both directions reject
// invalid input with std::invalid_argument.
Walk inverse_walk(const Labeling& lab);
Labeling labeling_from_walk(const Walk& walk);

// Total Manhattan distance of the walk 1 -> 2 -> ... -> m*n.
// Zero for a single cell.  Invalid labelings are rejected.
std::int64_t walk_length(const Labeling& lab);
std::int64_t walk_length(const Walk& walk);

// Both preserve validity and walk length (callers pass valid labelings).
Labeling transpose(const Labeling& lab);
Labeling reverse_labels(const Labeling& lab);  // t -> m*n + 1 - t

enum class ParseErrorKind {
  Empty,                 // no rows at all
  NonIntegerToken,       // token is not a base-10 64-bit integer
  RaggedRows,            // rows with differing token counts
  PermutationViolation,  // duplicates / missing / out-of-range labels
  BadDims,               // resulting grid fails the dims guard
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }  // 1-based; 0 when not tied to a line

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// Text format: m lines of n base-10 integers.  The writer emits single
// spaces and a trailing newline; the reader accepts arbitrary whitespace
// runs and blank lines but insists on rectangular, bijective content.
Labeling parse_labeling(const std::string& text);
std::string format_labeling(const Labeling& lab);

}  // namespace gridwalk
