#include "gridwalk/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace gridwalk {

namespace {

constexpr std::int64_t kMaxCells = std::int64_t{1} << 31;

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(xs[k]);
  }
  return out;
}

}  // namespace

bool dims_valid(const GridDims& dims) {
  if (dims.m < 1 || dims.n < 1) return false;
  // Multiplication guard before computing the product.
  if (dims.m > kMaxCells / dims.n) return false;
  return dims.m * dims.n <= kMaxCells;
}

void require_valid_dims(const GridDims& dims) {
  if (!dims_valid(dims)) {
    throw std::invalid_argument("invalid grid dimensions " +
                                std::to_string(dims.m) + "x" +
                                std::to_string(dims.n) +
                                " (need m, n >= 1 and m*n <= 2^31)");
  }
}

std::int64_t manhattan(const Cell& a, const Cell& b) {
  return std::llabs(a.i - b.i) + std::llabs(a.j - b.j);
}

Labeling make_labeling(const GridDims& dims) {
  require_valid_dims(dims);
  Labeling lab;
  lab.dims = dims;
  lab.labels.assign(static_cast<std::size_t>(dims.cell_count()), 0);
  return lab;
}

std::string ValidationReport::message() const {
  if (ok()) return "ok";
  std::string out;
  if (shape_mismatch) out = "shape mismatch";
  auto add = [&out](const char* what, const std::vector<std::int64_t>& xs) {
    if (xs.empty()) return;
    if (!out.empty()) out += "; ";
    out += what;
    out += ": ";
    out += join(xs);
  };
  add("duplicate labels", duplicated);
  add("missing labels", missing);
  add("labels out of range", out_of_range);
  return out;
}

ValidationReport validate(const Labeling& lab) {
  require_valid_dims(lab.dims);
  ValidationReport report;
  const std::int64_t count = lab.dims.cell_count();
  if (static_cast<std::int64_t>(lab.labels.size()) != count) {
    report.shape_mismatch = true;
    return report;
  }
  std::vector<std::int64_t> seen(static_cast<std::size_t>(count), 0);
  for (std::int64_t label : lab.labels) {
    if (label < 1 || label > count) {
      report.out_of_range.push_back(label);
      continue;
    }
    if (++seen[static_cast<std::size_t>(label - 1)] == 2) {
      report.duplicated.push_back(label);
    }
  }
  for (std::int64_t label = 1; label <= count; ++label) {
    if (seen[static_cast<std::size_t>(label - 1)] == 0) {
      report.missing.push_back(label);
    }
  }
  std::sort(report.duplicated.begin(), report.duplicated.end());
  return report;
}

namespace {

void require_valid(const Labeling& lab) {
  ValidationReport report = validate(lab);
  if (!report.ok()) {
    throw std::invalid_argument("invalid labeling: " + report.message());
  }
}

}  // namespace

Walk inverse_walk(const Labeling& lab) {
  require_valid(lab);
  Walk walk;
  walk.dims = lab.dims;
  walk.cells.assign(lab.labels.size(), Cell{});
  for (std::int64_t i = 1; i <= lab.dims.m; ++i) {
    for (std::int64_t j = 1; j <= lab.dims.n; ++j) {
      walk.cells[static_cast<std::size_t>(lab.at(i, j) - 1)] = Cell{i, j};
    }
  }
  return walk;
}

Labeling labeling_from_walk(const Walk& walk) {
  require_valid_dims(walk.dims);
  const std::int64_t count = walk.dims.cell_count();
  if (static_cast<std::int64_t>(walk.cells.size()) != count) {
    throw std::invalid_argument("walk visits " +
                                std::to_string(walk.cells.size()) +
                                " cells; grid has " + std::to_string(count));
  }
  Labeling lab = make_labeling(walk.dims);
  for (std::int64_t t = 1; t <= count; ++t) {
    const Cell& c = walk.cells[static_cast<std::size_t>(t - 1)];
    if (c.i < 1 || c.i > walk.dims.m || c.j < 1 || c.j > walk.dims.n) {
      throw std::invalid_argument("walk step " + std::to_string(t) +
                                  " leaves the grid");
    }
    std::int64_t& slot = lab.at(c.i, c.j);
    if (slot != 0) {
      throw std::invalid_argument("walk visits cell (" + std::to_string(c.i) +
                                  ", " + std::to_string(c.j) + ") twice");
    }
    slot = t;
  }
  return lab;
}

std::int64_t walk_length(const Walk& walk) {
  std::int64_t total = 0;
  for (std::size_t t = 1; t < walk.cells.size(); ++t) {
    total += manhattan(walk.cells[t - 1], walk.cells[t]);
  }
  return total;
}

std::int64_t walk_length(const Labeling& lab) {
  return walk_length(inverse_walk(lab));
}

Labeling transpose(const Labeling& lab) {
  require_valid_dims(lab.dims);
  Labeling out = make_labeling(GridDims{lab.dims.n, lab.dims.m});
  for (std::int64_t i = 1; i <= lab.dims.m; ++i) {
    for (std::int64_t j = 1; j <= lab.dims.n; ++j) {
      out.at(j, i) = lab.at(i, j);
    }
  }
  return out;
}

Labeling reverse_labels(const Labeling& lab) {
  Labeling out = lab;
  const std::int64_t count = lab.dims.cell_count();
  for (std::int64_t& label : out.labels) {
    label = count + 1 - label;
  }
  return out;
}

Labeling parse_labeling(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t line_no = 0;
  std::size_t first_row_line = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::vector<std::int64_t> row;
    std::string token;
    while (tokens >> token) {
      std::int64_t value = 0;
      const char* begin = token.data();
      const char* end = begin + token.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc{} || ptr != end) {
        throw ParseError(ParseErrorKind::NonIntegerToken, line_no,
                         "line " + std::to_string(line_no) + ": token '" +
                             token + "' is not an integer");
      }
      row.push_back(value);
    }
    if (row.empty()) continue;  // blank line
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(ParseErrorKind::RaggedRows, line_no,
                       "line " + std::to_string(line_no) + ": expected " +
                           std::to_string(rows.front().size()) +
                           " entries, got " + std::to_string(row.size()));
    }
    if (rows.empty()) first_row_line = line_no;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(ParseErrorKind::Empty, 0, "no rows in labeling text");
  }
  GridDims dims{static_cast<std::int64_t>(rows.size()),
                static_cast<std::int64_t>(rows.front().size())};
  if (!dims_valid(dims)) {
    throw ParseError(ParseErrorKind::BadDims, first_row_line,
                     "grid " + std::to_string(dims.m) + "x" +
                         std::to_string(dims.n) + " is out of range");
  }
  Labeling lab = make_labeling(dims);
  for (std::int64_t i = 1; i <= dims.m; ++i) {
    for (std::int64_t j = 1; j <= dims.n; ++j) {
      lab.at(i, j) = rows[static_cast<std::size_t>(i - 1)]
                         [static_cast<std::size_t>(j - 1)];
    }
  }
  ValidationReport report = validate(lab);
  if (!report.ok()) {
    throw ParseError(ParseErrorKind::PermutationViolation, 0,
                     "labels do not form a permutation of 1..mn: " +
                         report.message());
  }
  return lab;
}

std::string format_labeling(const Labeling& lab) {
  require_valid_dims(lab.dims);
  std::string out;
  for (std::int64_t i = 1; i <= lab.dims.m; ++i) {
    for (std::int64_t j = 1; j <= lab.dims.n; ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(lab.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace gridwalk
