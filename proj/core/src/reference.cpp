#include "gridwalk/reference.hpp"

#include <charconv>
#include <ctime>
#include <fstream>
#include <sstream>

#include "gridwalk/bounds.hpp"

namespace gridwalk {

namespace {

constexpr char kCacheHeader[] = "# gridwalk results cache v1";

bool parse_i64(const std::string& token, std::int64_t& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

std::string method_name(SolveMethod method) {
  return method == SolveMethod::BitmaskDP ? "dp" : "brute";
}

}  // namespace

SequenceTable parse_bfile(const std::string& text) {
  SequenceTable table;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;       // blank line
    if (first[0] == '#') continue;          // comment
    std::string second, extra;
    std::int64_t index = 0, value = 0;
    if (!(tokens >> second) || (tokens >> extra) || !parse_i64(first, index) ||
        !parse_i64(second, value)) {
      throw BFileError(BFileErrorKind::MalformedLine, line_no,
                       "line " + std::to_string(line_no) +
                           ": expected 'index value', got '" + line + "'");
    }
    if (value < 0) {
      throw BFileError(BFileErrorKind::NegativeValue, line_no,
                       "line " + std::to_string(line_no) +
                           ": negative value " + std::to_string(value));
    }
    if (!table.entries.emplace(index, value).second) {
      throw BFileError(BFileErrorKind::DuplicateIndex, line_no,
                       "line " + std::to_string(line_no) +
                           ": duplicate index " + std::to_string(index));
    }
  }
  return table;
}

std::string render_bfile(const SequenceTable& table) {
  std::string out;
  for (const auto& [index, value] : table.entries) {
    out += std::to_string(index);
    out += ' ';
    out += std::to_string(value);
    out += '\n';
  }
  return out;
}

ConjectureReport compare_with_conjecture(const SequenceTable& table) {
  ConjectureReport report;
  for (const auto& [index, value] : table.entries) {
    if (index < 2 || index > kMcneilMaxN) {
      report.skipped.push_back(index);
      continue;
    }
    ConjectureRow row;
    row.index = index;
    row.value = value;
    row.expected = mcneil(index);
    row.match = value == row.expected;
    (row.match ? report.matches : report.mismatches) += 1;
    report.rows.push_back(row);
  }
  return report;
}

void ResultsCache::upsert(CacheRecord rec) {
  if (rec.dims.m > rec.dims.n) std::swap(rec.dims.m, rec.dims.n);
  records[{rec.dims.m, rec.dims.n}] = std::move(rec);
}

std::optional<CacheRecord> ResultsCache::find(const GridDims& dims) const {
  const auto key = dims.m <= dims.n ? std::pair{dims.m, dims.n}
                                    : std::pair{dims.n, dims.m};
  auto it = records.find(key);
  if (it == records.end()) return std::nullopt;
  return it->second;
}

std::string serialize_cache(const ResultsCache& cache) {
  std::string out = kCacheHeader;
  out += '\n';
  for (const auto& [key, rec] : cache.records) {
    out += std::to_string(rec.dims.m);
    out += ' ';
    out += std::to_string(rec.dims.n);
    out += ' ';
    out += std::to_string(rec.optimum);
    out += ' ';
    out += method_name(rec.method);
    out += ' ';
    out += rec.timestamp.empty() ? "-" : rec.timestamp;
    out += '\n';
  }
  return out;
}

ResultsCache parse_cache(const std::string& text) {
  ResultsCache cache;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!saw_header) {
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      if (line != kCacheHeader) {
        throw CacheError(CacheErrorKind::Parse, line_no,
                         "line " + std::to_string(line_no) +
                             ": unrecognized cache header '" + line + "'");
      }
      saw_header = true;
      continue;
    }
    std::istringstream tokens(line);
    std::string m_tok, n_tok, opt_tok, method_tok, ts_tok, extra;
    if (!(tokens >> m_tok)) continue;  // blank line
    if (!(tokens >> n_tok >> opt_tok >> method_tok >> ts_tok) ||
        (tokens >> extra)) {
      throw CacheError(CacheErrorKind::Parse, line_no,
                       "line " + std::to_string(line_no) +
                           ": expected 'm n optimum method timestamp'");
    }
    CacheRecord rec;
    std::int64_t optimum = 0;
    if (!parse_i64(m_tok, rec.dims.m) || !parse_i64(n_tok, rec.dims.n) ||
        !parse_i64(opt_tok, optimum)) {
      throw CacheError(CacheErrorKind::Parse, line_no,
                       "line " + std::to_string(line_no) +
                           ": non-integer field");
    }
    rec.optimum = optimum;
    if (method_tok == "dp") {
      rec.method = SolveMethod::BitmaskDP;
    } else if (method_tok == "brute") {
      rec.method = SolveMethod::BruteForce;
    } else {
      throw CacheError(CacheErrorKind::Parse, line_no,
                       "line " + std::to_string(line_no) +
                           ": unknown method '" + method_tok + "'");
    }
    rec.timestamp = ts_tok == "-" ? "" : ts_tok;
    if (!dims_valid(rec.dims) || rec.dims.m > rec.dims.n) {
      throw CacheError(CacheErrorKind::Validation, line_no,
                       "line " + std::to_string(line_no) +
                           ": bad canonical dims " + std::to_string(rec.dims.m) +
                           "x" + std::to_string(rec.dims.n));
    }
    if (rec.optimum < lower_target(rec.dims) ||
        rec.optimum > upper_bound(rec.dims)) {
      throw CacheError(
          CacheErrorKind::Validation, line_no,
          "line " + std::to_string(line_no) + ": optimum " +
              std::to_string(rec.optimum) + " for " +
              std::to_string(rec.dims.m) + "x" + std::to_string(rec.dims.n) +
              " violates the bounds sandwich [" +
              std::to_string(lower_target(rec.dims)) + ", " +
              std::to_string(upper_bound(rec.dims)) + "]");
    }
    const auto key = std::pair{rec.dims.m, rec.dims.n};
    if (cache.records.count(key) != 0) {
      throw CacheError(CacheErrorKind::Parse, line_no,
                       "line " + std::to_string(line_no) +
                           ": duplicate record for " +
                           std::to_string(rec.dims.m) + "x" +
                           std::to_string(rec.dims.n));
    }
    cache.records[key] = std::move(rec);
  }
  if (!saw_header) {
    throw CacheError(CacheErrorKind::Parse, 0, "missing cache header");
  }
  return cache;
}

CacheLoadResult load_cache(const std::filesystem::path& path) {
  CacheLoadResult result;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    result.file_found = false;  // explicit: empty cache, file not found
    return result;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CacheError(CacheErrorKind::Io, 0,
                     "cannot open cache file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw CacheError(CacheErrorKind::Io, 0,
                     "error reading cache file " + path.string());
  }
  result.cache = parse_cache(buffer.str());
  result.file_found = true;
  return result;
}

void save_cache(const std::filesystem::path& path, const ResultsCache& cache) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw CacheError(CacheErrorKind::Io, 0,
                     "cannot open cache file " + path.string() +
                         " for writing");
  }
  out << serialize_cache(cache);
  out.flush();
  if (!out) {
    throw CacheError(CacheErrorKind::Io, 0,
                     "error writing cache file " + path.string());
  }
}

std::string current_utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace gridwalk
