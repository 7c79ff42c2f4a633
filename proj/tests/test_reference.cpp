#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gridwalk/bounds.hpp>
#include <gridwalk/reference.hpp>

using namespace gridwalk;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("b-file parsing") {
  SUBCASE("comments, blank lines, and entries") {
    SequenceTable t = parse_bfile("# header\n\n2 5\n3 23\n\n# tail\n4 61\n");
    REQUIRE(t.entries.size() == 3);
    CHECK(t.entries.at(2) == 5);
    CHECK(t.entries.at(3) == 23);
    CHECK(t.entries.at(4) == 61);
  }
  SUBCASE("empty input is an empty table") {
    CHECK(parse_bfile("").entries.empty());
    CHECK(parse_bfile("# only comments\n").entries.empty());
  }
  SUBCASE("malformed lines carry their line number") {
    try {
      parse_bfile("2 5\n3 23 99\n");
      FAIL("expected BFileError");
    } catch (const BFileError& e) {
      CHECK(e.kind() == BFileErrorKind::MalformedLine);
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_bfile("x 5\n"), BFileError);
    CHECK_THROWS_AS(parse_bfile("5\n"), BFileError);
  }
  SUBCASE("negative values rejected") {
    try {
      parse_bfile("2 -5\n");
      FAIL("expected BFileError");
    } catch (const BFileError& e) {
      CHECK(e.kind() == BFileErrorKind::NegativeValue);
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("duplicate indices rejected") {
    try {
      parse_bfile("2 5\n2 6\n");
      FAIL("expected BFileError");
    } catch (const BFileError& e) {
      CHECK(e.kind() == BFileErrorKind::DuplicateIndex);
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("b-file rendering round trips") {
  SequenceTable t;
  t.entries = {{2, 5}, {3, 23}, {4, 61}};
  const std::string text = render_bfile(t);
  CHECK(text == "2 5\n3 23\n4 61\n");
  CHECK(parse_bfile(text).entries == t.entries);
  // canonical form is stable under re-rendering
  CHECK(render_bfile(parse_bfile(text)) == text);
}

TEST_CASE("conjecture comparison") {
  SUBCASE("all conjectured values match") {
    SequenceTable t;
    for (std::int64_t n = 2; n <= 10; ++n) t.entries[n] = mcneil(n);
    ConjectureReport rep = compare_with_conjecture(t);
    CHECK(rep.matches == 9);
    CHECK(rep.mismatches == 0);
    CHECK(rep.rows.size() == 9);
    CHECK(rep.skipped.empty());
    for (const auto& row : rep.rows) CHECK(row.match);
  }
  SUBCASE("a single perturbed entry is flagged alone") {
    SequenceTable t;
    for (std::int64_t n = 2; n <= 10; ++n) t.entries[n] = mcneil(n);
    t.entries[6] += 1;
    ConjectureReport rep = compare_with_conjecture(t);
    CHECK(rep.matches == 8);
    CHECK(rep.mismatches == 1);
    for (const auto& row : rep.rows) {
      CHECK(row.match == (row.index != 6));
      if (row.index == 6) {
        CHECK(row.value == 214);
        CHECK(row.expected == 213);
      }
    }
  }
  SUBCASE("out-of-domain indices are skipped, not judged") {
    SequenceTable t;
    t.entries[0] = 7;
    t.entries[1] = 0;
    t.entries[2] = 5;
    t.entries[kMcneilMaxN + 1] = 1;
    ConjectureReport rep = compare_with_conjecture(t);
    CHECK(rep.matches == 1);
    CHECK(rep.mismatches == 0);
    CHECK(rep.skipped == std::vector<std::int64_t>{0, 1, kMcneilMaxN + 1});
  }
}

TEST_CASE("results cache canonicalizes orientation") {
  ResultsCache cache;
  cache.upsert({GridDims{4, 3}, 39, SolveMethod::BitmaskDP, ""});
  REQUIRE(cache.records.size() == 1);
  CHECK(cache.records.begin()->first == std::pair<std::int64_t, std::int64_t>{3, 4});
  CHECK(cache.find({3, 4}).has_value());
  CHECK(cache.find({4, 3}).has_value());
  CHECK_FALSE(cache.find({2, 3}).has_value());
  // upsert replaces in place
  cache.upsert({GridDims{3, 4}, 39, SolveMethod::BruteForce, "2026-01-01T00:00:00Z"});
  REQUIRE(cache.records.size() == 1);
  CHECK(cache.find({4, 3})->method == SolveMethod::BruteForce);
}

TEST_CASE("cache serialization") {
  ResultsCache cache;
  cache.upsert({GridDims{2, 2}, 5, SolveMethod::BruteForce, "2026-02-03T04:05:06Z"});
  cache.upsert({GridDims{3, 4}, 39, SolveMethod::BitmaskDP, ""});
  const std::string text = serialize_cache(cache);
  CHECK(text ==
        "# gridwalk results cache v1\n"
        "2 2 5 brute 2026-02-03T04:05:06Z\n"
        "3 4 39 dp -\n");
  CHECK(parse_cache(text) == cache);
  CHECK(serialize_cache(parse_cache(text)) == text);
}

TEST_CASE("cache parsing rejects corrupt content") {
  SUBCASE("missing or wrong header") {
    CHECK_THROWS_AS(parse_cache(""), CacheError);
    CHECK_THROWS_AS(parse_cache("2 2 5 dp -\n"), CacheError);
  }
  SUBCASE("wrong token count") {
    CHECK_THROWS_AS(parse_cache("# gridwalk results cache v1\n2 2 5\n"), CacheError);
  }
  SUBCASE("unknown method") {
    CHECK_THROWS_AS(parse_cache("# gridwalk results cache v1\n2 2 5 magic -\n"), CacheError);
  }
  SUBCASE("non-canonical orientation") {
    try {
      parse_cache("# gridwalk results cache v1\n4 3 39 dp -\n");
      FAIL("expected CacheError");
    } catch (const CacheError& e) {
      CHECK(e.kind() == CacheErrorKind::Validation);
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("optimum outside the bound sandwich") {
    CHECK_THROWS_AS(parse_cache("# gridwalk results cache v1\n2 2 7 dp -\n"), CacheError);
    CHECK_THROWS_AS(parse_cache("# gridwalk results cache v1\n2 2 4 dp -\n"), CacheError);
  }
  SUBCASE("duplicate dims") {
    CHECK_THROWS_AS(
        parse_cache("# gridwalk results cache v1\n2 2 5 dp -\n2 2 5 dp -\n"),
        CacheError);
  }
}

TEST_CASE("cache file round trip") {
  const auto path = temp_file("gridwalk_cache_test.txt");
  std::filesystem::remove(path);

  CacheLoadResult missing = load_cache(path);
  CHECK_FALSE(missing.file_found);
  CHECK(missing.cache.records.empty());

  ResultsCache cache;
  cache.upsert({GridDims{2, 3}, 12, SolveMethod::BitmaskDP, current_utc_timestamp()});
  cache.upsert({GridDims{2, 2}, 5, SolveMethod::BitmaskDP, current_utc_timestamp()});
  save_cache(path, cache);

  CacheLoadResult loaded = load_cache(path);
  CHECK(loaded.file_found);
  CHECK(loaded.cache == cache);

  // byte-stable: saving the loaded cache reproduces the file exactly
  std::ifstream in(path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(bytes == serialize_cache(loaded.cache));

  std::filesystem::remove(path);
}

TEST_CASE("corrupt cache file raises instead of resetting") {
  const auto path = temp_file("gridwalk_cache_corrupt.txt");
  {
    std::ofstream out(path);
    out << "not a cache\n";
  }
  CHECK_THROWS_AS(load_cache(path), CacheError);
  std::filesystem::remove(path);
}

TEST_CASE("utc timestamps have the pinned shape") {
  const std::string ts = current_utc_timestamp();
  REQUIRE(ts.size() == 20);
  CHECK(ts[4] == '-');
  CHECK(ts[7] == '-');
  CHECK(ts[10] == 'T');
  CHECK(ts[13] == ':');
  CHECK(ts[16] == ':');
  CHECK(ts[19] == 'Z');
  CHECK(ts.find(' ') == std::string::npos);
}
