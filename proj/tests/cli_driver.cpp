// End-to-end scenarios against the installed CLI binary.
//
//   cli_driver <path-to-gridwalk> <data-dir>
//
// Each scenario shells out, captures stdout and the exit status, and
// compares against pinned bytes or predicates.  Exit status is the number
// of failed expectations.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

int failures = 0;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    ++failures;
    std::fprintf(stderr, "FAIL: %s\n", what.c_str());
  }
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::fprintf(stderr, "popen failed for: %s\n", full.c_str());
    std::exit(70);
  }
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: cli_driver <gridwalk-binary> <data-dir>\n");
    return 64;
  }
  const std::string bin = argv[1];
  const std::string data = argv[2];

  // bounds: pinned single-line reports and the dims guard
  auto r = run(bin + " bounds 4 4");
  expect(r.code == 0 && r.out == "r=61 upper=62 interval\n", "bounds 4 4");
  r = run(bin + " bounds 3 4");
  expect(r.code == 0 && r.out == "exact M=39\n", "bounds 3 4");
  r = run(bin + " bounds 1 6");
  expect(r.code == 0 && r.out == "exact M=17\n", "bounds 1 6");
  r = run(bin + " bounds 0 4");
  expect(r.code == 2, "bounds 0 4 must exit 2, got " + std::to_string(r.code));

  // construct: labeling bytes plus the self-check line
  r = run(bin + " construct 2 3");
  expect(r.code == 0 && r.out == "2 4 6\n5 1 3\nlength=12 target=12\n", "construct 2 3");
  r = run(bin + " construct 1 1");
  expect(r.code == 0 && r.out == "1\nlength=0 target=0\n", "construct 1 1");
  r = run(bin + " construct 3 3");
  expect(r.code == 0 && contains(r.out, "length=23 target=23"), "construct 3 3 length line");

  const auto out_file = temp_path("gridwalk_cli_construct.txt");
  std::filesystem::remove(out_file);
  r = run(bin + " construct 5 5 --out " + out_file.string());
  expect(r.code == 0 && r.out == "length=119 target=119\n", "construct 5 5 --out");
  r = run(bin + " eval " + out_file.string());
  expect(r.code == 0 && r.out == "119\n", "eval of the construct --out file");

  // eval: hand-computed walk lengths and input validation
  const auto rowmajor = temp_path("gridwalk_cli_rowmajor.txt");
  write_file(rowmajor, "1 2\n3 4\n");
  r = run(bin + " eval " + rowmajor.string());
  expect(r.code == 0 && r.out == "4\n", "eval row-major 2x2");

  const auto witness = temp_path("gridwalk_cli_witness.txt");
  write_file(witness, "1 3\n4 2\n");
  r = run(bin + " eval " + witness.string());
  expect(r.code == 0 && r.out == "5\n", "eval optimal 2x2");

  const auto duplicate = temp_path("gridwalk_cli_duplicate.txt");
  write_file(duplicate, "1 1\n3 4\n");
  r = run(bin + " eval " + duplicate.string());
  expect(r.code == 2, "eval duplicate labels must exit 2, got " + std::to_string(r.code));
  r = run(bin + " eval " + temp_path("gridwalk_cli_missing.txt").string());
  expect(r.code == 2, "eval missing file must exit 2, got " + std::to_string(r.code));

  // solve: resolution report, conjecture line, and the cell-cap guard
  r = run(bin + " solve 2 2");
  expect(r.code == 0 && r.out == "M=5, equals r\nr=5 upper=6 interval\nmcneil(2)=5, matches\n",
         "solve 2 2");
  r = run(bin + " solve 3 4");
  expect(r.code == 0 && r.out == "M=39, equals r\nexact M=39\n", "solve 3 4");
  r = run(bin + " solve 5 5");
  expect(r.code == 4, "solve 5 5 must exit 4, got " + std::to_string(r.code));
  r = run(bin + " solve 4 4 --cap 15");
  expect(r.code == 4, "solve 4 4 --cap 15 must exit 4, got " + std::to_string(r.code));
  r = run(bin + " solve 2 2 --cap 23");
  expect(r.code == 2, "solve --cap 23 must exit 2, got " + std::to_string(r.code));

  // solve --cache: records persist and are cross-checked by compare-oeis
  const auto cache = temp_path("gridwalk_cli_cache.txt");
  std::filesystem::remove(cache);
  r = run(bin + " solve 3 2 --cache " + cache.string());
  expect(r.code == 0, "solve 3 2 --cache");
  r = run(bin + " solve 2 2 --cache " + cache.string());
  expect(r.code == 0, "solve 2 2 --cache");
  {
    std::ifstream in(cache);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    expect(contains(bytes, "# gridwalk results cache v1"), "cache header");
    expect(contains(bytes, "2 2 5 dp "), "cache row for 2x2");
    expect(contains(bytes, "2 3 12 dp "), "cache canonicalizes 3x2 to 2 3");
  }

  // sweep: deterministic table/CSV emission and range validation
  r = run(bin + " sweep 2..4 2..4 --format csv");
  expect(r.code == 0, "sweep csv exit");
  expect(count_lines(r.out) == 10, "sweep csv has header + 9 rows");
  expect(r.out.rfind("m,n,lower,upper,exact,solved,construct_len,conjecture\n", 0) == 0,
         "sweep csv pinned header");
  auto again = run(bin + " sweep 2..4 2..4 --format csv");
  expect(again.out == r.out, "sweep csv byte-stable across runs");
  r = run(bin + " sweep 3..3 3..3");
  expect(r.code == 0 && contains(r.out, "23"), "sweep 3..3 table mentions the lower target");
  r = run(bin + " sweep 4..2 2..4");
  expect(r.code == 2, "reversed sweep range must exit 2, got " + std::to_string(r.code));
  r = run(bin + " sweep 2..x 2..4");
  expect(r.code == 2, "malformed sweep range must exit 2, got " + std::to_string(r.code));
  r = run(bin + " sweep 2..3 2..3 --format xml");
  expect(r.code == 2, "unknown format must exit 2, got " + std::to_string(r.code));
  r = run(bin + " sweep 2..2 2..2 --cap 30");
  expect(r.code == 2, "sweep cap above the ceiling must exit 2, got " + std::to_string(r.code));

  // compare-oeis: fixture verdicts and the cache cross-check
  r = run(bin + " compare-oeis " + data + "/a179094.bfile");
  expect(r.code == 0, "compare-oeis fixture exit");
  expect(contains(r.out, "matches=9 mismatches=0"), "compare-oeis fixture summary");
  expect(count_occurrences(r.out, "MISMATCH") == 0, "compare-oeis fixture has no mismatches");
  r = run(bin + " compare-oeis " + data + "/a179094_perturbed.bfile");
  expect(r.code == 0, "compare-oeis perturbed exit");
  expect(contains(r.out, "matches=8 mismatches=1"), "compare-oeis perturbed summary");
  expect(count_occurrences(r.out, "MISMATCH") == 1, "perturbed fixture flags exactly one line");
  expect(contains(r.out, "n=6 value=214 expected=213 MISMATCH"), "perturbed verdict line");
  r = run(bin + " compare-oeis " + data + "/a179094.bfile --cache " + cache.string());
  expect(r.code == 0 && contains(r.out, "n=2 solver=5 file=5 agree"),
         "compare-oeis cross-checks the cache");
  r = run(bin + " compare-oeis " + temp_path("gridwalk_cli_nofile.bfile").string());
  expect(r.code == 2, "compare-oeis missing file must exit 2, got " + std::to_string(r.code));

  // top-level usability
  r = run(bin + " --help");
  expect(r.code == 0 && contains(r.out, "Subcommands"), "--help exits 0");
  r = run(bin);
  expect(r.code == 2, "missing subcommand must exit 2, got " + std::to_string(r.code));
  r = run(bin + " frobnicate");
  expect(r.code == 2, "unknown subcommand must exit 2, got " + std::to_string(r.code));

  std::filesystem::remove(out_file);
  std::filesystem::remove(rowmajor);
  std::filesystem::remove(witness);
  std::filesystem::remove(duplicate);
  std::filesystem::remove(cache);

  if (failures == 0) std::printf("all cli scenarios passed\n");
  return failures;
}
