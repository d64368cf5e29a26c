// End-to-end checks of the installed command-line tool.  The binary path
// arrives in LATROOTS_CLI (set by the build); every invocation runs through
// /bin/sh.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* env = std::getenv("LATROOTS_CLI");
  REQUIRE_MESSAGE(env != nullptr, "LATROOTS_CLI must point at the CLI binary");
  return env;
}

RunResult run(const std::string& args, bool merge_stderr = false, bool raw_command = false) {
  const std::string cmd = (raw_command ? args : cli_path() + " " + args) +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("orbits: the published (61, 14) row") {
  const RunResult r = run("orbits --lattice e8 --d 61 --m 14");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "61\t14\t3"));
  CHECK(contains(r.out, "# v0: "));
  CHECK(contains(r.out, "# transversal-fnv64: "));
}

TEST_CASE("root-type at d = 0 prints the zero-vector type and warns") {
  const RunResult r = run("root-type --lattice e8 --d 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0\t240"));
  const RunResult with_err = run("root-type --lattice e8 --d 0", true);
  CHECK(contains(with_err.out, "warning"));
}

TEST_CASE("verify-appendix exits 0 with five PASS lines") {
  const RunResult r = run("verify-appendix");
  CHECK(r.exit_code == 0);
  std::size_t passes = 0, pos = 0;
  while ((pos = r.out.find("PASS", pos)) != std::string::npos) {
    ++passes;
    pos += 4;
  }
  CHECK(passes == 5);
}

TEST_CASE("exit codes: usage errors exit 1") {
  CHECK(run("no-such-command", true).exit_code == 1);
  CHECK(run("roots --lattice e9", true).exit_code == 1);
  CHECK(run("scan --d-min 5 --d-max 1", true).exit_code == 1);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string cmd = "scan --lattice e8 --d-min 40 --d-max 46 --m-min 2 --m-max 14";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("thread count does not change the output") {
  const RunResult one = run("root-type --lattice e8 --d-min 1 --d-max 25 --threads 1");
  const RunResult four = run("root-type --lattice e8 --d-min 1 --d-max 25 --threads 4");
  CHECK(one.exit_code == 0);
  CHECK(one.out == four.out);
  const RunResult o1 = run("orbits --d-min 40 --d-max 52 --m 14 --threads 1");
  const RunResult o3 = run("orbits --d-min 40 --d-max 52 --m 14 --threads 3");
  CHECK(o1.out == o3.out);
  // The environment default goes through the same ordered merge.
  const RunResult env = run("LATROOTS_THREADS=3 " + cli_path() +
                                " root-type --lattice e8 --d-min 1 --d-max 25",
                            false, /*raw_command=*/true);
  CHECK(env.out == one.out);
}

TEST_CASE("root-type --m01 appends the two minima") {
  const RunResult r = run("root-type --lattice e8 --d 1 --m01 --format lines");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "1\t126\t126\t126"));
}

TEST_CASE("random-search honours its seed") {
  const std::string cmd = "random-search --d-min 1 --d-max 12 --m-min 2 --m-max 126 "
                          "--trials 2000 --seed 5";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("lines format drops the metadata header") {
  const RunResult tsv = run("repcount --lattice e8 --d 1");
  const RunResult lines = run("repcount --lattice e8 --d 1 --format lines");
  CHECK(contains(tsv.out, "# tool: "));
  CHECK_FALSE(contains(lines.out, "#"));
  CHECK(contains(lines.out, "1\t240"));
}

TEST_CASE("--out writes the table to a file") {
  const std::string path = "/tmp/latroots_cli_test_out.tsv";
  std::remove(path.c_str());
  const RunResult r = run("bound --d 52 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  FILE* f = fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buffer;
  const std::size_t n = fread(buffer.data(), 1, buffer.size(), f);
  fclose(f);
  std::remove(path.c_str());
  CHECK(contains(std::string(buffer.data(), n), "52\t7984925229121\t62382228353"));
}

TEST_CASE("enumerate emits machine vectors that include the root normal form") {
  const RunResult r = run("enumerate --d 1 --format lines");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "d2:0,0,0,0,0,0,2,2"));
  CHECK(contains(r.out, "d2:1,1,1,1,1,1,1,1"));
}
