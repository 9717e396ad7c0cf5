// Drives the installed-style binary end to end; SURF4_CLI_PATH is
// injected by the build. stderr goes to /dev/null unless a test wants it.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(SURF4_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

size_t count_lines(const std::string& s) {
  size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("invariants emits the exact JSON document") {
  RunResult r = run_cli("invariants -a 7 -b 8 -n 1 -r 50 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"d\":13,\"pi\":21,\"k_squared\":-42,\"chi\":1,\"dp_residual\":0}\n");
}

TEST_CASE("invariants table output") {
  RunResult r = run_cli("invariants -a 1 -b 2 -n 1 -r 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("d") != std::string::npos);
  CHECK(r.out.find("3") != std::string::npos);
  CHECK(r.out.find("pi") != std::string::npos);
  CHECK(count_lines(r.out) == 5);
}

TEST_CASE("missing flags exit with code 2 and a usage message") {
  RunResult r = run_cli("invariants -a 7", /*merge_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("-b") != std::string::npos);

  RunResult none = run_cli("", /*merge_stderr=*/true);
  CHECK(none.exit_code == 2);
}

TEST_CASE("ruled table for cubics") {
  RunResult r = run_cli("ruled -a 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 6);  // header + five rows
  CHECK(r.out.substr(0, r.out.find('\n')) ==
        "a,d,pi,verdict,branch,reasons");
  CHECK(r.out.find("3,9,12,admissible") != std::string::npos);
}

TEST_CASE("ruled rejects a < 1 with exit 2") {
  RunResult r = run_cli("ruled -a 0", /*merge_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("domain") != std::string::npos);
}

TEST_CASE("quartic table caps at degree 12 in CSV form") {
  RunResult r = run_cli("ruled -a 4 --format csv");
  CHECK(r.exit_code == 0);
  long long max_d = 0;
  std::string body = r.out.substr(r.out.find('\n') + 1);
  size_t pos = 0;
  while (pos < body.size()) {
    size_t eol = body.find('\n', pos);
    std::string line = body.substr(pos, eol - pos);
    size_t c1 = line.find(',');
    size_t c2 = line.find(',', c1 + 1);
    max_d = std::max(max_d, std::stoll(line.substr(c1 + 1, c2 - c1 - 1)));
    pos = eol + 1;
  }
  CHECK(max_d == 12);
}

TEST_CASE("fn-systems default run") {
  RunResult r = run_cli("fn-systems");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("max degree = 12") != std::string::npos);

  RunResult j = run_cli("fn-systems --format json");
  json doc = json::parse(j.out);
  REQUIRE(doc["candidates"].size() == 5);
  int excluded = 0;
  for (const auto& c : doc["candidates"])
    if (c["verdict"] == "excluded") {
      ++excluded;
      CHECK(c["a"] == 7);
      CHECK(c["d"] == 13);
    }
  CHECK(excluded == 1);
}

TEST_CASE("strict flag leaves the candidate rows unchanged") {
  json relaxed = json::parse(run_cli("fn-systems --format json").out);
  json strict = json::parse(run_cli("fn-systems --strict --format json").out);
  CHECK(relaxed["candidates"] == strict["candidates"]);
  CHECK(strict["strict"] == true);
}

TEST_CASE("n-window controls the listed solutions") {
  json doc =
      json::parse(run_cli("fn-systems --n-window 0..9 --format json").out);
  json sols;
  for (const auto& c : doc["candidates"])
    if (c["a"] == 7 && c["d"] == 13) sols = c["b_solutions"];
  json want = json::array();
  for (auto [n, b] : {std::pair<int, int>{1, 8}, {3, 15}, {5, 22}, {7, 29},
                      {9, 36}})
    want.push_back(json{{"n", n}, {"b", b}, {"r", 50}});
  CHECK(sols == want);
}

TEST_CASE("oracle enumeration and cross-validation") {
  RunResult r = run_cli("oracle --box 7..7,0..60,0..6,0..120,13 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 4);  // header + three tuples

  RunResult cv = run_cli("oracle --cross-validate");
  CHECK(cv.exit_code == 0);
  CHECK(cv.out.find("cross-validation: PASS") != std::string::npos);

  RunResult clipped = run_cli("oracle --cross-validate --box 3..9,0..5,0..6,0..120,13");
  CHECK(clipped.exit_code == 0);
  CHECK(clipped.out.find("warning") != std::string::npos);

  RunResult bad = run_cli("oracle --box nonsense", /*merge_stderr=*/true);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify-paper passes and exits 0") {
  RunResult r = run_cli("verify-paper");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  RunResult j = run_cli("verify-paper --format json");
  CHECK(j.exit_code == 0);
  json doc = json::parse(j.out);
  CHECK(doc["summary"]["fail"] == 0);
  // parse -> dump -> parse round trip is stable
  CHECK(json::parse(doc.dump()).dump() == doc.dump());

  RunResult c = run_cli("verify-paper --format csv");
  CHECK(c.exit_code == 0);
  CHECK(c.out.substr(0, c.out.find('\n')) ==
        "status,criterion,claim_id,citation,expected,computed");
}

TEST_CASE("identical invocations are byte-identical") {
  for (const std::string& cmd :
       {std::string("fn-systems --format json"), std::string("ruled -a 5"),
        std::string("oracle --format csv"), std::string("verify-paper")}) {
    RunResult first = run_cli(cmd);
    RunResult second = run_cli(cmd);
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
  }
}
