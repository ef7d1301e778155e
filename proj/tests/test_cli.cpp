#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

// End-to-end checks against the built binary.

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SUPERLIE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("construct then validate round trip") {
  auto path = temp_file("superlie_cli_h10.json");
  auto c = run("construct 'H(1,0)+A(0|1)' -o " + path.string());
  CHECK(c.exit_code == 0);

  auto v = run("validate " + path.string());
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("result: valid") != std::string::npos);

  auto r = run("recognize " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("H(1,0)+A(0|1)") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("capable exit codes") {
  CHECK(run("capable 'H(1,0)'").exit_code == 0);
  CHECK(run("capable 'H(0,1)'").exit_code == 1);
  CHECK(run("capable cover_of_H1").exit_code == 2);      // undecided by the table
  CHECK(run("capable cover_of_H1 --oracle").exit_code == 0);  // the oracle decides
  CHECK(run("capable 'H(0,1)+A(1|0)' --oracle").exit_code == 1);
}

TEST_CASE("operational error exit codes") {
  CHECK(run("capable 'B(1|0)'").exit_code == 3);     // unknown family atom
  CHECK(run("table 7").exit_code == 3);              // table covers k <= 4
  CHECK(run("corank 'A(0|0)'").exit_code == 3);      // zero algebra has no corank
  CHECK(run("multiplier cover_of_H1").exit_code == 3);  // needs --oracle
  CHECK(run("capable 'A(9|0)' --oracle").exit_code == 4);  // oracle limit
  CHECK(run("capable 'A(9|0)' --oracle --limit-dim 10").exit_code == 0);
  // A truncation override below nilpotency class + 1 is refused.
  CHECK(run("capable 'H(1,0)' --oracle --class-bound 2").exit_code == 3);
  CHECK(run("multiplier 'H_1' --oracle --class-bound 4").exit_code == 0);
}

TEST_CASE("environment variables override the oracle limits") {
  RunResult r = [&] {
    std::string cmd = std::string("SUPERLIE_MAX_GENERATORS=10 ") + SUPERLIE_CLI_PATH +
                      " capable 'A(9|0)' --oracle 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    return RunResult{WEXITSTATUS(pclose(pipe)), out};
  }();
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("oracle verdict: capable") != std::string::npos);

  auto bad = temp_file("superlie_cli_bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK(run("validate " + bad.string()).exit_code == 3);
  std::filesystem::remove(bad);
}

TEST_CASE("validate flags a broken algebra file") {
  auto path = temp_file("superlie_cli_broken.json");
  std::ofstream(path) << R"({"format":"superlie-algebra","version":1,
    "dim_even":2,"dim_odd":0,
    "brackets":[{"i":0,"j":0,"coeffs":[{"k":1,"num":1,"den":1}]}]})";
  auto v = run("validate " + path.string());
  CHECK(v.exit_code == 1);
  CHECK(v.out.find("result: invalid") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("oracle subcommand on a presentation file") {
  std::string fixture = std::string(SUPERLIE_FIXTURE_DIR) + "/h1_minimal.pres";
  auto m = run("oracle multiplier " + fixture + " --stable");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("multiplier: (1|1)") != std::string::npos);
  CHECK(m.out.find("[y,y]") != std::string::npos);
  CHECK(m.out.find("[x,[x,y]]") != std::string::npos);

  auto e = run("oracle epicenter " + fixture);
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("epicenter: (0|0)") != std::string::npos);

  CHECK(run("oracle frobnicate " + fixture).exit_code == 3);
}

TEST_CASE("multiplier report carries both routes") {
  auto m = run("multiplier H_1 --oracle");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("formula multiplier: (1|1)") != std::string::npos);
  CHECK(m.out.find("oracle multiplier: (1|1)") != std::string::npos);
  CHECK(m.out.find("match: true") != std::string::npos);
}

TEST_CASE("corank and extsq reports") {
  auto c = run("corank 'H(1,0)+A(1|0)' --oracle");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("formula corank: 2") != std::string::npos);
  CHECK(c.out.find("oracle corank: 2") != std::string::npos);

  auto x = run("extsq 'H(1,0)' --oracle");
  CHECK(x.exit_code == 0);
  CHECK(x.out.find("formula exterior square: (3|0)") != std::string::npos);
  CHECK(x.out.find("oracle exterior square: (3|0)") != std::string::npos);
}

TEST_CASE("table output") {
  auto t = run("table 1");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("H(1,0)") != std::string::npos);

  auto t4 = run("table 4");
  CHECK(t4.exit_code == 0);
  CHECK(t4.out.find("not constructible") != std::string::npos);
  CHECK(t4.out.find("known-divergent") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* cmd : {"table 4 --json", "capable 'H(1,1)' --oracle --json",
                          "multiplier 'H_2' --oracle --json", "recognize 'H(2,0)+A(1|1)'",
                          "reproduce --json"}) {
    auto a = run(cmd), b = run(cmd);
    CAPTURE(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("reproduce succeeds with known divergences only") {
  auto r = run("reproduce");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find(" 0 failed") != std::string::npos);
  CHECK(r.out.find("known-divergent") != std::string::npos);
}
