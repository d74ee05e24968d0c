#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string capture = "cli_capture_" + std::to_string(++counter) + ".txt";
  std::string cmd = std::string(CLI_PATH) + " " + args + " > " + capture + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(capture.c_str());
  return {code, buf.str()};
}

std::string last_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return last;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("length command", "[cli]") {
  REQUIRE(run_cli("length abAB").out == "4\n");
  REQUIRE(run_cli("length \"\"").out == "0\n");
  REQUIRE(run_cli("length aA").out == "0\n");
  REQUIRE(run_cli("length x0x1").out == "2\n");
  REQUIRE(run_cli("length 'x0 x1^-1'").out == "2\n");

  REQUIRE(run_cli("length abq").exit_code == 2);
  REQUIRE(run_cli("length").exit_code == 2);
}

TEST_CASE("count command output formats", "[cli]") {
  RunResult table = run_cli("count --method b --max-n 10");
  REQUIRE(table.exit_code == 0);
  REQUIRE(contains(table.out, "# n f(n)\n0 1\n"));
  REQUIRE(last_line(table.out) == "10 56664");

  RunResult csv = run_cli("count --method b --max-n 3 --format csv");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(csv.out == "n,f\n0,1\n1,4\n2,12\n3,36\n");

  RunResult bfile = run_cli("count --method b --max-n 3 --format bfile");
  REQUIRE(bfile.exit_code == 0);
  REQUIRE(bfile.out == "0 1\n1 4\n2 12\n3 36\n");
}

TEST_CASE("count by the other methods", "[cli]") {
  RunResult walk = run_cli("count --method a --max-n 5 --geodesics");
  REQUIRE(walk.exit_code == 0);
  REQUIRE(contains(walk.out, "# n f(n) g(n)\n"));
  REQUIRE(last_line(walk.out) == "5 314 324");

  RunResult oracle = run_cli("count --method oracle --max-n 3");
  REQUIRE(oracle.exit_code == 0);
  REQUIRE(last_line(oracle.out) == "3 36");

  REQUIRE(run_cli("count --method b --geodesics --max-n 3").exit_code == 2);
  REQUIRE(run_cli("count --method nosuch --max-n 3").exit_code == 2);
}

TEST_CASE("cross-validation command", "[cli]") {
  RunResult ok = run_cli("validate --max-n-a 5 --max-n-oracle 4");
  REQUIRE(ok.exit_code == 0);
  REQUIRE(contains(ok.out, "# all methods agree"));
  REQUIRE(contains(ok.out, "5 314 314 - ok"));

  REQUIRE(run_cli("validate --max-n-oracle 11").exit_code == 2);
  REQUIRE(run_cli("validate --max-n-a 17").exit_code == 2);
}

TEST_CASE("analysis command", "[cli]") {
  RunResult table = run_cli("analyze --max-n 22");
  REQUIRE(table.exit_code == 0);
  REQUIRE(contains(table.out, "\n22 9035758992 2.8349398"));
  REQUIRE(contains(table.out, "# lower bound (3+sqrt(5))/2 = 2.61803398874989484820"));

  RunResult csv = run_cli("analyze --max-n 4 --format csv");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(contains(csv.out, "n,f,fekete_upper,ratio\n1,4,4.0000"));

  std::ofstream bad("cli_bad_series.bfile", std::ios::binary);
  bad << "0 1\n1 1\n2 3\n";
  bad.close();
  REQUIRE(run_cli("analyze cli_bad_series.bfile").exit_code == 4);
  std::remove("cli_bad_series.bfile");

  std::ofstream mangled("cli_mangled.bfile", std::ios::binary);
  mangled << "0 1\n7 4\n";
  mangled.close();
  REQUIRE(run_cli("analyze cli_mangled.bfile").exit_code == 2);
  std::remove("cli_mangled.bfile");

  REQUIRE(run_cli("analyze cli_missing_file.bfile").exit_code == 5);
}

TEST_CASE("emit command writes exact b-files", "[cli]") {
  RunResult emit = run_cli("emit --max-n 3 --out cli_emit_test.bfile");
  REQUIRE(emit.exit_code == 0);
  std::ifstream in("cli_emit_test.bfile", std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  REQUIRE(buf.str() == "0 1\n1 4\n2 12\n3 36\n");
  std::remove("cli_emit_test.bfile");

  RunResult geo = run_cli("emit --method a --geodesics --max-n 1 --out cli_emit_g.bfile");
  REQUIRE(geo.exit_code == 0);
  std::ifstream gin("cli_emit_g.bfile", std::ios::binary);
  std::ostringstream gbuf;
  gbuf << gin.rdbuf();
  REQUIRE(gbuf.str() == "0 1\n1 4\n");
  std::remove("cli_emit_g.bfile");

  REQUIRE(run_cli("emit --max-n 3 --out no_such_dir/x.bfile").exit_code == 5);
  REQUIRE(run_cli("emit --max-n 3").exit_code == 2);
}

TEST_CASE("identical runs produce identical bytes", "[cli]") {
  RunResult first = run_cli("count --method b --max-n 50 --format bfile");
  RunResult second = run_cli("count --method b --max-n 50 --format bfile");
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  REQUIRE_FALSE(first.out.empty());
  REQUIRE(first.out == second.out);
  REQUIRE(contains(first.out, "\n50 6015840076078706884412\n"));

  RunResult serial = run_cli("count --method a --max-n 8");
  RunResult threaded = run_cli("count --method a --max-n 8 --threads 3");
  REQUIRE(serial.out == threaded.out);
}

TEST_CASE("resource limits and help", "[cli]") {
  REQUIRE(run_cli("count --method b --max-n 500 --memory-budget 4096").exit_code == 3);
  REQUIRE(run_cli("count --method oracle --max-n 8 --memory-budget 65536").exit_code == 3);
  REQUIRE(run_cli("--help").exit_code == 0);
  REQUIRE(run_cli("nosuchcommand").exit_code == 2);
  REQUIRE(run_cli("count --method oracle --max-n 99").exit_code == 2);
}
