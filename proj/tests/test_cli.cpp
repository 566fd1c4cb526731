// End-to-end checks of the command-line binary: exit-code contract
// (0 pass, 1 claim failed, 2 usage/input error), output shape, and the
// corpus round trip. The binary path arrives via the LOOPS_CLI macro.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "loops/table.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path capture =
      fs::temp_directory_path() /
      ("loops_cli_out_" + std::to_string(counter++) + ".txt");
  const std::string cmd = std::string(LOOPS_CLI) + " " + args + " > " +
                          capture.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(capture);
  std::stringstream text;
  text << in.rdbuf();
  fs::remove(capture);
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), text.str()};
}

// Temp workspace with fixture tables written once.
const fs::path& workdir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "loops_cli_fixtures";
    fs::create_directories(d);
    loops::save_table_file(fixtures::cyclic(4), (d / "z4.json").string());
    loops::save_table_file(fixtures::s3(), (d / "s3.json").string());
    loops::save_table_file(fixtures::klein4(), (d / "klein.txt").string());
    return d;
  }();
  return dir;
}

std::string tbl(const std::string& name) {
  return (workdir() / name).string();
}

}  // namespace

TEST_CASE("check: property and identity, pass and fail exit codes") {
  RunResult r = run("check --table " + tbl("z4.json") + " --prop MIDDLE_BOL");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("holds", 0) == 0);

  r = run("check --table " + tbl("z4.json") +
          " --identity 'x(yz\\x) = (x/z)(y\\x)'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("holds", 0) == 0);

  r = run("check --table " + tbl("s3.json") + " --prop COMMUTATIVE");
  CHECK(r.exit_code == 1);
  CHECK(r.out.rfind("fails", 0) == 0);
  CHECK(r.out.find("x=") != std::string::npos);  // counterexample shown
}

TEST_CASE("check: usage and input errors exit 2") {
  CHECK(run("check --table " + tbl("z4.json") + " --prop NO_SUCH").exit_code ==
        2);
  CHECK(run("check --table " + tbl("z4.json")).exit_code == 2);  // no claim
  CHECK(run("check --table " + tbl("z4.json") +
            " --identity 'x((y = z'").exit_code == 2);  // parse error
  CHECK(run("check --table /no/such/file.json --prop LAP").exit_code == 2);
  CHECK(run("").exit_code == 2);            // missing subcommand
  CHECK(run("frobnicate").exit_code == 2);  // unknown subcommand
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("classify prints the catalog verdicts") {
  const RunResult r = run("classify --table " + tbl("z4.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order 4") != std::string::npos);
  CHECK(r.out.find("ASSOCIATIVE: holds") != std::string::npos);
  CHECK(r.out.find("COMMUTATIVE: holds") != std::string::npos);
  CHECK(r.out.find("AUDIT VIOLATION") == std::string::npos);
}

TEST_CASE("search emits tables and honors the dedup flag") {
  const RunResult r =
      run("search --order 4 --require ASSOCIATIVE --dedup");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("found 2 loop(s)") != std::string::npos);
  CHECK(r.out.find("space exhausted") != std::string::npos);
  CHECK(r.out.find("\"table\"") != std::string::npos);

  CHECK(run("search --order 16 --require MIDDLE_BOL").exit_code == 2);
}

TEST_CASE("construct, isotope and iso round trip through files") {
  // Klein is a group, so it is left and right Bol; both bridges apply.
  RunResult r = run("construct --from right-bol --table " + tbl("klein.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"n\":4") != std::string::npos);
  CHECK(run("construct --from nonsense --table " + tbl("klein.txt"))
            .exit_code == 2);

  r = run("isotope --table " + tbl("z4.json") + " --a 1 --b 2");
  CHECK(r.exit_code == 0);
  CHECK(run("isotope --table " + tbl("z4.json") + " --a 9 --b 0").exit_code ==
        2);

  CHECK(run("iso --table " + tbl("z4.json") + " --table2 " + tbl("z4.json"))
            .exit_code == 0);
  const RunResult diff =
      run("iso --table " + tbl("z4.json") + " --table2 " + tbl("klein.txt"));
  CHECK(diff.exit_code == 1);
  CHECK(diff.out.rfind("not isomorphic", 0) == 0);
}

TEST_CASE("corpus build and verify-lemmas agree end to end") {
  const fs::path dir = fs::temp_directory_path() / "loops_cli_corpus";
  fs::remove_all(dir);
  RunResult r = run("corpus build --dir " + dir.string() +
                    " --orders 2..4 --classes MIDDLE_BOL");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("MIDDLE_BOL n4: 2 loop(s), complete") != std::string::npos);

  const fs::path json = dir / "report.json";
  r = run("verify-lemmas --corpus " + dir.string() + " --json " +
          json.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("RESULT: all checked items agree") != std::string::npos);
  CHECK(fs::exists(json));

  {  // a corrupted entry flips the run to exit 1 but does not crash it
    std::ofstream bad(dir / "MIDDLE_BOL" / "n4" / "0.json", std::ios::trunc);
    bad << "{\"n\": 2, \"table\": [[0,1],[1,1]]}";
  }
  r = run("verify-lemmas --corpus " + dir.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("corpus errors") != std::string::npos);
  fs::remove_all(dir);

  CHECK(run("corpus build --dir " + dir.string() +
            " --orders 4..2 --classes MIDDLE_BOL").exit_code == 2);
}

TEST_CASE("dump-catalog lists identity and procedural entries") {
  const RunResult r = run("dump-catalog");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("MIDDLE_BOL: x(yz\\x) = (x/z)(y\\x)") != std::string::npos);
  CHECK(r.out.find("PRAP(k)") != std::string::npos);
}
