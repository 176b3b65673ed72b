// End-to-end checks of the command-line surface: subcommand grammar,
// document formats, exit codes, and output determinism.

#include "lenshom/diagram.hpp"
#include "lenshom/json_io.hpp"
#include "lenshom/trivial.hpp"

#include <doctest.h>

#include "support/fixtures.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  friend bool operator==(const RunResult&, const RunResult&) = default;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LENSHOM_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 256> buffer{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) out += buffer.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "lenshom_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream(path) << content;
  return path.string();
}

std::string b_file() {
  return write_file("b.json", lenshom::diagram_to_json(fixtures::knot_b()));
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run("validate " + b_file()) == RunResult{0, "ok\n"});
  std::string bad = write_file(
      "bad.json", R"({"p":4,"q":2,"n":1,"O":[[0,0]],"X":[[1,0]]})");
  RunResult r = run("validate " + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("NonCoprime") != std::string::npos);
}

TEST_CASE("info reports the invariants of B") {
  RunResult r = run("info " + b_file());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p=5 q=1 n=2") != std::string::npos);
  CHECK(r.out.find("components=1") != std::string::npos);
  CHECK(r.out.find("mu=[0]") != std::string::npos);
  CHECK(r.out.find("scr=20") != std::string::npos);
}

TEST_CASE("lift emits a valid diagram document") {
  RunResult r = run("lift " + b_file());
  CHECK(r.exit_code == 0);
  lenshom::GridDiagram cover = lenshom::diagram_from_json(r.out);
  CHECK(cover == lenshom::lift(fixtures::knot_b()));
}

TEST_CASE("scr") {
  CHECK(run("scr " + b_file()) == RunResult{0, "20\n"});
}

TEST_CASE("trivial emits the figure diagram") {
  RunResult r = run("trivial --p 5 --q 2 --index 0,1,2,0,3");
  CHECK(r.exit_code == 0);
  CHECK(lenshom::diagram_from_json(r.out) ==
        lenshom::build_trivial_diagram({5, 2, {0, 1, 2, 0, 3}}));
}

TEST_CASE("move applies a commutation") {
  std::string l_file =
      write_file("l.json", lenshom::diagram_to_json(fixtures::link_l()));
  RunResult r = run("move " + l_file + " --op commute-cols --at 0");
  CHECK(r.exit_code == 0);
  CHECK(lenshom::diagram_from_json(r.out) ==
        lenshom::commute_columns(fixtures::link_l(), 0));
  RunResult rr = run("move " + l_file + " --op resolve --at 2");
  CHECK(rr.exit_code == 1);  // interface 2 carries no skein crossing
}

TEST_CASE("homfly evaluates B and writes trace and tree") {
  auto trace_path = (scratch_dir() / "b_trace.json").string();
  auto tree_path = (scratch_dir() / "b_tree.json").string();
  RunResult r = run("homfly " + b_file() + " --trace " + trace_path +
                    " --tree " + tree_path);
  CHECK(r == RunResult{0, "a^6 + a^6*z\n"});
  std::ifstream trace(trace_path), tree(tree_path);
  CHECK(trace.good());
  CHECK(tree.good());
  std::string tree_text((std::istreambuf_iterator<char>(tree)),
                        std::istreambuf_iterator<char>());
  CHECK(tree_text.find("\"u_bound\": 1") != std::string::npos);
  CHECK(tree_text.find("\"role\": \"leaf\"") != std::string::npos);
}

TEST_CASE("homfly json format") {
  RunResult r = run("homfly " + b_file() + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"value\":\"a^6 + a^6*z\",\"u_bound\":1}\n");
}

TEST_CASE("homfly honors a normalization override") {
  // Override J(T) on the two-component class reached by resolving B.
  std::string table = write_file(
      "norm.json", R"([{"index":[0,1,0,0,1],"value":"a^6"}])");
  RunResult r = run("homfly " + b_file() + " --normalization " + table);
  CHECK(r.exit_code == 0);
  // J(B) = a^10 J(K_0) + a^5 z J(B_0) with J(B_0) overridden to a^6.
  CHECK(r.out == "a^6 + a^11*z\n");
  std::string bad = write_file(
      "norm_bad.json", R"([{"index":[1,0,0,0,0],"value":"a"}])");
  CHECK(run("homfly " + b_file() + " --normalization " + bad).exit_code == 1);
}

TEST_CASE("tree exports json and dot") {
  RunResult json = run("tree " + b_file());
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"branches\"") != std::string::npos);
  RunResult dot = run("tree " + b_file() + " --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.find("digraph skein_tree") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  std::string args = "homfly " + b_file();
  CHECK(run(args) == run(args));
  CHECK(run("tree " + b_file()) == run("tree " + b_file()));
}
