#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

std::filesystem::path scratch_dir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "treeopt_cli_tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::filesystem::path write_input(const std::string& name,
                                  const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream f(path);
  f << content;
  return path;
}

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(TREEOPT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("grundy subcommand on a path of four vertices") {
  auto in = write_input(
      "p4.json", R"({"kind":"tree","n":4,"edges":[[1,2],[2,3],[3,4]]})");
  CliResult r = run_cli("grundy -i " + in.string());
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["status"] == "ok");
  CHECK(doc["grundy"] == 3);
}

TEST_CASE("partition-bounded on a path of five vertices") {
  auto in = write_input(
      "p5.json",
      R"({"kind":"tree","n":5,"edges":[[1,2],[2,3],[3,4],[4,5]]})");
  CliResult r = run_cli("partition-bounded --Q 2 -i " + in.string());
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["part_count"] == 2);
  std::map<int, int> sizes;
  for (int p : doc["part"]) ++sizes[p];
  REQUIRE(sizes.size() == 2);
  std::multiset<int> got;
  for (auto [id, s] : sizes) got.insert(s);
  CHECK(got == std::multiset<int>{2, 3});
}

TEST_CASE("count-labeled-leaves") {
  CliResult r = run_cli("count-labeled-leaves --n 4 --p 3");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out)["count"] == "4");
}

TEST_CASE("generator determinism") {
  CliResult a = run_cli("gen tree --n 5 --seed 7");
  CliResult b = run_cli("gen tree --n 5 --seed 7");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  Json doc = Json::parse(a.out);
  CHECK(doc["kind"] == "tree");
  CHECK(doc["n"] == 5);
  CHECK(doc["edges"].size() == 4);
}

TEST_CASE("infeasible results exit with code 2") {
  auto in = write_input(
      "inf.json",
      R"({"kind":"tree","n":4,"edges":[[1,2],[2,3],[3,4]],)"
      R"("extra_edges":[[1,3,2]]})");
  CliResult r = run_cli("cycle-complete -i " + in.string());
  REQUIRE(r.exit_code == 2);
  CHECK(Json::parse(r.out)["status"] == "infeasible");
}

TEST_CASE("cycle-complete reports the optimum and a witness") {
  auto in = write_input(
      "cyc.json",
      R"({"kind":"tree","n":4,"edges":[[1,2],[2,3],[3,4]],)"
      R"("extra_edges":[[1,3,2],[1,4,7],[2,4,4]]})");
  for (std::string mode : {"--fast", "--quadratic"}) {
    CliResult r = run_cli("cycle-complete " + mode + " -i " + in.string());
    REQUIRE(r.exit_code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["total_weight"] == 7);
    CHECK(doc["chosen_edges"].size() == 1);
  }
  CliResult m = run_cli("cycle-complete --minimax -i " + in.string());
  REQUIRE(m.exit_code == 0);
  CHECK(Json::parse(m.out)["w_max"] == 7);
}

TEST_CASE("schema violations exit with code 1") {
  auto in = write_input("bad.json", "this is not a document");
  CHECK(run_cli("grundy -i " + in.string()).exit_code == 1);
  auto noedges = write_input("bad2.json", R"({"kind":"tree","n":3})");
  CHECK(run_cli("grundy -i " + noedges.string()).exit_code == 1);
  auto wrongkind = write_input("bad3.json", R"({"kind":"leaf-seq","h":[1]})");
  CHECK(run_cli("grundy -i " + wrongkind.string()).exit_code == 1);
}

TEST_CASE("check mode agrees with the oracle") {
  auto in = write_input(
      "chk.json", R"({"kind":"tree","n":4,"edges":[[1,2],[2,3],[3,4]]})");
  CliResult r = run_cli("check --problem grundy -i " + in.string());
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["agree"] == true);
  CHECK(doc["main"] == doc["oracle"]);
}

TEST_CASE("check mode reports oracle size limits as errors") {
  CliResult gen = run_cli("gen tree --n 40 --seed 1 -o " +
                          (scratch_dir() / "big.json").string());
  REQUIRE(gen.exit_code == 0);
  CliResult r =
      run_cli("check --problem grundy -i " +
              (scratch_dir() / "big.json").string());
  CHECK(r.exit_code == 1);
}

TEST_CASE("oracle subcommand") {
  auto in = write_input(
      "orc.json", R"({"kind":"tree","n":3,"edges":[[1,2],[2,3]],)"
                  R"("extra_edges":[[1,3,9]]})");
  CliResult r = run_cli("oracle cycle-completion -i " + in.string());
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out)["total_weight"] == 9);
}

TEST_CASE("build subcommand emits a validated tree") {
  auto in = write_input("seq.json", R"({"kind":"leaf-seq","h":[1,0,0]})");
  for (std::string mode : {"--linear", "--mergesim", "--dp"}) {
    CliResult r = run_cli("build-min-height " + mode + " -i " + in.string());
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.out)["height"] == 2);
  }
}

TEST_CASE("round trip: generated instances parse and solve") {
  for (int seed = 1; seed <= 5; ++seed) {
    auto path = scratch_dir() / ("rt" + std::to_string(seed) + ".json");
    REQUIRE(run_cli("gen bounded-dag --n 5 --seed " + std::to_string(seed) +
                    " -o " + path.string())
                .exit_code == 0);
    CliResult r = run_cli("min-streams -i " + path.string());
    CHECK((r.exit_code == 0 || r.exit_code == 2));
  }
}
