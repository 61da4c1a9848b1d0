#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "scotree/cli.hpp"
#include "scotree/io.hpp"

using namespace scotree;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    dir_ = fs::temp_directory_path() / ("scotree-test-" + std::to_string(std::rand()));
    fs::create_directories(dir_);
  }
  ~TempDir() { fs::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = dir_ / name;
    std::ofstream f(p);
    f << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

const char* kSixLeafFile =
    "ctree v1\n"
    "alphabet 0 1\n"
    "context 0 0\n"
    "context 1 0\n"
    "context 1 1\n"
    "context 0 0 1\n"
    "context 0 1 0 1\n"
    "context 1 1 0 1\n";

const char* kThreeLeafScotFile =
    "scot v1\n"
    "alphabet 0 1\n"
    "context 0 : 1/2 1/2\n"
    "context 0 1 : 3/4 1/4\n"
    "context 1 1 : 1/4 3/4\n";

}  // namespace

TEST_CASE("validate") {
  TempDir tmp;
  std::string good = tmp.file("t.ctree", io::render_tree(fixtures::seven_leaf_pm_tree()));
  CliRun ok = run_cli({"validate", good});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("7 contexts") != std::string::npos);

  std::string bad = tmp.file("bad.ctree", "ctree v1\nalphabet 0 1\ncontext 0\ncontext 0 0\n");
  CliRun fail = run_cli({"validate", bad});
  CHECK(fail.code == 2);
  CHECK(fail.err.find("line 4") != std::string::npos);

  CliRun missing = run_cli({"validate", tmp.path("nope.ctree")});
  CHECK(missing.code == 2);

  std::string scot = tmp.file("s.scot", kThreeLeafScotFile);
  CliRun sok = run_cli({"validate", scot});
  CHECK(sok.code == 0);
  CHECK(sok.out.find("scot") != std::string::npos);
}

TEST_CASE("check reports witnesses and exit codes") {
  TempDir tmp;
  std::string six = tmp.file("six.ctree", kSixLeafFile);
  std::string seven = tmp.file("seven.ctree", io::render_tree(fixtures::seven_leaf_pm_tree()));

  CliRun pm = run_cli({"check", seven});
  CHECK(pm.code == 0);
  CHECK(pm.out.find("def4: perfect-memory") != std::string::npos);
  CHECK(pm.out.find("cor2: perfect-memory") != std::string::npos);

  CliRun bad = run_cli({"check", six});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("def4: not perfect-memory") != std::string::npos);
  CHECK(bad.out.find("witness") != std::string::npos);

  CliRun single = run_cli({"check", "--criterion", "thm2", six});
  CHECK(single.code == 1);
  CHECK(single.out.find("thm2: not perfect-memory") != std::string::npos);
  CHECK(single.out.find("def4") == std::string::npos);

  CliRun parse_fail = run_cli({"check", tmp.file("broken.ctree", "ctree v1\n")});
  CHECK(parse_fail.code == 2);
}

TEST_CASE("close produces identical output for both methods") {
  TempDir tmp;
  std::string six = tmp.file("six.ctree", kSixLeafFile);
  CliRun trim = run_cli({"close", "--method", "trim", six});
  CliRun oracle = run_cli({"close", "--method", "oracle", six});
  CHECK(trim.code == 0);
  CHECK(oracle.code == 0);
  CHECK(trim.out == oracle.out);
  CHECK(trim.out == io::render_tree(fixtures::seven_leaf_pm_tree()));

  CliRun to_file = run_cli({"close", "-o", tmp.path("closed.ctree"), six});
  CHECK(to_file.code == 0);
  std::ifstream f(tmp.path("closed.ctree"));
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == trim.out);
}

TEST_CASE("complete computes the hull") {
  TempDir tmp;
  std::string missing =
      tmp.file("m.ctree", "ctree v1\nalphabet 0 1\ncontext 0 0\ncontext 1 0\ncontext 0 1\n");
  CliRun r = run_cli({"complete", missing});
  CHECK(r.code == 0);
  CHECK(r.out == io::render_tree(fixtures::square_tree()));
}

TEST_CASE("metrics in text and json form") {
  TempDir tmp;
  std::string six = tmp.file("six.ctree", kSixLeafFile);
  CliRun text = run_cli({"metrics", six});
  CHECK(text.code == 0);
  CHECK(text.out.find("r1 3/8") != std::string::npos);
  CHECK(text.out.find("r2 7/6") != std::string::npos);

  CliRun json = run_cli({"metrics", "--json", six});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"r2\": \"7/6\"") != std::string::npos);
}

TEST_CASE("chain writes one file per tree in the sequence") {
  TempDir tmp;
  std::string seven = tmp.file("seven.ctree", io::render_tree(fixtures::seven_leaf_pm_tree()));
  std::string depth1 = tmp.file("d1.ctree", io::render_tree(fixtures::depth_one_tree()));
  CliRun r = run_cli({"chain", seven, depth1, "-o", tmp.path("chain")});
  CHECK(r.code == 0);
  for (int i = 0; i < 6; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "chain-%03d.ctree", i);
    CHECK(fs::exists(fs::path(tmp.path("chain")) / name));
  }
  CHECK_FALSE(fs::exists(fs::path(tmp.path("chain")) / "chain-006.ctree"));

  // Equal endpoints are a validation error.
  CliRun same = run_cli({"chain", seven, seven, "-o", tmp.path("chain2")});
  CHECK(same.code == 2);
}

TEST_CASE("lattice subcommand") {
  TempDir tmp;
  std::string six = tmp.file("six.ctree", kSixLeafFile);
  std::string seven = tmp.file("seven.ctree", io::render_tree(fixtures::seven_leaf_pm_tree()));
  CliRun u = run_cli({"lattice", "union", six, seven});
  CHECK(u.code == 0);
  CHECK(u.out == io::render_tree(fixtures::seven_leaf_pm_tree()));
  CliRun n = run_cli({"lattice", "intersect", six, seven});
  CHECK(n.code == 0);
  CHECK(n.out == io::render_tree(io::parse_tree(kSixLeafFile)));
}

TEST_CASE("example and count subcommands") {
  CliRun comb = run_cli({"example", "comb", "--n", "2", "--depth", "4"});
  CHECK(comb.code == 0);
  CHECK(comb.out.find("context 0 0 0 0\n") != std::string::npos);

  CliRun sparse = run_cli({"example", "sparse"});
  CHECK(sparse.code == 0);

  CliRun wide = run_cli({"example", "wide", "--n", "3", "--depth", "5"});
  CHECK(wide.code == 0);

  CliRun bad = run_cli({"example", "comb", "--n", "1", "--depth", "4"});
  CHECK(bad.code == 2);

  CliRun count = run_cli({"count", "--n", "2", "--depth", "4"});
  CHECK(count.code == 0);
  CHECK(count.out == "677\n");
}

TEST_CASE("markov and simulate subcommands") {
  TempDir tmp;
  std::string scot = tmp.file("s.scot", kThreeLeafScotFile);
  CliRun mc = run_cli({"markov", scot});
  CHECK(mc.code == 0);
  CHECK(mc.out.find("state,0,0.1,1.1") == 0);
  CHECK(mc.out.find("0,1/2,1/2,0") != std::string::npos);

  CliRun sim1 = run_cli({"simulate", scot, "--steps", "20", "--seed", "9"});
  CliRun sim2 = run_cli({"simulate", scot, "--steps", "20", "--seed", "9"});
  CHECK(sim1.code == 0);
  CHECK(sim1.out == sim2.out);

  CliRun init = run_cli({"simulate", scot, "--steps", "5", "--seed", "1", "--init", "0 1"});
  CHECK(init.code == 0);

  CliRun bad_init = run_cli({"simulate", scot, "--steps", "5", "--seed", "1", "--init", "1"});
  CHECK(bad_init.code == 2);
}

TEST_CASE("help and usage errors") {
  CliRun help = run_cli({"--help"});
  CHECK(help.code == 0);
  CliRun nothing = run_cli({});
  CHECK(nothing.code == 2);
  CliRun unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 2);
}
