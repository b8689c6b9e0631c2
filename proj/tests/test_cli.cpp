#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "heishom/graph_io.hpp"
#include "heishom/ribbon_graph.hpp"
#include "json.hpp"

using namespace heishom;
using nlohmann::json;

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HEISHOM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WEXITSTATUS(status);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string last_line(const std::string& out) {
  size_t end = out.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  size_t start = out.rfind('\n', end);
  return out.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

std::filesystem::path scratch_dir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("heishom_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream f(path);
  f << content;
  f.close();
  return path.string();
}

json parse_json_output(const std::string& out) {
  size_t pos = out.rfind("RESULT ");
  REQUIRE(pos != std::string::npos);
  return json::parse(out.substr(0, pos));
}

}  // namespace

TEST_CASE("invariants on the built-in model") {
  RunResult r = run_cli("invariants --model 1,1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "genus: 1"));
  CHECK(contains(r.out, "boundary-components: 1"));
  CHECK(contains(r.out, "h1-rank: 2"));
  CHECK(contains(r.out, "connected: yes"));
  CHECK(contains(r.out, "relative: valid"));
  CHECK(last_line(r.out) == "RESULT invariants ok");

  RunResult r2 = run_cli("invariants --model 2,3");
  CHECK(r2.code == 0);
  CHECK(contains(r2.out, "genus: 2"));
  CHECK(contains(r2.out, "boundary-components: 3"));
  CHECK(contains(r2.out, "h1-rank: 6"));
}

TEST_CASE("invariants round-trips a serialized graph file") {
  StandardModel M = standard_model(1, 1);
  std::string path = write_temp("torus.graph", serialize_graph(M.graph, M.rel));
  RunResult r = run_cli("invariants --graph " + path);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "genus: 1"));
  CHECK(contains(r.out, "boundary-components: 1"));
  CHECK(contains(r.out, "relative: valid"));
  CHECK(last_line(r.out) == "RESULT invariants ok");
}

TEST_CASE("relative homology of the built-in models") {
  RunResult r = run_cli("homology --model 1,1 --relative --n 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "coefficients: trivial"));
  CHECK(contains(r.out, "degree 0: chains 0, betti 0"));
  CHECK(contains(r.out, "degree 1: chains 0, betti 0"));
  CHECK(contains(r.out, "degree 2: chains 3, betti 3"));
  CHECK(last_line(r.out) == "RESULT homology ok");

  RunResult r2 = run_cli("homology --model 0,2 --relative --n 2");
  CHECK(r2.code == 0);
  CHECK(contains(r2.out, "degree 2: chains 1, betti 1"));

  RunResult r3 = run_cli("homology --model 2,1 --relative --n 3");
  CHECK(r3.code == 0);
  CHECK(contains(r3.out, "degree 3: chains 20, betti 20"));
}

TEST_CASE("phi evaluates braid words") {
  RunResult r = run_cli("phi --word \"a1 s1 b1\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "word: a1 s1 b1"));
  CHECK(contains(r.out, "value: u·a1·b1"));
  CHECK(last_line(r.out) == "RESULT phi ok");

  RunResult r2 = run_cli("phi --word \"s1 a1 s1 b1\"");
  CHECK(contains(r2.out, "value: u^2·a1·b1"));

  RunResult r3 = run_cli("phi --word \"s1 a1 s1 b1 s1\"");
  CHECK(contains(r3.out, "value: u^3·a1·b1"));

  RunResult r4 = run_cli("phi --word \"c1\" --model 0,2");
  CHECK(r4.code == 0);
  CHECK(contains(r4.out, "value: c1"));
}

TEST_CASE("verify reports relation families and twist identities") {
  RunResult r = run_cli("verify --model 1,1 --n 3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "instances PASS"));
  CHECK_FALSE(contains(r.out, "FAIL"));
  CHECK(contains(r.out, "braid-relation identity: PASS"));
  CHECK(last_line(r.out) == "RESULT verify ok");

  RunResult r2 = run_cli("verify --twists");
  CHECK(r2.code == 0);
  CHECK_FALSE(contains(r2.out, "instances"));
  CHECK(contains(r2.out, "automorphisms-preserve-form: PASS"));
  CHECK(contains(r2.out, "braid-relation identity: PASS"));
  CHECK(contains(r2.out, "boundary-twist-trivial-on-h1: PASS"));
  CHECK(contains(r2.out, "boundary-twist-commutes-a: PASS"));
  CHECK(contains(r2.out, "boundary-twist-commutes-b: PASS"));
  CHECK(last_line(r2.out) == "RESULT verify ok");
}

TEST_CASE("twist matrices render in the quoted normal form") {
  RunResult r = run_cli("twist-matrices");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "basis: w(a), w(b), v(a,b)"));
  CHECK(contains(r.out, "1&1&-u + 1"));
  CHECK(contains(r.out, "0&u^2·a1^2&0"));
  CHECK(contains(r.out, "0&a1&a1"));
  CHECK(contains(r.out, "1&0&0"));
  CHECK(contains(r.out, "-u^7·a1^2·b1^-2&1&-u^4·a1·b1^-1 + u^3·a1·b1^-1"));
  CHECK(contains(r.out, "-u^2·a1·b1^-1&0&1"));
  CHECK(last_line(r.out) == "RESULT twist-matrices ok");
}

TEST_CASE("graph file diagnostics") {
  std::string missing = write_temp("missing_half.graph",
                                   "vertex v0\n"
                                   "edge e1 v0 v0\n"
                                   "order v0 e1+\n");
  RunResult r = run_cli("invariants --graph " + missing);
  CHECK(r.code == 2);
  CHECK(contains(r.out, "half-edge e1- missing"));
  CHECK(last_line(r.out) == "RESULT invariants error");

  std::string empty = write_temp("empty.graph", "");
  RunResult r2 = run_cli("invariants --graph " + empty);
  CHECK(r2.code == 2);
  CHECK(contains(r2.out, "no vertices"));

  RunResult r3 = run_cli("invariants --graph " + (scratch_dir() / "absent.graph").string());
  CHECK(r3.code == 2);
  CHECK(contains(r3.out, "cannot open"));
  CHECK(contains(r3.out, "RESULT invariants error"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("invariants --model 1,1 --bogus").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);

  std::string path = write_temp("usage.graph", serialize_graph(standard_model(1, 1).graph, {}));
  RunResult both = run_cli("invariants --model 1,1 --graph " + path);
  CHECK(both.code == 2);
  CHECK(contains(both.out, "exactly one"));

  RunResult neither = run_cli("cells --n 2");
  CHECK(neither.code == 2);

  RunResult no_rel = run_cli("homology --graph " + path + " --relative --n 2");
  CHECK(no_rel.code == 2);
  CHECK(contains(no_rel.out, "relative"));

  CHECK(run_cli("homology --graph " + path + " --coeff linearized").code == 2);
  CHECK(run_cli("homology --model 1,1 --coeff nonsense").code == 2);
  CHECK(run_cli("cells --model 1,1 --n 0").code == 2);
  CHECK(run_cli("cells --model 1,x").code == 2);
  CHECK(run_cli("phi --model 1,1").code == 2);  // missing --word
}

TEST_CASE("scalar coefficient assignments") {
  RunResult r = run_cli("homology --model 1,1 --relative --n 2 --coeff scalar:u=-1,a1=2/3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "coefficients: scalar(u=-1,a1=2/3,b1=1)"));
  CHECK(contains(r.out, "degree 2: chains 3, betti 3"));

  RunResult defaults = run_cli("homology --model 1,1 --relative --n 2 --coeff scalar");
  CHECK(defaults.code == 0);
  CHECK(contains(defaults.out, "coefficients: scalar(u=1,a1=1,b1=1)"));

  RunResult lin = run_cli("homology --model 1,1 --relative --n 2 --coeff linearized");
  CHECK(lin.code == 0);
  CHECK(contains(lin.out, "unit: 4"));

  CHECK(run_cli("homology --model 1,1 --coeff scalar:zz=1").code == 2);
  CHECK(run_cli("homology --model 1,1 --coeff scalar:a1=0").code == 2);
  CHECK(run_cli("homology --model 1,1 --coeff scalar:u=2").code == 2);
}

TEST_CASE("json output is well-formed") {
  RunResult inv = run_cli("invariants --model 1,1 --format json");
  CHECK(inv.code == 0);
  json ji = parse_json_output(inv.out);
  CHECK(ji["genus"] == 1);
  CHECK(ji["boundary_components"] == 1);
  CHECK(last_line(inv.out) == "RESULT invariants ok");

  RunResult hom = run_cli("homology --model 1,1 --relative --n 2 --format json");
  json jh = parse_json_output(hom.out);
  bool found = false;
  for (const auto& d : jh["degrees"])
    if (d["degree"] == 2) {
      CHECK(d["betti"] == 3);
      CHECK(d["chains"] == 3);
      found = true;
    }
  CHECK(found);

  RunResult phi = run_cli("phi --word \"a1 s1 b1\" --format json");
  json jp = parse_json_output(phi.out);
  CHECK(jp["value"] == "u·a1·b1");

  RunResult tw = run_cli("twist-matrices --format json");
  json jt = parse_json_output(tw.out);
  CHECK(jt["a"][0] == json::array({"1", "1", "-u + 1"}));
  CHECK(jt["b"][1][0] == "-u^7·a1^2·b1^-2");

  RunResult ver = run_cli("verify --twists --format json");
  json jv = parse_json_output(ver.out);
  CHECK(jv["pass"] == true);
  CHECK(jv["twists"]["braid_identity"] == true);
}

TEST_CASE("output is deterministic") {
  for (const std::string args :
       {std::string("homology --model 1,2 --relative --n 2"),
        std::string("boundary --model 1,1 --n 2"),
        std::string("cells --model 1,1 --relative --n 2 --format json")}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cells and boundary reports") {
  RunResult cells = run_cli("cells --model 0,2 --relative --n 2");
  CHECK(cells.code == 0);
  CHECK(contains(cells.out, "degree 0: 0 cells"));
  CHECK(contains(cells.out, "degree 2: 1 cells"));
  CHECK(contains(cells.out, "total: 1"));
  CHECK(last_line(cells.out) == "RESULT cells ok");

  RunResult disk = run_cli("cells --model 0,1 --relative --n 2");
  CHECK(disk.code == 0);
  CHECK(contains(disk.out, "total: 0"));

  RunResult bd = run_cli("boundary --model 1,1 --n 2");
  CHECK(bd.code == 0);
  CHECK(contains(bd.out, "boundary degree 1"));
  CHECK(contains(bd.out, "boundary degree 2"));
  CHECK(contains(bd.out, "&"));
  CHECK(last_line(bd.out) == "RESULT boundary ok");
}

TEST_CASE("every report ends with the summary line") {
  for (const auto& [args, cmd] :
       std::vector<std::pair<std::string, std::string>>{
           {"invariants --model 0,3", "invariants"},
           {"cells --model 1,1 --n 1", "cells"},
           {"boundary --model 0,2 --relative --n 2", "boundary"},
           {"homology --model 1,1 --n 2", "homology"},
           {"phi --word s1", "phi"},
           {"twist-matrices --format json", "twist-matrices"},
           {"verify --twists", "verify"}}) {
    RunResult r = run_cli(args);
    CHECK(r.code == 0);
    CHECK(last_line(r.out) == "RESULT " + cmd + " ok");
  }
}
