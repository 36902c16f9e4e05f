#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "tjl/model.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(TJL_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/tjl_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("cli valid / sat verdicts and exit codes") {
  auto v = run_cli("valid --logic lpltl-p \"O Yw false\"");
  CHECK(v.exit_code == 0);
  CHECK(json::parse(v.out)["valid"] == true);

  auto inv = run_cli("valid --logic lpltl-p \"[x]_1 p -> X [x]_1 p\"");
  CHECK(inv.exit_code == 1);
  json j = json::parse(inv.out);
  CHECK(j["valid"] == false);
  CHECK(j.contains("counterModel"));

  auto sat = run_cli("sat --logic lpltl-p \"~[x]_1 p & X [x]_1 p\"");
  CHECK(sat.exit_code == 0);
  json js = json::parse(sat.out);
  CHECK(js["status"] == "SAT");
  CHECK(js["stats"].contains("atoms"));

  auto unsat = run_cli("sat --logic lpltl-p \"false\"");
  CHECK(unsat.exit_code == 1);
  CHECK(json::parse(unsat.out)["status"] == "UNSAT");

  auto err = run_cli("valid --logic lpltl-p \"p -> \"");
  CHECK(err.exit_code == 2);
}

TEST_CASE("cli parse and print") {
  auto r = run_cli("parse \"G p -> ~~X p\"");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["formula"] == "G p -> ~~X p");
  auto bad = run_cli("parse \"[gen(x)]_1 p\"");  // not in the default profile
  CHECK(bad.exit_code == 2);
  auto ok = run_cli("parse --logic lpltl-int \"[gen(x)]_1 G p\"");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("cli eval against a model file") {
  std::string model = R"json({
    "profile": "lpltl-p", "agents": 1,
    "states": ["s0"], "run": {"prefix": [], "loop": ["s0"]},
    "valuation": {"s0": ["p"]},
    "evidence": [{"state": "s0", "agent": 1, "term": "x", "formula": "p"}],
    "universe": ["p"]
  })json";
  std::string path = temp_file("model.json", model);

  auto r = run_cli("eval --model " + path + " --at 2 \"Ys Ys Yw false\"");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["value"] == true);
  CHECK(j["stream"]["prefix"] == json::array({0, 0, 1}));

  auto f = run_cli("eval --model " + path + " --at 0 \"~[x]_1 p\"");
  CHECK(f.exit_code == 1);
  CHECK(json::parse(f.out)["value"] == false);
}

TEST_CASE("sat witness pipes back into eval") {
  auto sat = run_cli("sat --logic lpltl-p \"F q & Yw false\"");
  REQUIRE(sat.exit_code == 0);
  json j = json::parse(sat.out);
  std::string path = temp_file("witness.json", j["model"].dump());
  int at = j["satPosition"].get<int>();
  auto ev = run_cli("eval --model " + path + " --at " + std::to_string(at) +
                    " \"F q & Yw false\"");
  CHECK(ev.exit_code == 0);
  CHECK(json::parse(ev.out)["value"] == true);
}

TEST_CASE("cli check accepts a proof file and reports step errors") {
  std::string good = R"json({
    "premises": [],
    "steps": [
      {"formula": "O Yw false", "rule": {"type": "Axiom"}}
    ]
  })json";
  auto ok = run_cli("check --logic lpltl-p --cs total --proof " +
                    temp_file("proof_ok.json", good));
  CHECK(ok.exit_code == 0);
  CHECK(json::parse(ok.out)["accepted"] == true);

  std::string bad = R"json({
    "premises": ["p"],
    "steps": [
      {"formula": "p", "rule": {"type": "Premise", "k": 0}},
      {"formula": "X p", "rule": {"type": "NextNec", "i": 0}}
    ]
  })json";
  auto rej = run_cli("check --logic lpltl-p --cs total --proof " +
                     temp_file("proof_bad.json", bad));
  CHECK(rej.exit_code == 1);
  json j = json::parse(rej.out);
  CHECK(j["accepted"] == false);
  CHECK(j["errors"].size() == 1);
}

TEST_CASE("cli internalize emits a term and a checkable proof") {
  std::string input = R"json({
    "premises": [],
    "steps": [
      {"formula": "p -> p", "rule": {"type": "Axiom"}},
      {"formula": "G (p -> p)", "rule": {"type": "BoxNec", "i": 0}}
    ]
  })json";
  auto r = run_cli("internalize --agent 1 --mode lpltl-int --proof " +
                   temp_file("proof_int.json", input));
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["term"] == "gen(c1)");
  std::string proof_path = temp_file("proof_out.json", j["proof"].dump());
  auto chk = run_cli("check --logic lpltl-int --cs total --proof " + proof_path);
  CHECK(chk.exit_code == 0);
}

TEST_CASE("cli validate-model") {
  std::string bad = R"json({
    "profile": "lpltl-p", "states": ["s0"],
    "run": {"prefix": [], "loop": ["s1"]},
    "valuation": {}, "evidence": [], "universe": []
  })json";
  auto r = run_cli("validate-model --model " + temp_file("model_bad.json", bad));
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out)["valid"] == false);

  // malformed JSON and missing files are input errors
  auto junk = run_cli("validate-model --model " + temp_file("model_junk.json", "{nope"));
  CHECK(junk.exit_code == 2);
  auto missing = run_cli("eval --model /tmp/tjl_no_such_file.json \"p\"");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("cli eval-is evaluates every run") {
  std::string sys = R"json({
    "profile": "lpltl-p", "agents": 1,
    "states": ["s0", "s1"],
    "runs": [{"prefix": [], "loop": ["s0"]}, {"prefix": [], "loop": ["s1"]}],
    "access": {"1": [["s0","s0"],["s1","s1"]]},
    "valuation": {"s0": ["p"], "s1": []},
    "evidence": [], "universe": []
  })json";
  std::string path = temp_file("system.json", sys);
  auto r = run_cli("eval-is --model " + path + " --at 0 \"p | ~p\"");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["streams"].size() == 2);
  // "p" fails on run r1, so the universal verdict is negative
  auto neg = run_cli("eval-is --model " + path + " --at 0 \"p\"");
  CHECK(neg.exit_code == 1);
}

TEST_CASE("cli output is byte-identical across runs") {
  auto a = run_cli("sat --logic lpltl-p \"p U q\"");
  auto b = run_cli("sat --logic lpltl-p \"p U q\"");
  CHECK(a.out == b.out);
}
