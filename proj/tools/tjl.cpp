// tjl - command line front-end for the temporal justification logic toolkit.
//
// Exit codes: 0 affirmative verdict, 1 negative verdict, 2 input error.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tjl/decide.hpp"
#include "tjl/internalize.hpp"
#include "tjl/model.hpp"

using nlohmann::json;
using namespace tjl;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json upb_to_json(const Upb& s) {
  json j;
  j["prefix"] = json::array();
  j["loop"] = json::array();
  for (bool b : s.prefix()) j["prefix"].push_back(b ? 1 : 0);
  for (bool b : s.loop()) j["loop"].push_back(b ? 1 : 0);
  return j;
}

struct CommonOpts {
  std::string logic = "lpltl-p";
  std::string axioms;
  std::string cs_spec = "empty";
  std::string model_path;
  std::string proof_path;
  std::string formula;
  std::string mode = "lpltl-int";
  int agent = 1;
  long at = 0;
  bool json_flag = false;  // output is always JSON; kept for compatibility
};

LogicProfile profile_of(const CommonOpts& o) {
  LogicProfile p = named_profile(o.logic);
  if (!o.axioms.empty()) p = extend_profile(p, o.axioms);
  return p;
}

ConstantSpec cs_of(const CommonOpts& o, const LogicProfile& profile) {
  if (o.cs_spec == "empty") return ConstantSpec::empty();
  if (o.cs_spec == "total") return ConstantSpec::total();
  ConstantSpec cs = cs_from_json_text(slurp(o.cs_spec), profile);
  auto errors = validate_constant_spec(cs, profile);
  if (!errors.empty()) {
    throw std::runtime_error("invalid constant specification: " + errors.front());
  }
  return cs;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_parse(const CommonOpts& o) {
  Formula f = parse_formula(o.formula, profile_of(o));
  emit(json{{"formula", print_formula(f)}});
  return kYes;
}

int cmd_check(const CommonOpts& o) {
  LogicProfile profile = profile_of(o);
  Derivation d = derivation_from_json_text(slurp(o.proof_path), profile);
  CheckResult r = check_derivation(d, profile, cs_of(o, profile));
  json j;
  j["accepted"] = r.accepted;
  j["conclusion"] = d.steps.empty() ? "" : print_formula(d.conclusion());
  json errors = json::array();
  for (const auto& [step, msg] : r.errors) {
    errors.push_back(json{{"step", step}, {"message", msg}});
  }
  j["errors"] = errors;
  emit(j);
  return r.accepted ? kYes : kNo;
}

int cmd_sat(const CommonOpts& o) {
  LogicProfile profile = profile_of(o);
  Formula f = parse_formula(o.formula, profile);
  ConstantSpec cs = cs_of(o, profile);
  SatOutcome out = satisfiable(f, cs, profile);
  json j;
  j["status"] = out.sat ? "SAT" : "UNSAT";
  j["stats"] = json{{"atoms", out.stats.atoms},
                    {"edges", out.stats.edges},
                    {"sccs", out.stats.sccs}};
  if (out.sat) {
    MkModel m = witness_to_model(out.graph, *out.witness, cs, profile);
    j["model"] = json::parse(model_to_json_text(m));
    j["satPosition"] = out.witness->sat_position;
  }
  emit(j);
  return out.sat ? kYes : kNo;
}

int cmd_valid(const CommonOpts& o) {
  LogicProfile profile = profile_of(o);
  Formula f = parse_formula(o.formula, profile);
  ValidOutcome out = valid(f, cs_of(o, profile), profile);
  json j;
  j["valid"] = out.valid;
  j["stats"] = json{{"atoms", out.stats.atoms},
                    {"edges", out.stats.edges},
                    {"sccs", out.stats.sccs}};
  if (!out.valid) {
    j["counterModel"] = json::parse(model_to_json_text(*out.counter_model));
    j["position"] = out.counter_position;
  }
  emit(j);
  return out.valid ? kYes : kNo;
}

int cmd_eval(const CommonOpts& o) {
  if (o.at < 0) throw std::runtime_error("--at must be non-negative");
  LoadedModel lm = model_from_json_text(slurp(o.model_path));
  if (!lm.mk) throw std::runtime_error("eval expects a single-run model; use eval-is");
  Verdict v = validate_model(*lm.mk);
  if (!v.ok) throw std::runtime_error("invalid model: " + v.errors.front());
  Formula f = parse_formula(o.formula, lm.mk->profile);
  Upb s = eval(*lm.mk, f);
  bool value = s.at(static_cast<size_t>(o.at));
  emit(json{{"value", value}, {"at", o.at}, {"stream", upb_to_json(s)}});
  return value ? kYes : kNo;
}

int cmd_eval_is(const CommonOpts& o) {
  if (o.at < 0) throw std::runtime_error("--at must be non-negative");
  LoadedModel lm = model_from_json_text(slurp(o.model_path));
  if (!lm.is) throw std::runtime_error("eval-is expects an interpreted system with \"runs\"");
  Verdict v = validate_model(*lm.is);
  if (!v.ok) throw std::runtime_error("invalid model: " + v.errors.front());
  Formula f = parse_formula(o.formula, lm.is->profile);
  std::vector<Upb> streams = eval_is(*lm.is, f);
  bool value = true;
  json js = json::object();
  for (size_t r = 0; r < streams.size(); ++r) {
    js["r" + std::to_string(r)] = upb_to_json(streams[r]);
    value = value && streams[r].at(static_cast<size_t>(o.at));
  }
  emit(json{{"value", value}, {"at", o.at}, {"streams", js}});
  return value ? kYes : kNo;
}

int cmd_internalize(const CommonOpts& o) {
  auto mode = internalize_mode_by_name(o.mode);
  if (!mode) throw std::runtime_error("unknown mode '" + o.mode + "'");
  LogicProfile profile = internalize_profile(*mode);
  Derivation d = derivation_from_json_text(slurp(o.proof_path), profile);
  InternalizeResult r = internalize(d, o.agent, *mode);
  json j;
  j["term"] = print_term(r.term);
  j["conclusion"] = print_formula(r.derivation.conclusion());
  j["proof"] = json::parse(derivation_to_json_text(r.derivation));
  emit(j);
  return kYes;
}

int cmd_validate_model(const CommonOpts& o) {
  LoadedModel lm = model_from_json_text(slurp(o.model_path));
  Verdict v = lm.mk ? validate_model(*lm.mk) : validate_model(*lm.is);
  json j;
  j["valid"] = v.ok;
  j["errors"] = v.errors;
  emit(j);
  return v.ok ? kYes : kNo;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool formula, bool model, bool proof) {
  cmd->add_option("--logic", o.logic, "logic profile name")
      ->check(CLI::IsMember(named_profile_list()));
  cmd->add_option("--axioms", o.axioms, "comma-separated +axiom extensions");
  cmd->add_option("--cs", o.cs_spec, "constant specification: file, 'total' or 'empty'");
  cmd->add_flag("--json", o.json_flag, "emit JSON (always on)");
  if (formula) cmd->add_option("formula", o.formula, "formula in concrete syntax")->required();
  if (model) cmd->add_option("--model", o.model_path, "model JSON file")->required();
  if (proof) cmd->add_option("--proof", o.proof_path, "derivation JSON file")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal justification logic toolkit"};
  app.require_subcommand(1);
  CommonOpts o;

  CLI::App* parse = app.add_subcommand("parse", "parse and re-print a formula");
  add_common(parse, o, true, false, false);
  CLI::App* check = app.add_subcommand("check", "check a Hilbert derivation");
  add_common(check, o, false, false, true);
  CLI::App* sat = app.add_subcommand("sat", "decide satisfiability (base profile)");
  add_common(sat, o, true, false, false);
  CLI::App* validc = app.add_subcommand("valid", "decide validity (base profile)");
  add_common(validc, o, true, false, false);
  CLI::App* evalc = app.add_subcommand("eval", "evaluate a formula on a model");
  add_common(evalc, o, true, true, false);
  evalc->add_option("--at", o.at, "position of interest (default 0)");
  CLI::App* evalis = app.add_subcommand("eval-is", "evaluate on an interpreted system");
  add_common(evalis, o, true, true, false);
  evalis->add_option("--at", o.at, "position of interest (default 0)");
  CLI::App* internalize = app.add_subcommand("internalize", "synthesize a justification term");
  add_common(internalize, o, false, false, true);
  internalize->add_option("--agent", o.agent, "agent index (default 1)");
  internalize->add_option("--mode", o.mode,
                          "restricted | lpltl-int | access-variant (default lpltl-int)");
  CLI::App* vm = app.add_subcommand("validate-model", "validate a model file");
  add_common(vm, o, false, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (parse->parsed()) return cmd_parse(o);
    if (check->parsed()) return cmd_check(o);
    if (sat->parsed()) return cmd_sat(o);
    if (validc->parsed()) return cmd_valid(o);
    if (evalc->parsed()) return cmd_eval(o);
    if (evalis->parsed()) return cmd_eval_is(o);
    if (internalize->parsed()) return cmd_internalize(o);
    if (vm->parsed()) return cmd_validate_model(o);
  } catch (const ParseError& e) {
    std::cout << json{{"error", e.what()}, {"position", e.position()}}.dump(2) << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return kInputError;
  }
  return kInputError;
}
