#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tjl/proof.hpp"
#include "tjl/stream.hpp"

namespace tjl {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvidenceEntry {
  std::string state;
  AgentId agent = 1;
  Term term;
  Formula formula;
};

// Run presented as state names; ultimately periodic.
struct Run {
  std::vector<std::string> prefix;
  std::vector<std::string> loop;
};

struct Verdict {
  bool ok = true;
  std::vector<std::string> errors;
  explicit operator bool() const { return ok; }
};

// Single-run model. The evidence function is the closure of the base
// entries (plus constant-specification facts) within the declared universe.
struct MkModel {
  LogicProfile profile;
  std::vector<std::string> states;
  Run run;
  std::map<std::string, std::set<std::string>> valuation;
  std::vector<EvidenceEntry> evidence;
  ConstantSpec cs;  // Empty or Explicit only
  std::vector<Formula> universe;
};

struct InterpretedSystem {
  LogicProfile profile;
  std::vector<std::string> states;
  // per agent: reflexive-transitive relation, given as explicit pairs
  std::map<AgentId, std::vector<std::pair<std::string, std::string>>> access;
  std::vector<Run> runs;
  std::map<std::string, std::set<std::string>> valuation;
  std::vector<EvidenceEntry> evidence;
  ConstantSpec cs;
  std::vector<Formula> universe;
};

Verdict validate_model(const MkModel& m);
Verdict validate_model(const InterpretedSystem& m);

// Saturated evidence relation: for each (agent, term, formula) an exact
// ultimately periodic position set per run, the least set containing the
// lifted base and closed under the profile's conditions within the universe.
// Terms that occur in the model or queries are saturated eagerly; facts at
// other terms are derived on demand (rule hypotheses only ever mention
// strict subterms, so the recursion is well-founded).
class EvidenceEngine {
 public:
  struct Query {
    bool value = false;
    bool outside_universe = false;
  };

  Query holds_at(int run, size_t position, AgentId agent, const Term& t,
                 const Formula& f) const;
  // const-false when the fact is absent; formulas outside the universe are
  // never members
  Upb fact_stream(int run, AgentId agent, const Term& t, const Formula& f) const;

  bool in_universe(const Formula& f) const;
  const std::vector<Formula>& universe() const { return universe_; }
  // rule conclusions dropped because their formula was outside the universe
  int overflow_warnings() const { return overflow_warnings_; }
  int run_count() const { return static_cast<int>(runs_.size()); }

 private:
  friend struct EngineBuilder;

  struct Key {
    AgentId agent;
    int term;
    int formula;
    bool operator<(const Key& o) const {
      if (agent != o.agent) return agent < o.agent;
      if (term != o.term) return term < o.term;
      return formula < o.formula;
    }
  };

  // per-run streams for a fact at a term outside the eager pool
  std::vector<Upb> derived_streams(AgentId agent, const Term& t, const Formula& f) const;
  Upb state_positions_of(int run, int state) const;

  LogicProfile profile_;
  bool is_system_ = false;
  std::vector<Formula> universe_;
  std::unordered_map<Formula, int, FormulaHash> universe_index_;
  std::vector<Term> pool_;
  std::unordered_map<Term, int, TermHash> pool_index_;
  std::vector<std::vector<int>> runs_;  // resolved to state indices (prefix+loop)
  std::vector<size_t> run_prefix_len_;
  int state_count_ = 0;
  std::map<AgentId, std::vector<std::pair<int, int>>> access_;  // resolved pairs
  std::map<Key, std::vector<Upb>> facts_;
  int overflow_warnings_ = 0;
};

// query_context formulas have their subformulas added to the universe.
EvidenceEngine saturate_evidence(const MkModel& m, const std::vector<Formula>& query_context);
EvidenceEngine saturate_evidence(const InterpretedSystem& m,
                                 const std::vector<Formula>& query_context);

// Exact truth stream of f along the model's run. Validates first.
Upb eval(const MkModel& m, const Formula& f);

// Truth stream per run (index order of m.runs).
std::vector<Upb> eval_is(const InterpretedSystem& m, const Formula& f);

// Requires exactly one run and identity accessibility for every agent.
MkModel to_mkrtychev(const InterpretedSystem& m);

// JSON (format in README). Mk models carry "run", systems carry "runs"+"access".
struct LoadedModel {
  std::optional<MkModel> mk;
  std::optional<InterpretedSystem> is;
};
LoadedModel model_from_json_text(const std::string& text);
std::string model_to_json_text(const MkModel& m);
std::string model_to_json_text(const InterpretedSystem& m);

}  // namespace tjl
