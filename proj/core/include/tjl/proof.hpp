#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tjl/profile.hpp"
#include "tjl/syntax.hpp"

namespace tjl {

// One level of a constant tower [c_n]_{i_n} ... [c_1]_{i_1} body,
// outermost first.
struct ConstantTower {
  std::vector<std::pair<AgentId, std::string>> levels;
  Formula body;
};

// Greedy decomposition: peels justification layers as long as the term is a
// constant. nullopt when the outermost layer is not [c]_i.
std::optional<ConstantTower> as_constant_tower(const Formula& f);

struct ConstantSpec {
  enum class Kind { Empty, Explicit, Total };
  Kind kind = Kind::Empty;
  std::vector<Formula> entries;  // Explicit only

  static ConstantSpec empty() { return {}; }
  static ConstantSpec total() { return {Kind::Total, {}}; }
  static ConstantSpec explicit_list(std::vector<Formula> entries) {
    return {Kind::Explicit, std::move(entries)};
  }
};

// True iff every entry of tower height n > 1 has its height n-1 tail in the
// list. Throws std::invalid_argument on entries without tower shape.
bool check_downward_closed(const std::vector<Formula>& entries);

// Explicit entries must be constant towers over enabled axiom instances and
// downward closed. Returns human-readable violations (empty = valid).
std::vector<std::string> validate_constant_spec(const ConstantSpec& cs,
                                                const LogicProfile& profile);

bool cs_contains(const ConstantSpec& cs, const Formula& f, const LogicProfile& profile);

struct AxiomMatch {
  std::string schema_id;
  std::optional<Formula> phi, psi;
  std::optional<Term> t, s;
  std::optional<AgentId> agent;
};

// First enabled schema (fixed scan order, Taut last) whose pattern unifies
// with f. Empty optional: not an instance of any enabled axiom.
std::optional<AxiomMatch> match_axiom(const Formula& f, const LogicProfile& profile);

// Ignores profile enablement; used for diagnostics. Second member tells
// whether the schema is enabled in the given profile.
std::optional<std::pair<AxiomMatch, bool>> match_axiom_any(const Formula& f,
                                                           const LogicProfile& profile);

// Propositional skeleton validity: maximal Next/WPrev/Until/Since/Just
// subformulas are treated as fresh atoms.
bool is_tautology(const Formula& f);

struct Derivation {
  enum class RuleKind : uint8_t {
    Premise,
    Axiom,
    MP,
    IaxNec,
    NextNec,
    WPrevNec,
    BoxNec,
    BoxMinusNec
  };
  struct Rule {
    RuleKind kind;
    int i = -1;  // Premise: premise index; MP: antecedent step; nec: source step
    int j = -1;  // MP: implication step
  };
  struct Step {
    Formula formula;
    Rule rule;
    std::optional<bool> premise_free;  // verified against recomputation when present
  };

  std::vector<Formula> premises;
  std::vector<Step> steps;

  Formula conclusion() const { return steps.back().formula; }
};

const char* rule_kind_name(Derivation::RuleKind k);

struct CheckResult {
  bool accepted = false;
  std::vector<std::pair<int, std::string>> errors;  // step index (-1: global), message
  std::vector<bool> premise_free;                   // recomputed flags

  explicit operator bool() const { return accepted; }
};

CheckResult check_derivation(const Derivation& d, const LogicProfile& profile,
                             const ConstantSpec& cs);

// JSON de/serialization (format documented in README). Formulas appear in
// concrete syntax; parsing uses the given profile.
Derivation derivation_from_json_text(const std::string& text, const LogicProfile& profile);
std::string derivation_to_json_text(const Derivation& d);

ConstantSpec cs_from_json_text(const std::string& text, const LogicProfile& profile);
std::string cs_to_json_text(const ConstantSpec& cs);

}  // namespace tjl
