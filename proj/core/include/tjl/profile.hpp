#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tjl/syntax.hpp"

namespace tjl {

enum class BaseLogic : uint8_t {
  Lpltl,   // future fragment only: no Yw/S constructors, no past axioms
  LpltlP,  // full past/future language, plain application
  LpltlI,  // indexed application terms
};

enum class JustCore : uint8_t {
  LP,  // application / sum / reflexivity / positive introspection
  FP,  // one-step-delayed variants; reflexivity kept
};

// Optional axioms beyond the base. Each one licenses a term constructor:
// see op_for_axiom().
enum class ExtraAxiom : uint8_t {
  Generalize,
  BoxAccess,
  NextAccess,
  NextRight,
  NextLeft,
  BoxMinusGeneralize,
  BoxMinusAccess,
  WPrevAccess,
  WPrevRight,
  SPrevRight,
  SPrevLeft,
  Mix1,
  Mix2,
  Jpr,
  Jnl,
  Bar,
};

const char* extra_axiom_name(ExtraAxiom a);
std::optional<ExtraAxiom> extra_axiom_by_name(const std::string& name);

struct LogicProfile {
  BaseLogic base = BaseLogic::LpltlP;
  JustCore just_core = JustCore::LP;
  std::set<ExtraAxiom> extras;
  int agent_count = 0;  // 0 = unspecified
  std::string name;     // named profile this was derived from, if any

  bool has(ExtraAxiom a) const { return extras.count(a) != 0; }
  bool past_enabled() const { return base != BaseLogic::Lpltl; }
  bool indexed() const { return base == BaseLogic::LpltlI; }
};

// Named profiles:
//   lpltl        future-only base, LP core
//   lpltl-p      past/future base, LP core
//   lpltl-int    lpltl-p + generalize + boxminus-generalize + mix1 + mix2
//   lgen         indexed base + generalize
//   ltl-j        lpltl-p language with the FP justification core
//   lpltl-jprnl  lpltl-p + jpr + jnl
LogicProfile named_profile(const std::string& name);
std::vector<std::string> named_profile_list();

// Applies "+name" (or bare "name") additions from a comma-separated list.
LogicProfile extend_profile(LogicProfile p, const std::string& axiom_list);

// nullopt when the term/formula only uses constructors the profile admits;
// otherwise a message naming the offending constructor.
std::optional<std::string> profile_rejects(const LogicProfile& p, const Term& t);
std::optional<std::string> profile_rejects(const LogicProfile& p, const Formula& f);

// the axiom that licenses a connecting-principle term operator
std::optional<ExtraAxiom> axiom_for_op(TermOp op);
inline bool profile_allows_op(const LogicProfile& p, TermOp op) {
  auto ax = axiom_for_op(op);
  return ax && p.has(*ax);
}

}  // namespace tjl
