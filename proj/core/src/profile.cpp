#include "tjl/profile.hpp"

#include <sstream>
#include <stdexcept>

namespace tjl {

namespace {

struct Named {
  const char* name;
  ExtraAxiom axiom;
};

constexpr Named kExtraNames[] = {
    {"generalize", ExtraAxiom::Generalize},
    {"box-access", ExtraAxiom::BoxAccess},
    {"next-access", ExtraAxiom::NextAccess},
    {"next-right", ExtraAxiom::NextRight},
    {"next-left", ExtraAxiom::NextLeft},
    {"boxminus-generalize", ExtraAxiom::BoxMinusGeneralize},
    {"boxminus-access", ExtraAxiom::BoxMinusAccess},
    {"wprev-access", ExtraAxiom::WPrevAccess},
    {"wprev-right", ExtraAxiom::WPrevRight},
    {"sprev-right", ExtraAxiom::SPrevRight},
    {"sprev-left", ExtraAxiom::SPrevLeft},
    {"mix1", ExtraAxiom::Mix1},
    {"mix2", ExtraAxiom::Mix2},
    {"jpr", ExtraAxiom::Jpr},
    {"jnl", ExtraAxiom::Jnl},
    {"bar", ExtraAxiom::Bar},
};

}  // namespace

const char* extra_axiom_name(ExtraAxiom a) {
  for (const auto& n : kExtraNames) {
    if (n.axiom == a) return n.name;
  }
  return "?";
}

std::optional<ExtraAxiom> extra_axiom_by_name(const std::string& name) {
  for (const auto& n : kExtraNames) {
    if (name == n.name) return n.axiom;
  }
  return std::nullopt;
}

LogicProfile named_profile(const std::string& name) {
  LogicProfile p;
  p.name = name;
  if (name == "lpltl") {
    p.base = BaseLogic::Lpltl;
  } else if (name == "lpltl-p") {
    p.base = BaseLogic::LpltlP;
  } else if (name == "lpltl-int") {
    p.base = BaseLogic::LpltlP;
    p.extras = {ExtraAxiom::Generalize, ExtraAxiom::BoxMinusGeneralize, ExtraAxiom::Mix1,
                ExtraAxiom::Mix2};
  } else if (name == "lgen") {
    p.base = BaseLogic::LpltlI;
    p.extras = {ExtraAxiom::Generalize};
  } else if (name == "ltl-j") {
    p.base = BaseLogic::LpltlP;
    p.just_core = JustCore::FP;
  } else if (name == "lpltl-jprnl") {
    p.base = BaseLogic::LpltlP;
    p.extras = {ExtraAxiom::Jpr, ExtraAxiom::Jnl};
  } else {
    throw std::invalid_argument("unknown logic profile '" + name + "'");
  }
  return p;
}

std::vector<std::string> named_profile_list() {
  return {"lpltl", "lpltl-p", "lpltl-int", "lgen", "ltl-j", "lpltl-jprnl"};
}

LogicProfile extend_profile(LogicProfile p, const std::string& axiom_list) {
  std::stringstream ss(axiom_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item[0] == '+') item = item.substr(1);
    auto ax = extra_axiom_by_name(item);
    if (!ax) throw std::invalid_argument("unknown axiom '" + item + "'");
    if (*ax == ExtraAxiom::Bar && p.base != BaseLogic::LpltlP) {
      throw std::invalid_argument("axiom 'bar' requires the lpltl-p base");
    }
    p.extras.insert(*ax);
  }
  return p;
}

std::optional<ExtraAxiom> axiom_for_op(TermOp op) {
  switch (op) {
    case TermOp::Up: return ExtraAxiom::Generalize;
    case TermOp::Down: return ExtraAxiom::BoxAccess;
    case TermOp::DownSmall: return ExtraAxiom::NextAccess;
    case TermOp::RRight: return ExtraAxiom::NextRight;
    case TermOp::LLeft: return ExtraAxiom::NextLeft;
    case TermOp::UpP: return ExtraAxiom::BoxMinusGeneralize;
    case TermOp::DownP: return ExtraAxiom::BoxMinusAccess;
    case TermOp::DownSmallP: return ExtraAxiom::WPrevAccess;
    case TermOp::RightP: return ExtraAxiom::WPrevRight;
    case TermOp::RRightP: return ExtraAxiom::SPrevRight;
    case TermOp::LLeftP: return ExtraAxiom::SPrevLeft;
    case TermOp::Bar: return ExtraAxiom::Bar;
  }
  return std::nullopt;
}

std::optional<std::string> profile_rejects(const LogicProfile& p, const Term& t) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Var:
      return std::nullopt;
    case TermKind::Bang:
      return profile_rejects(p, t.left());
    case TermKind::Sum:
      if (auto r = profile_rejects(p, t.left())) return r;
      return profile_rejects(p, t.right());
    case TermKind::App:
      if (p.indexed()) return "application term 't*s' not available: profile uses indexed application";
      if (auto r = profile_rejects(p, t.left())) return r;
      return profile_rejects(p, t.right());
    case TermKind::AppIdx:
      if (!p.indexed()) return "indexed application 't*{phi}s' requires an indexed profile";
      if (auto r = profile_rejects(p, t.left())) return r;
      if (auto r = profile_rejects(p, t.index())) return r;
      return profile_rejects(p, t.right());
    case TermKind::Unary: {
      auto ax = axiom_for_op(t.op());
      if (!ax || !p.has(*ax)) {
        return std::string("term operator '") + term_op_name(t.op()) +
               "' requires axiom '" + (ax ? extra_axiom_name(*ax) : "?") + "'";
      }
      return profile_rejects(p, t.left());
    }
    case TermKind::Pr:
      if (!p.has(ExtraAxiom::Jpr)) return "term operator 'pr' requires axiom 'jpr'";
      if (auto r = profile_rejects(p, t.left())) return r;
      return profile_rejects(p, t.right());
    case TermKind::Nl:
      if (!p.has(ExtraAxiom::Jnl)) return "term operator 'nl' requires axiom 'jnl'";
      if (auto r = profile_rejects(p, t.left())) return r;
      return profile_rejects(p, t.right());
  }
  return std::nullopt;
}

std::optional<std::string> profile_rejects(const LogicProfile& p, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Prop:
    case FormulaKind::Bot:
      return std::nullopt;
    case FormulaKind::Next:
      return profile_rejects(p, f.lhs());
    case FormulaKind::WPrev:
      if (!p.past_enabled()) return "weak-previous not available in the future-only profile";
      return profile_rejects(p, f.lhs());
    case FormulaKind::Since:
      if (!p.past_enabled()) return "since not available in the future-only profile";
      if (auto r = profile_rejects(p, f.lhs())) return r;
      return profile_rejects(p, f.rhs());
    case FormulaKind::Imp:
    case FormulaKind::Until:
      if (auto r = profile_rejects(p, f.lhs())) return r;
      return profile_rejects(p, f.rhs());
    case FormulaKind::Just:
      if (f.agent() < 1) return "agent index must be >= 1";
      if (p.agent_count > 0 && f.agent() > p.agent_count) {
        return "agent index exceeds declared agent count";
      }
      if (auto r = profile_rejects(p, f.term())) return r;
      return profile_rejects(p, f.lhs());
  }
  return std::nullopt;
}

}  // namespace tjl
