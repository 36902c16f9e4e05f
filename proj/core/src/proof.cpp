#include "tjl/proof.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace tjl {

namespace {

// Axiom schemas are stored as ordinary formulas over reserved metavariable
// atoms: propositions "?0"/"?1" stand for formulas, variables "?t0"/"?t1"
// for terms, agent 0 for an arbitrary agent. The identifier syntax cannot
// produce '?', so patterns never collide with user input.
const Formula kF0 = Formula::prop("?0");
const Formula kF1 = Formula::prop("?1");
const Term kT0 = Term::variable("?t0");
const Term kT1 = Term::variable("?t1");
constexpr AgentId kMetaAgent = 0;

struct Bindings {
  std::optional<Formula> f0, f1;
  std::optional<Term> t0, t1;
  std::optional<AgentId> agent;
};

bool unify_term(const Term& pat, const Term& t, Bindings& b);

bool unify(const Formula& pat, const Formula& f, Bindings& b) {
  if (pat.kind() == FormulaKind::Prop && !pat.name().empty() && pat.name()[0] == '?') {
    std::optional<Formula>& slot = pat.name() == "?0" ? b.f0 : b.f1;
    if (slot) return *slot == f;
    slot = f;
    return true;
  }
  if (pat.kind() != f.kind()) return false;
  switch (pat.kind()) {
    case FormulaKind::Prop:
      return pat.name() == f.name();
    case FormulaKind::Bot:
      return true;
    case FormulaKind::Next:
    case FormulaKind::WPrev:
      return unify(pat.lhs(), f.lhs(), b);
    case FormulaKind::Imp:
    case FormulaKind::Until:
    case FormulaKind::Since:
      return unify(pat.lhs(), f.lhs(), b) && unify(pat.rhs(), f.rhs(), b);
    case FormulaKind::Just: {
      if (pat.agent() == kMetaAgent) {
        if (b.agent && *b.agent != f.agent()) return false;
        b.agent = f.agent();
      } else if (pat.agent() != f.agent()) {
        return false;
      }
      return unify_term(pat.term(), f.term(), b) && unify(pat.lhs(), f.lhs(), b);
    }
  }
  return false;
}

bool unify_term(const Term& pat, const Term& t, Bindings& b) {
  if (pat.kind() == TermKind::Var && !pat.name().empty() && pat.name()[0] == '?') {
    std::optional<Term>& slot = pat.name() == "?t0" ? b.t0 : b.t1;
    if (slot) return *slot == t;
    slot = t;
    return true;
  }
  if (pat.kind() != t.kind()) return false;
  switch (pat.kind()) {
    case TermKind::Const:
    case TermKind::Var:
      return pat.name() == t.name();
    case TermKind::Bang:
      return unify_term(pat.left(), t.left(), b);
    case TermKind::Unary:
      return pat.op() == t.op() && unify_term(pat.left(), t.left(), b);
    case TermKind::AppIdx:
      return unify_term(pat.left(), t.left(), b) && unify(pat.index(), t.index(), b) &&
             unify_term(pat.right(), t.right(), b);
    case TermKind::Sum:
    case TermKind::App:
    case TermKind::Pr:
    case TermKind::Nl:
      return unify_term(pat.left(), t.left(), b) && unify_term(pat.right(), t.right(), b);
  }
  return false;
}

enum class Avail { Always, Past, CoreLPPlain, CoreLPIndexed, CoreFP, Extra };

struct Schema {
  std::string id;
  std::vector<Formula> patterns;  // alternatives under one name (e.g. sum)
  Avail avail;
  ExtraAxiom extra = ExtraAxiom::Generalize;  // when avail == Extra
};

std::vector<Schema> build_schemas() {
  auto J = [](const Term& t, const Formula& f) { return Formula::just(kMetaAgent, t, f); };
  const Formula F0 = kF0, F1 = kF1;
  const Term T0 = kT0, T1 = kT1;
  auto U = [](TermOp op, const Term& t) { return Term::unary(op, t); };

  std::vector<Schema> s;
  // future temporal
  s.push_back({"next-k",
               {Formula::imp(Formula::next(Formula::imp(F0, F1)),
                             Formula::imp(Formula::next(F0), Formula::next(F1)))},
               Avail::Always});
  s.push_back({"box-k",
               {Formula::imp(f_box(Formula::imp(F0, F1)), Formula::imp(f_box(F0), f_box(F1)))},
               Avail::Always});
  s.push_back({"fun", {f_iff(Formula::next(f_not(F0)), f_not(Formula::next(F0)))}, Avail::Always});
  s.push_back({"ind",
               {Formula::imp(f_box(Formula::imp(F0, Formula::next(F0))),
                             Formula::imp(F0, f_box(F0)))},
               Avail::Always});
  s.push_back({"until-1", {Formula::imp(Formula::until(F0, F1), f_diamond(F1))}, Avail::Always});
  s.push_back({"until-2",
               {f_iff(Formula::until(F0, F1),
                      f_or(F1, f_and(F0, Formula::next(Formula::until(F0, F1)))))},
               Avail::Always});
  // past temporal
  s.push_back({"boxminus-k",
               {Formula::imp(f_hist(Formula::imp(F0, F1)), Formula::imp(f_hist(F0), f_hist(F1)))},
               Avail::Past});
  s.push_back({"wprev-k",
               {Formula::imp(Formula::wprev(Formula::imp(F0, F1)),
                             Formula::imp(Formula::wprev(F0), Formula::wprev(F1)))},
               Avail::Past});
  s.push_back({"sw", {Formula::imp(f_sprev(F0), Formula::wprev(F0))}, Avail::Past});
  s.push_back({"fp", {Formula::imp(F0, Formula::next(f_sprev(F0)))}, Avail::Past});
  s.push_back({"pf", {Formula::imp(F0, Formula::wprev(Formula::next(F0)))}, Avail::Past});
  s.push_back({"initial", {f_once(Formula::wprev(Formula::bot()))}, Avail::Past});
  s.push_back({"boxminus-ind",
               {Formula::imp(f_hist(Formula::imp(F0, Formula::wprev(F0))),
                             Formula::imp(F0, f_hist(F0)))},
               Avail::Past});
  s.push_back({"since-1", {Formula::imp(Formula::since(F0, F1), f_once(F1))}, Avail::Past});
  s.push_back({"since-2",
               {f_iff(Formula::since(F0, F1),
                      f_or(F1, f_and(F0, f_sprev(Formula::since(F0, F1)))))},
               Avail::Past});
  // justification core (LP)
  s.push_back({"application",
               {Formula::imp(J(T0, Formula::imp(F0, F1)),
                             Formula::imp(J(T1, F0), J(Term::app(T0, T1), F1)))},
               Avail::CoreLPPlain});
  s.push_back({"application",
               {Formula::imp(J(T0, Formula::imp(F0, F1)),
                             Formula::imp(J(T1, F0), J(Term::app_idx(T0, F0, T1), F1)))},
               Avail::CoreLPIndexed});
  s.push_back({"sum",
               {Formula::imp(J(T0, F0), J(Term::sum(T0, T1), F0)),
                Formula::imp(J(T1, F0), J(Term::sum(T0, T1), F0))},
               Avail::Always});
  s.push_back({"reflexivity", {Formula::imp(J(T0, F0), F0)}, Avail::Always});
  s.push_back({"pos-introspection",
               {Formula::imp(J(T0, F0), J(Term::bang(T0), J(T0, F0)))},
               Avail::CoreLPPlain});
  // justification core (FP)
  s.push_back({"fp-application",
               {Formula::imp(J(T0, Formula::imp(F0, F1)),
                             Formula::imp(J(T1, F0),
                                          Formula::next(J(Term::app(T0, T1), f_sprev(F1)))))},
               Avail::CoreFP});
  s.push_back({"fp-sum",
               {Formula::imp(J(T0, F0), Formula::next(J(Term::sum(T0, T1), f_sprev(F0)))),
                Formula::imp(J(T1, F0), Formula::next(J(Term::sum(T0, T1), f_sprev(F0))))},
               Avail::CoreFP});
  s.push_back({"fp-pos-introspection",
               {Formula::imp(J(T0, F0),
                             Formula::next(J(Term::bang(T0), f_sprev(J(T0, F0)))))},
               Avail::CoreFP});
  // connecting principles
  auto extra = [&](const char* id, ExtraAxiom ax, Formula pat) {
    s.push_back({id, {std::move(pat)}, Avail::Extra, ax});
  };
  extra("generalize", ExtraAxiom::Generalize,
        Formula::imp(f_box(J(T0, F0)), J(U(TermOp::Up, T0), f_box(F0))));
  extra("box-access", ExtraAxiom::BoxAccess,
        Formula::imp(J(T0, f_box(F0)), f_box(J(U(TermOp::Down, T0), F0))));
  extra("next-access", ExtraAxiom::NextAccess,
        Formula::imp(J(T0, f_box(F0)), J(U(TermOp::DownSmall, T0), Formula::next(F0))));
  extra("next-right", ExtraAxiom::NextRight,
        Formula::imp(J(T0, Formula::next(F0)), Formula::next(J(U(TermOp::RRight, T0), F0))));
  extra("next-left", ExtraAxiom::NextLeft,
        Formula::imp(Formula::next(J(T0, F0)), J(U(TermOp::LLeft, T0), Formula::next(F0))));
  extra("boxminus-generalize", ExtraAxiom::BoxMinusGeneralize,
        Formula::imp(f_hist(J(T0, F0)), J(U(TermOp::UpP, T0), f_hist(F0))));
  extra("boxminus-access", ExtraAxiom::BoxMinusAccess,
        Formula::imp(J(T0, f_hist(F0)), f_hist(J(U(TermOp::DownP, T0), F0))));
  extra("wprev-access", ExtraAxiom::WPrevAccess,
        Formula::imp(J(T0, f_hist(F0)), J(U(TermOp::DownSmallP, T0), Formula::wprev(F0))));
  extra("wprev-right", ExtraAxiom::WPrevRight,
        Formula::imp(J(T0, Formula::wprev(F0)), Formula::wprev(J(U(TermOp::RightP, T0), F0))));
  extra("sprev-right", ExtraAxiom::SPrevRight,
        Formula::imp(J(T0, f_sprev(F0)), f_sprev(J(U(TermOp::RRightP, T0), F0))));
  extra("sprev-left", ExtraAxiom::SPrevLeft,
        Formula::imp(f_sprev(J(T0, F0)), J(U(TermOp::LLeftP, T0), f_sprev(F0))));
  extra("mix1", ExtraAxiom::Mix1, Formula::imp(f_box(F0), Formula::next(F0)));
  extra("mix2", ExtraAxiom::Mix2, Formula::imp(f_hist(F0), Formula::wprev(F0)));
  {
    Formula lhs_pr = Formula::since(J(T0, F0), J(T1, F1));
    extra("jpr", ExtraAxiom::Jpr, Formula::imp(lhs_pr, J(Term::pr(T0, T1), lhs_pr)));
    Formula lhs_nl = Formula::until(J(T0, F0), J(T1, F1));
    extra("jnl", ExtraAxiom::Jnl, Formula::imp(lhs_nl, J(Term::nl(T0, T1), lhs_nl)));
  }
  extra("bar", ExtraAxiom::Bar,
        Formula::imp(J(T0, F0), Formula::next(J(U(TermOp::Bar, T0), f_sprev(F0)))));
  return s;
}

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> table = build_schemas();
  return table;
}

bool schema_enabled(const Schema& s, const LogicProfile& p) {
  switch (s.avail) {
    case Avail::Always:
      return true;
    case Avail::Past:
      return p.past_enabled();
    case Avail::CoreLPPlain:
      return p.just_core == JustCore::LP && !p.indexed();
    case Avail::CoreLPIndexed:
      return p.just_core == JustCore::LP && p.indexed();
    case Avail::CoreFP:
      return p.just_core == JustCore::FP;
    case Avail::Extra:
      return p.has(s.extra);
  }
  return false;
}

AxiomMatch to_match(const std::string& id, const Bindings& b) {
  AxiomMatch m;
  m.schema_id = id;
  m.phi = b.f0;
  m.psi = b.f1;
  m.t = b.t0;
  m.s = b.t1;
  m.agent = b.agent;
  return m;
}

}  // namespace

// ---------------------------------------------------------------- tautology

namespace {

void skeleton_atoms(const Formula& f, std::vector<Formula>& atoms) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      return;
    case FormulaKind::Imp:
      skeleton_atoms(f.lhs(), atoms);
      skeleton_atoms(f.rhs(), atoms);
      return;
    default:
      if (std::find(atoms.begin(), atoms.end(), f) == atoms.end()) atoms.push_back(f);
      return;
  }
}

bool skeleton_eval(const Formula& f, const std::vector<Formula>& atoms,
                   const std::vector<bool>& value) {
  switch (f.kind()) {
    case FormulaKind::Bot:
      return false;
    case FormulaKind::Imp:
      return !skeleton_eval(f.lhs(), atoms, value) || skeleton_eval(f.rhs(), atoms, value);
    default: {
      auto it = std::find(atoms.begin(), atoms.end(), f);
      return value[static_cast<size_t>(it - atoms.begin())];
    }
  }
}

}  // namespace

bool is_tautology(const Formula& f) {
  std::vector<Formula> atoms;
  skeleton_atoms(f, atoms);
  if (atoms.size() > 24) {
    throw std::runtime_error("tautology check limit exceeded (" +
                             std::to_string(atoms.size()) + " skeleton atoms)");
  }
  size_t n = atoms.size();
  std::vector<bool> value(n, false);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    for (size_t i = 0; i < n; ++i) value[i] = (mask >> i) & 1;
    if (!skeleton_eval(f, atoms, value)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- matching

std::optional<std::pair<AxiomMatch, bool>> match_axiom_any(const Formula& f,
                                                           const LogicProfile& profile) {
  for (const Schema& s : schemas()) {
    for (const Formula& pat : s.patterns) {
      Bindings b;
      if (unify(pat, f, b)) {
        return std::make_pair(to_match(s.id, b), schema_enabled(s, profile));
      }
    }
  }
  if (is_tautology(f)) {
    AxiomMatch m;
    m.schema_id = "taut";
    return std::make_pair(m, true);
  }
  return std::nullopt;
}

std::optional<AxiomMatch> match_axiom(const Formula& f, const LogicProfile& profile) {
  for (const Schema& s : schemas()) {
    if (!schema_enabled(s, profile)) continue;
    for (const Formula& pat : s.patterns) {
      Bindings b;
      if (unify(pat, f, b)) return to_match(s.id, b);
    }
  }
  if (is_tautology(f)) {
    AxiomMatch m;
    m.schema_id = "taut";
    return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- constant specs

std::optional<ConstantTower> as_constant_tower(const Formula& f) {
  ConstantTower tower{{}, f};
  Formula cur = f;
  while (cur.kind() == FormulaKind::Just && cur.term().kind() == TermKind::Const) {
    tower.levels.emplace_back(cur.agent(), cur.term().name());
    cur = cur.lhs();
  }
  if (tower.levels.empty()) return std::nullopt;
  tower.body = cur;
  return tower;
}

bool check_downward_closed(const std::vector<Formula>& entries) {
  for (const Formula& e : entries) {
    auto tower = as_constant_tower(e);
    if (!tower) {
      throw std::invalid_argument("constant specification entry is not a constant tower: " +
                                  print_formula(e));
    }
    if (tower->levels.size() > 1) {
      Formula tail = e.lhs();
      if (std::find(entries.begin(), entries.end(), tail) == entries.end()) return false;
    }
  }
  return true;
}

std::vector<std::string> validate_constant_spec(const ConstantSpec& cs,
                                                const LogicProfile& profile) {
  std::vector<std::string> errors;
  if (cs.kind != ConstantSpec::Kind::Explicit) return errors;
  for (const Formula& e : cs.entries) {
    auto tower = as_constant_tower(e);
    if (!tower) {
      errors.push_back("entry is not a constant tower: " + print_formula(e));
      continue;
    }
    if (!match_axiom(tower->body, profile)) {
      errors.push_back("entry body is not an enabled axiom instance: " +
                       print_formula(tower->body));
    }
  }
  try {
    if (errors.empty() && !check_downward_closed(cs.entries)) {
      errors.push_back("constant specification is not downward closed");
    }
  } catch (const std::invalid_argument& ex) {
    errors.push_back(ex.what());
  }
  return errors;
}

bool cs_contains(const ConstantSpec& cs, const Formula& f, const LogicProfile& profile) {
  switch (cs.kind) {
    case ConstantSpec::Kind::Empty:
      return false;
    case ConstantSpec::Kind::Explicit:
      return std::find(cs.entries.begin(), cs.entries.end(), f) != cs.entries.end();
    case ConstantSpec::Kind::Total: {
      auto tower = as_constant_tower(f);
      if (!tower) return false;
      return match_axiom(tower->body, profile).has_value();
    }
  }
  return false;
}

// ---------------------------------------------------------------- checking

const char* rule_kind_name(Derivation::RuleKind k) {
  switch (k) {
    case Derivation::RuleKind::Premise: return "Premise";
    case Derivation::RuleKind::Axiom: return "Axiom";
    case Derivation::RuleKind::MP: return "MP";
    case Derivation::RuleKind::IaxNec: return "IaxNec";
    case Derivation::RuleKind::NextNec: return "NextNec";
    case Derivation::RuleKind::WPrevNec: return "WPrevNec";
    case Derivation::RuleKind::BoxNec: return "BoxNec";
    case Derivation::RuleKind::BoxMinusNec: return "BoxMinusNec";
  }
  return "?";
}

CheckResult check_derivation(const Derivation& d, const LogicProfile& profile,
                             const ConstantSpec& cs) {
  using RK = Derivation::RuleKind;
  CheckResult res;
  if (d.steps.empty()) {
    res.errors.emplace_back(-1, "derivation has no steps");
    return res;
  }
  res.premise_free.assign(d.steps.size(), true);

  auto err = [&res](int step, std::string msg) { res.errors.emplace_back(step, std::move(msg)); };

  for (size_t k = 0; k < d.steps.size(); ++k) {
    const auto& step = d.steps[k];
    const Formula& f = step.formula;
    int ki = static_cast<int>(k);

    if (auto why = profile_rejects(profile, f)) {
      err(ki, "formula not in profile: " + *why);
      continue;
    }

    auto cited = [&](int idx, const char* what) -> bool {
      if (idx < 0 || idx >= ki) {
        err(ki, std::string(what) + " index " + std::to_string(idx) +
                    " does not refer to an earlier step");
        return false;
      }
      return true;
    };

    bool free = true;
    switch (step.rule.kind) {
      case RK::Premise: {
        int p = step.rule.i;
        if (p < 0 || p >= static_cast<int>(d.premises.size())) {
          err(ki, "premise index out of range");
          break;
        }
        if (!(f == d.premises[p])) {
          err(ki, "step formula differs from premise " + std::to_string(p));
        }
        free = false;
        break;
      }
      case RK::Axiom: {
        auto m = match_axiom(f, profile);
        if (!m) {
          auto any = match_axiom_any(f, profile);
          if (any && !any->second) {
            err(ki, "axiom (" + any->first.schema_id + ") is not enabled in this profile");
          } else {
            err(ki, "not an instance of any enabled axiom schema");
          }
        }
        break;
      }
      case RK::MP: {
        if (!cited(step.rule.i, "MP antecedent") || !cited(step.rule.j, "MP implication")) break;
        const Formula& ant = d.steps[step.rule.i].formula;
        const Formula& impf = d.steps[step.rule.j].formula;
        if (impf.kind() != FormulaKind::Imp || !(impf.lhs() == ant) || !(impf.rhs() == f)) {
          err(ki, "MP: step " + std::to_string(step.rule.j) + " is not (step " +
                      std::to_string(step.rule.i) + " -> this formula)");
        }
        free = res.premise_free[step.rule.i] && res.premise_free[step.rule.j];
        break;
      }
      case RK::IaxNec: {
        if (!cs_contains(cs, f, profile)) {
          err(ki, "formula is not in the constant specification");
        }
        break;
      }
      case RK::NextNec:
      case RK::WPrevNec:
      case RK::BoxNec:
      case RK::BoxMinusNec: {
        if ((step.rule.kind == RK::WPrevNec || step.rule.kind == RK::BoxMinusNec) &&
            !profile.past_enabled()) {
          err(ki, "past necessitation rule not available in the future-only profile");
          break;
        }
        if (!cited(step.rule.i, "necessitation source")) break;
        const Formula& src = d.steps[step.rule.i].formula;
        Formula expect = [&] {
          switch (step.rule.kind) {
            case RK::NextNec: return Formula::next(src);
            case RK::WPrevNec: return Formula::wprev(src);
            case RK::BoxNec: return f_box(src);
            default: return f_hist(src);
          }
        }();
        if (!(f == expect)) {
          err(ki, std::string(rule_kind_name(step.rule.kind)) +
                      ": formula is not the necessitation of step " +
                      std::to_string(step.rule.i));
        }
        if (!res.premise_free[step.rule.i]) {
          err(ki, "necessitation applied to a premise-dependent step");
        }
        break;
      }
    }
    res.premise_free[k] = free;
    if (step.premise_free && *step.premise_free != free) {
      err(ki, "stored premise-free flag disagrees with recomputation");
    }
  }
  res.accepted = res.errors.empty();
  return res;
}

// ---------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

json rule_to_json(const Derivation::Rule& r) {
  using RK = Derivation::RuleKind;
  json j;
  j["type"] = rule_kind_name(r.kind);
  switch (r.kind) {
    case RK::Premise:
      j["k"] = r.i;
      break;
    case RK::MP:
      j["i"] = r.i;
      j["j"] = r.j;
      break;
    case RK::NextNec:
    case RK::WPrevNec:
    case RK::BoxNec:
    case RK::BoxMinusNec:
      j["i"] = r.i;
      break;
    default:
      break;
  }
  return j;
}

Derivation::Rule rule_from_json(const json& j) {
  using RK = Derivation::RuleKind;
  std::string type = j.at("type").get<std::string>();
  Derivation::Rule r{RK::Axiom, -1, -1};
  if (type == "Premise") {
    r.kind = RK::Premise;
    r.i = j.at("k").get<int>();
  } else if (type == "Axiom") {
    r.kind = RK::Axiom;
  } else if (type == "MP") {
    r.kind = RK::MP;
    r.i = j.at("i").get<int>();
    r.j = j.at("j").get<int>();
  } else if (type == "IaxNec") {
    r.kind = RK::IaxNec;
  } else if (type == "NextNec" || type == "WPrevNec" || type == "BoxNec" ||
             type == "BoxMinusNec") {
    r.kind = type == "NextNec"    ? RK::NextNec
             : type == "WPrevNec" ? RK::WPrevNec
             : type == "BoxNec"   ? RK::BoxNec
                                  : RK::BoxMinusNec;
    r.i = j.at("i").get<int>();
  } else {
    throw std::invalid_argument("unknown rule type '" + type + "'");
  }
  return r;
}

}  // namespace

Derivation derivation_from_json_text(const std::string& text, const LogicProfile& profile) {
  json j = json::parse(text);
  Derivation d;
  for (const auto& p : j.value("premises", json::array())) {
    d.premises.push_back(parse_formula(p.get<std::string>(), profile));
  }
  for (const auto& sj : j.at("steps")) {
    Derivation::Step step{parse_formula(sj.at("formula").get<std::string>(), profile),
                          rule_from_json(sj.at("rule")), std::nullopt};
    if (sj.contains("premiseFree")) step.premise_free = sj["premiseFree"].get<bool>();
    d.steps.push_back(std::move(step));
  }
  return d;
}

std::string derivation_to_json_text(const Derivation& d) {
  json j;
  j["premises"] = json::array();
  for (const Formula& p : d.premises) j["premises"].push_back(print_formula(p));
  j["steps"] = json::array();
  for (const auto& s : d.steps) {
    json sj;
    sj["formula"] = print_formula(s.formula);
    sj["rule"] = rule_to_json(s.rule);
    if (s.premise_free) sj["premiseFree"] = *s.premise_free;
    j["steps"].push_back(sj);
  }
  return j.dump(2);
}

ConstantSpec cs_from_json_text(const std::string& text, const LogicProfile& profile) {
  json j = json::parse(text);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "empty") return ConstantSpec::empty();
  if (kind == "total") return ConstantSpec::total();
  if (kind != "explicit") throw std::invalid_argument("cs kind must be empty/explicit/total");
  std::vector<Formula> entries;
  for (const auto& e : j.at("entries")) {
    entries.push_back(parse_formula(e.get<std::string>(), profile));
  }
  return ConstantSpec::explicit_list(std::move(entries));
}

std::string cs_to_json_text(const ConstantSpec& cs) {
  json j;
  switch (cs.kind) {
    case ConstantSpec::Kind::Empty:
      j["kind"] = "empty";
      break;
    case ConstantSpec::Kind::Total:
      j["kind"] = "total";
      break;
    case ConstantSpec::Kind::Explicit: {
      j["kind"] = "explicit";
      j["entries"] = json::array();
      for (const Formula& e : cs.entries) j["entries"].push_back(print_formula(e));
      break;
    }
  }
  return j.dump(2);
}

}  // namespace tjl
