#include "tjl/internalize.hpp"

#include <functional>

namespace tjl {

const char* internalize_mode_name(InternalizeMode m) {
  switch (m) {
    case InternalizeMode::Restricted: return "restricted";
    case InternalizeMode::LpltlInt: return "lpltl-int";
    case InternalizeMode::AccessVariant: return "access-variant";
  }
  return "?";
}

std::optional<InternalizeMode> internalize_mode_by_name(const std::string& name) {
  if (name == "restricted") return InternalizeMode::Restricted;
  if (name == "lpltl-int") return InternalizeMode::LpltlInt;
  if (name == "access-variant") return InternalizeMode::AccessVariant;
  return std::nullopt;
}

LogicProfile internalize_profile(InternalizeMode m) {
  switch (m) {
    case InternalizeMode::Restricted:
      return named_profile("lpltl-p");
    case InternalizeMode::LpltlInt:
      return named_profile("lpltl-int");
    case InternalizeMode::AccessVariant: {
      LogicProfile p = named_profile("lpltl-p");
      p.extras = {ExtraAxiom::Generalize, ExtraAxiom::BoxMinusGeneralize,
                  ExtraAxiom::NextAccess, ExtraAxiom::WPrevAccess};
      p.name.clear();
      return p;
    }
  }
  throw InternalizeError("unknown mode");
}

std::string ConstantAllocator::allocate(const Formula& axiom_instance, int depth) {
  auto [it, inserted] = names_.try_emplace({axiom_instance, depth}, "");
  if (inserted) it->second = "c" + std::to_string(++counter_);
  return it->second;
}

namespace {

struct Internalizer {
  const Derivation& d;
  AgentId agent;
  InternalizeMode mode;
  DerivationBuilder builder;
  ConstantAllocator alloc;
  std::map<int, std::pair<Term, int>> memo;  // source step -> (term, output step)

  std::pair<Term, int> lift(int k) {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    auto result = lift_uncached(k);
    memo.emplace(k, result);
    return result;
  }

  std::pair<Term, int> boxify(int k) {
    // [tc] psi  ~>  [gen(tc)] G psi
    auto [tc, pc] = lift(k);
    const Formula& psi = d.steps[k].formula;
    int boxed = builder.nec(Derivation::RuleKind::BoxNec, pc);
    int gen = builder.axiom(Formula::imp(f_box(Formula::just(agent, tc, psi)),
                                         Formula::just(agent, Term::unary(TermOp::Up, tc),
                                                       f_box(psi))));
    return {Term::unary(TermOp::Up, tc), builder.mp(boxed, gen)};
  }

  std::pair<Term, int> boxminusify(int k) {
    auto [tc, pc] = lift(k);
    const Formula& psi = d.steps[k].formula;
    int boxed = builder.nec(Derivation::RuleKind::BoxMinusNec, pc);
    int gen = builder.axiom(Formula::imp(f_hist(Formula::just(agent, tc, psi)),
                                         Formula::just(agent, Term::unary(TermOp::UpP, tc),
                                                       f_hist(psi))));
    return {Term::unary(TermOp::UpP, tc), builder.mp(boxed, gen)};
  }

  // [c](chi -> rho), [s] chi  ~>  [c*s] rho via the application axiom
  std::pair<Term, int> apply_constant(const std::string& c, const Formula& chi,
                                      const Formula& rho, const Term& s, int arg_step) {
    Term ct = Term::constant(c);
    int cstep = builder.iax(Formula::just(agent, ct, Formula::imp(chi, rho)));
    Term out = Term::app(ct, s);
    int app = builder.axiom(
        Formula::imp(Formula::just(agent, ct, Formula::imp(chi, rho)),
                     Formula::imp(Formula::just(agent, s, chi), Formula::just(agent, out, rho))));
    int step = builder.mp(cstep, app);
    return {out, builder.mp(arg_step, step)};
  }

  std::pair<Term, int> lift_uncached(int k) {
    using RK = Derivation::RuleKind;
    const auto& step = d.steps[k];
    const Formula& f = step.formula;
    switch (step.rule.kind) {
      case RK::Premise:
        throw InternalizeError("derivation has premises");
      case RK::Axiom: {
        std::string c = alloc.allocate(f, 1);
        Term ct = Term::constant(c);
        return {ct, builder.iax(Formula::just(agent, ct, f))};
      }
      case RK::IaxNec: {
        auto tower = as_constant_tower(f);
        int depth = tower ? static_cast<int>(tower->levels.size()) : 0;
        Formula body = tower ? tower->body : f;
        std::string c = alloc.allocate(body, depth + 1);
        Term ct = Term::constant(c);
        return {ct, builder.iax(Formula::just(agent, ct, f))};
      }
      case RK::MP: {
        auto [s2, p2] = lift(step.rule.i);  // [s2] chi
        auto [s1, p1] = lift(step.rule.j);  // [s1] (chi -> f)
        const Formula& chi = d.steps[step.rule.i].formula;
        Term out = Term::app(s1, s2);
        int app = builder.axiom(Formula::imp(
            Formula::just(agent, s1, Formula::imp(chi, f)),
            Formula::imp(Formula::just(agent, s2, chi), Formula::just(agent, out, f))));
        int half = builder.mp(p1, app);
        return {out, builder.mp(p2, half)};
      }
      case RK::BoxNec:
        return boxify(step.rule.i);
      case RK::BoxMinusNec:
        return boxminusify(step.rule.i);
      case RK::NextNec: {
        auto [gt, gp] = boxify(step.rule.i);  // [gen(tc)] G psi
        const Formula& psi = d.steps[step.rule.i].formula;
        if (mode == InternalizeMode::AccessVariant) {
          Term out = Term::unary(TermOp::DownSmall, gt);
          int acc = builder.axiom(Formula::imp(Formula::just(agent, gt, f_box(psi)),
                                               Formula::just(agent, out, Formula::next(psi))));
          return {out, builder.mp(gp, acc)};
        }
        std::string a = alloc.allocate(Formula::imp(f_box(psi), Formula::next(psi)), 1);
        return apply_constant(a, f_box(psi), Formula::next(psi), gt, gp);
      }
      case RK::WPrevNec: {
        auto [gt, gp] = boxminusify(step.rule.i);  // [genp(tc)] H psi
        const Formula& psi = d.steps[step.rule.i].formula;
        if (mode == InternalizeMode::AccessVariant) {
          Term out = Term::unary(TermOp::DownSmallP, gt);
          int acc = builder.axiom(Formula::imp(Formula::just(agent, gt, f_hist(psi)),
                                               Formula::just(agent, out, Formula::wprev(psi))));
          return {out, builder.mp(gp, acc)};
        }
        std::string bconst = alloc.allocate(Formula::imp(f_hist(psi), Formula::wprev(psi)), 1);
        return apply_constant(bconst, f_hist(psi), Formula::wprev(psi), gt, gp);
      }
    }
    throw InternalizeError("unknown rule");
  }
};

}  // namespace

InternalizeResult internalize(const Derivation& d, AgentId agent, InternalizeMode mode) {
  if (!d.premises.empty()) throw InternalizeError("derivation has premises");
  if (agent < 1) throw InternalizeError("agent index must be >= 1");
  LogicProfile profile = internalize_profile(mode);
  ConstantSpec total = ConstantSpec::total();

  CheckResult check = check_derivation(d, profile, total);
  if (!check.accepted) {
    throw InternalizeError("derivation does not check in the " +
                           std::string(internalize_mode_name(mode)) + " profile: " +
                           check.errors.front().second);
  }
  if (mode == InternalizeMode::Restricted) {
    for (const auto& step : d.steps) {
      using RK = Derivation::RuleKind;
      if (step.rule.kind != RK::Axiom && step.rule.kind != RK::MP &&
          step.rule.kind != RK::IaxNec) {
        throw InternalizeError(std::string("restricted mode admits only axioms, modus ponens "
                                           "and iterated axiom necessitation; found ") +
                               rule_kind_name(step.rule.kind));
      }
    }
  }

  Internalizer in{d, agent, mode, DerivationBuilder(profile, total), {}, {}};
  auto [term, last] = in.lift(static_cast<int>(d.steps.size()) - 1);
  (void)last;
  return {term, in.builder.take()};
}

InternalizeResult derived_access_next(const Term& t, AgentId agent, const Formula& phi,
                                      ConstantAllocator& alloc) {
  LogicProfile profile = named_profile("lpltl-int");
  DerivationBuilder b(profile, ConstantSpec::total());
  Formula mix = Formula::imp(f_box(phi), Formula::next(phi));
  std::string a = alloc.allocate(mix, 1);
  Term at = Term::constant(a);
  int c = b.iax(Formula::just(agent, at, mix));
  Term out = Term::app(at, t);
  int app = b.axiom(Formula::imp(
      Formula::just(agent, at, mix),
      Formula::imp(Formula::just(agent, t, f_box(phi)), Formula::just(agent, out, Formula::next(phi)))));
  b.mp(c, app);
  return {out, b.take()};
}

InternalizeResult derived_access_wprev(const Term& t, AgentId agent, const Formula& phi,
                                       ConstantAllocator& alloc) {
  LogicProfile profile = named_profile("lpltl-int");
  DerivationBuilder b(profile, ConstantSpec::total());
  Formula mix = Formula::imp(f_hist(phi), Formula::wprev(phi));
  std::string bc = alloc.allocate(mix, 1);
  Term bt = Term::constant(bc);
  int c = b.iax(Formula::just(agent, bt, mix));
  Term out = Term::app(bt, t);
  int app = b.axiom(Formula::imp(
      Formula::just(agent, bt, mix),
      Formula::imp(Formula::just(agent, t, f_hist(phi)),
                   Formula::just(agent, out, Formula::wprev(phi)))));
  b.mp(c, app);
  return {out, b.take()};
}

InternalizeResult composed_access_next(const Term& t, AgentId agent, const Formula& phi) {
  LogicProfile profile = named_profile("lpltl-p");
  profile.extras = {ExtraAxiom::BoxAccess, ExtraAxiom::NextLeft};
  profile.name.clear();
  DerivationBuilder b(profile, ConstantSpec::total());

  Formula inner = Formula::just(agent, Term::unary(TermOp::Down, t), phi);
  int acc = b.axiom(Formula::imp(Formula::just(agent, t, f_box(phi)), f_box(inner)));
  int mix = derive::box_to_next(b, inner);  // G [acc(t)] phi -> X [acc(t)] phi
  Term out = Term::unary(TermOp::LLeft, Term::unary(TermOp::Down, t));
  int shl = b.axiom(Formula::imp(Formula::next(inner),
                                 Formula::just(agent, out, Formula::next(phi))));
  b.mp_chain(Formula::imp(Formula::just(agent, t, f_box(phi)),
                          Formula::just(agent, out, Formula::next(phi))),
             {acc, mix, shl});
  return {out, b.take()};
}

}  // namespace tjl
