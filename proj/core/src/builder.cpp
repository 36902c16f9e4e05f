#include "tjl/builder.hpp"

namespace tjl {

DerivationBuilder::DerivationBuilder(LogicProfile profile, ConstantSpec cs)
    : profile_(std::move(profile)), cs_(std::move(cs)) {}

int DerivationBuilder::push(Formula f, Derivation::Rule r) {
  d_.steps.push_back({std::move(f), r, std::nullopt});
  return static_cast<int>(d_.steps.size()) - 1;
}

int DerivationBuilder::premise(Formula f) {
  d_.premises.push_back(f);
  return push(std::move(f),
              {Derivation::RuleKind::Premise, static_cast<int>(d_.premises.size()) - 1, -1});
}

int DerivationBuilder::axiom(Formula f) {
  if (!match_axiom(f, profile_)) {
    throw std::logic_error("builder: not an enabled axiom instance: " + print_formula(f));
  }
  return push(std::move(f), {Derivation::RuleKind::Axiom, -1, -1});
}

int DerivationBuilder::taut(Formula f) {
  if (!is_tautology(f)) {
    throw std::logic_error("builder: not a tautology: " + print_formula(f));
  }
  return push(std::move(f), {Derivation::RuleKind::Axiom, -1, -1});
}

int DerivationBuilder::iax(Formula f) {
  if (!cs_contains(cs_, f, profile_)) {
    throw std::logic_error("builder: not in the constant specification: " + print_formula(f));
  }
  return push(std::move(f), {Derivation::RuleKind::IaxNec, -1, -1});
}

int DerivationBuilder::mp(int antecedent, int implication) {
  const Formula& imp = d_.steps[implication].formula;
  if (imp.kind() != FormulaKind::Imp || !(imp.lhs() == d_.steps[antecedent].formula)) {
    throw std::logic_error("builder: modus ponens shape mismatch");
  }
  return push(imp.rhs(), {Derivation::RuleKind::MP, antecedent, implication});
}

int DerivationBuilder::mp_chain(Formula target, std::initializer_list<int> from) {
  return mp_chain(std::move(target), std::vector<int>(from));
}

int DerivationBuilder::mp_chain(Formula target, const std::vector<int>& from) {
  Formula curried = target;
  for (auto it = from.rbegin(); it != from.rend(); ++it) {
    curried = Formula::imp(d_.steps[*it].formula, curried);
  }
  int step = taut(curried);
  for (int f : from) step = mp(f, step);
  return step;
}

int DerivationBuilder::nec(Derivation::RuleKind kind, int source) {
  const Formula& src = d_.steps[source].formula;
  Formula f = [&] {
    switch (kind) {
      case Derivation::RuleKind::NextNec: return Formula::next(src);
      case Derivation::RuleKind::WPrevNec: return Formula::wprev(src);
      case Derivation::RuleKind::BoxNec: return f_box(src);
      case Derivation::RuleKind::BoxMinusNec: return f_hist(src);
      default: throw std::logic_error("builder: nec expects a necessitation rule");
    }
  }();
  return push(std::move(f), {kind, source, -1});
}

namespace derive {

// ~(true U sigma) -> (~sigma & X ~(true U sigma)) from the until unfolding
// axiom plus functionality, by propositional reasoning
int until_neg_fixpoint(DerivationBuilder& b, const Formula& sigma) {
  Formula u = f_diamond(sigma);  // true U sigma
  int unfold = b.axiom(f_iff(u, f_or(sigma, f_and(f_top(), Formula::next(u)))));
  int fun = b.axiom(f_iff(Formula::next(f_not(u)), f_not(Formula::next(u))));
  Formula goal = Formula::imp(f_not(u), f_and(f_not(sigma), Formula::next(f_not(u))));
  return b.mp_chain(goal, {unfold, fun});
}

int box_fixpoint(DerivationBuilder& b, const Formula& phi) {
  // G phi is ~(true U ~phi); the ~~phi in the raw form collapses
  Formula u = f_diamond(f_not(phi));
  int unfold = b.axiom(f_iff(u, f_or(f_not(phi), f_and(f_top(), Formula::next(u)))));
  int fun = b.axiom(f_iff(Formula::next(f_not(u)), f_not(Formula::next(u))));
  Formula goal = Formula::imp(f_box(phi), f_and(phi, Formula::next(f_box(phi))));
  return b.mp_chain(goal, {unfold, fun});
}

int box_to_next(DerivationBuilder& b, const Formula& phi) {
  int fix = box_fixpoint(b, phi);
  int unbox = b.mp_chain(Formula::imp(f_box(phi), phi), {fix});
  int keep = b.mp_chain(Formula::imp(f_box(phi), Formula::next(f_box(phi))), {fix});
  int nec = b.nec(Derivation::RuleKind::NextNec, unbox);
  int k = b.axiom(Formula::imp(Formula::next(Formula::imp(f_box(phi), phi)),
                               Formula::imp(Formula::next(f_box(phi)), Formula::next(phi))));
  int shifted = b.mp(nec, k);
  return b.mp_chain(Formula::imp(f_box(phi), Formula::next(phi)), {keep, shifted});
}

// ~(true S sigma) -> (~sigma & Yw ~(true S sigma)); unlike the future case
// no functionality axiom is needed: ~Ys psi is ~~Yw~psi, propositionally
// already the weak-previous form
int since_neg_fixpoint(DerivationBuilder& b, const Formula& sigma) {
  Formula s = f_once(sigma);  // true S sigma
  int unfold = b.axiom(f_iff(s, f_or(sigma, f_and(f_top(), f_sprev(s)))));
  Formula goal = Formula::imp(f_not(s), f_and(f_not(sigma), Formula::wprev(f_not(s))));
  return b.mp_chain(goal, {unfold});
}

int hist_fixpoint(DerivationBuilder& b, const Formula& phi) {
  Formula s = f_once(f_not(phi));
  int unfold = b.axiom(f_iff(s, f_or(f_not(phi), f_and(f_top(), f_sprev(s)))));
  Formula goal = Formula::imp(f_hist(phi), f_and(phi, Formula::wprev(f_hist(phi))));
  return b.mp_chain(goal, {unfold});
}

int hist_to_wprev(DerivationBuilder& b, const Formula& phi) {
  int fix = hist_fixpoint(b, phi);
  int unbox = b.mp_chain(Formula::imp(f_hist(phi), phi), {fix});
  int keep = b.mp_chain(Formula::imp(f_hist(phi), Formula::wprev(f_hist(phi))), {fix});
  int nec = b.nec(Derivation::RuleKind::WPrevNec, unbox);
  int k = b.axiom(Formula::imp(Formula::wprev(Formula::imp(f_hist(phi), phi)),
                               Formula::imp(Formula::wprev(f_hist(phi)), Formula::wprev(phi))));
  int shifted = b.mp(nec, k);
  return b.mp_chain(Formula::imp(f_hist(phi), Formula::wprev(phi)), {keep, shifted});
}

}  // namespace derive

}  // namespace tjl
