#pragma once

#include <initializer_list>

#include "tjl/proof.hpp"

namespace tjl {

// Convenience layer for assembling Hilbert derivations step by step. Every
// append is checked immediately (axiom match, tautology, rule shape) and
// throws std::logic_error on misuse, so a completed builder always yields a
// derivation that check_derivation accepts.
class DerivationBuilder {
 public:
  explicit DerivationBuilder(LogicProfile profile, ConstantSpec cs = ConstantSpec::total());

  int premise(Formula f);
  int axiom(Formula f);  // any enabled schema, Taut included
  int taut(Formula f);
  int iax(Formula f);
  int mp(int antecedent, int implication);
  // appends Taut (from0 -> (from1 -> ... -> target)) and discharges it by MP
  int mp_chain(Formula target, std::initializer_list<int> from);
  int mp_chain(Formula target, const std::vector<int>& from);
  int nec(Derivation::RuleKind kind, int source);

  int size() const { return static_cast<int>(d_.steps.size()); }
  const Formula& formula_of(int step) const { return d_.steps[step].formula; }
  const Derivation& derivation() const { return d_; }
  Derivation take() { return std::move(d_); }

 private:
  int push(Formula f, Derivation::Rule r);
  LogicProfile profile_;
  ConstantSpec cs_;
  Derivation d_;
};

// Reusable derivation fragments. Each appends steps to the builder and
// returns the index of the named theorem.
namespace derive {

// ~(true U sigma) -> (~sigma & X ~(true U sigma)); modus ponens only
int until_neg_fixpoint(DerivationBuilder& b, const Formula& sigma);
// ~(true S sigma) -> (~sigma & Yw ~(true S sigma)); modus ponens only
int since_neg_fixpoint(DerivationBuilder& b, const Formula& sigma);
// G phi -> (phi & X G phi); modus ponens only
int box_fixpoint(DerivationBuilder& b, const Formula& phi);
// G phi -> X phi; uses next-necessitation
int box_to_next(DerivationBuilder& b, const Formula& phi);
// H phi -> (phi & Yw H phi); modus ponens only
int hist_fixpoint(DerivationBuilder& b, const Formula& phi);
// H phi -> Yw phi; uses wprev-necessitation
int hist_to_wprev(DerivationBuilder& b, const Formula& phi);

}  // namespace derive

}  // namespace tjl
