#pragma once

#include <map>

#include "tjl/builder.hpp"

namespace tjl {

enum class InternalizeMode {
  Restricted,     // MP + IaxNec + axioms only, base profile
  LpltlInt,       // generalize/boxminus-generalize/mix1/mix2
  AccessVariant,  // generalize/boxminus-generalize/next-access/wprev-access
};

const char* internalize_mode_name(InternalizeMode m);
std::optional<InternalizeMode> internalize_mode_by_name(const std::string& name);

// The profile a given mode checks derivations against (always with Total CS).
LogicProfile internalize_profile(InternalizeMode m);

class InternalizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic constant naming for (axiom instance, tower depth) pairs;
// names are assigned in first-use order within a session.
class ConstantAllocator {
 public:
  std::string allocate(const Formula& axiom_instance, int depth);

 private:
  std::map<std::pair<Formula, int>, std::string> names_;
  int counter_ = 0;
};

struct InternalizeResult {
  Term term;
  Derivation derivation;
};

// Transforms a checked premise-free derivation of phi into a derivation of
// [term]_agent phi in the mode's profile under the total constant
// specification.
InternalizeResult internalize(const Derivation& d, AgentId agent, InternalizeMode mode);

// [t]_i G phi -> [a*t]_i X phi with a the mix1 constant (lpltl-int profile).
InternalizeResult derived_access_next(const Term& t, AgentId agent, const Formula& phi,
                                      ConstantAllocator& alloc);
// [t]_i H phi -> [b*t]_i Yw phi with b the mix2 constant.
InternalizeResult derived_access_wprev(const Term& t, AgentId agent, const Formula& phi,
                                       ConstantAllocator& alloc);
// [t]_i G phi -> [shl(acc(t))]_i X phi in a profile with box-access and
// next-left; no constants required.
InternalizeResult composed_access_next(const Term& t, AgentId agent, const Formula& phi);

}  // namespace tjl
