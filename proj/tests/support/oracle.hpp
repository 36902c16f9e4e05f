#pragma once

#include "tjl/decide.hpp"

// Reference satisfiability check, independent of the SCC-based procedure:
// explicit path search through the atom graph with an eventuality counter
// that cycles through the until obligations (a lasso is accepted only if its
// cycle lets the counter wrap, i.e. discharges every obligation).
namespace tjl::oracle {

bool satisfiable(const Formula& chi, const ConstantSpec& cs, const LogicProfile& profile);

}  // namespace tjl::oracle
