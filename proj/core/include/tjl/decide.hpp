#pragma once

#include <optional>
#include <vector>

#include "tjl/model.hpp"
#include "tjl/proof.hpp"

namespace tjl {

// Truth assignment over the positive closure part A_chi: bit i set means
// closure.positive()[i] is in the atom, clear means its negation is.
struct Atom {
  std::vector<bool> bits;
  bool initial = false;  // the weak-previous-bottom bit
};

struct AtomGraph {
  ClosureSet closure;
  std::vector<Atom> atoms;
  std::vector<std::vector<int>> succ;
  std::vector<int> initial_atoms;
  std::vector<int> scc_of_atom;
  // non-trivial (or self-looping) components meeting every until obligation
  std::vector<bool> in_fulfilling_scc;
  // inside, or reaching, a self-fulfilling strongly connected component
  std::vector<bool> fulfilling_core;
  int edge_count = 0;
  int scc_count = 0;
};

struct DecideStats {
  int atoms = 0;
  int edges = 0;
  int sccs = 0;
};

struct Witness {
  std::vector<int> atom_prefix;  // indices into AtomGraph::atoms
  std::vector<int> atom_loop;    // non-empty; wraps back to its own head
  int sat_position = 0;
};

struct SatOutcome {
  bool sat = false;
  std::optional<Witness> witness;
  AtomGraph graph;
  DecideStats stats;
};

struct ValidOutcome {
  bool valid = false;
  std::optional<MkModel> counter_model;
  int counter_position = 0;
  DecideStats stats;
};

// The decision procedure covers the base profile only (LP core, plain
// application, no connecting axioms); cs must be Empty or Explicit.
class DecideError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All locally coherent truth assignments over closure(chi).
std::vector<Atom> build_atoms(const ClosureSet& closure, const ConstantSpec& cs,
                              const LogicProfile& profile);

bool next_relation(const ClosureSet& closure, const Atom& a, const Atom& b);

AtomGraph build_atom_graph(const Formula& chi, const ConstantSpec& cs,
                           const LogicProfile& profile);

SatOutcome satisfiable(const Formula& chi, const ConstantSpec& cs, const LogicProfile& profile);

ValidOutcome valid(const Formula& f, const ConstantSpec& cs, const LogicProfile& profile);

// One state per distinct atom on the witness; evidence base from the atoms'
// justification assertions; validates and satisfies chi at sat_position.
MkModel witness_to_model(const AtomGraph& graph, const Witness& w, const ConstantSpec& cs,
                         const LogicProfile& profile);

}  // namespace tjl
