#include "tjl/decide.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace tjl {

namespace {

void require_base_profile(const LogicProfile& p, const Formula& chi) {
  if (p.just_core != JustCore::LP || p.indexed() || !p.extras.empty()) {
    throw DecideError(
        "the decision procedure covers the base profile only (no connecting axioms, "
        "plain application)");
  }
  if (auto why = profile_rejects(p, chi)) {
    throw DecideError("formula not in profile: " + *why);
  }
}

// Positive-closure bookkeeping precomputed once per decision run.
struct ClosureInfo {
  const ClosureSet& cl;
  std::vector<int> order;                      // positive indices, children first
  std::vector<int> next_of, wprev_of;          // body index per formula (or -1)
  std::vector<std::pair<int, int>> until_args; // (lhs,rhs) per formula (or -1,-1)
  std::vector<std::pair<int, int>> since_args;
  std::vector<std::pair<int, int>> imp_args;
  std::vector<int> just_body;
  int wprev_bot = -1;

  // evidence-closure machinery: facts are (agent, pool term, universe formula)
  std::vector<Term> pool;
  std::map<std::pair<int, int>, int> fact_of;  // (agent*P + t, f) -> fact id, built lazily
  struct RuleInst {
    int concl;
    int hyp1 = -1;
    int hyp2 = -1;  // -1: single-hypothesis rule
  };
  std::vector<RuleInst> rules;
  std::vector<int> seed_facts;                  // from the constant specification
  std::vector<std::pair<int, int>> just_fact;   // per positive idx: (fact id, -1) or (-1,-1)
  int fact_count = 0;

  explicit ClosureInfo(const ClosureSet& c, const ConstantSpec& cs) : cl(c) {
    const auto& pos = cl.positive();
    int n = static_cast<int>(pos.size());
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pos[a].size() < pos[b].size(); });

    next_of.assign(n, -1);
    wprev_of.assign(n, -1);
    just_body.assign(n, -1);
    until_args.assign(n, {-1, -1});
    since_args.assign(n, {-1, -1});
    imp_args.assign(n, {-1, -1});
    auto idx = [&](const Formula& f) {
      auto i = cl.positive_index_of(f);
      return i ? *i : -1;
    };
    for (int i = 0; i < n; ++i) {
      const Formula& f = pos[i];
      switch (f.kind()) {
        case FormulaKind::Next:
          next_of[i] = idx(f.lhs());
          break;
        case FormulaKind::WPrev:
          wprev_of[i] = idx(f.lhs());
          if (f.lhs().kind() == FormulaKind::Bot) wprev_bot = i;
          break;
        case FormulaKind::Until:
          until_args[i] = {idx(f.lhs()), idx(f.rhs())};
          break;
        case FormulaKind::Since:
          since_args[i] = {idx(f.lhs()), idx(f.rhs())};
          break;
        case FormulaKind::Imp:
          imp_args[i] = {idx(f.lhs()), idx(f.rhs())};
          break;
        case FormulaKind::Just:
          just_body[i] = idx(f.lhs());
          break;
        default:
          break;
      }
    }
    build_evidence_rules(cs);
  }

  int agents = 1;

  void build_evidence_rules(const ConstantSpec& cs) {
    const auto& pos = cl.positive();
    std::set<Term> pool_set;
    for (const Formula& f : pos) {
      if (f.kind() == FormulaKind::Just) {
        agents = std::max(agents, f.agent());
        for (const Term& t : subterm_list(f.term())) pool_set.insert(t);
      }
    }
    std::vector<Formula> relevant_cs;
    if (cs.kind == ConstantSpec::Kind::Explicit) {
      for (const Formula& e : cs.entries) {
        if (cl.positive_index_of(e.lhs())) {  // one-peel body inside the closure
          relevant_cs.push_back(e);
          agents = std::max(agents, e.agent());
          for (const Term& t : terms_of(e)) pool_set.insert(t);
        }
      }
    }
    pool.assign(pool_set.begin(), pool_set.end());
    std::map<Term, int> tid;
    for (size_t i = 0; i < pool.size(); ++i) tid.emplace(pool[i], static_cast<int>(i));

    int n = static_cast<int>(pos.size());
    int P = static_cast<int>(pool.size());
    auto fact_id = [&](int agent, int t, int f) {
      auto [it, inserted] = fact_of.try_emplace({agent * P + t, f}, fact_count);
      if (inserted) ++fact_count;
      return it->second;
    };

    for (int a = 1; a <= agents; ++a) {
      for (int ti = 0; ti < P; ++ti) {
        const Term& t = pool[ti];
        switch (t.kind()) {
          case TermKind::App: {
            int lt = tid.at(t.left());
            int rt = tid.at(t.right());
            for (int fi = 0; fi < n; ++fi) {
              auto [lhs, rhs] = imp_args[fi];
              if (lhs < 0 || rhs < 0) continue;
              rules.push_back({fact_id(a, ti, rhs), fact_id(a, lt, fi), fact_id(a, rt, lhs)});
            }
            break;
          }
          case TermKind::Sum: {
            int lt = tid.at(t.left());
            int rt = tid.at(t.right());
            for (int fi = 0; fi < n; ++fi) {
              rules.push_back({fact_id(a, ti, fi), fact_id(a, lt, fi)});
              rules.push_back({fact_id(a, ti, fi), fact_id(a, rt, fi)});
            }
            break;
          }
          case TermKind::Bang: {
            int lt = tid.at(t.left());
            for (int fi = 0; fi < n; ++fi) {
              auto inner = cl.positive_index_of(Formula::just(a, t.left(), pos[fi]));
              if (!inner) continue;
              rules.push_back({fact_id(a, ti, *inner), fact_id(a, lt, fi)});
            }
            break;
          }
          default:
            break;
        }
      }
    }
    for (const Formula& e : relevant_cs) {
      int body = *cl.positive_index_of(e.lhs());
      seed_facts.push_back(fact_id(e.agent(), tid.at(e.term()), body));
    }
    just_fact.assign(n, {-1, -1});
    for (int i = 0; i < n; ++i) {
      if (pos[i].kind() != FormulaKind::Just) continue;
      auto it = tid.find(pos[i].term());
      int body = just_body[i];
      if (it == tid.end() || body < 0) continue;
      just_fact[i] = {fact_id(pos[i].agent(), it->second, body), -1};
    }
  }

  // saturate evidence facts seeded by the atom's justification bits and the
  // constant specification; rules mirror the model engine, state-locally
  void saturate(const std::vector<bool>& bits, std::vector<bool>& facts) const {
    facts.assign(fact_count, false);
    for (int f : seed_facts) facts[f] = true;
    int n = static_cast<int>(bits.size());
    for (int i = 0; i < n; ++i) {
      if (bits[i] && just_fact[i].first >= 0) facts[just_fact[i].first] = true;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const RuleInst& r : rules) {
        if (facts[r.concl]) continue;
        bool fire = r.hyp2 < 0 ? facts[r.hyp1] : (facts[r.hyp1] && facts[r.hyp2]);
        if (fire) {
          facts[r.concl] = true;
          changed = true;
        }
      }
    }
  }
};

}  // namespace

std::vector<Atom> build_atoms(const ClosureSet& closure, const ConstantSpec& cs,
                              const LogicProfile& profile) {
  (void)profile;
  ClosureInfo info(closure, cs);
  const auto& pos = closure.positive();
  int n = static_cast<int>(pos.size());

  // implication and bottom bits are determined by the rest
  std::vector<int> free_idx;
  for (int i = 0; i < n; ++i) {
    FormulaKind k = pos[i].kind();
    if (k != FormulaKind::Imp && k != FormulaKind::Bot) free_idx.push_back(i);
  }
  if (free_idx.size() > 24) {
    throw DecideError("closure too large: " + std::to_string(free_idx.size()) +
                      " free formulas (limit 24)");
  }

  std::vector<Atom> atoms;
  std::vector<bool> bits(n), facts;
  for (uint64_t mask = 0; mask < (uint64_t{1} << free_idx.size()); ++mask) {
    for (size_t k = 0; k < free_idx.size(); ++k) bits[free_idx[k]] = (mask >> k) & 1;
    // derive implication bits bottom-up (bottom is simply false)
    for (int i : info.order) {
      const Formula& f = pos[i];
      if (f.kind() == FormulaKind::Bot) {
        bits[i] = false;
      } else if (f.kind() == FormulaKind::Imp) {
        auto [lhs, rhs] = info.imp_args[i];
        bits[i] = !bits[lhs] || bits[rhs];
      }
    }
    // reflexivity
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (info.just_body[i] >= 0 && bits[i] && !bits[info.just_body[i]]) ok = false;
    }
    // initial coherence
    if (ok && bits[info.wprev_bot]) {
      for (int i = 0; i < n && ok; ++i) {
        if (info.wprev_of[i] >= 0 && !bits[i]) ok = false;
        auto [sl, sr] = info.since_args[i];
        if (sl >= 0 && bits[i] != bits[sr]) ok = false;
      }
    }
    // forced evidence: a justified body with derivable evidence must be
    // asserted (the model's saturated evidence would make it true)
    if (ok) {
      info.saturate(bits, facts);
      for (int i = 0; i < n && ok; ++i) {
        int fid = info.just_fact[i].first;
        if (fid >= 0 && !bits[i] && bits[info.just_body[i]] && facts[fid]) ok = false;
      }
    }
    if (ok) {
      Atom a;
      a.bits = bits;
      a.initial = bits[info.wprev_bot];
      atoms.push_back(std::move(a));
    }
  }
  return atoms;
}

bool next_relation(const ClosureSet& closure, const Atom& a, const Atom& b) {
  const auto& pos = closure.positive();
  int n = static_cast<int>(pos.size());
  auto idx = [&](const Formula& f) { return *closure.positive_index_of(f); };
  for (int i = 0; i < n; ++i) {
    const Formula& f = pos[i];
    switch (f.kind()) {
      case FormulaKind::Next:
        if (a.bits[i] != b.bits[idx(f.lhs())]) return false;
        break;
      case FormulaKind::WPrev:
        if (f.lhs().kind() == FormulaKind::Bot) {
          if (b.bits[i]) return false;  // successors are never initial
        } else if (b.bits[i] != a.bits[idx(f.lhs())]) {
          return false;
        }
        break;
      case FormulaKind::Until: {
        bool step = a.bits[idx(f.rhs())] || (a.bits[idx(f.lhs())] && b.bits[i]);
        if (a.bits[i] != step) return false;
        break;
      }
      case FormulaKind::Since: {
        bool step = b.bits[idx(f.rhs())] || (b.bits[idx(f.lhs())] && a.bits[i]);
        if (b.bits[i] != step) return false;
        break;
      }
      default:
        break;
    }
  }
  return true;
}

namespace {

// Tarjan SCCs, iterative.
std::vector<int> scc_of(const std::vector<std::vector<int>>& succ, int& scc_count) {
  int n = static_cast<int>(succ.size());
  std::vector<int> comp(n, -1), low(n), num(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;
  scc_count = 0;

  struct Frame {
    int v;
    size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& fr = frames.back();
      if (fr.child < succ[fr.v].size()) {
        int w = succ[fr.v][fr.child++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], num[w]);
        }
      } else {
        int v = fr.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == num[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = scc_count;
            if (w == v) break;
          }
          ++scc_count;
        }
      }
    }
  }
  return comp;
}

std::vector<int> bfs_path(const std::vector<std::vector<int>>& succ, int from,
                          const std::vector<bool>& target, const std::vector<bool>* inside) {
  int n = static_cast<int>(succ.size());
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  parent[from] = -1;
  queue.push_back(from);
  int hit = target[from] ? from : -1;
  while (hit < 0 && !queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : succ[v]) {
      if (inside && !(*inside)[w]) continue;
      if (parent[w] != -2) continue;
      parent[w] = v;
      if (target[w]) {
        hit = w;
        break;
      }
      queue.push_back(w);
    }
  }
  if (hit < 0) return {};
  std::vector<int> path;
  for (int v = hit; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// shortest non-empty closed walk from v back to v staying inside the mask
std::vector<int> bfs_cycle(const std::vector<std::vector<int>>& succ, int v,
                           const std::vector<bool>& inside) {
  std::vector<bool> target(succ.size(), false);
  target[v] = true;
  // one explicit first step, then shortest path back
  std::vector<int> best;
  for (int w : succ[v]) {
    if (!inside[w]) continue;
    if (w == v) return {v};  // self-loop
    std::vector<int> back = bfs_path(succ, w, target, &inside);
    if (back.empty()) continue;
    std::vector<int> cyc{v};
    cyc.insert(cyc.end(), back.begin(), back.end() - 1);
    if (best.empty() || cyc.size() < best.size()) best = cyc;
  }
  return best;
}

void verify_witness(const AtomGraph& g, const Witness& w) {
  auto edge = [&](int a, int b) {
    return std::find(g.succ[a].begin(), g.succ[a].end(), b) != g.succ[a].end();
  };
  std::vector<int> seq = w.atom_prefix;
  seq.insert(seq.end(), w.atom_loop.begin(), w.atom_loop.end());
  if (seq.empty() || w.atom_loop.empty()) throw std::logic_error("witness: empty sequence");
  if (!g.atoms[seq[0]].initial) throw std::logic_error("witness: run does not start initial");
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!edge(seq[i], seq[i + 1])) throw std::logic_error("witness: missing edge");
  }
  if (!edge(seq.back(), w.atom_loop.front())) throw std::logic_error("witness: loop break");
  // every until obligation is met within the unrolled sequence
  const auto& pos = g.closure.positive();
  auto unrolled = [&](size_t k) {
    return k < seq.size()
               ? seq[k]
               : w.atom_loop[(k - w.atom_prefix.size()) % w.atom_loop.size()];
  };
  size_t horizon = seq.size() + w.atom_loop.size();
  for (size_t k = 0; k < seq.size(); ++k) {
    for (size_t i = 0; i < pos.size(); ++i) {
      if (pos[i].kind() != FormulaKind::Until || !g.atoms[seq[k]].bits[i]) continue;
      int rhs = *g.closure.positive_index_of(pos[i].rhs());
      bool met = false;
      for (size_t m = k; m < horizon && !met; ++m) met = g.atoms[unrolled(m)].bits[rhs];
      if (!met) throw std::logic_error("witness: unmet until obligation");
    }
  }
}

}  // namespace

AtomGraph build_atom_graph(const Formula& chi, const ConstantSpec& cs,
                           const LogicProfile& profile) {
  AtomGraph g;
  g.closure = ClosureSet::closure(chi);
  g.atoms = build_atoms(g.closure, cs, profile);
  int n = static_cast<int>(g.atoms.size());
  g.succ.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (next_relation(g.closure, g.atoms[a], g.atoms[b])) {
        g.succ[a].push_back(b);
        ++g.edge_count;
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.atoms[a].initial) g.initial_atoms.push_back(a);
  }

  g.scc_of_atom = scc_of(g.succ, g.scc_count);

  // self-fulfilling components: non-trivial (or self-looping) and every until
  // obligation of every member is met somewhere inside
  const auto& pos = g.closure.positive();
  std::vector<int> until_rhs;
  std::vector<int> until_idx;
  for (size_t i = 0; i < pos.size(); ++i) {
    if (pos[i].kind() == FormulaKind::Until) {
      until_idx.push_back(static_cast<int>(i));
      until_rhs.push_back(*g.closure.positive_index_of(pos[i].rhs()));
    }
  }
  std::vector<std::vector<int>> members(g.scc_count);
  for (int v = 0; v < n; ++v) members[g.scc_of_atom[v]].push_back(v);
  std::vector<bool> fulfilling(g.scc_count, false);
  for (int c = 0; c < g.scc_count; ++c) {
    bool cyclic = members[c].size() > 1;
    if (!cyclic) {
      int v = members[c][0];
      cyclic = std::find(g.succ[v].begin(), g.succ[v].end(), v) != g.succ[v].end();
    }
    if (!cyclic) continue;
    bool ok = true;
    for (size_t u = 0; u < until_idx.size() && ok; ++u) {
      bool needed = false;
      for (int v : members[c]) needed = needed || g.atoms[v].bits[until_idx[u]];
      if (!needed) continue;
      bool met = false;
      for (int v : members[c]) met = met || g.atoms[v].bits[until_rhs[u]];
      if (!met) ok = false;
    }
    fulfilling[c] = ok;
  }

  g.in_fulfilling_scc.assign(n, false);
  g.fulfilling_core.assign(n, false);
  for (int v = 0; v < n; ++v) {
    g.in_fulfilling_scc[v] = fulfilling[g.scc_of_atom[v]];
    g.fulfilling_core[v] = g.in_fulfilling_scc[v];
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      if (g.fulfilling_core[v]) continue;
      for (int w : g.succ[v]) {
        if (g.fulfilling_core[w]) {
          g.fulfilling_core[v] = true;
          grew = true;
          break;
        }
      }
    }
  }
  return g;
}

SatOutcome satisfiable(const Formula& chi, const ConstantSpec& cs,
                       const LogicProfile& profile) {
  require_base_profile(profile, chi);
  if (cs.kind == ConstantSpec::Kind::Total) {
    throw DecideError("the decision procedure requires an empty or explicit constant "
                      "specification");
  }

  SatOutcome out;
  out.graph = build_atom_graph(chi, cs, profile);
  AtomGraph& g = out.graph;
  int n = static_cast<int>(g.atoms.size());
  out.stats = {n, g.edge_count, g.scc_count};

  int chi_idx = *g.closure.positive_index_of(chi);

  // forward reachability from initial atoms
  std::vector<bool> reach(n, false);
  std::deque<int> queue;
  for (int a : g.initial_atoms) {
    reach[a] = true;
    queue.push_back(a);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.succ[v]) {
      if (!reach[w]) {
        reach[w] = true;
        queue.push_back(w);
      }
    }
  }

  int target = -1;
  for (int v = 0; v < n && target < 0; ++v) {
    if (reach[v] && g.fulfilling_core[v] && g.atoms[v].bits[chi_idx]) target = v;
  }
  if (target < 0) {
    out.sat = false;
    return out;
  }
  out.sat = true;

  // prefix: initial -> target -> some self-fulfilling component
  std::vector<bool> is_target(n, false);
  is_target[target] = true;
  std::vector<int> path1;
  for (int a : g.initial_atoms) {
    std::vector<int> p = bfs_path(g.succ, a, is_target, nullptr);
    if (!p.empty() && (path1.empty() || p.size() < path1.size())) path1 = p;
  }

  // loop inside the nearest self-fulfilling component
  std::vector<int> path2 = bfs_path(g.succ, target, g.in_fulfilling_scc, nullptr);
  int entry = path2.back();
  std::vector<bool> inside(n, false);
  for (int v = 0; v < n; ++v) inside[v] = g.scc_of_atom[v] == g.scc_of_atom[entry];

  // loop: visit a fulfilling atom for every until obligation present in the
  // component, round-robin, then close the cycle
  const auto& pos = g.closure.positive();
  std::vector<int> loop{entry};
  int cursor = entry;
  for (size_t i = 0; i < pos.size(); ++i) {
    if (pos[i].kind() != FormulaKind::Until) continue;
    bool present = false;
    for (int v = 0; v < n; ++v) {
      if (inside[v] && g.atoms[v].bits[i]) present = true;
    }
    if (!present) continue;
    int rhs = *g.closure.positive_index_of(pos[i].rhs());
    std::vector<bool> fulfills(n, false);
    bool already = g.atoms[cursor].bits[rhs];
    for (int v = 0; v < n; ++v) fulfills[v] = inside[v] && g.atoms[v].bits[rhs];
    if (already) continue;
    std::vector<int> hop = bfs_path(g.succ, cursor, fulfills, &inside);
    loop.insert(loop.end(), hop.begin() + 1, hop.end());
    cursor = loop.back();
  }
  if (cursor != entry) {
    std::vector<bool> home(n, false);
    home[entry] = true;
    std::vector<int> back = bfs_path(g.succ, cursor, home, &inside);
    loop.insert(loop.end(), back.begin() + 1, back.end() - 1);
  } else if (loop.size() == 1) {
    std::vector<int> cyc = bfs_cycle(g.succ, entry, inside);
    loop = cyc;
  } else {
    loop.pop_back();  // walk returned to entry; drop the duplicate
  }

  Witness w;
  std::vector<int> full = path1;
  full.insert(full.end(), path2.begin() + 1, path2.end());
  w.sat_position = static_cast<int>(path1.size()) - 1;
  w.atom_prefix.assign(full.begin(), full.end() - 1);
  w.atom_loop = loop;
  // full ends at `entry`, which is also loop[0]
  verify_witness(g, w);
  out.witness = w;
  return out;
}

ValidOutcome valid(const Formula& f, const ConstantSpec& cs, const LogicProfile& profile) {
  SatOutcome neg = satisfiable(f_not(f), cs, profile);
  ValidOutcome out;
  out.stats = neg.stats;
  out.valid = !neg.sat;
  if (neg.sat) {
    out.counter_model = witness_to_model(neg.graph, *neg.witness, cs, profile);
    out.counter_position = neg.witness->sat_position;
  }
  return out;
}

MkModel witness_to_model(const AtomGraph& graph, const Witness& w, const ConstantSpec& cs,
                         const LogicProfile& profile) {
  MkModel m;
  m.profile = profile;
  m.profile.name = profile.name.empty() ? "lpltl-p" : profile.name;

  std::map<int, std::string> state_of;
  auto state_name = [&](int atom) {
    auto it = state_of.find(atom);
    if (it != state_of.end()) return it->second;
    std::string name = "a" + std::to_string(state_of.size());
    state_of.emplace(atom, name);
    m.states.push_back(name);
    return name;
  };

  for (int a : w.atom_prefix) m.run.prefix.push_back(state_name(a));
  for (int a : w.atom_loop) m.run.loop.push_back(state_name(a));

  const auto& pos = graph.closure.positive();
  for (const auto& [atom, name] : state_of) {
    std::set<std::string> props;
    for (size_t i = 0; i < pos.size(); ++i) {
      if (!graph.atoms[atom].bits[i]) continue;
      if (pos[i].kind() == FormulaKind::Prop) props.insert(pos[i].name());
      if (pos[i].kind() == FormulaKind::Just) {
        m.evidence.push_back(EvidenceEntry{name, pos[i].agent(), pos[i].term(), pos[i].lhs()});
      }
    }
    m.valuation[name] = std::move(props);
  }

  // keep only constant-specification entries whose payload the closure knows
  if (cs.kind == ConstantSpec::Kind::Explicit) {
    std::vector<Formula> kept;
    for (const Formula& e : cs.entries) {
      if (graph.closure.positive_index_of(e.lhs())) kept.push_back(e);
    }
    m.cs = ConstantSpec::explicit_list(std::move(kept));
  }

  m.universe = pos;

  int h = std::max(1, m.profile.agent_count);
  std::function<void(const Formula&)> scan = [&](const Formula& f) {
    if (f.kind() == FormulaKind::Just) h = std::max(h, f.agent());
    switch (f.kind()) {
      case FormulaKind::Prop:
      case FormulaKind::Bot:
        return;
      case FormulaKind::Next:
      case FormulaKind::WPrev:
      case FormulaKind::Just:
        scan(f.lhs());
        return;
      default:
        scan(f.lhs());
        scan(f.rhs());
    }
  };
  for (const Formula& f : pos) scan(f);
  m.profile.agent_count = h;

  Verdict v = validate_model(m);
  if (!v.ok) throw std::logic_error("witness model failed validation: " + v.errors.front());
  return m;
}

}  // namespace tjl
