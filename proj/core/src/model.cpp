#include "tjl/model.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace tjl {

namespace {

std::unordered_map<std::string, int> state_index(const std::vector<std::string>& states) {
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < states.size(); ++i) idx.emplace(states[i], static_cast<int>(i));
  return idx;
}

int max_agent(const std::vector<EvidenceEntry>& evidence) {
  int h = 1;
  for (const auto& e : evidence) h = std::max(h, e.agent);
  return h;
}

void validate_common(const LogicProfile& profile, const std::vector<std::string>& states,
                     const std::map<std::string, std::set<std::string>>& valuation,
                     const std::vector<EvidenceEntry>& evidence, const ConstantSpec& cs,
                     const std::vector<Formula>& universe, Verdict& v) {
  auto idx = state_index(states);
  if (states.empty()) v.errors.push_back("model declares no states");
  if (idx.size() != states.size()) v.errors.push_back("duplicate state id");

  for (const auto& [s, props] : valuation) {
    (void)props;
    if (!idx.count(s)) v.errors.push_back("valuation references unknown state '" + s + "'");
  }

  if (cs.kind == ConstantSpec::Kind::Total) {
    v.errors.push_back("model constant specification must be empty or explicit");
  }
  for (const std::string& e : validate_constant_spec(cs, profile)) v.errors.push_back(e);

  std::set<Formula> uni(universe.begin(), universe.end());
  for (const auto& e : evidence) {
    if (!idx.count(e.state)) {
      v.errors.push_back("evidence entry references unknown state '" + e.state + "'");
    }
    if (e.agent < 1 || (profile.agent_count > 0 && e.agent > profile.agent_count)) {
      v.errors.push_back("evidence entry has out-of-range agent " + std::to_string(e.agent));
    }
    if (auto why = profile_rejects(profile, e.formula)) {
      v.errors.push_back("evidence formula not in profile: " + *why);
    } else if (auto why_t = profile_rejects(profile, e.term)) {
      v.errors.push_back("evidence term not in profile: " + *why_t);
    }
    if (!uni.count(e.formula)) {
      v.errors.push_back("universe is missing evidence formula " + print_formula(e.formula));
    }
  }
  if (cs.kind == ConstantSpec::Kind::Explicit) {
    for (const Formula& e : cs.entries) {
      if (e.kind() == FormulaKind::Just && !uni.count(e.lhs())) {
        v.errors.push_back("universe is missing constant-specification body " +
                           print_formula(e.lhs()));
      }
    }
  }
  for (const Formula& f : universe) {
    if (auto why = profile_rejects(profile, f)) {
      v.errors.push_back("universe formula not in profile: " + *why);
    }
  }
}

void validate_run(const Run& r, const std::unordered_map<std::string, int>& idx, Verdict& v) {
  if (r.loop.empty()) v.errors.push_back("run loop must be non-empty");
  for (const std::string& s : r.prefix) {
    if (!idx.count(s)) v.errors.push_back("run references unknown state '" + s + "'");
  }
  for (const std::string& s : r.loop) {
    if (!idx.count(s)) v.errors.push_back("run references unknown state '" + s + "'");
  }
}

// positions of state s along a resolved run, as a stream
Upb state_positions(const std::vector<int>& run, size_t prefix_len, int state) {
  std::vector<bool> prefix(prefix_len), loop(run.size() - prefix_len);
  for (size_t i = 0; i < prefix_len; ++i) prefix[i] = run[i] == state;
  for (size_t i = prefix_len; i < run.size(); ++i) loop[i - prefix_len] = run[i] == state;
  return Upb(std::move(prefix), std::move(loop)).normalized();
}

// out(n+1) = in(n), out(0) = false
Upb shift_forward(const Upb& s) { return sprev(s); }
// out(n) = in(n+1)
Upb shift_backward(const Upb& s) { return next(s); }

}  // namespace

Verdict validate_model(const MkModel& m) {
  Verdict v;
  validate_common(m.profile, m.states, m.valuation, m.evidence, m.cs, m.universe, v);
  validate_run(m.run, state_index(m.states), v);
  v.ok = v.errors.empty();
  return v;
}

Verdict validate_model(const InterpretedSystem& m) {
  Verdict v;
  validate_common(m.profile, m.states, m.valuation, m.evidence, m.cs, m.universe, v);
  auto idx = state_index(m.states);
  if (m.runs.empty()) v.errors.push_back("interpreted system must declare at least one run");
  for (const Run& r : m.runs) validate_run(r, idx, v);

  int n = static_cast<int>(m.states.size());
  for (const auto& [agent, pairs] : m.access) {
    if (agent < 1 || (m.profile.agent_count > 0 && agent > m.profile.agent_count)) {
      v.errors.push_back("accessibility declared for out-of-range agent " +
                         std::to_string(agent));
      continue;
    }
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    bool names_ok = true;
    for (const auto& [a, b] : pairs) {
      if (!idx.count(a) || !idx.count(b)) {
        v.errors.push_back("accessibility references unknown state");
        names_ok = false;
        continue;
      }
      rel[idx.at(a)][idx.at(b)] = true;
    }
    if (!names_ok) continue;
    for (int i = 0; i < n; ++i) {
      if (!rel[i][i]) {
        v.errors.push_back("accessibility for agent " + std::to_string(agent) +
                           " is not reflexive at state '" + m.states[i] + "'");
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!rel[i][j]) continue;
        for (int k = 0; k < n; ++k) {
          if (rel[j][k] && !rel[i][k]) {
            v.errors.push_back("accessibility for agent " + std::to_string(agent) +
                               " is not transitive (" + m.states[i] + "," + m.states[j] + "," +
                               m.states[k] + ")");
          }
        }
      }
    }
  }
  v.ok = v.errors.empty();
  return v;
}

// ---------------------------------------------------------------- engine

struct EngineBuilder {
  EvidenceEngine e;
  LogicProfile profile;
  const std::map<AgentId, std::vector<std::pair<std::string, std::string>>>* access = nullptr;
  std::vector<std::string> states;
  std::vector<EvidenceEntry> entries;
  ConstantSpec cs;
  int agents = 1;
  bool changed = false;

  // for each universe index f: list of (index of some psi->f, index of psi)
  std::vector<std::vector<std::pair<int, int>>> imps_to;

  int uidx(const Formula& f) const {
    auto it = e.universe_index_.find(f);
    return it == e.universe_index_.end() ? -1 : it->second;
  }
  int tidx(const Term& t) const { return e.pool_index_.at(t); }

  const Upb& fact(AgentId a, int t, int f, int run) const {
    static const Upb k_false = Upb::constant(false);
    auto it = e.facts_.find({a, t, f});
    if (it == e.facts_.end()) return k_false;
    return it->second[run];
  }

  bool fact_present(AgentId a, int t, int f) const { return e.facts_.count({a, t, f}) != 0; }

  void add(AgentId a, int t, int f, int run, const Upb& s) {
    if (s.is_constant(false)) return;
    auto [it, inserted] = e.facts_.try_emplace(
        EvidenceEngine::Key{a, t, f}, std::vector<Upb>(e.runs_.size(), Upb::constant(false)));
    (void)inserted;
    Upb merged = disj(it->second[run], s);
    if (!(merged == it->second[run])) {
      it->second[run] = std::move(merged);
      changed = true;
    }
  }

  void overflow() { ++e.overflow_warnings_; }

  void seed() {
    auto sidx = state_index(states);
    for (const auto& entry : entries) {
      int f = uidx(entry.formula);
      if (f < 0) continue;  // validation reports this before we get here
      int t = tidx(entry.term);
      int s = sidx.at(entry.state);
      for (size_t r = 0; r < e.runs_.size(); ++r) {
        add(entry.agent, t, f, static_cast<int>(r),
            state_positions(e.runs_[r], e.run_prefix_len_[r], s));
      }
    }
    if (cs.kind == ConstantSpec::Kind::Explicit) {
      for (const Formula& entry : cs.entries) {
        // outer tower level only; downward closure supplies the rest
        int f = uidx(entry.lhs());
        if (f < 0) {
          overflow();
          continue;
        }
        int t = tidx(entry.term());
        for (size_t r = 0; r < e.runs_.size(); ++r) {
          add(entry.agent(), t, f, static_cast<int>(r), Upb::constant(true));
        }
      }
    }
  }

  void build_imp_index() {
    imps_to.assign(e.universe_.size(), {});
    for (size_t i = 0; i < e.universe_.size(); ++i) {
      const Formula& f = e.universe_[i];
      if (f.kind() != FormulaKind::Imp) continue;
      int lhs = uidx(f.lhs());
      int rhs = uidx(f.rhs());
      if (lhs >= 0 && rhs >= 0) imps_to[rhs].emplace_back(static_cast<int>(i), lhs);
    }
  }

  template <typename StreamFn>
  void unary_rule(AgentId a, int ti, int operand, int hyp_f, int concl_f, int run,
                  StreamFn fn) {
    if (!fact_present(a, operand, hyp_f)) return;
    const Upb& h = fact(a, operand, hyp_f, run);
    if (h.is_constant(false)) return;
    if (concl_f < 0) {
      overflow();
      return;
    }
    add(a, ti, concl_f, run, fn(h));
  }

  void apply_rules(AgentId a, int ti, const Term& t, int r) {
    bool fp = profile.just_core == JustCore::FP;
    switch (t.kind()) {
      case TermKind::Const:
      case TermKind::Var:
        return;
      case TermKind::App:
      case TermKind::AppIdx: {
        int left = tidx(t.left());
        int right = tidx(t.right());
        for (size_t fi = 0; fi < e.universe_.size(); ++fi) {
          for (auto [imp_idx, lhs_idx] : imps_to[fi]) {
            if (t.kind() == TermKind::AppIdx && !(e.universe_[lhs_idx] == t.index())) continue;
            if (!fact_present(a, left, imp_idx) || !fact_present(a, right, lhs_idx)) continue;
            Upb both = conj(fact(a, left, imp_idx, r), fact(a, right, lhs_idx, r));
            if (both.is_constant(false)) continue;
            if (!fp) {
              add(a, ti, static_cast<int>(fi), r, both);
            } else if (int concl = uidx(f_sprev(e.universe_[fi])); concl >= 0) {
              add(a, ti, concl, r, shift_forward(both));
            } else {
              overflow();
            }
          }
        }
        return;
      }
      case TermKind::Sum: {
        int left = tidx(t.left());
        int right = tidx(t.right());
        for (size_t fi = 0; fi < e.universe_.size(); ++fi) {
          int f = static_cast<int>(fi);
          if (!fact_present(a, left, f) && !fact_present(a, right, f)) continue;
          Upb either = disj(fact(a, left, f, r), fact(a, right, f, r));
          if (either.is_constant(false)) continue;
          if (!fp) {
            add(a, ti, f, r, either);
          } else if (int concl = uidx(f_sprev(e.universe_[fi])); concl >= 0) {
            add(a, ti, concl, r, shift_forward(either));
          } else {
            overflow();
          }
        }
        return;
      }
      case TermKind::Bang: {
        int arg = tidx(t.left());
        for (size_t fi = 0; fi < e.universe_.size(); ++fi) {
          if (!fact_present(a, arg, static_cast<int>(fi))) continue;
          const Upb& h = fact(a, arg, static_cast<int>(fi), r);
          if (h.is_constant(false)) continue;
          Formula inner = Formula::just(a, t.left(), e.universe_[fi]);
          if (!fp) {
            if (int concl = uidx(inner); concl >= 0) {
              add(a, ti, concl, r, h);
            } else {
              overflow();
            }
          } else if (int concl = uidx(f_sprev(inner)); concl >= 0) {
            add(a, ti, concl, r, shift_forward(h));
          } else {
            overflow();
          }
        }
        return;
      }
      case TermKind::Unary: {
        int operand = tidx(t.left());
        for (size_t fi = 0; fi < e.universe_.size(); ++fi) {
          const Formula& f = e.universe_[fi];
          int hyp = static_cast<int>(fi);
          switch (t.op()) {
            case TermOp::Up:
              unary_rule(a, ti, operand, hyp, uidx(f_box(f)), r,
                         [](const Upb& h) { return box(h); });
              break;
            case TermOp::Down:
              if (auto inner = as_box(f)) {
                unary_rule(a, ti, operand, hyp, uidx(*inner), r,
                           [](const Upb& h) { return diamondminus(h); });
              }
              break;
            case TermOp::DownSmall:
              if (auto inner = as_box(f)) {
                unary_rule(a, ti, operand, hyp, uidx(Formula::next(*inner)), r,
                           [](const Upb& h) { return h; });
              }
              break;
            case TermOp::RRight:
              if (f.kind() == FormulaKind::Next) {
                unary_rule(a, ti, operand, hyp, uidx(f.lhs()), r, shift_forward);
              }
              break;
            case TermOp::LLeft:
              unary_rule(a, ti, operand, hyp, uidx(Formula::next(f)), r, shift_backward);
              break;
            case TermOp::UpP:
              unary_rule(a, ti, operand, hyp, uidx(f_hist(f)), r,
                         [](const Upb& h) { return boxminus(h); });
              break;
            case TermOp::DownP:
              if (auto inner = as_hist(f)) {
                unary_rule(a, ti, operand, hyp, uidx(*inner), r,
                           [](const Upb& h) { return diamond(h); });
              }
              break;
            case TermOp::DownSmallP:
              if (auto inner = as_hist(f)) {
                unary_rule(a, ti, operand, hyp, uidx(Formula::wprev(*inner)), r,
                           [](const Upb& h) { return h; });
              }
              break;
            case TermOp::RightP:
              if (f.kind() == FormulaKind::WPrev) {
                unary_rule(a, ti, operand, hyp, uidx(f.lhs()), r, shift_backward);
              }
              break;
            case TermOp::RRightP:
              if (auto inner = as_sprev(f)) {
                unary_rule(a, ti, operand, hyp, uidx(*inner), r, shift_backward);
              }
              break;
            case TermOp::LLeftP:
              unary_rule(a, ti, operand, hyp, uidx(f_sprev(f)), r, shift_forward);
              break;
            case TermOp::Bar:
              unary_rule(a, ti, operand, hyp, uidx(f_sprev(f)), r, shift_forward);
              break;
          }
        }
        return;
      }
      case TermKind::Pr:
      case TermKind::Nl: {
        int left = tidx(t.left());
        int right = tidx(t.right());
        // the left fact may be empty: a window of length zero needs only the
        // right-hand membership
        for (size_t gi = 0; gi < e.universe_.size(); ++gi) {
          if (!fact_present(a, right, static_cast<int>(gi))) continue;
          const Upb& gs = fact(a, right, static_cast<int>(gi), r);
          if (gs.is_constant(false)) continue;
          for (size_t fi = 0; fi < e.universe_.size(); ++fi) {
            Formula lhs_j = Formula::just(a, t.left(), e.universe_[fi]);
            Formula rhs_j = Formula::just(a, t.right(), e.universe_[gi]);
            Formula target = t.kind() == TermKind::Pr ? Formula::since(lhs_j, rhs_j)
                                                      : Formula::until(lhs_j, rhs_j);
            const Upb& ft = fact(a, left, static_cast<int>(fi), r);
            Upb window = t.kind() == TermKind::Pr ? since(ft, gs) : until(ft, gs);
            if (window.is_constant(false)) continue;
            if (int concl = uidx(target); concl >= 0) {
              add(a, ti, concl, r, window);
            } else {
              overflow();
            }
          }
        }
        return;
      }
    }
  }

  // Interpreted systems: evidence transfers along accessibility from states
  // where a fact holds at every occurrence (and from base-entry states).
  void monotonicity() {
    auto sidx = state_index(states);
    int n = static_cast<int>(states.size());

    std::map<EvidenceEngine::Key, std::set<int>> state_facts;
    for (const auto& entry : entries) {
      int f = uidx(entry.formula);
      if (f < 0) continue;
      state_facts[{entry.agent, tidx(entry.term), f}].insert(sidx.at(entry.state));
    }
    if (cs.kind == ConstantSpec::Kind::Explicit) {
      for (const Formula& entry : cs.entries) {
        int f = uidx(entry.lhs());
        if (f < 0) continue;
        auto& set = state_facts[{entry.agent(), tidx(entry.term()), f}];
        for (int s = 0; s < n; ++s) set.insert(s);
      }
    }
    for (const auto& [key, streams] : e.facts_) {
      for (int s = 0; s < n; ++s) {
        bool occurs = false;
        bool everywhere = true;
        for (size_t r = 0; r < e.runs_.size() && everywhere; ++r) {
          Upb pos = state_positions(e.runs_[r], e.run_prefix_len_[r], s);
          if (!pos.is_constant(false)) occurs = true;
          if (!pointwise_le(pos, streams[r])) everywhere = false;
        }
        if (occurs && everywhere) state_facts[key].insert(s);
      }
    }
    for (auto& [key, state_set] : state_facts) {
      auto it = access->find(key.agent);
      if (it == access->end()) continue;
      bool grew = true;
      while (grew) {
        grew = false;
        for (const auto& [from, to] : it->second) {
          int a = sidx.at(from), b = sidx.at(to);
          if (state_set.count(a) && !state_set.count(b)) {
            state_set.insert(b);
            grew = true;
          }
        }
      }
      for (int s : state_set) {
        for (size_t r = 0; r < e.runs_.size(); ++r) {
          add(key.agent, key.term, key.formula, static_cast<int>(r),
              state_positions(e.runs_[r], e.run_prefix_len_[r], s));
        }
      }
    }
  }

  void sweep() {
    for (int ti = 0; ti < static_cast<int>(e.pool_.size()); ++ti) {
      const Term& t = e.pool_[ti];
      for (AgentId a = 1; a <= agents; ++a) {
        for (int r = 0; r < static_cast<int>(e.runs_.size()); ++r) apply_rules(a, ti, t, r);
      }
    }
    if (access) monotonicity();
  }

  void run_fixpoint() {
    seed();
    build_imp_index();
    // conclusion terms are strictly deeper than their hypothesis terms, so
    // derivation chains are bounded by pool depth; the cap is generous
    int guard = static_cast<int>(e.pool_.size()) + static_cast<int>(states.size()) +
                static_cast<int>(e.universe_.size()) + 8;
    for (int round = 0; round < guard; ++round) {
      changed = false;
      sweep();
      if (!changed) return;
    }
    throw ModelError("evidence saturation did not converge");
  }

  void init(const std::vector<Formula>& universe, const std::vector<Run>& runs) {
    e.profile_ = profile;
    e.is_system_ = access != nullptr;
    e.state_count_ = static_cast<int>(states.size());
    if (access) {
      auto sidx = state_index(states);
      for (const auto& [agent, pairs] : *access) {
        std::vector<std::pair<int, int>> resolved;
        for (const auto& [a, b2] : pairs) resolved.emplace_back(sidx.at(a), sidx.at(b2));
        e.access_[agent] = std::move(resolved);
      }
    }
    std::set<Formula> uni(universe.begin(), universe.end());
    e.universe_.assign(uni.begin(), uni.end());
    for (size_t i = 0; i < e.universe_.size(); ++i) {
      e.universe_index_.emplace(e.universe_[i], static_cast<int>(i));
    }

    std::set<Term> pool;
    for (const auto& entry : entries) {
      for (const Term& t : subterm_list(entry.term)) pool.insert(t);
    }
    for (const Formula& f : e.universe_) {
      for (const Term& t : terms_of(f)) pool.insert(t);
    }
    if (cs.kind == ConstantSpec::Kind::Explicit) {
      for (const Formula& entry : cs.entries) {
        for (const Term& t : terms_of(entry)) pool.insert(t);
      }
    }
    e.pool_.assign(pool.begin(), pool.end());
    for (size_t i = 0; i < e.pool_.size(); ++i) {
      e.pool_index_.emplace(e.pool_[i], static_cast<int>(i));
    }

    auto sidx = state_index(states);
    for (const Run& r : runs) {
      std::vector<int> resolved;
      resolved.reserve(r.prefix.size() + r.loop.size());
      for (const std::string& s : r.prefix) resolved.push_back(sidx.at(s));
      for (const std::string& s : r.loop) resolved.push_back(sidx.at(s));
      e.runs_.push_back(std::move(resolved));
      e.run_prefix_len_.push_back(r.prefix.size());
    }
  }

  EvidenceEngine finish() { return std::move(e); }
};

namespace {

EvidenceEngine saturate_impl(
    const LogicProfile& profile, const std::vector<std::string>& states,
    const std::vector<Run>& runs,
    const std::map<AgentId, std::vector<std::pair<std::string, std::string>>>* access,
    const std::vector<EvidenceEntry>& entries, const ConstantSpec& cs,
    const std::vector<Formula>& universe, int agent_count) {
  EngineBuilder b;
  b.profile = profile;
  b.access = access;
  b.states = states;
  b.entries = entries;
  b.cs = cs;
  b.agents = agent_count;
  b.init(universe, runs);
  b.run_fixpoint();
  return b.finish();
}

int agent_count_of(const LogicProfile& profile, const std::vector<EvidenceEntry>& evidence,
                   const std::vector<Formula>& universe) {
  int h = profile.agent_count > 0 ? profile.agent_count : max_agent(evidence);
  std::function<void(const Formula&)> scan = [&](const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Prop:
      case FormulaKind::Bot:
        return;
      case FormulaKind::Just:
        h = std::max(h, f.agent());
        scan(f.lhs());
        return;
      case FormulaKind::Next:
      case FormulaKind::WPrev:
        scan(f.lhs());
        return;
      default:
        scan(f.lhs());
        scan(f.rhs());
    }
  };
  for (const Formula& f : universe) scan(f);
  return std::max(1, h);
}

std::vector<Formula> extended_universe(const std::vector<Formula>& universe,
                                       const std::vector<Formula>& query_context) {
  std::vector<Formula> uni = universe;
  for (const Formula& q : query_context) {
    for (const Formula& s : subformula_list(q)) uni.push_back(s);
  }
  return uni;
}

}  // namespace

EvidenceEngine saturate_evidence(const MkModel& m, const std::vector<Formula>& query_context) {
  Verdict v = validate_model(m);
  if (!v.ok) throw ModelError("invalid model: " + v.errors.front());
  std::vector<Formula> uni = extended_universe(m.universe, query_context);
  return saturate_impl(m.profile, m.states, {m.run}, nullptr, m.evidence, m.cs, uni,
                       agent_count_of(m.profile, m.evidence, uni));
}

EvidenceEngine saturate_evidence(const InterpretedSystem& m,
                                 const std::vector<Formula>& query_context) {
  Verdict v = validate_model(m);
  if (!v.ok) throw ModelError("invalid model: " + v.errors.front());
  std::vector<Formula> uni = extended_universe(m.universe, query_context);
  return saturate_impl(m.profile, m.states, m.runs, &m.access, m.evidence, m.cs, uni,
                       agent_count_of(m.profile, m.evidence, uni));
}

EvidenceEngine::Query EvidenceEngine::holds_at(int run, size_t position, AgentId agent,
                                               const Term& t, const Formula& f) const {
  Query q;
  if (!universe_index_.count(f)) {
    q.outside_universe = true;
    return q;
  }
  q.value = fact_stream(run, agent, t, f).at(position);
  return q;
}

Upb EvidenceEngine::state_positions_of(int run, int state) const {
  return state_positions(runs_[run], run_prefix_len_[run], state);
}

std::vector<Upb> EvidenceEngine::derived_streams(AgentId agent, const Term& t,
                                                 const Formula& f) const {
  int nr = static_cast<int>(runs_.size());
  std::vector<Upb> out(nr, Upb::constant(false));
  auto fit = universe_index_.find(f);
  if (fit == universe_index_.end()) return out;

  auto tit = pool_index_.find(t);
  if (tit != pool_index_.end()) {
    auto it = facts_.find({agent, tit->second, fit->second});
    if (it != facts_.end()) out = it->second;
    return out;
  }

  // the term occurs nowhere in the model or query: derive from the single
  // rule family whose conclusions carry this term shape
  auto rec = [&](const Term& sub, const Formula& g) {
    return derived_streams(agent, sub, g);
  };
  auto map_runs = [&](std::vector<Upb> in, auto fn) {
    for (Upb& s : in) s = fn(s);
    return in;
  };
  auto conj_runs = [&](std::vector<Upb> a, const std::vector<Upb>& b) {
    for (int r = 0; r < nr; ++r) a[r] = conj(a[r], b[r]);
    return a;
  };
  auto disj_runs = [&](std::vector<Upb> a, const std::vector<Upb>& b) {
    for (int r = 0; r < nr; ++r) a[r] = disj(a[r], b[r]);
    return a;
  };

  bool fp = profile_.just_core == JustCore::FP;
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Var:
      return out;  // base entries and cs constants are always pooled
    case TermKind::Sum: {
      if (!fp) {
        out = disj_runs(rec(t.left(), f), rec(t.right(), f));
      } else if (auto g = as_sprev(f)) {
        out = map_runs(disj_runs(rec(t.left(), *g), rec(t.right(), *g)), shift_forward);
      }
      break;
    }
    case TermKind::App:
    case TermKind::AppIdx: {
      if ((t.kind() == TermKind::App && profile_.indexed()) ||
          (t.kind() == TermKind::AppIdx && !profile_.indexed())) {
        break;
      }
      Formula target = f;
      bool shifted = false;
      if (fp) {
        auto g = as_sprev(f);
        if (!g) break;
        target = *g;
        shifted = true;
      }
      for (const Formula& psi : universe_) {
        if (t.kind() == TermKind::AppIdx && !(psi == t.index())) continue;
        Formula impf = Formula::imp(psi, target);
        if (!universe_index_.count(impf)) continue;
        out = disj_runs(std::move(out), conj_runs(rec(t.left(), impf), rec(t.right(), psi)));
      }
      if (shifted) out = map_runs(std::move(out), shift_forward);
      break;
    }
    case TermKind::Bang: {
      if (!fp) {
        if (f.kind() == FormulaKind::Just && f.agent() == agent && f.term() == t.left()) {
          out = rec(t.left(), f.lhs());
        }
      } else if (auto g = as_sprev(f)) {
        if (g->kind() == FormulaKind::Just && g->agent() == agent && g->term() == t.left()) {
          out = map_runs(rec(t.left(), g->lhs()), shift_forward);
        }
      }
      break;
    }
    case TermKind::Unary: {
      if (!profile_allows_op(profile_, t.op())) break;
      const Term a = t.left();
      switch (t.op()) {
        case TermOp::Up:
          if (auto g = as_box(f)) out = map_runs(rec(a, *g), [](const Upb& s) { return box(s); });
          break;
        case TermOp::Down:
          out = map_runs(rec(a, f_box(f)), [](const Upb& s) { return diamondminus(s); });
          break;
        case TermOp::DownSmall:
          if (f.kind() == FormulaKind::Next) out = rec(a, f_box(f.lhs()));
          break;
        case TermOp::RRight:
          out = map_runs(rec(a, Formula::next(f)), shift_forward);
          break;
        case TermOp::LLeft:
          if (f.kind() == FormulaKind::Next) out = map_runs(rec(a, f.lhs()), shift_backward);
          break;
        case TermOp::UpP:
          if (auto g = as_hist(f)) {
            out = map_runs(rec(a, *g), [](const Upb& s) { return boxminus(s); });
          }
          break;
        case TermOp::DownP:
          out = map_runs(rec(a, f_hist(f)), [](const Upb& s) { return diamond(s); });
          break;
        case TermOp::DownSmallP:
          if (f.kind() == FormulaKind::WPrev) out = rec(a, f_hist(f.lhs()));
          break;
        case TermOp::RightP:
          out = map_runs(rec(a, Formula::wprev(f)), shift_backward);
          break;
        case TermOp::RRightP:
          out = map_runs(rec(a, f_sprev(f)), shift_backward);
          break;
        case TermOp::LLeftP:
          if (auto g = as_sprev(f)) out = map_runs(rec(a, *g), shift_forward);
          break;
        case TermOp::Bar:
          if (auto g = as_sprev(f)) out = map_runs(rec(a, *g), shift_forward);
          break;
      }
      break;
    }
    case TermKind::Pr:
    case TermKind::Nl: {
      bool is_pr = t.kind() == TermKind::Pr;
      if (!profile_.has(is_pr ? ExtraAxiom::Jpr : ExtraAxiom::Jnl)) break;
      if ((is_pr && f.kind() != FormulaKind::Since) ||
          (!is_pr && f.kind() != FormulaKind::Until)) {
        break;
      }
      Formula l = f.lhs(), r = f.rhs();
      if (l.kind() != FormulaKind::Just || r.kind() != FormulaKind::Just) break;
      if (l.agent() != agent || r.agent() != agent) break;
      if (!(l.term() == t.left()) || !(r.term() == t.right())) break;
      std::vector<Upb> lt = rec(t.left(), l.lhs());
      std::vector<Upb> rt = rec(t.right(), r.lhs());
      for (int ri = 0; ri < nr; ++ri) {
        out[ri] = is_pr ? since(lt[ri], rt[ri]) : until(lt[ri], rt[ri]);
      }
      break;
    }
  }

  // interpreted systems: transfer along accessibility from states where the
  // fact holds at every occurrence
  if (is_system_) {
    auto ait = access_.find(agent);
    if (ait != access_.end()) {
      for (int round = 0; round < state_count_; ++round) {
        std::vector<bool> uniform(state_count_, false);
        for (int s = 0; s < state_count_; ++s) {
          bool occurs = false, everywhere = true;
          for (int r = 0; r < nr && everywhere; ++r) {
            Upb posn = state_positions_of(r, s);
            if (!posn.is_constant(false)) occurs = true;
            if (!pointwise_le(posn, out[r])) everywhere = false;
          }
          uniform[s] = occurs && everywhere;
        }
        bool changed = false;
        for (const auto& [from, to] : ait->second) {
          if (!uniform[from]) continue;
          for (int r = 0; r < nr; ++r) {
            Upb posn = state_positions_of(r, to);
            Upb merged = disj(out[r], posn);
            if (!(merged == out[r])) {
              out[r] = std::move(merged);
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
    }
  }
  return out;
}

Upb EvidenceEngine::fact_stream(int run, AgentId agent, const Term& t, const Formula& f) const {
  auto fit = universe_index_.find(f);
  if (fit == universe_index_.end()) return Upb::constant(false);
  auto tit = pool_index_.find(t);
  if (tit != pool_index_.end()) {
    auto it = facts_.find({agent, tit->second, fit->second});
    if (it == facts_.end()) return Upb::constant(false);
    return it->second[run];
  }
  return derived_streams(agent, t, f)[run];
}

bool EvidenceEngine::in_universe(const Formula& f) const {
  return universe_index_.count(f) != 0;
}

// ---------------------------------------------------------------- eval

namespace {

struct RunStreams {
  std::vector<std::vector<int>> runs;  // state indices, prefix then loop
  std::vector<size_t> prefix_len;

  Upb bool_stream(int run, const std::vector<bool>& by_state) const {
    const auto& seq = runs[run];
    size_t p = prefix_len[run];
    std::vector<bool> prefix(p), loop(seq.size() - p);
    for (size_t i = 0; i < p; ++i) prefix[i] = by_state[seq[i]];
    for (size_t i = p; i < seq.size(); ++i) loop[i - p] = by_state[seq[i]];
    return Upb(std::move(prefix), std::move(loop)).normalized();
  }

  Upb state_stream(int run, int state) const {
    return state_positions(runs[run], prefix_len[run], state);
  }
};

RunStreams resolve_runs(const std::vector<Run>& rs, const std::vector<std::string>& states) {
  auto sidx = state_index(states);
  RunStreams out;
  for (const Run& r : rs) {
    std::vector<int> seq;
    for (const std::string& s : r.prefix) seq.push_back(sidx.at(s));
    for (const std::string& s : r.loop) seq.push_back(sidx.at(s));
    out.runs.push_back(std::move(seq));
    out.prefix_len.push_back(r.prefix.size());
  }
  return out;
}

struct Evaluator {
  const std::vector<std::string>& states;
  const std::map<std::string, std::set<std::string>>& valuation;
  const std::map<AgentId, std::vector<std::pair<std::string, std::string>>>* access;
  const EvidenceEngine& engine;
  RunStreams rs;
  std::unordered_map<Formula, std::vector<Upb>, FormulaHash> memo;

  std::vector<Upb> stream(const Formula& f) {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    int n = static_cast<int>(rs.runs.size());
    std::vector<Upb> out(n, Upb::constant(false));
    switch (f.kind()) {
      case FormulaKind::Prop: {
        std::vector<bool> by_state(states.size(), false);
        for (size_t s = 0; s < states.size(); ++s) {
          auto vit = valuation.find(states[s]);
          by_state[s] = vit != valuation.end() && vit->second.count(f.name()) != 0;
        }
        for (int r = 0; r < n; ++r) out[r] = rs.bool_stream(r, by_state);
        break;
      }
      case FormulaKind::Bot:
        break;
      case FormulaKind::Imp: {
        auto a = stream(f.lhs());
        auto b = stream(f.rhs());
        for (int r = 0; r < n; ++r) out[r] = implies(a[r], b[r]);
        break;
      }
      case FormulaKind::Next: {
        auto a = stream(f.lhs());
        for (int r = 0; r < n; ++r) out[r] = next(a[r]);
        break;
      }
      case FormulaKind::WPrev: {
        auto a = stream(f.lhs());
        for (int r = 0; r < n; ++r) out[r] = wprev(a[r]);
        break;
      }
      case FormulaKind::Until: {
        auto a = stream(f.lhs());
        auto b = stream(f.rhs());
        for (int r = 0; r < n; ++r) out[r] = until(a[r], b[r]);
        break;
      }
      case FormulaKind::Since: {
        auto a = stream(f.lhs());
        auto b = stream(f.rhs());
        for (int r = 0; r < n; ++r) out[r] = since(a[r], b[r]);
        break;
      }
      case FormulaKind::Just: {
        auto body = stream(f.lhs());
        std::vector<Upb> ev(n);
        for (int r = 0; r < n; ++r) ev[r] = engine.fact_stream(r, f.agent(), f.term(), f.lhs());
        if (!access) {
          for (int r = 0; r < n; ++r) out[r] = conj(ev[r], body[r]);
        } else {
          // body must hold at every accessible point of every run
          int ns = static_cast<int>(states.size());
          auto sidx = state_index(states);
          std::vector<bool> ok(ns, true);
          auto ait = access->find(f.agent());
          for (int v = 0; v < ns; ++v) {
            std::set<int> reach{v};
            if (ait != access->end()) {
              for (const auto& [from, to] : ait->second) {
                if (sidx.at(from) == v) reach.insert(sidx.at(to));
              }
            }
            for (int w : reach) {
              for (int r = 0; r < n && ok[v]; ++r) {
                if (!pointwise_le(rs.state_stream(r, w), body[r])) ok[v] = false;
              }
            }
          }
          for (int r = 0; r < n; ++r) {
            out[r] = conj(ev[r], rs.bool_stream(r, ok));
          }
        }
        break;
      }
    }
    return memo.emplace(f, std::move(out)).first->second;
  }
};

}  // namespace

Upb eval(const MkModel& m, const Formula& f) {
  if (auto why = profile_rejects(m.profile, f)) {
    throw ModelError("formula not in model profile: " + *why);
  }
  EvidenceEngine engine = saturate_evidence(m, {f});
  Evaluator ev{m.states, m.valuation, nullptr, engine, resolve_runs({m.run}, m.states), {}};
  return ev.stream(f)[0];
}

std::vector<Upb> eval_is(const InterpretedSystem& m, const Formula& f) {
  if (auto why = profile_rejects(m.profile, f)) {
    throw ModelError("formula not in model profile: " + *why);
  }
  EvidenceEngine engine = saturate_evidence(m, {f});
  Evaluator ev{m.states, m.valuation, &m.access, engine, resolve_runs(m.runs, m.states), {}};
  return ev.stream(f);
}

MkModel to_mkrtychev(const InterpretedSystem& m) {
  if (m.runs.size() != 1) {
    throw ModelError("to_mkrtychev requires exactly one run, got " +
                     std::to_string(m.runs.size()));
  }
  for (const auto& [agent, pairs] : m.access) {
    for (const auto& [a, b] : pairs) {
      if (a != b) {
        throw ModelError("to_mkrtychev requires identity accessibility, agent " +
                         std::to_string(agent) + " relates '" + a + "' to '" + b + "'");
      }
    }
  }
  MkModel out;
  out.profile = m.profile;
  out.states = m.states;
  out.run = m.runs[0];
  out.valuation = m.valuation;
  out.evidence = m.evidence;
  out.cs = m.cs;
  out.universe = m.universe;
  return out;
}

// ---------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

LogicProfile profile_from_json(const json& j) {
  LogicProfile p = named_profile(j.value("profile", std::string("lpltl-p")));
  if (j.contains("axioms")) {
    for (const auto& a : j["axioms"]) p = extend_profile(p, a.get<std::string>());
  }
  p.agent_count = j.value("agents", 0);
  return p;
}

Run run_from_json(const json& j) {
  Run r;
  for (const auto& s : j.at("prefix")) r.prefix.push_back(s.get<std::string>());
  for (const auto& s : j.at("loop")) r.loop.push_back(s.get<std::string>());
  return r;
}

json run_to_json(const Run& r) { return json{{"prefix", r.prefix}, {"loop", r.loop}}; }

void common_from_json(const json& j, const LogicProfile& p, std::vector<std::string>& states,
                      std::map<std::string, std::set<std::string>>& valuation,
                      std::vector<EvidenceEntry>& evidence, ConstantSpec& cs,
                      std::vector<Formula>& universe) {
  for (const auto& s : j.at("states")) states.push_back(s.get<std::string>());
  if (j.contains("valuation")) {
    for (auto it = j["valuation"].begin(); it != j["valuation"].end(); ++it) {
      std::set<std::string> props;
      for (const auto& pr : it.value()) props.insert(pr.get<std::string>());
      valuation[it.key()] = std::move(props);
    }
  }
  for (const auto& ej : j.value("evidence", json::array())) {
    evidence.push_back(EvidenceEntry{ej.at("state").get<std::string>(),
                                     ej.at("agent").get<int>(),
                                     parse_term(ej.at("term").get<std::string>()),
                                     parse_formula(ej.at("formula").get<std::string>(), p)});
  }
  if (j.contains("cs")) cs = cs_from_json_text(j["cs"].dump(), p);
  for (const auto& u : j.value("universe", json::array())) {
    universe.push_back(parse_formula(u.get<std::string>(), p));
  }
}

json common_to_json(const LogicProfile& p, const std::vector<std::string>& states,
                    const std::map<std::string, std::set<std::string>>& valuation,
                    const std::vector<EvidenceEntry>& evidence, const ConstantSpec& cs,
                    const std::vector<Formula>& universe) {
  json j;
  std::string base_name = p.name.empty() ? "lpltl-p" : p.name;
  j["profile"] = base_name;
  LogicProfile base = named_profile(base_name);
  json extras = json::array();
  for (ExtraAxiom a : p.extras) {
    if (!base.has(a)) extras.push_back(extra_axiom_name(a));
  }
  if (!extras.empty()) j["axioms"] = extras;
  if (p.agent_count > 0) j["agents"] = p.agent_count;
  j["states"] = states;
  json val = json::object();
  for (const auto& [s, props] : valuation) {
    val[s] = std::vector<std::string>(props.begin(), props.end());
  }
  j["valuation"] = val;
  json ev = json::array();
  for (const auto& e : evidence) {
    ev.push_back({{"state", e.state},
                  {"agent", e.agent},
                  {"term", print_term(e.term)},
                  {"formula", print_formula(e.formula)}});
  }
  j["evidence"] = ev;
  j["cs"] = json::parse(cs_to_json_text(cs));
  json uni = json::array();
  for (const Formula& f : universe) uni.push_back(print_formula(f));
  j["universe"] = uni;
  return j;
}

}  // namespace

LoadedModel model_from_json_text(const std::string& text) {
  json j = json::parse(text);
  LogicProfile p = profile_from_json(j);
  LoadedModel out;
  if (j.contains("runs")) {
    InterpretedSystem m;
    m.profile = p;
    common_from_json(j, p, m.states, m.valuation, m.evidence, m.cs, m.universe);
    for (const auto& rj : j.at("runs")) m.runs.push_back(run_from_json(rj));
    if (j.contains("access")) {
      for (auto it = j["access"].begin(); it != j["access"].end(); ++it) {
        AgentId agent = std::stoi(it.key());
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& pr : it.value()) {
          pairs.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
        }
        m.access[agent] = std::move(pairs);
      }
    }
    out.is = std::move(m);
  } else {
    MkModel m;
    m.profile = p;
    common_from_json(j, p, m.states, m.valuation, m.evidence, m.cs, m.universe);
    m.run = run_from_json(j.at("run"));
    out.mk = std::move(m);
  }
  return out;
}

std::string model_to_json_text(const MkModel& m) {
  json j = common_to_json(m.profile, m.states, m.valuation, m.evidence, m.cs, m.universe);
  j["run"] = run_to_json(m.run);
  return j.dump(2);
}

std::string model_to_json_text(const InterpretedSystem& m) {
  json j = common_to_json(m.profile, m.states, m.valuation, m.evidence, m.cs, m.universe);
  json runs = json::array();
  for (const Run& r : m.runs) runs.push_back(run_to_json(r));
  j["runs"] = runs;
  json acc = json::object();
  for (const auto& [agent, pairs] : m.access) {
    json lst = json::array();
    for (const auto& [a, b] : pairs) lst.push_back(json::array({a, b}));
    acc[std::to_string(agent)] = lst;
  }
  j["access"] = acc;
  return j.dump(2);
}

}  // namespace tjl
