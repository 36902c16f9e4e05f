#include "tjl/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>
#include <sstream>

#include "tjl/profile.hpp"

namespace tjl {

namespace detail {

struct TermNode {
  TermKind kind;
  std::string name;        // Const, Var
  TermNodePtr a, b;        // children
  FormulaNodePtr idx;      // AppIdx annotation
  TermOp op = TermOp::Up;  // Unary
  size_t hash = 0;
  int size = 1;
};

struct FormulaNode {
  FormulaKind kind;
  std::string name;  // Prop
  FormulaNodePtr a, b;
  AgentId agent = 0;
  TermNodePtr term;  // Just
  size_t hash = 0;
  int size = 1;
};

static size_t mix(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

static size_t str_hash(const std::string& s) { return std::hash<std::string>{}(s); }

}  // namespace detail

using detail::FormulaNode;
using detail::FormulaNodePtr;
using detail::mix;
using detail::TermNode;
using detail::TermNodePtr;

const char* term_op_name(TermOp op) {
  switch (op) {
    case TermOp::Up: return "gen";
    case TermOp::Down: return "acc";
    case TermOp::DownSmall: return "accx";
    case TermOp::RRight: return "shr";
    case TermOp::LLeft: return "shl";
    case TermOp::UpP: return "genp";
    case TermOp::DownP: return "accp";
    case TermOp::DownSmallP: return "accxp";
    case TermOp::RightP: return "rp";
    case TermOp::RRightP: return "shrp";
    case TermOp::LLeftP: return "shlp";
    case TermOp::Bar: return "bar";
  }
  return "?";
}

// ---------------------------------------------------------------- terms

Term Term::constant(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Const;
  n->name = std::move(name);
  n->hash = mix(1, detail::str_hash(n->name));
  return Term(n);
}

Term Term::variable(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Var;
  n->name = std::move(name);
  n->hash = mix(2, detail::str_hash(n->name));
  return Term(n);
}

Term Term::bang(Term t) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Bang;
  n->a = t.node_;
  n->hash = mix(3, t.hash());
  n->size = t.size() + 1;
  return Term(n);
}

Term Term::sum(Term t, Term s) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Sum;
  n->a = t.node_;
  n->b = s.node_;
  n->hash = mix(4, mix(t.hash(), s.hash()));
  n->size = t.size() + s.size() + 1;
  return Term(n);
}

Term Term::app(Term t, Term s) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::App;
  n->a = t.node_;
  n->b = s.node_;
  n->hash = mix(5, mix(t.hash(), s.hash()));
  n->size = t.size() + s.size() + 1;
  return Term(n);
}

Term Term::app_idx(Term t, Formula idx, Term s) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::AppIdx;
  n->a = t.node_;
  n->b = s.node_;
  n->idx = idx.node_;
  n->hash = mix(6, mix(t.hash(), mix(idx.hash(), s.hash())));
  n->size = t.size() + s.size() + idx.size() + 1;
  return Term(n);
}

Term Term::unary(TermOp op, Term t) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Unary;
  n->op = op;
  n->a = t.node_;
  n->hash = mix(7 + static_cast<size_t>(op), t.hash());
  n->size = t.size() + 1;
  return Term(n);
}

Term Term::pr(Term t, Term s) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Pr;
  n->a = t.node_;
  n->b = s.node_;
  n->hash = mix(30, mix(t.hash(), s.hash()));
  n->size = t.size() + s.size() + 1;
  return Term(n);
}

Term Term::nl(Term t, Term s) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Nl;
  n->a = t.node_;
  n->b = s.node_;
  n->hash = mix(31, mix(t.hash(), s.hash()));
  n->size = t.size() + s.size() + 1;
  return Term(n);
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
Term Term::left() const { return Term(node_->a); }
Term Term::right() const { return Term(node_->b); }
Formula Term::index() const { return Formula(node_->idx); }
TermOp Term::op() const { return node_->op; }
size_t Term::hash() const { return node_->hash; }
int Term::size() const { return node_->size; }

// ---------------------------------------------------------------- formulas

Formula Formula::prop(std::string name) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Prop;
  n->name = std::move(name);
  n->hash = mix(101, detail::str_hash(n->name));
  return Formula(n);
}

Formula Formula::bot() {
  static const Formula instance = [] {
    auto n = std::make_shared<FormulaNode>();
    n->kind = FormulaKind::Bot;
    n->hash = 102;
    return Formula(n);
  }();
  return instance;
}

Formula Formula::imp(Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Imp;
  n->a = a.node_;
  n->b = b.node_;
  n->hash = mix(103, mix(a.hash(), b.hash()));
  n->size = a.size() + b.size() + 1;
  return Formula(n);
}

Formula Formula::next(Formula a) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Next;
  n->a = a.node_;
  n->hash = mix(104, a.hash());
  n->size = a.size() + 1;
  return Formula(n);
}

Formula Formula::wprev(Formula a) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::WPrev;
  n->a = a.node_;
  n->hash = mix(105, a.hash());
  n->size = a.size() + 1;
  return Formula(n);
}

Formula Formula::until(Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Until;
  n->a = a.node_;
  n->b = b.node_;
  n->hash = mix(106, mix(a.hash(), b.hash()));
  n->size = a.size() + b.size() + 1;
  return Formula(n);
}

Formula Formula::since(Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Since;
  n->a = a.node_;
  n->b = b.node_;
  n->hash = mix(107, mix(a.hash(), b.hash()));
  n->size = a.size() + b.size() + 1;
  return Formula(n);
}

Formula Formula::just(AgentId agent, Term t, Formula a) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Just;
  n->agent = agent;
  n->term = t.node_;
  n->a = a.node_;
  n->hash = mix(108, mix(static_cast<size_t>(agent), mix(t.hash(), a.hash())));
  n->size = a.size() + t.size() + 1;
  return Formula(n);
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::lhs() const { return Formula(node_->a); }
Formula Formula::rhs() const { return Formula(node_->b); }
AgentId Formula::agent() const { return node_->agent; }
Term Formula::term() const { return Term(node_->term); }
size_t Formula::hash() const { return node_->hash; }
int Formula::size() const { return node_->size; }

// ---------------------------------------------------------------- compare

int compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case TermKind::Const:
    case TermKind::Var:
      return a.name().compare(b.name());
    case TermKind::Bang:
      return compare(a.left(), b.left());
    case TermKind::Unary:
      if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
      return compare(a.left(), b.left());
    case TermKind::AppIdx: {
      if (int c = compare(a.left(), b.left())) return c;
      if (int c = compare(a.index(), b.index())) return c;
      return compare(a.right(), b.right());
    }
    case TermKind::Sum:
    case TermKind::App:
    case TermKind::Pr:
    case TermKind::Nl: {
      if (int c = compare(a.left(), b.left())) return c;
      return compare(a.right(), b.right());
    }
  }
  return 0;
}

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case FormulaKind::Prop:
      return a.name().compare(b.name());
    case FormulaKind::Bot:
      return 0;
    case FormulaKind::Next:
    case FormulaKind::WPrev:
      return compare(a.lhs(), b.lhs());
    case FormulaKind::Imp:
    case FormulaKind::Until:
    case FormulaKind::Since: {
      if (int c = compare(a.lhs(), b.lhs())) return c;
      return compare(a.rhs(), b.rhs());
    }
    case FormulaKind::Just: {
      if (a.agent() != b.agent()) return a.agent() < b.agent() ? -1 : 1;
      if (int c = compare(a.term(), b.term())) return c;
      return compare(a.lhs(), b.lhs());
    }
  }
  return 0;
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash || node_->size != o.node_->size) return false;
  return compare(*this, o) == 0;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash || node_->size != o.node_->size) return false;
  return compare(*this, o) == 0;
}

// ---------------------------------------------------------------- sugar

Formula f_not(Formula a) { return Formula::imp(std::move(a), Formula::bot()); }
Formula f_top() { return Formula::imp(Formula::bot(), Formula::bot()); }
Formula f_or(Formula a, Formula b) { return Formula::imp(f_not(std::move(a)), std::move(b)); }
Formula f_and(Formula a, Formula b) {
  return f_not(f_or(f_not(std::move(a)), f_not(std::move(b))));
}
Formula f_iff(Formula a, Formula b) {
  return f_and(Formula::imp(a, b), Formula::imp(b, a));
}
Formula f_sprev(Formula a) { return f_not(Formula::wprev(f_not(std::move(a)))); }
Formula f_diamond(Formula a) { return Formula::until(f_top(), std::move(a)); }
Formula f_box(Formula a) { return f_not(f_diamond(f_not(std::move(a)))); }
Formula f_once(Formula a) { return Formula::since(f_top(), std::move(a)); }
Formula f_hist(Formula a) { return f_not(f_once(f_not(std::move(a)))); }

std::optional<Formula> as_not(const Formula& f) {
  if (f.kind() == FormulaKind::Imp && f.rhs().kind() == FormulaKind::Bot) return f.lhs();
  return std::nullopt;
}

bool is_top(const Formula& f) {
  return f.kind() == FormulaKind::Imp && f.lhs().kind() == FormulaKind::Bot &&
         f.rhs().kind() == FormulaKind::Bot;
}

std::optional<Formula> as_sprev(const Formula& f) {
  auto n = as_not(f);
  if (!n || n->kind() != FormulaKind::WPrev) return std::nullopt;
  auto inner = as_not(n->lhs());
  if (!inner) return std::nullopt;
  return inner;
}

std::optional<Formula> as_diamond(const Formula& f) {
  if (f.kind() == FormulaKind::Until && is_top(f.lhs())) return f.rhs();
  return std::nullopt;
}

std::optional<Formula> as_box(const Formula& f) {
  auto n = as_not(f);
  if (!n) return std::nullopt;
  auto d = as_diamond(*n);
  if (!d) return std::nullopt;
  return as_not(*d);
}

std::optional<Formula> as_once(const Formula& f) {
  if (f.kind() == FormulaKind::Since && is_top(f.lhs())) return f.rhs();
  return std::nullopt;
}

std::optional<Formula> as_hist(const Formula& f) {
  auto n = as_not(f);
  if (!n) return std::nullopt;
  auto d = as_once(*n);
  if (!d) return std::nullopt;
  return as_not(*d);
}

// ---------------------------------------------------------------- printer

namespace {

// Precedence levels of the printable grammar: imp (1) < U/S (2) < unary (3).
void print_formula_rec(std::ostringstream& out, const Formula& f, int level);

void print_term_rec(std::ostringstream& out, const Term& t, int level) {
  // levels: sum 0, prod 1, base 2
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Var:
      out << t.name();
      return;
    case TermKind::Bang:
      out << '!';
      print_term_rec(out, t.left(), 2);
      return;
    case TermKind::Unary:
      out << term_op_name(t.op()) << '(';
      print_term_rec(out, t.left(), 0);
      out << ')';
      return;
    case TermKind::Pr:
    case TermKind::Nl:
      out << (t.kind() == TermKind::Pr ? "pr(" : "nl(");
      print_term_rec(out, t.left(), 0);
      out << ',';
      print_term_rec(out, t.right(), 0);
      out << ')';
      return;
    case TermKind::Sum: {
      bool paren = level > 0;
      if (paren) out << '(';
      print_term_rec(out, t.left(), 0);
      out << '+';
      print_term_rec(out, t.right(), 1);
      if (paren) out << ')';
      return;
    }
    case TermKind::App:
    case TermKind::AppIdx: {
      bool paren = level > 1;
      if (paren) out << '(';
      print_term_rec(out, t.left(), 1);
      if (t.kind() == TermKind::App) {
        out << '*';
      } else {
        out << "*{";
        print_formula_rec(out, t.index(), 0);
        out << '}';
      }
      print_term_rec(out, t.right(), 2);
      if (paren) out << ')';
      return;
    }
  }
}

void print_unary(std::ostringstream& out, const char* tok, const Formula& child, int level) {
  bool paren = level > 3;
  if (paren) out << '(';
  out << tok;
  print_formula_rec(out, child, 3);
  if (paren) out << ')';
}

void print_formula_rec(std::ostringstream& out, const Formula& f, int level) {
  // Re-sugared patterns first; order matters (G before ~, true before ~).
  if (is_top(f)) {
    out << "true";
    return;
  }
  if (auto b = as_box(f)) return print_unary(out, "G ", *b, level);
  if (auto h = as_hist(f)) return print_unary(out, "H ", *h, level);
  if (auto s = as_sprev(f)) return print_unary(out, "Ys ", *s, level);
  if (auto n = as_not(f)) return print_unary(out, "~", *n, level);
  if (auto d = as_diamond(f)) return print_unary(out, "F ", *d, level);
  if (auto o = as_once(f)) return print_unary(out, "O ", *o, level);

  switch (f.kind()) {
    case FormulaKind::Prop:
      out << f.name();
      return;
    case FormulaKind::Bot:
      out << "false";
      return;
    case FormulaKind::Next:
      return print_unary(out, "X ", f.lhs(), level);
    case FormulaKind::WPrev:
      return print_unary(out, "Yw ", f.lhs(), level);
    case FormulaKind::Just: {
      bool paren = level > 3;
      if (paren) out << '(';
      out << '[';
      print_term_rec(out, f.term(), 0);
      out << "]_" << f.agent() << ' ';
      print_formula_rec(out, f.lhs(), 3);
      if (paren) out << ')';
      return;
    }
    case FormulaKind::Imp: {
      bool paren = level > 1;
      if (paren) out << '(';
      print_formula_rec(out, f.lhs(), 2);
      out << " -> ";
      print_formula_rec(out, f.rhs(), 1);
      if (paren) out << ')';
      return;
    }
    case FormulaKind::Until:
    case FormulaKind::Since: {
      bool paren = level > 2;
      if (paren) out << '(';
      print_formula_rec(out, f.lhs(), 3);
      out << (f.kind() == FormulaKind::Until ? " U " : " S ");
      print_formula_rec(out, f.rhs(), 2);
      if (paren) out << ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::ostringstream out;
  print_formula_rec(out, f, 0);
  return out.str();
}

std::string print_term(const Term& t) {
  std::ostringstream out;
  print_term_rec(out, t, 0);
  return out.str();
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  const LogicProfile* profile;  // may be null: accept everything

  explicit Parser(const std::string& t, const LogicProfile* p) : text(t), profile(p) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(const char* tok) {
    skip_ws();
    size_t len = std::strlen(tok);
    if (text.compare(pos, len, tok) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '\'')) {
      ++pos;
    }
    if (start == pos) fail("expected identifier");
    return text.substr(start, pos - start);
  }

  std::string peek_ident() {
    skip_ws();
    size_t save = pos;
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                text[pos] == '_')) {
      return "";
    }
    std::string s = ident();
    pos = save;
    return s;
  }

  int nat() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected number");
    return std::stoi(text.substr(start, pos - start));
  }

  // formula := iff
  Formula formula() {
    Formula a = imp();
    if (eat("<->")) {
      Formula b = imp();
      return f_iff(a, b);
    }
    return a;
  }

  Formula imp() {
    Formula a = tmp();
    skip_ws();
    // careful: "->" but not "-" alone; "<->" handled one level up
    if (text.compare(pos, 2, "->") == 0) {
      pos += 2;
      Formula b = imp();
      return Formula::imp(a, b);
    }
    return a;
  }

  Formula tmp() {
    Formula a = or_();
    std::string id = peek_ident();
    if (id == "U") {
      ident();
      return Formula::until(a, tmp());
    }
    if (id == "S") {
      ident();
      return Formula::since(a, tmp());
    }
    return a;
  }

  Formula or_() {
    Formula a = and_();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        a = f_or(a, and_());
      } else {
        break;
      }
    }
    return a;
  }

  Formula and_() {
    Formula a = un();
    while (peek_char('&')) {
      ++pos;
      a = f_and(a, un());
    }
    return a;
  }

  Formula un() {
    skip_ws();
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      return f_not(un());
    }
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      Term t = term();
      if (!eat("]_")) fail("expected ']_' after term");
      int agent = nat();
      if (agent < 1) fail("agent index must be >= 1");
      check_agent(agent);
      Formula body = un();
      check_term(t);
      return Formula::just(agent, t, body);
    }
    std::string id = peek_ident();
    if (id == "X") { ident(); return Formula::next(un()); }
    if (id == "Yw") { ident(); return Formula::wprev(un()); }
    if (id == "Ys") { ident(); return f_sprev(un()); }
    if (id == "G") { ident(); return f_box(un()); }
    if (id == "F") { ident(); return f_diamond(un()); }
    if (id == "H") { ident(); return f_hist(un()); }
    if (id == "O") { ident(); return f_once(un()); }
    return prim();
  }

  Formula prim() {
    skip_ws();
    if (eat("(")) {
      Formula a = formula();
      if (!eat(")")) fail("expected ')'");
      return a;
    }
    std::string id = ident();
    if (id == "true") return f_top();
    if (id == "false") return Formula::bot();
    if (id[0] == 'c' || id[0] == 'x' || id[0] == 'y') {
      fail("proposition '" + id + "' may not start with 'c', 'x' or 'y' (reserved for terms)");
    }
    return Formula::prop(id);
  }

  // term := tsum
  Term term() {
    Term a = tprod();
    while (peek_char('+')) {
      ++pos;
      a = Term::sum(a, tprod());
    }
    return a;
  }

  Term tprod() {
    Term a = tbase();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        if (pos + 1 < text.size() && text[pos + 1] == '{') {
          pos += 2;
          Formula idx = formula();
          if (!eat("}")) fail("expected '}' after application index");
          Term b = tbase();
          a = Term::app_idx(a, idx, b);
        } else {
          ++pos;
          a = Term::app(a, tbase());
        }
      } else {
        break;
      }
    }
    return a;
  }

  Term tbase() {
    skip_ws();
    if (pos < text.size() && text[pos] == '!') {
      ++pos;
      return Term::bang(tbase());
    }
    if (eat("(")) {
      Term a = term();
      if (!eat(")")) fail("expected ')' in term");
      return a;
    }
    std::string id = ident();
    skip_ws();
    bool call = pos < text.size() && text[pos] == '(';
    if (call) {
      if (id == "pr" || id == "nl") {
        ++pos;
        Term a = term();
        if (!eat(",")) fail("expected ',' in " + id + "(...)");
        Term b = term();
        if (!eat(")")) fail("expected ')'");
        return id == "pr" ? Term::pr(a, b) : Term::nl(a, b);
      }
      for (int op = 0; op <= static_cast<int>(TermOp::Bar); ++op) {
        if (id == term_op_name(static_cast<TermOp>(op))) {
          ++pos;
          Term a = term();
          if (!eat(")")) fail("expected ')'");
          return Term::unary(static_cast<TermOp>(op), a);
        }
      }
      fail("unknown term operator '" + id + "'");
    }
    if (id[0] == 'c') return Term::constant(id);
    if (id[0] == 'x' || id[0] == 'y') return Term::variable(id);
    fail("term atom '" + id + "' must start with 'c' (constant) or 'x'/'y' (variable)");
  }

  void check_term(const Term& t) {
    if (!profile) return;
    if (auto why = profile_rejects(*profile, t)) {
      fail(*why);
    }
  }

  void check_agent(int agent) {
    if (profile && profile->agent_count > 0 && agent > profile->agent_count) {
      fail("agent index " + std::to_string(agent) + " exceeds declared agent count " +
           std::to_string(profile->agent_count));
    }
  }
};

}  // namespace

Formula parse_formula(const std::string& text, const LogicProfile& profile) {
  Parser p(text, &profile);
  Formula f = p.formula();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  if (auto why = profile_rejects(profile, f)) throw ParseError(*why, 0);
  return f;
}

Formula parse_formula(const std::string& text) {
  Parser p(text, nullptr);
  Formula f = p.formula();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return f;
}

Term parse_term(const std::string& text) {
  Parser p(text, nullptr);
  Term t = p.term();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return t;
}

// ---------------------------------------------------------------- closures

namespace {

void collect_sub(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case FormulaKind::Prop:
    case FormulaKind::Bot:
      return;
    case FormulaKind::Next:
    case FormulaKind::WPrev:
    case FormulaKind::Just:
      collect_sub(f.lhs(), out);
      return;
    case FormulaKind::Imp:
    case FormulaKind::Until:
    case FormulaKind::Since:
      collect_sub(f.lhs(), out);
      collect_sub(f.rhs(), out);
      return;
  }
}

// Subf: term-directed subformulas for the indexed-application fragment.
void collect_subf(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case FormulaKind::Prop:
    case FormulaKind::Bot:
      return;
    case FormulaKind::Next:
    case FormulaKind::WPrev:
      collect_subf(f.lhs(), out);
      return;
    case FormulaKind::Imp:
    case FormulaKind::Until:
    case FormulaKind::Since:
      collect_subf(f.lhs(), out);
      collect_subf(f.rhs(), out);
      return;
    case FormulaKind::Just: {
      const Term& t = f.term();
      AgentId i = f.agent();
      const Formula& body = f.lhs();
      switch (t.kind()) {
        case TermKind::Const:
        case TermKind::Var:
        case TermKind::Bang:
          collect_subf(body, out);
          return;
        case TermKind::Sum:
          collect_subf(Formula::just(i, t.left(), body), out);
          collect_subf(Formula::just(i, t.right(), body), out);
          return;
        case TermKind::AppIdx: {
          Formula idx = t.index();
          collect_subf(Formula::just(i, t.left(), Formula::imp(idx, body)), out);
          collect_subf(Formula::just(i, t.right(), idx), out);
          return;
        }
        case TermKind::Unary:
          if (t.op() == TermOp::Up) {
            if (auto boxed = as_box(body)) {
              collect_subf(f_not(Formula::just(i, t.left(), *boxed)), out);
              return;
            }
          }
          collect_subf(body, out);
          return;
        case TermKind::App:
        case TermKind::Pr:
        case TermKind::Nl:
          // not part of the indexed fragment; callers reject beforehand
          collect_subf(body, out);
          return;
      }
    }
  }
}

bool uses_plain_app(const Term& t) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Var:
      return false;
    case TermKind::App:
      return true;
    case TermKind::Bang:
    case TermKind::Unary:
      return uses_plain_app(t.left());
    case TermKind::Sum:
    case TermKind::Pr:
    case TermKind::Nl:
      return uses_plain_app(t.left()) || uses_plain_app(t.right());
    case TermKind::AppIdx:
      return uses_plain_app(t.left()) || uses_plain_app(t.right());
  }
  return false;
}

bool formula_uses_plain_app(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Prop:
    case FormulaKind::Bot:
      return false;
    case FormulaKind::Next:
    case FormulaKind::WPrev:
      return formula_uses_plain_app(f.lhs());
    case FormulaKind::Imp:
    case FormulaKind::Until:
    case FormulaKind::Since:
      return formula_uses_plain_app(f.lhs()) || formula_uses_plain_app(f.rhs());
    case FormulaKind::Just:
      return uses_plain_app(f.term()) || formula_uses_plain_app(f.lhs());
  }
  return false;
}

Formula seed_formula() { return f_once(Formula::wprev(Formula::bot())); }

}  // namespace

std::vector<Formula> subformula_list(const Formula& f) {
  std::set<Formula> s;
  collect_sub(f, s);
  return std::vector<Formula>(s.begin(), s.end());
}

ClosureSet ClosureSet::from_positive(std::vector<Formula> pos, bool add_negations) {
  ClosureSet cs;
  std::set<Formula> all(pos.begin(), pos.end());
  if (add_negations) {
    for (const Formula& f : pos) all.insert(f_not(f));
  }
  cs.items_.assign(all.begin(), all.end());
  std::sort(pos.begin(), pos.end());
  cs.positive_ = std::move(pos);
  for (size_t i = 0; i < cs.items_.size(); ++i) cs.index_.emplace(cs.items_[i], i);
  for (size_t i = 0; i < cs.positive_.size(); ++i) cs.pos_index_.emplace(cs.positive_[i], i);
  return cs;
}

ClosureSet ClosureSet::subformulas(const Formula& f) {
  return from_positive(subformula_list(f), false);
}

ClosureSet ClosureSet::closure(const Formula& chi) {
  std::set<Formula> s;
  collect_sub(chi, s);
  collect_sub(seed_formula(), s);
  return from_positive(std::vector<Formula>(s.begin(), s.end()), true);
}

ClosureSet ClosureSet::closure_indexed(const Formula& chi) {
  if (formula_uses_plain_app(chi)) {
    throw std::invalid_argument(
        "closure_indexed: formula uses the non-indexed application constructor");
  }
  std::set<Formula> s;
  collect_subf(chi, s);
  collect_subf(seed_formula(), s);
  // for every [gen(t)]_i G(phi) in Subf(chi), add Subf(true U ~[t]_i phi)
  std::set<Formula> base = s;
  for (const Formula& f : base) {
    if (f.kind() != FormulaKind::Just) continue;
    const Term& t = f.term();
    if (t.kind() != TermKind::Unary || t.op() != TermOp::Up) continue;
    if (auto boxed = as_box(f.lhs())) {
      collect_subf(f_diamond(f_not(Formula::just(f.agent(), t.left(), *boxed))), s);
    }
  }
  return from_positive(std::vector<Formula>(s.begin(), s.end()), true);
}

std::optional<int> ClosureSet::index_of(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ClosureSet::positive_index_of(const Formula& f) const {
  auto it = pos_index_.find(f);
  if (it == pos_index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- term listings

namespace {
void collect_subterms(const Term& t, std::set<Term>& out) {
  if (!out.insert(t).second) return;
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Var:
      return;
    case TermKind::Bang:
    case TermKind::Unary:
      collect_subterms(t.left(), out);
      return;
    case TermKind::AppIdx:
      collect_subterms(t.left(), out);
      collect_subterms(t.right(), out);
      return;
    case TermKind::Sum:
    case TermKind::App:
    case TermKind::Pr:
    case TermKind::Nl:
      collect_subterms(t.left(), out);
      collect_subterms(t.right(), out);
      return;
  }
}

void collect_formula_terms(const Formula& f, std::set<Term>& out) {
  switch (f.kind()) {
    case FormulaKind::Prop:
    case FormulaKind::Bot:
      return;
    case FormulaKind::Next:
    case FormulaKind::WPrev:
      collect_formula_terms(f.lhs(), out);
      return;
    case FormulaKind::Imp:
    case FormulaKind::Until:
    case FormulaKind::Since:
      collect_formula_terms(f.lhs(), out);
      collect_formula_terms(f.rhs(), out);
      return;
    case FormulaKind::Just: {
      collect_subterms(f.term(), out);
      // AppIdx annotations can nest justification assertions
      std::vector<Term> stack{f.term()};
      std::set<Term> seen;
      while (!stack.empty()) {
        Term t = stack.back();
        stack.pop_back();
        if (!seen.insert(t).second) continue;
        if (t.kind() == TermKind::AppIdx) collect_formula_terms(t.index(), out);
        switch (t.kind()) {
          case TermKind::Const:
          case TermKind::Var:
            break;
          case TermKind::Bang:
          case TermKind::Unary:
            stack.push_back(t.left());
            break;
          default:
            stack.push_back(t.left());
            stack.push_back(t.right());
            break;
        }
      }
      collect_formula_terms(f.lhs(), out);
      return;
    }
  }
}
}  // namespace

std::vector<Term> subterm_list(const Term& t) {
  std::set<Term> s;
  collect_subterms(t, s);
  return std::vector<Term>(s.begin(), s.end());
}

std::vector<Term> terms_of(const Formula& f) {
  std::set<Term> s;
  collect_formula_terms(f, s);
  return std::vector<Term>(s.begin(), s.end());
}

}  // namespace tjl
