#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tjl {

// Agents are numbered 1..h. The upper bound h is only known in contexts
// that declare it (models, profiles); parsing accepts any index >= 1.
using AgentId = int;

enum class TermKind : uint8_t { Const, Var, Bang, Sum, App, AppIdx, Unary, Pr, Nl };

// Term operators tied to the connecting-principle axioms. The concrete
// syntax name of each is in term_op_name().
enum class TermOp : uint8_t {
  Up,          // gen
  Down,        // acc
  DownSmall,   // accx
  RRight,      // shr
  LLeft,       // shl
  UpP,         // genp
  DownP,       // accp
  DownSmallP,  // accxp
  RightP,      // rp
  RRightP,     // shrp
  LLeftP,      // shlp
  Bar,         // bar
};

const char* term_op_name(TermOp op);

enum class FormulaKind : uint8_t { Prop, Bot, Imp, Next, WPrev, Until, Since, Just };

class Formula;

namespace detail {
struct TermNode;
struct FormulaNode;
using TermNodePtr = std::shared_ptr<const TermNode>;
using FormulaNodePtr = std::shared_ptr<const FormulaNode>;
}  // namespace detail

// Immutable justification term. Value semantics, cheap to copy.
class Term {
 public:
  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term bang(Term t);
  static Term sum(Term t, Term s);
  static Term app(Term t, Term s);
  static Term app_idx(Term t, Formula idx, Term s);
  static Term unary(TermOp op, Term t);
  static Term pr(Term t, Term s);
  static Term nl(Term t, Term s);

  TermKind kind() const;
  const std::string& name() const;  // Const, Var
  Term left() const;                // Bang/Unary: the operand; binary: left
  Term right() const;               // binary only
  Formula index() const;            // AppIdx annotation
  TermOp op() const;                // Unary only

  size_t hash() const;
  int size() const;  // node count

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

 private:
  friend class Formula;
  friend int compare(const Term&, const Term&);
  explicit Term(detail::TermNodePtr n) : node_(std::move(n)) {}
  detail::TermNodePtr node_;
};

// Immutable formula over the eight core constructors. Derived connectives
// exist only through the builders in sugar.hpp-style helpers below.
class Formula {
 public:
  static Formula prop(std::string name);
  static Formula bot();
  static Formula imp(Formula a, Formula b);
  static Formula next(Formula a);
  static Formula wprev(Formula a);
  static Formula until(Formula a, Formula b);
  static Formula since(Formula a, Formula b);
  static Formula just(AgentId agent, Term t, Formula a);

  FormulaKind kind() const;
  const std::string& name() const;  // Prop
  Formula lhs() const;              // Imp/Until/Since left, unary child, Just body
  Formula rhs() const;              // Imp/Until/Since right
  AgentId agent() const;            // Just
  Term term() const;                // Just

  size_t hash() const;
  int size() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  friend class Term;
  friend int compare(const Formula&, const Formula&);
  explicit Formula(detail::FormulaNodePtr n) : node_(std::move(n)) {}
  detail::FormulaNodePtr node_;
};

// Canonical total order: constructor tag first, then recursive comparison.
// Used for deterministic closure iteration and constant naming.
int compare(const Term& a, const Term& b);
int compare(const Formula& a, const Formula& b);
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }
inline bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

struct TermHash {
  size_t operator()(const Term& t) const { return t.hash(); }
};
struct FormulaHash {
  size_t operator()(const Formula& f) const { return f.hash(); }
};

// Derived connectives, desugared on construction.
Formula f_not(Formula a);                 // a -> false
Formula f_top();                          // false -> false
Formula f_or(Formula a, Formula b);       // ~a -> b
Formula f_and(Formula a, Formula b);      // ~(~a | ~b)
Formula f_iff(Formula a, Formula b);      // (a -> b) & (b -> a)
Formula f_sprev(Formula a);               // ~Yw~a
Formula f_diamond(Formula a);             // true U a
Formula f_box(Formula a);                 // ~(true U ~a)
Formula f_once(Formula a);                // true S a
Formula f_hist(Formula a);                // ~(true S ~a)

// Pattern recognizers for the printer and for axiom/evidence machinery.
std::optional<Formula> as_not(const Formula& f);
bool is_top(const Formula& f);
std::optional<Formula> as_sprev(const Formula& f);
std::optional<Formula> as_diamond(const Formula& f);
std::optional<Formula> as_box(const Formula& f);
std::optional<Formula> as_once(const Formula& f);
std::optional<Formula> as_hist(const Formula& f);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

struct LogicProfile;  // profile.hpp

// Concrete syntax front-end. parse_formula desugars; the printer re-sugars
// true, ~, Ys, F, G, O, H where the core pattern matches.
Formula parse_formula(const std::string& text, const LogicProfile& profile);
Formula parse_formula(const std::string& text);  // no profile restriction
Term parse_term(const std::string& text);
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

// Ordered formula set with membership index; iteration order is the
// canonical formula order. The positive part is A_chi (or B_chi); the rest
// are the added negations.
class ClosureSet {
 public:
  static ClosureSet subformulas(const Formula& f);
  static ClosureSet closure(const Formula& chi);          // Sub+(chi)
  static ClosureSet closure_indexed(const Formula& chi);  // Subf+(chi)

  const std::vector<Formula>& items() const { return items_; }
  const std::vector<Formula>& positive() const { return positive_; }
  bool contains(const Formula& f) const { return index_.count(f) != 0; }
  std::optional<int> index_of(const Formula& f) const;
  std::optional<int> positive_index_of(const Formula& f) const;
  int size() const { return static_cast<int>(items_.size()); }

 private:
  static ClosureSet from_positive(std::vector<Formula> pos, bool add_negations);
  std::vector<Formula> items_;
  std::vector<Formula> positive_;
  std::unordered_map<Formula, int, FormulaHash> index_;
  std::unordered_map<Formula, int, FormulaHash> pos_index_;
};

// Plain Sub(.) of the core grammar, as a canonical-ordered vector.
std::vector<Formula> subformula_list(const Formula& f);

// All subterms of t (including t), deduplicated, canonical order.
std::vector<Term> subterm_list(const Term& t);
// All terms occurring in f (inside Just and AppIdx annotations), with subterms.
std::vector<Term> terms_of(const Formula& f);

}  // namespace tjl
