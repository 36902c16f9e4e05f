#include "doctest.h"

#include <set>

#include "support/gen.hpp"
#include "tjl/profile.hpp"
#include "tjl/syntax.hpp"

using namespace tjl;

namespace {
Formula P(const char* n) { return Formula::prop(n); }
}  // namespace

TEST_CASE("parse desugars derived connectives") {
  Formula f = parse_formula("[x]_1 p -> p");
  CHECK(f == Formula::imp(Formula::just(1, Term::variable("x"), P("p")), P("p")));

  CHECK(parse_formula("G p") ==
        f_not(Formula::until(f_top(), f_not(P("p")))));
  CHECK(parse_formula("p U (q S r)") ==
        Formula::until(P("p"), Formula::since(P("q"), P("r"))));
  CHECK(parse_formula("p U q S r") == parse_formula("p U (q S r)"));
  CHECK(parse_formula("true") == f_top());
  CHECK(parse_formula("~p") == Formula::imp(P("p"), Formula::bot()));
  CHECK(parse_formula("Ys p") == f_sprev(P("p")));
  CHECK(parse_formula("p & q") == f_and(P("p"), P("q")));
  CHECK(parse_formula("p <-> q") == f_iff(P("p"), P("q")));
  CHECK(parse_formula("H p") == f_hist(P("p")));
  CHECK(parse_formula("O Yw false") == f_once(Formula::wprev(Formula::bot())));
}

TEST_CASE("operator precedence") {
  // unary binds tightest, then U/S, then &, |, ->, <->
  CHECK(parse_formula("~p U q") == Formula::until(f_not(P("p")), P("q")));
  CHECK(parse_formula("p -> q -> r") ==
        Formula::imp(P("p"), Formula::imp(P("q"), P("r"))));
  CHECK(parse_formula("p & q | r") == f_or(f_and(P("p"), P("q")), P("r")));
  CHECK(parse_formula("X p U q") == Formula::until(Formula::next(P("p")), P("q")));
}

TEST_CASE("term syntax") {
  Formula f = parse_formula("[x+y]_1 p");
  CHECK(f == Formula::just(1, Term::sum(Term::variable("x"), Term::variable("y")), P("p")));
  CHECK(parse_formula("[x*y]_2 p").term() ==
        Term::app(Term::variable("x"), Term::variable("y")));
  CHECK(parse_formula("[!x]_1 p").term() == Term::bang(Term::variable("x")));
  CHECK(parse_formula("[x*y+c1]_1 p").term() ==
        Term::sum(Term::app(Term::variable("x"), Term::variable("y")),
                  Term::constant("c1")));
  CHECK(parse_formula("[gen(x)]_1 p").term() ==
        Term::unary(TermOp::Up, Term::variable("x")));
  CHECK(parse_formula("[x *{p} y]_1 q").term() ==
        Term::app_idx(Term::variable("x"), P("p"), Term::variable("y")));
  CHECK(parse_formula("[pr(x,y)]_1 p").term() ==
        Term::pr(Term::variable("x"), Term::variable("y")));
}

TEST_CASE("parse errors carry position") {
  CHECK_THROWS_AS(parse_formula("p -> "), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("[z]_1 p"), ParseError);   // bad term atom
  CHECK_THROWS_AS(parse_formula("cat"), ParseError);       // 'c' start reserved
  CHECK_THROWS_AS(parse_formula("[x]_0 p"), ParseError);   // agent >= 1
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);       // trailing input
}

TEST_CASE("profile gates constructors") {
  LogicProfile base = named_profile("lpltl-p");
  CHECK_THROWS_AS(parse_formula("[gen(x)]_1 p", base), ParseError);
  CHECK_THROWS_AS(parse_formula("[x *{p} y]_1 q", base), ParseError);
  CHECK_NOTHROW(parse_formula("[x*y]_1 p", base));

  LogicProfile lgen = named_profile("lgen");
  CHECK_NOTHROW(parse_formula("[x *{p} y]_1 q", lgen));
  CHECK_NOTHROW(parse_formula("[gen(x)]_1 p", lgen));
  CHECK_THROWS_AS(parse_formula("[x*y]_1 p", lgen), ParseError);

  LogicProfile fut = named_profile("lpltl");
  CHECK_THROWS_AS(parse_formula("Yw p", fut), ParseError);
  CHECK_THROWS_AS(parse_formula("p S q", fut), ParseError);
  CHECK_NOTHROW(parse_formula("p U q", fut));

  LogicProfile jprnl = named_profile("lpltl-jprnl");
  CHECK_NOTHROW(parse_formula("[pr(x,y)]_1 (p S q)", jprnl));
  CHECK_THROWS_AS(parse_formula("[pr(x,y)]_1 p", base), ParseError);
}

TEST_CASE("printer re-sugars the derived operators") {
  CHECK(print_formula(Formula::imp(P("p"), Formula::bot())) == "~p");
  CHECK(print_formula(Formula::until(f_top(), P("q"))) == "F q");
  CHECK(print_formula(f_box(P("p"))) == "G p");
  CHECK(print_formula(f_hist(P("p"))) == "H p");
  CHECK(print_formula(f_once(P("p"))) == "O p");
  CHECK(print_formula(f_sprev(P("p"))) == "Ys p");
  CHECK(print_formula(f_top()) == "true");
  CHECK(print_formula(Formula::just(
            1, Term::sum(Term::variable("x"), Term::variable("y")), P("p"))) == "[x+y]_1 p");
}

TEST_CASE("print/parse round trip on random formulas") {
  gen::Rng rng(20240811);
  gen::FormulaOptions o;
  o.extended_terms = true;
  o.ops = {TermOp::Up, TermOp::Down, TermOp::LLeftP, TermOp::Bar, TermOp::RightP};
  for (int i = 0; i < 500; ++i) {
    Formula f = gen::random_formula(rng, o);
    CAPTURE(print_formula(f));
    CHECK(parse_formula(print_formula(f)) == f);
  }
  // indexed-term formulas too
  o.indexed = true;
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::random_formula(rng, o);
    CAPTURE(print_formula(f));
    CHECK(parse_formula(print_formula(f)) == f);
  }
  // pr/nl terms
  o.indexed = false;
  o.extended_terms = false;
  o.binary_ops = true;
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::random_formula(rng, o);
    CAPTURE(print_formula(f));
    CHECK(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("subformulas follow the structural equations") {
  auto items = [](const ClosureSet& c) {
    return std::set<Formula>(c.items().begin(), c.items().end());
  };
  CHECK(items(ClosureSet::subformulas(P("p"))) == std::set<Formula>{P("p")});
  CHECK(items(ClosureSet::subformulas(Formula::imp(P("p"), P("q")))) ==
        std::set<Formula>{Formula::imp(P("p"), P("q")), P("p"), P("q")});
  CHECK(items(ClosureSet::subformulas(Formula::wprev(Formula::bot()))) ==
        std::set<Formula>{Formula::wprev(Formula::bot()), Formula::bot()});
  // terms do not contribute subformulas
  Formula j = parse_formula("[x*y]_1 p");
  CHECK(items(ClosureSet::subformulas(j)) == std::set<Formula>{j, P("p")});
}

TEST_CASE("closure adds the seed and the negations") {
  Formula chi = Formula::wprev(Formula::bot());
  ClosureSet c = ClosureSet::closure(chi);
  // seed block {false, true, Yw false, O Yw false} plus negations; ~false
  // collapses to true, leaving 7 distinct members
  CHECK(c.size() == 7);
  CHECK(c.positive().size() == 4);
  CHECK(c.contains(Formula::bot()));
  CHECK(c.contains(f_top()));
  CHECK(c.contains(Formula::wprev(Formula::bot())));
  CHECK(c.contains(f_once(Formula::wprev(Formula::bot()))));
  CHECK(c.contains(f_not(f_once(Formula::wprev(Formula::bot())))));

  ClosureSet cp = ClosureSet::closure(P("p"));
  CHECK(cp.contains(P("p")));
  CHECK(cp.contains(f_not(P("p"))));
  CHECK(cp.size() == 9);  // p, ~p plus the seed block

  gen::Rng rng(7);
  gen::FormulaOptions o;
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::random_formula(rng, o);
    ClosureSet c2 = ClosureSet::closure(f);
    CHECK(c2.contains(Formula::bot()));
    int sub = static_cast<int>(subformula_list(f).size());
    CHECK(c2.size() <= 2 * (sub + 4));
    // positive part closed under immediate subformulas
    for (const Formula& g : c2.positive()) {
      for (const Formula& h : subformula_list(g)) CHECK(c2.positive_index_of(h).has_value());
    }
    // everything beyond the positive part is the negation of a positive member
    for (const Formula& g : c2.items()) {
      if (c2.positive_index_of(g)) continue;
      auto inner = as_not(g);
      REQUIRE(inner.has_value());
      CHECK(c2.positive_index_of(*inner).has_value());
    }
  }
}

TEST_CASE("indexed closure follows the term-directed equations") {
  Formula sum = parse_formula("[x+y]_1 p");
  ClosureSet c = ClosureSet::closure_indexed(sum);
  CHECK(c.contains(parse_formula("[x]_1 p")));
  CHECK(c.contains(parse_formula("[y]_1 p")));
  CHECK(c.contains(P("p")));

  Formula gen_box = parse_formula("[gen(x)]_1 G p");
  ClosureSet cg = ClosureSet::closure_indexed(gen_box);
  CHECK(cg.contains(f_not(parse_formula("[x]_1 p"))));
  CHECK(cg.contains(f_diamond(f_not(parse_formula("[x]_1 p")))));

  Formula bang = parse_formula("[!x]_1 p");
  ClosureSet cb = ClosureSet::closure_indexed(bang);
  CHECK(cb.contains(bang));
  CHECK(cb.contains(P("p")));
  CHECK_FALSE(cb.contains(parse_formula("[x]_1 p")));

  // indexed application splits into both assertions
  Formula app = parse_formula("[x *{p} y]_1 q");
  ClosureSet ca = ClosureSet::closure_indexed(app);
  CHECK(ca.contains(parse_formula("[x]_1 (p -> q)")));
  CHECK(ca.contains(parse_formula("[y]_1 p")));

  CHECK_THROWS_AS(ClosureSet::closure_indexed(parse_formula("[x*y]_1 p")),
                  std::invalid_argument);

  // until/since members bring their parts and the negated right argument
  gen::Rng rng(99);
  gen::FormulaOptions o;
  o.indexed = true;
  for (int i = 0; i < 100; ++i) {
    Formula f = gen::random_formula(rng, o);
    ClosureSet cl = ClosureSet::closure_indexed(f);
    for (const Formula& g : cl.items()) {
      if (g.kind() == FormulaKind::Until || g.kind() == FormulaKind::Since) {
        CHECK(cl.contains(g.lhs()));
        CHECK(cl.contains(g.rhs()));
        CHECK(cl.contains(f_not(g.rhs())));
      }
    }
  }
}

TEST_CASE("named profiles and extensions") {
  CHECK(named_profile("lpltl-p").just_core == JustCore::LP);
  CHECK(named_profile("ltl-j").just_core == JustCore::FP);
  CHECK(named_profile("lgen").indexed());
  CHECK_FALSE(named_profile("lpltl").past_enabled());
  CHECK(named_profile("lpltl-int").has(ExtraAxiom::Mix1));
  CHECK(named_profile("lpltl-jprnl").has(ExtraAxiom::Jnl));
  CHECK_THROWS_AS(named_profile("nope"), std::invalid_argument);

  LogicProfile p = extend_profile(named_profile("lpltl-p"), "+generalize,+jpr");
  CHECK(p.has(ExtraAxiom::Generalize));
  CHECK(p.has(ExtraAxiom::Jpr));
  CHECK_THROWS_AS(extend_profile(named_profile("lpltl-p"), "+frobnicate"),
                  std::invalid_argument);
  // bar requires the lpltl-p base
  CHECK_NOTHROW(extend_profile(named_profile("lpltl-p"), "bar"));
  CHECK_THROWS_AS(extend_profile(named_profile("lgen"), "bar"), std::invalid_argument);
  CHECK_THROWS_AS(extend_profile(named_profile("lpltl"), "bar"), std::invalid_argument);
}

TEST_CASE("closure iteration order is deterministic") {
  Formula f = parse_formula("(p U q) -> Yw p");
  ClosureSet a = ClosureSet::closure(f);
  ClosureSet b = ClosureSet::closure(parse_formula(print_formula(f)));
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) CHECK(a.items()[i] == b.items()[i]);
}
