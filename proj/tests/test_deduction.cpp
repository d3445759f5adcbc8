#include "doctest.h"

#include "jluk/errors.hpp"
#include "jluk/check.hpp"
#include "jluk/deduction.hpp"
#include "jluk/parser.hpp"
#include "jluk/printer.hpp"
#include "jluk/semantics.hpp"
#include "util.hpp"

using namespace jluk;

TEST_CASE("hypothesis line compiles to the identity proof") {
  ProofScript p = parse_script("premise: p\n1. p ; premise\n");
  ProofScript d = deduction_theorem(p, parse_formula("p"));
  Verdict v = check_proof(d);
  CAPTURE(v.reason);
  CHECK(v.valid);
  CHECK(d.premises.empty());
  CHECK(equal(d.final_formula(), parse_formula("p -> p")));
  CHECK(d.lines.size() == 5);
}

TEST_CASE("axiom and untouched-premise lines are weakened in two steps") {
  ProofScript p =
      parse_script("premise: p\npremise: q\n1. q ; premise\n");
  ProofScript d = deduction_theorem(p, parse_formula("p"));
  CHECK(check_proof(d).valid);
  REQUIRE(d.premises.size() == 1);
  CHECK(equal(d.premises[0], parse_formula("q")));
  CHECK(equal(d.final_formula(), parse_formula("p -> q")));
  CHECK(d.lines.size() == 3); // q, q -> (p -> q), mp

  ProofScript ax = parse_script("premise: p\n1. r -> (s -> r) ; ax1\n");
  ProofScript da = deduction_theorem(ax, parse_formula("p"));
  CHECK(check_proof(da).valid);
  CHECK(da.premises.empty());
  CHECK(equal(da.final_formula(), parse_formula("p -> (r -> (s -> r))")));
  CHECK(da.lines.size() == 3);
}

TEST_CASE("mp lines go through the distribution axiom") {
  ProofScript p = parse_script("premise: p\n"
                               "premise: p -> q\n"
                               "1. p ; premise\n"
                               "2. p -> q ; premise\n"
                               "3. q ; mp 2 1\n");
  ProofScript d = deduction_theorem(p, parse_formula("p"));
  Verdict v = check_proof(d);
  CAPTURE(render_script(d));
  CAPTURE(v.reason);
  CHECK(v.valid);
  REQUIRE(d.premises.size() == 1);
  CHECK(equal(d.premises[0], parse_formula("p -> q")));
  CHECK(equal(d.final_formula(), parse_formula("p -> q")));
  // 5 for the hypothesis line, 3 for the premise line, then L2 + two mps
  CHECK(d.lines.size() == 11);
}

TEST_CASE("double application discharges both premises of the reference pair") {
  ProofScript p = parse_script(testutil::read_data("golden_lift_luk.txt"));
  ProofScript once = deduction_theorem(p, parse_formula("p"));
  CHECK(check_proof(once).valid);
  CHECK(equal(once.final_formula(), parse_formula("p -> (q -> r)")));

  ProofScript twice = deduction_theorem(once, parse_formula("q -> (p -> r)"));
  Verdict v = check_proof(twice);
  CAPTURE(v.reason);
  CHECK(v.valid);
  CHECK(twice.premises.empty());
  CHECK(equal(twice.final_formula(),
              parse_formula("(q -> (p -> r)) -> (p -> (q -> r))")));
  CHECK(is_tautology(twice.final_formula()));
}

TEST_CASE("deduction over random proofs") {
  testutil::Rng r(31337);
  for (int k = 0; k < 80; ++k) {
    std::vector<FormulaPtr> premises = testutil::random_premises(r, 1 + r.below(3));
    ProofScript p = testutil::random_luk_proof(r, premises);
    FormulaPtr hyp = premises[r.below(premises.size())];
    FormulaPtr goal = Formula::impl(hyp, p.final_formula());

    for (bool internal : {false, true}) {
      ProofScript d =
          internal ? detail::discharge(p, hyp) : deduction_theorem(p, hyp);
      Verdict v = check_proof(d);
      CAPTURE(internal);
      CAPTURE(render_script(p));
      CAPTURE(v.reason);
      REQUIRE(v.valid);
      CHECK_FALSE(d.has_premise(hyp));
      CHECK(equal(d.final_formula(), goal));
    }
  }
}

TEST_CASE("the dependency-aware variant skips unrelated lines") {
  ProofScript p = parse_script("premise: p\n"
                               "premise: q\n"
                               "1. q ; premise\n"
                               "2. p ; premise\n");
  ProofScript d = detail::discharge(p, parse_formula("p"));
  CHECK(check_proof(d).valid);
  CHECK(equal(d.final_formula(), parse_formula("p -> p")));
  // line 1 is independent of the hypothesis and is copied through untouched
  CHECK(equal(d.lines[0].formula, parse_formula("q")));
}

TEST_CASE("rejects a hypothesis that is not a premise") {
  ProofScript p = parse_script("premise: p\n1. p ; premise\n");
  CHECK_THROWS_AS(deduction_theorem(p, parse_formula("q")), KernelError);
  CHECK_THROWS_AS(detail::discharge(p, parse_formula("q")), KernelError);
}
