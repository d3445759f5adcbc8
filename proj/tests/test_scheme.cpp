#include "doctest.h"

#include "jluk/errors.hpp"
#include "jluk/parser.hpp"
#include "jluk/scheme.hpp"
#include "util.hpp"

using namespace jluk;

TEST_CASE("axiom scheme matching") {
  CHECK(match_scheme(parse_formula("p -> (q -> p)"), SchemeId::L1));
  CHECK(match_scheme(parse_formula("(a -> b) -> (~c -> (a -> b))"),
                     SchemeId::L1));
  // both occurrences of the first hole must agree
  CHECK_FALSE(match_scheme(parse_formula("p -> (q -> q)"), SchemeId::L1));
  CHECK(match_scheme(
      parse_formula("(p -> (q -> r)) -> ((p -> q) -> (p -> r))"),
      SchemeId::L2));
  CHECK_FALSE(match_scheme(
      parse_formula("(p -> (q -> r)) -> ((p -> q) -> (q -> r))"),
      SchemeId::L2));
  CHECK(match_scheme(parse_formula("(~p -> ~q) -> (q -> p)"), SchemeId::L3));
  CHECK_FALSE(match_scheme(parse_formula("(~p -> ~q) -> (p -> q)"),
                           SchemeId::L3));
  CHECK_FALSE(match_scheme(parse_formula("p"), SchemeId::L1));

  // an L1 instance whose holes are filled with justified formulas is fine
  CHECK(match_scheme(parse_formula("x:p -> (q -> x:p)"), SchemeId::L1));
}

TEST_CASE("application and sum schemes") {
  CHECK(match_scheme(parse_formula("x:(p -> q) -> (y:p -> [x*y]:q)"),
                     SchemeId::App));
  // conclusion term must be the application of the two cited terms
  CHECK_FALSE(match_scheme(parse_formula("x:(p -> q) -> (y:p -> [y*x]:q)"),
                           SchemeId::App));
  CHECK_FALSE(match_scheme(parse_formula("x:(p -> q) -> (y:r -> [x*y]:q)"),
                           SchemeId::App));
  CHECK(match_scheme(parse_formula("x:q -> [x+y]:q"), SchemeId::SumL));
  CHECK(match_scheme(parse_formula("y:q -> [x+y]:q"), SchemeId::SumR));
  CHECK_FALSE(match_scheme(parse_formula("x:q -> [y+x]:q"), SchemeId::SumL));
  CHECK_FALSE(match_scheme(parse_formula("x:q -> [x+y]:p"), SchemeId::SumL));
}

TEST_CASE("substitution application") {
  Substitution sub;
  sub.formulas["phi"] = parse_formula("p & q");
  sub.formulas["psi"] = parse_formula("~r");
  FormulaPtr inst = apply_substitution(SchemeId::L1, sub);
  CHECK(equal(inst, parse_formula("(p & q) -> (~r -> (p & q))")));

  auto back = match_scheme(inst, SchemeId::L1);
  REQUIRE(back);
  CHECK(equal(back->formulas.at("phi"), sub.formulas.at("phi")));
  CHECK(equal(back->formulas.at("psi"), sub.formulas.at("psi")));

  SUBCASE("exact binding sets enforced") {
    CHECK_THROWS_AS(apply_substitution(SchemeId::L2, sub), KernelError);
    sub.formulas["chi"] = parse_formula("r");
    CHECK_NOTHROW(apply_substitution(SchemeId::L2, sub));
    CHECK_THROWS_AS(apply_substitution(SchemeId::L1, sub), KernelError);
  }
}

TEST_CASE("match then apply is the identity on random instances") {
  testutil::Rng r(99);
  for (int k = 0; k < 300; ++k) {
    SchemeId s = static_cast<SchemeId>(r.below(3));
    Substitution sub;
    sub.formulas["phi"] = testutil::random_small(r);
    sub.formulas["psi"] = testutil::random_small(r);
    if (s == SchemeId::L2) sub.formulas["chi"] = testutil::random_small(r);
    FormulaPtr inst = apply_substitution(s, sub);
    auto m = match_scheme(inst, s);
    REQUIRE(m);
    CHECK(equal(apply_substitution(s, *m), inst));
  }
}
