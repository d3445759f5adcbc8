#include "doctest.h"

#include "jluk/check.hpp"
#include "jluk/parser.hpp"
#include "jluk/printer.hpp"
#include "jluk/prover.hpp"
#include "jluk/semantics.hpp"
#include "util.hpp"

using namespace jluk;

namespace {

void expect_proof(const std::string& text) {
  FormulaPtr f = parse_formula(text);
  ProofScript p = prove_tautology(f);
  Verdict v = check_proof(p);
  CAPTURE(text);
  CAPTURE(v.reason);
  REQUIRE(v.valid);
  CHECK(p.premises.empty());
  CHECK(equal(p.final_formula(), expand_connectives(f)));
}

// every {->,~} formula over the given atoms with exactly n connectives
std::vector<FormulaPtr> enumerate(const std::vector<std::string>& atoms,
                                  std::size_t n) {
  static std::map<std::size_t, std::vector<FormulaPtr>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<FormulaPtr> out;
  if (n == 0) {
    for (const auto& a : atoms) out.push_back(Formula::atom(a));
  } else {
    for (const auto& f : enumerate(atoms, n - 1)) out.push_back(Formula::neg(f));
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& l : enumerate(atoms, k))
        for (const auto& r : enumerate(atoms, n - 1 - k))
          out.push_back(Formula::impl(l, r));
  }
  memo[n] = out;
  return out;
}

} // namespace

TEST_CASE("axiom instances prove in one line") {
  ProofScript p = prove_tautology(parse_formula("(~p -> ~q) -> (q -> p)"));
  CHECK(p.lines.size() == 1);
  CHECK(p.lines[0].rule.kind == RuleKind::Axiom);
  CHECK(p.lines[0].rule.scheme == SchemeId::L3);
  CHECK(check_proof(p).valid);
}

TEST_CASE("classic tautologies") {
  expect_proof("p -> p");
  expect_proof("((p -> q) -> p) -> p"); // Peirce
  expect_proof("~~p -> p");
  expect_proof("p -> ~~p");
  expect_proof("(p -> q) -> ((q -> r) -> (p -> r))");
  expect_proof("((p -> q) -> (p -> r)) -> (p -> (q -> r))");
}

TEST_CASE("conjunction and disjunction prove their implication forms") {
  FormulaPtr f = parse_formula("p | ~p");
  ProofScript p = prove_tautology(f);
  CHECK(check_proof(p).valid);
  CHECK(equal(p.final_formula(), parse_formula("~p -> ~p")));

  f = parse_formula("p & q -> p");
  p = prove_tautology(f);
  CHECK(check_proof(p).valid);
  CHECK(equal(p.final_formula(), expand_connectives(f)));
  CHECK(is_tautology(p.final_formula()));
}

TEST_CASE("rejections") {
  try {
    prove_tautology(parse_formula("p -> q"));
    FAIL("expected NotATautology");
  } catch (const NotATautology& e) {
    CHECK(render_valuation(e.counterexample()) == "p=1,q=0");
  }
  CHECK_THROWS_AS(prove_tautology(parse_formula("p & q")), NotATautology);
  CHECK_THROWS_AS(prove_tautology(parse_formula("p -> (q -> r)"), 2),
                  AtomBoundExceeded);
  CHECK_THROWS_AS(prove_tautology(parse_formula("x:p -> p")), KernelError);
}

TEST_CASE("exhaustive agreement with the truth table at small size") {
  std::vector<std::string> atoms = {"p", "q"};
  std::size_t proved = 0, rejected = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& f : enumerate(atoms, n)) {
      bool taut = is_tautology(f);
      if (taut) {
        ProofScript p = prove_tautology(f);
        REQUIRE(check_proof(p).valid);
        REQUIRE(equal(p.final_formula(), f));
        ++proved;
      } else {
        CHECK_THROWS_AS(prove_tautology(f), NotATautology);
        ++rejected;
      }
    }
  }
  CHECK(proved + rejected == 2 + 6 + 30 + 186 + 1290);
  CHECK(proved > 0);
}
