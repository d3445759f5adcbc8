#include "doctest.h"

#include <map>

#include "jluk/errors.hpp"
#include "jluk/check.hpp"
#include "jluk/lemmas.hpp"
#include "jluk/parser.hpp"
#include "jluk/printer.hpp"
#include "jluk/semantics.hpp"
#include "util.hpp"

using namespace jluk;

namespace {

const std::map<std::string, std::string>& expected_statements() {
  static const std::map<std::string, std::string> m = {
      {"identity", "phi -> phi"},
      {"weakening", "phi -> (psi -> phi)"},
      {"dn_intro", "phi -> ~~phi"},
      {"dn_elim", "~~phi -> phi"},
      {"ex_falso", "~phi -> (phi -> psi)"},
      {"contraposition", "(phi -> psi) -> (~psi -> ~phi)"},
      {"refute_impl", "phi -> (~psi -> ~(phi -> psi))"},
      {"case_analysis", "(phi -> chi) -> ((~phi -> chi) -> chi)"},
  };
  return m;
}

Substitution identity_sub(const std::string& name) {
  Substitution sub;
  for (const auto& mv : lemma_metavariables(name))
    sub.formulas[mv] = Formula::atom(mv);
  return sub;
}

} // namespace

TEST_CASE("catalogue lemmas are valid premise-free proofs of their statements") {
  auto names = lemma_catalogue();
  CHECK(names.size() == expected_statements().size());
  for (const auto& name : names) {
    CAPTURE(name);
    ProofScript p = derive_lemma(name, identity_sub(name));
    Verdict v = check_proof(p);
    CAPTURE(v.reason);
    CHECK(v.valid);
    CHECK(p.premises.empty());
    CHECK(equal(p.final_formula(),
                parse_formula(expected_statements().at(name))));
    CHECK(equal(lemma_statement(name, identity_sub(name)),
                p.final_formula()));
  }
}

TEST_CASE("instantiated lemmas remain valid and state tautologies") {
  testutil::Rng r(555);
  for (const auto& name : lemma_catalogue()) {
    for (int k = 0; k < 20; ++k) {
      Substitution sub;
      for (const auto& mv : lemma_metavariables(name))
        sub.formulas[mv] = testutil::random_small(r);
      CAPTURE(name);
      ProofScript p = derive_lemma(name, sub);
      Verdict v = check_proof(p);
      CAPTURE(v.reason);
      REQUIRE(v.valid);
      FormulaPtr stated = lemma_statement(name, sub);
      CHECK(equal(p.final_formula(), stated));
      CHECK(is_tautology(stated));
    }
  }
}

TEST_CASE("binding validation") {
  CHECK_THROWS_AS(derive_lemma("no_such_lemma", {}), KernelError);
  CHECK_THROWS_AS(derive_lemma("identity", {}), KernelError); // phi missing

  Substitution extra;
  extra.formulas["phi"] = parse_formula("p");
  extra.formulas["psi"] = parse_formula("q");
  CHECK_THROWS_AS(derive_lemma("identity", extra), KernelError);

  Substitution with_term;
  with_term.formulas["phi"] = parse_formula("p");
  with_term.terms["s"] = parse_term("c1");
  CHECK_THROWS_AS(derive_lemma("identity", with_term), KernelError);
}
