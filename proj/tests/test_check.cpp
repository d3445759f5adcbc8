#include "doctest.h"

#include "jluk/check.hpp"
#include "jluk/parser.hpp"
#include "jluk/printer.hpp"
#include "jluk/semantics.hpp"
#include "util.hpp"

using namespace jluk;

namespace {
ProofScript data_script(const char* name) {
  return parse_script(testutil::read_data(name));
}
} // namespace

TEST_CASE("golden derivations check valid") {
  for (const char* name : {"golden_chain_luk.txt", "golden_lift_luk.txt",
                           "golden_lift_jl.txt"}) {
    Verdict v = check_proof(data_script(name));
    CAPTURE(name);
    CAPTURE(v.reason);
    CHECK(v.valid);
  }
}

TEST_CASE("single-line perturbations are caught at the perturbed line") {
  SUBCASE("wrong axiom tag") {
    std::string text = testutil::read_data("golden_lift_luk.txt");
    std::size_t at = text.find("; ax1");
    REQUIRE(at != std::string::npos);
    text.replace(at, 5, "; ax2");
    Verdict v = check_proof(parse_script(text));
    CHECK_FALSE(v.valid);
    CHECK(v.failing_line == 3);
  }
  SUBCASE("swapped mp operands") {
    std::string text = testutil::read_data("golden_lift_luk.txt");
    std::size_t at = text.find("; mp 3 1");
    REQUIRE(at != std::string::npos);
    text.replace(at, 8, "; mp 1 3");
    Verdict v = check_proof(parse_script(text));
    CHECK_FALSE(v.valid);
    CHECK(v.failing_line == 4);
  }
  SUBCASE("tampered conclusion") {
    std::string text = testutil::read_data("golden_chain_luk.txt");
    std::size_t at = text.find("6. r ;");
    REQUIRE(at != std::string::npos);
    text.replace(at, 6, "6. q ;");
    Verdict v = check_proof(parse_script(text));
    CHECK_FALSE(v.valid);
    CHECK(v.failing_line == 6);
  }
  SUBCASE("wrong constant for the scheme") {
    std::string text = testutil::read_data("golden_lift_jl.txt");
    std::size_t at = text.find("3. c1:");
    REQUIRE(at != std::string::npos);
    text.replace(at, 6, "3. c3:");
    Verdict v = check_proof(parse_script(text));
    CHECK_FALSE(v.valid);
    CHECK(v.failing_line == 3);
  }
  SUBCASE("undeclared premise") {
    std::string text = testutil::read_data("golden_lift_luk.txt");
    std::size_t at = text.find("1. p ;");
    REQUIRE(at != std::string::npos);
    text.replace(at, 6, "1. r ;");
    Verdict v = check_proof(parse_script(text));
    CHECK_FALSE(v.valid);
    CHECK(v.failing_line == 1);
  }
}

TEST_CASE("appintro accepts its references in either order") {
  std::string text = testutil::read_data("golden_lift_jl.txt");
  std::size_t at = text.find("appintro 6 4");
  REQUIRE(at != std::string::npos);
  text.replace(at, 12, "appintro 4 6");
  Verdict v = check_proof(parse_script(text));
  CAPTURE(v.reason);
  CHECK(v.valid);
}

TEST_CASE("application and sum axiom lines") {
  ProofScript p = parse_script(
      "system: jl\n"
      "premise: x:(p -> q)\n"
      "premise: y:p\n"
      "1. x:(p -> q) ; premise\n"
      "2. y:p ; premise\n"
      "3. x:(p -> q) -> (y:p -> [x*y]:q) ; app\n"
      "4. y:p -> [x*y]:q ; mp 3 1\n"
      "5. [x*y]:q ; mp 4 2\n"
      "6. [x*y]:q -> [[x*y]+c1]:q ; sum\n"
      "7. [[x*y]+c1]:q ; mp 6 5\n"
      "8. [x*y]:q -> [c2+[x*y]]:q ; sum\n"
      "9. [c2+[x*y]]:q ; mp 8 5\n");
  Verdict v = check_proof(p);
  CAPTURE(v.reason);
  CHECK(v.valid);
  CHECK(v.checked_lines == 9);

  SUBCASE("bad application instance") {
    ProofScript bad = parse_script(
        "system: jl\n"
        "premise: x:(p -> q)\n"
        "1. x:(p -> q) ; premise\n"
        "2. x:(p -> q) -> (y:p -> [y*x]:q) ; app\n");
    Verdict w = check_proof(bad);
    CHECK_FALSE(w.valid);
    CHECK(w.failing_line == 2);
  }
  SUBCASE("bad sum instance") {
    ProofScript bad = parse_script(
        "system: jl\n"
        "premise: x:p\n"
        "1. x:p ; premise\n"
        "2. x:p -> [y+c1]:p ; sum\n");
    Verdict w = check_proof(bad);
    CHECK_FALSE(w.valid);
    CHECK(w.failing_line == 2);
  }
}

TEST_CASE("constant specifications can be relabeled") {
  ProofScript p = parse_script("system: jl\n"
                               "1. ca:(p -> (q -> p)) ; cs ax1\n");
  ConstantSpecification relabeled("ca", "cb", "cc");
  CHECK(check_jl_proof(p, relabeled).valid);
  CHECK_FALSE(check_jl_proof(p).valid); // standard wants c1
  CHECK_THROWS_AS(ConstantSpecification("x1", "c2", "c3"), KernelError);
  CHECK_THROWS_AS(ConstantSpecification("c1", "c1", "c3"), KernelError);
}

TEST_CASE("mp needs the exact implication") {
  ProofScript p = parse_script("premise: p -> q\n"
                               "premise: q\n"
                               "1. p -> q ; premise\n"
                               "2. q ; premise\n"
                               "3. p ; mp 1 2\n");
  Verdict v = check_proof(p);
  CHECK_FALSE(v.valid);
  CHECK(v.failing_line == 3);
  CHECK(v.reason.find("mp") != std::string::npos);
}

TEST_CASE("valid premise-free proofs conclude tautologies") {
  testutil::Rng r(1717);
  for (int k = 0; k < 150; ++k) {
    ProofScript p = testutil::random_luk_proof(r, {});
    Verdict v = check_proof(p);
    CAPTURE(render_script(p));
    REQUIRE(v.valid);
    CHECK(is_tautology(p.final_formula()));
  }
}
