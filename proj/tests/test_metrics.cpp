#include "doctest.h"

#include "jluk/errors.hpp"
#include "jluk/metrics.hpp"
#include "jluk/parser.hpp"
#include "util.hpp"

using namespace jluk;

TEST_CASE("metrics of the reference scripts") {
  Metrics jl =
      proof_metrics(parse_script(testutil::read_data("golden_lift_jl.txt")));
  CHECK(jl.step_count == 7);
  CHECK(jl.rule_histogram ==
        std::map<std::string, std::uint32_t>{
            {"premise", 2}, {"cs", 2}, {"appintro", 3}});
  CHECK(jl.axiom_histogram ==
        std::map<std::string, std::uint32_t>{{"ax1", 1}, {"ax2", 1}});
  // final term [[c2*y]*[c1*x]]: four leaves and three application nodes
  CHECK(jl.term_size == 7);
  CHECK(jl.term_depth == 3);
  CHECK(jl.variable_count == 2);

  Metrics luk =
      proof_metrics(parse_script(testutil::read_data("golden_lift_luk.txt")));
  CHECK(luk.step_count == 7);
  CHECK(luk.rule_histogram ==
        std::map<std::string, std::uint32_t>{
            {"premise", 2}, {"axiom", 2}, {"mp", 3}});
  CHECK_FALSE(luk.term_size.has_value());
  CHECK_FALSE(luk.term_depth.has_value());
  CHECK_FALSE(luk.variable_count.has_value());

  Metrics six =
      proof_metrics(parse_script(testutil::read_data("golden_chain_luk.txt")));
  CHECK(six.step_count == 6);
  CHECK(six.rule_histogram ==
        std::map<std::string, std::uint32_t>{{"premise", 3}, {"mp", 3}});
}

TEST_CASE("size recurrence pins the term fields") {
  Metrics one = proof_metrics(
      parse_script("system: jl\n1. c1:(p -> (q -> p)) ; cs ax1\n"));
  CHECK(one.step_count == 1);
  CHECK(one.term_size == 1);
  CHECK(one.term_depth == 1);
  CHECK(one.variable_count == 0);

  // term_size([s*t]) = term_size(s) + term_size(t) + 1, likewise depth/max
  TermPtr s = parse_term("[[c2*y]*[c1*x]]");
  CHECK(term_size(s) == term_size(s->left) + term_size(s->right) + 1);
  CHECK(term_depth(s) ==
        1 + std::max(term_depth(s->left), term_depth(s->right)));
}

TEST_CASE("step count equals the histogram total") {
  testutil::Rng r(66);
  for (int k = 0; k < 40; ++k) {
    ProofScript p =
        testutil::random_luk_proof(r, testutil::random_premises(r, r.below(3)));
    Metrics m = proof_metrics(p);
    std::uint32_t total = 0;
    for (const auto& [_, n] : m.rule_histogram) total += n;
    CHECK(m.step_count == total);
    CHECK(m.step_count == p.lines.size());
  }
}

TEST_CASE("metrics refuse invalid proofs") {
  CHECK_THROWS_AS(proof_metrics(parse_script("1. p -> q ; ax1\n")),
                  KernelError);
}

TEST_CASE("contribution report") {
  ProofScript luk = parse_script(testutil::read_data("golden_lift_luk.txt"));
  ProofScript jl = parse_script(testutil::read_data("golden_lift_jl.txt"));
  ContributionReport r = contribution_report(luk, jl);
  CHECK(r.steps_preserved);
  CHECK(r.luk.step_count == 7);
  CHECK(r.jl.step_count == 7);
  std::string text = r.to_text();
  CHECK(text.find("base steps: 7") != std::string::npos);
  CHECK(text.find("justified steps: 7") != std::string::npos);
  CHECK(text.find("steps preserved: yes") != std::string::npos);

  ProofScript other = parse_script(testutil::read_data("golden_chain_luk.txt"));
  CHECK_THROWS_AS(contribution_report(other, jl), KernelError);
  CHECK_THROWS_AS(contribution_report(jl, luk), KernelError);
}
