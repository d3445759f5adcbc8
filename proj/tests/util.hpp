#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jluk/formula.hpp"
#include "jluk/proof.hpp"
#include "jluk/scheme.hpp"

namespace testutil {

inline std::string read_data(const std::string& name) {
  std::string path = std::string(JLUK_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing data file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(std::uint32_t seed) : gen(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen);
  }
  bool flip() { return below(2) == 0; }
};

// random formula over the given atoms; size budget controls connectives
inline jluk::FormulaPtr random_formula(Rng& r,
                                       const std::vector<std::string>& atoms,
                                       std::size_t budget,
                                       bool allow_and_or = false) {
  using namespace jluk;
  if (budget == 0) return Formula::atom(atoms[r.below(atoms.size())]);
  std::size_t pick = r.below(allow_and_or ? 4 : 2);
  std::size_t left = r.below(budget);
  switch (pick) {
    case 0:
      return Formula::neg(random_formula(r, atoms, budget - 1, allow_and_or));
    case 1:
      return Formula::impl(
          random_formula(r, atoms, left, allow_and_or),
          random_formula(r, atoms, budget - 1 - left, allow_and_or));
    case 2:
      return Formula::conj(
          random_formula(r, atoms, left, allow_and_or),
          random_formula(r, atoms, budget - 1 - left, allow_and_or));
    default:
      return Formula::disj(
          random_formula(r, atoms, left, allow_and_or),
          random_formula(r, atoms, budget - 1 - left, allow_and_or));
  }
}

inline jluk::FormulaPtr random_small(Rng& r) {
  static const std::vector<std::string> atoms = {"p", "q", "r", "s"};
  return random_formula(r, atoms, r.below(3));
}

// a random axiom instance over small formulas
inline std::uint32_t random_axiom(Rng& r, jluk::ProofBuilder& b) {
  using namespace jluk;
  SchemeId s = static_cast<SchemeId>(r.below(3)); // L1..L3 are 0..2
  Substitution sub;
  sub.formulas["phi"] = random_small(r);
  sub.formulas["psi"] = random_small(r);
  if (s == SchemeId::L2) sub.formulas["chi"] = random_small(r);
  return b.axiom(s, apply_substitution(s, sub));
}

// random valid proof: premises entered first, then axiom instances chained
// by modus ponens (each weakening step guarantees an mp is available).
// Always contains at least one mp line.
inline jluk::ProofScript random_luk_proof(
    Rng& r, const std::vector<jluk::FormulaPtr>& premises,
    std::size_t max_lines = 30) {
  using namespace jluk;
  ProofBuilder b(Calculus::Luk, premises, false);
  for (const auto& f : premises) b.premise(f);
  if (b.line_count() == 0) random_axiom(r, b);

  // weakening: from some line f derive g -> f via ax1 and mp
  auto weaken = [&](std::uint32_t over) {
    FormulaPtr f = b.formula_at(over);
    FormulaPtr g = random_small(r);
    std::uint32_t a =
        b.axiom(SchemeId::L1, Formula::impl(f, Formula::impl(g, f)));
    return b.mp(a, over);
  };

  std::size_t target = 4 + r.below(max_lines > 4 ? max_lines - 3 : 1);
  std::uint32_t last = b.line_count();
  bool has_mp = false;
  while (b.line_count() + 2 <= target) {
    if (r.below(4) == 0) {
      last = random_axiom(r, b);
      continue;
    }
    last = weaken(static_cast<std::uint32_t>(r.below(b.line_count())) + 1);
    has_mp = true;
  }
  if (!has_mp) last = weaken(1);
  return b.take(last);
}

inline std::vector<jluk::FormulaPtr> random_premises(Rng& r, std::size_t n) {
  std::vector<jluk::FormulaPtr> out;
  for (std::size_t k = 0; k < n; ++k) {
    jluk::FormulaPtr f = random_small(r);
    bool dup = false;
    for (const auto& g : out) dup = dup || jluk::equal(f, g);
    if (!dup) out.push_back(f);
  }
  return out;
}

} // namespace testutil
