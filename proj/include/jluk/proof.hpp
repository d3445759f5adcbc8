#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "jluk/formula.hpp"
#include "jluk/scheme.hpp"

namespace jluk {

enum class Calculus : std::uint8_t { Luk, JL };

enum class RuleKind : std::uint8_t {
  Premise,  // both calculi
  Axiom,    // luk: ax1/ax2/ax3
  MP,       // both: modus ponens, written "mp <major> <minor>"
  CSAxiom,  // jl: cs ax1/ax2/ax3
  AppAxiom, // jl: instance of the application scheme
  SumAxiom, // jl: instance of a sum scheme
  AppIntro, // jl: application introduction, two references in either order
};

struct Rule {
  RuleKind kind = RuleKind::Premise;
  SchemeId scheme = SchemeId::L1;  // Axiom, CSAxiom
  std::uint32_t ref1 = 0, ref2 = 0; // MP: major, minor; AppIntro: as written

  static Rule premise() { return {RuleKind::Premise, SchemeId::L1, 0, 0}; }
  static Rule axiom(SchemeId s) { return {RuleKind::Axiom, s, 0, 0}; }
  static Rule cs_axiom(SchemeId s) { return {RuleKind::CSAxiom, s, 0, 0}; }
  static Rule app_axiom() { return {RuleKind::AppAxiom, SchemeId::L1, 0, 0}; }
  static Rule sum_axiom() { return {RuleKind::SumAxiom, SchemeId::L1, 0, 0}; }
  static Rule mp(std::uint32_t major, std::uint32_t minor) {
    return {RuleKind::MP, SchemeId::L1, major, minor};
  }
  static Rule app_intro(std::uint32_t i, std::uint32_t j) {
    return {RuleKind::AppIntro, SchemeId::L1, i, j};
  }
};

bool equal(const Rule& a, const Rule& b);

struct ProofLine {
  std::uint32_t index = 0; // 1-based, contiguous
  FormulaPtr formula;
  Rule rule;
};

/// A proof script: premise list plus numbered lines. Line indices run
/// 1..n and every rule reference points strictly earlier.
struct ProofScript {
  Calculus calculus = Calculus::Luk;
  std::vector<FormulaPtr> premises;
  std::vector<ProofLine> lines;

  const FormulaPtr& final_formula() const;
  bool has_premise(const FormulaPtr& f) const;
};

bool equal(const ProofScript& a, const ProofScript& b);

/// Enforce the structural invariants (contiguous 1-based indices, earlier
/// distinct references, rules compatible with the calculus tag, and no
/// justification formulas anywhere in a luk script). Throws StructureError.
void validate_structure(const ProofScript& p);

/// Incremental script assembly used by the prover, the deduction theorem
/// and the lemma library. With dedup enabled, a line whose formula is
/// already present is not added again; callers get the existing index.
/// All indices exchanged with the builder are 1-based.
class ProofBuilder {
public:
  ProofBuilder(Calculus calc, std::vector<FormulaPtr> premises, bool dedup);

  std::uint32_t premise(const FormulaPtr& f);
  std::uint32_t axiom(SchemeId s, const FormulaPtr& instance);
  /// Adds the modus ponens conclusion of two existing lines.
  std::uint32_t mp(std::uint32_t major, std::uint32_t minor);
  /// Appends a whole script (premises must be a subset of this builder's),
  /// remapping its references. Returns the new index of its final line.
  std::uint32_t append(const ProofScript& s);

  const FormulaPtr& formula_at(std::uint32_t index) const;
  std::uint32_t line_count() const;
  /// Finish, making `final_index` the last line (duplicating it if later
  /// lines were added after it).
  ProofScript take(std::uint32_t final_index);

private:
  std::uint32_t add_line(const FormulaPtr& f, Rule r);

  ProofScript script_;
  bool dedup_;
  std::unordered_map<FormulaPtr, std::uint32_t, FormulaPtrHash, FormulaPtrEq>
      by_formula_;
};

/// Emit the classic five-line derivation of f -> f (only L1, L2 and MP).
/// Returns the index of the final line.
std::uint32_t emit_identity(ProofBuilder& b, const FormulaPtr& f);

/// From lines ia : X -> Y and ib : Y -> Z emit X -> Z (five lines).
std::uint32_t emit_compose(ProofBuilder& b, std::uint32_t ia, std::uint32_t ib);

} // namespace jluk
