#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jluk/check.hpp"
#include "jluk/proof.hpp"

namespace jluk {

/// Assignment of justification variables to premises: injective, variables
/// only, kept in premise order.
class PremiseBinding {
public:
  PremiseBinding() = default;

  /// x1, x2, ... in the order of p's premise list.
  static PremiseBinding automatic(const ProofScript& p);

  void bind(const FormulaPtr& premise, const TermPtr& variable);
  std::optional<TermPtr> lookup(const FormulaPtr& premise) const;

  const std::vector<std::pair<FormulaPtr, TermPtr>>& pairs() const {
    return pairs_;
  }

private:
  std::vector<std::pair<FormulaPtr, TermPtr>> pairs_;
};

/// Rebuild a valid premise-free luk proof inside the justification
/// calculus, line for line: axiom lines become constant-specification
/// lines, "mp I J" becomes "appintro I J" with the application term of
/// the two cited lines' terms. The result has the same line count and
/// ends in t:F for the source's final F, with t variable-free.
ProofScript internalize(
    const ProofScript& p,
    const ConstantSpecification& cs = ConstantSpecification::standard());

/// Like internalize, for proofs from premises: each premise A enters as
/// the justified premise b(A):A. b must bind every premise.
ProofScript lift(
    const ProofScript& p, const PremiseBinding& b,
    const ConstantSpecification& cs = ConstantSpecification::standard());

/// Inverse direction: from a valid jl proof ending in t:F (F free of
/// justifications, premises all of shape x:A) produce a luk proof of F
/// from the premises A. The structure of t must be witnessed by the
/// script, which the recursive walk enforces; sum detours collapse into
/// the derivation of whichever summand the script actually derived.
ProofScript externalize(
    const ProofScript& p,
    const ConstantSpecification& cs = ConstantSpecification::standard());

/// The justification term of the final line (which must be t:F).
TermPtr extract_term(const ProofScript& p);

/// Replace every appintro line by its three-line derivation: the
/// application axiom instance plus two MPs. Validity and the final
/// formula are preserved.
ProofScript expand_app_intro(const ProofScript& p);

} // namespace jluk
