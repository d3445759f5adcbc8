#pragma once

#include <cstddef>

#include "jluk/errors.hpp"
#include "jluk/proof.hpp"
#include "jluk/semantics.hpp"

namespace jluk {

class NotATautology : public KernelError {
public:
  NotATautology(std::string message, Valuation counterexample)
      : KernelError(std::move(message)),
        counterexample_(std::move(counterexample)) {}
  const Valuation& counterexample() const { return counterexample_; }

private:
  Valuation counterexample_;
};

class AtomBoundExceeded : public KernelError {
public:
  using KernelError::KernelError;
};

inline constexpr std::size_t kDefaultProverAtomBound = 8;

/// Produce a premise-free luk proof of a justification-free tautology.
/// Conjunction and disjunction are first expanded definitionally, so for
/// inputs containing & or | the proof ends in the expansion of f (the two
/// are equivalent under every valuation); for pure ->/~ inputs it ends in
/// f itself. Instances of the three axiom schemes get the one-line proof;
/// everything else goes through the per-valuation signed derivation and
/// case-analysis elimination of atoms. Throws NotATautology (with a
/// falsifying valuation) or AtomBoundExceeded as appropriate.
ProofScript prove_tautology(const FormulaPtr& f,
                            std::size_t max_atoms = kDefaultProverAtomBound);

} // namespace jluk
