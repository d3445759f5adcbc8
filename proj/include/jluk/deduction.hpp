#pragma once

#include "jluk/proof.hpp"

namespace jluk {

/// Herbrand-Tarski compilation of a luk proof of F from premises {hyp, ...}
/// into a proof of hyp -> F without hyp. Each source line G becomes
/// hyp -> G: the identity derivation when G = hyp, an L1 instance plus MP
/// when G is an axiom or one of the remaining premises, and an L2 instance
/// plus two MPs when G was concluded by MP. Throws KernelError if p is not
/// a valid luk proof or hyp is not among its premises.
ProofScript deduction_theorem(const ProofScript& p, const FormulaPtr& hyp);

namespace detail {

/// Same contract as deduction_theorem, but dependency-aware: lines whose
/// derivation never touches hyp are copied through unchanged and only the
/// affected spine is compiled. Used internally where output size matters;
/// assumes p is valid.
ProofScript discharge(const ProofScript& p, const FormulaPtr& hyp);

} // namespace detail

} // namespace jluk
