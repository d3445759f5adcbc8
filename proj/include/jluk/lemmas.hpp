#pragma once

#include <string>
#include <vector>

#include "jluk/proof.hpp"
#include "jluk/scheme.hpp"

namespace jluk {

/// Names of the shipped lemmas, with their statements:
///   identity            phi -> phi
///   weakening           phi -> (psi -> phi)
///   dn_intro            phi -> ~~phi
///   dn_elim             ~~phi -> phi
///   ex_falso            ~phi -> (phi -> psi)
///   contraposition      (phi -> psi) -> (~psi -> ~phi)
///   refute_impl         phi -> (~psi -> ~(phi -> psi))
///   case_analysis       (phi -> chi) -> ((~phi -> chi) -> chi)
std::vector<std::string> lemma_catalogue();

/// Metavariables a lemma expects ("phi", "psi", "chi" as applicable).
std::vector<std::string> lemma_metavariables(const std::string& name);

/// What derive_lemma(name, sub) will end with.
FormulaPtr lemma_statement(const std::string& name, const Substitution& sub);

/// A premise-free luk proof of the instantiated lemma. Throws KernelError
/// for an unknown name or if sub does not bind exactly the lemma's
/// metavariables.
ProofScript derive_lemma(const std::string& name, const Substitution& sub);

} // namespace jluk
