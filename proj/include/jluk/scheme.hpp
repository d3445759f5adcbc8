#pragma once

#include <map>
#include <optional>
#include <string>

#include "jluk/formula.hpp"

namespace jluk {

/// Axiom schemes. L1..L3 are the three implication/negation schemes; App,
/// SumL and SumR are the justification-term schemes
///   App : s:(F -> G) -> (t:F -> [s*t]:G)
///   SumL: s:G -> [s+t]:G
///   SumR: t:G -> [s+t]:G
enum class SchemeId : std::uint8_t { L1, L2, L3, App, SumL, SumR };

const char* scheme_name(SchemeId s); // "ax1", "ax2", "ax3", "app", "sum_l", "sum_r"

/// First-order metavariable bindings. Formula metavariables are phi, psi,
/// chi; the term schemes additionally bind whole terms to s and t.
struct Substitution {
  std::map<std::string, FormulaPtr> formulas;
  std::map<std::string, TermPtr> terms;
};

bool equal(const Substitution& a, const Substitution& b);

/// The scheme shape itself, with metavariables encoded as atoms named
/// phi/psi/chi and term variables named s/t.
FormulaPtr scheme_pattern(SchemeId s);

/// Match f against a scheme. Metavariables bind whole formulas (whole
/// terms for s/t); repeated metavariables must bind equal values. Returns
/// the unique witnessing substitution, or nothing.
std::optional<Substitution> match_scheme(const FormulaPtr& f, SchemeId s);

/// Instantiate a scheme. Every metavariable of the scheme must be bound,
/// and nothing else may be bound; otherwise a KernelError is raised.
FormulaPtr apply_substitution(SchemeId s, const Substitution& sub);

} // namespace jluk
