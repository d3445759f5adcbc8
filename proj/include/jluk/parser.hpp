#pragma once

#include <string>
#include <string_view>

#include "jluk/errors.hpp"
#include "jluk/formula.hpp"
#include "jluk/proof.hpp"

namespace jluk {

/// Parse a single formula; the entire input must be consumed. `#` starts
/// a comment running to the end of the line; whitespace is insignificant.
FormulaPtr parse_formula(std::string_view text);

/// Parse a single justification term. Constants begin with 'c', variables
/// with 'x' or 'y'; compound terms are always bracketed: [s*t], [s+t].
TermPtr parse_term(std::string_view text);

/// Parse a proof script:
///
///   # comment
///   system: luk            (optional; default luk; "jl" for the
///                            justification calculus)
///   premise: <formula>     (zero or more, before the numbered lines)
///   1. <formula> ; <rule>
///   ...
///
/// Luk rules: premise | ax1 | ax2 | ax3 | mp I J   (I major, J minor).
/// JL rules:  premise | cs ax1|ax2|ax3 | app | sum | mp I J | appintro I J.
/// Throws ParseError on bad syntax and StructureError on structural
/// violations (indices, references, calculus mismatch, empty script).
ProofScript parse_script(std::string_view text);

} // namespace jluk
