#pragma once

#include <string>

#include "jluk/formula.hpp"
#include "jluk/proof.hpp"

namespace jluk {

/// Render a formula in the concrete syntax accepted by parse_formula.
/// Unary operators stay unbracketed; operands of binary connectives are
/// parenthesised unless they bind strictly tighter, and a nested
/// implication is always parenthesised, so Impl(p, Impl(q, p)) renders as
/// "p -> (q -> p)".
std::string render_formula(const FormulaPtr& f);

std::string render_term(const TermPtr& t);

std::string render_rule(const Rule& r);

/// Render a whole script, including the system header and premise lines.
/// parse_script(render_script(p)) reproduces p.
std::string render_script(const ProofScript& p);

} // namespace jluk
