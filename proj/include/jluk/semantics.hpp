#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "jluk/formula.hpp"

namespace jluk {

using Valuation = std::map<std::string, bool>;

/// Largest atom count accepted by the exhaustive valuation sweep.
inline constexpr std::size_t kMaxSweepAtoms = 26;

/// Classical two-valued evaluation. Throws KernelError if f contains a
/// justification subformula or the valuation misses an atom.
bool eval_formula(const FormulaPtr& f, const Valuation& v);

/// First falsifying valuation in enumeration order (atoms sorted by name,
/// the k-th atom driven by bit k of the valuation index), or nothing if f
/// is a tautology. The two variants are observably identical; the parallel
/// one sweeps the valuation space with OpenMP when it is worthwhile.
std::optional<Valuation> find_falsifying_serial(const FormulaPtr& f);
std::optional<Valuation> find_falsifying_parallel(const FormulaPtr& f);
std::optional<Valuation> find_falsifying(const FormulaPtr& f);

bool is_tautology(const FormulaPtr& f);

std::string render_valuation(const Valuation& v); // "p=1,q=0"

} // namespace jluk
