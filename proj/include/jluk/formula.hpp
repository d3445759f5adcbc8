#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace jluk {

class Term;
class Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class TermKind : std::uint8_t { Const, Var, App, Sum };

/// A justification term: a constant, a variable, or a bracketed binary
/// application [s*t] / sum [s+t]. Nodes are immutable after construction
/// and may be shared freely, also across threads.
class Term {
public:
  TermKind kind;
  std::string name;    // Const, Var
  TermPtr left, right; // App, Sum
  std::size_t hash;

  static TermPtr constant(std::string id);
  static TermPtr variable(std::string id);
  static TermPtr app(TermPtr l, TermPtr r);
  static TermPtr sum(TermPtr l, TermPtr r);
};

bool equal(const TermPtr& a, const TermPtr& b);

std::size_t term_size(const TermPtr& t);  // node count
std::size_t term_depth(const TermPtr& t); // leaf has depth 1
std::size_t term_variable_count(const TermPtr& t); // variable occurrences
void collect_term_variables(const TermPtr& t, std::set<std::string>& out);

enum class FormulaKind : std::uint8_t { Atom, Neg, Impl, And, Or, Just };

/// A propositional formula, possibly with justification subformulas t:F.
/// Immutable; share freely.
class Formula {
public:
  FormulaKind kind;
  std::string name; // Atom
  FormulaPtr lhs;   // Neg child; left of binary; scope of Just
  FormulaPtr rhs;   // right of binary
  TermPtr term;     // Just
  std::size_t hash;
  bool has_just;    // any t:F below (or at) this node

  static FormulaPtr atom(std::string name);
  static FormulaPtr neg(FormulaPtr f);
  static FormulaPtr impl(FormulaPtr antecedent, FormulaPtr consequent);
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr just(TermPtr t, FormulaPtr scope);
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

bool contains_justification(const FormulaPtr& f);

/// All atom names occurring in f, sorted and de-duplicated.
std::vector<std::string> collect_atoms(const FormulaPtr& f);

/// Replace atoms by formulas, uniformly. Atoms without an entry stay.
FormulaPtr substitute_atoms(const FormulaPtr& f,
                            const std::map<std::string, FormulaPtr>& repl);

/// The same substitution applied repeatedly, e.g. to every line of a
/// script. Keeps a node memo across calls, so shared subtrees are
/// rewritten once and the outputs share structure.
class AtomSubstituter {
public:
  explicit AtomSubstituter(std::map<std::string, FormulaPtr> repl)
      : repl_(std::move(repl)) {}
  FormulaPtr operator()(const FormulaPtr& f);

private:
  std::map<std::string, FormulaPtr> repl_;
  std::unordered_map<const Formula*, FormulaPtr> memo_;
};

/// Definitional expansion: a|b becomes ~a -> b and a&b becomes ~(a -> ~b),
/// recursively. Implication, negation and justification structure is kept.
FormulaPtr expand_connectives(const FormulaPtr& f);

/// True iff the identifier is lexically valid: [a-z][a-z0-9_]*.
bool identifier_ok(const std::string& s);

struct FormulaPtrHash {
  std::size_t operator()(const FormulaPtr& f) const { return f->hash; }
};
struct FormulaPtrEq {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return equal(a, b);
  }
};

} // namespace jluk
