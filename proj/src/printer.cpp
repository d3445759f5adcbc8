#include "jluk/printer.hpp"

#include <sstream>

#include "jluk/errors.hpp"

namespace jluk {

namespace {

// Binding strength; units (atoms, negations, justifications) never need
// parentheses as operands.
int level(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Impl: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    default: return 4;
  }
}

void render(const FormulaPtr& f, std::ostream& out);

void render_child(const FormulaPtr& f, int min_level, std::ostream& out) {
  if (level(f) < min_level) {
    out << '(';
    render(f, out);
    out << ')';
  } else {
    render(f, out);
  }
}

void render(const FormulaPtr& f, std::ostream& out) {
  switch (f->kind) {
    case FormulaKind::Atom:
      out << f->name;
      break;
    case FormulaKind::Neg:
      out << '~';
      render_child(f->lhs, 4, out);
      break;
    case FormulaKind::Just:
      out << render_term(f->term) << ':';
      render_child(f->lhs, 4, out);
      break;
    case FormulaKind::And:
      render_child(f->lhs, 3, out);
      out << " & ";
      render_child(f->rhs, 4, out); // left associative
      break;
    case FormulaKind::Or:
      render_child(f->lhs, 2, out);
      out << " | ";
      render_child(f->rhs, 3, out);
      break;
    case FormulaKind::Impl:
      // a nested implication is always parenthesised, on either side
      render_child(f->lhs, 2, out);
      out << " -> ";
      render_child(f->rhs, 2, out);
      break;
  }
}

} // namespace

std::string render_term(const TermPtr& t) {
  if (!t) throw KernelError("null term");
  switch (t->kind) {
    case TermKind::Const:
    case TermKind::Var:
      return t->name;
    case TermKind::App:
      return "[" + render_term(t->left) + "*" + render_term(t->right) + "]";
    case TermKind::Sum:
      return "[" + render_term(t->left) + "+" + render_term(t->right) + "]";
  }
  throw KernelError("unreachable term kind");
}

std::string render_formula(const FormulaPtr& f) {
  if (!f) throw KernelError("null formula");
  std::ostringstream out;
  render(f, out);
  return out.str();
}

std::string render_rule(const Rule& r) {
  switch (r.kind) {
    case RuleKind::Premise: return "premise";
    case RuleKind::Axiom: return scheme_name(r.scheme);
    case RuleKind::CSAxiom: return std::string("cs ") + scheme_name(r.scheme);
    case RuleKind::AppAxiom: return "app";
    case RuleKind::SumAxiom: return "sum";
    case RuleKind::MP:
      return "mp " + std::to_string(r.ref1) + " " + std::to_string(r.ref2);
    case RuleKind::AppIntro:
      return "appintro " + std::to_string(r.ref1) + " " +
             std::to_string(r.ref2);
  }
  throw KernelError("unreachable rule kind");
}

std::string render_script(const ProofScript& p) {
  std::ostringstream out;
  out << "system: " << (p.calculus == Calculus::Luk ? "luk" : "jl") << "\n";
  for (const auto& f : p.premises)
    out << "premise: " << render_formula(f) << "\n";
  for (const auto& line : p.lines)
    out << line.index << ". " << render_formula(line.formula) << " ; "
        << render_rule(line.rule) << "\n";
  return out.str();
}

} // namespace jluk
