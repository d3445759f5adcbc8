#include "jluk/scheme.hpp"

#include "jluk/errors.hpp"

namespace jluk {

const char* scheme_name(SchemeId s) {
  switch (s) {
    case SchemeId::L1: return "ax1";
    case SchemeId::L2: return "ax2";
    case SchemeId::L3: return "ax3";
    case SchemeId::App: return "app";
    case SchemeId::SumL: return "sum_l";
    case SchemeId::SumR: return "sum_r";
  }
  return "?";
}

bool equal(const Substitution& a, const Substitution& b) {
  if (a.formulas.size() != b.formulas.size()) return false;
  if (a.terms.size() != b.terms.size()) return false;
  for (const auto& [k, v] : a.formulas) {
    auto it = b.formulas.find(k);
    if (it == b.formulas.end() || !equal(v, it->second)) return false;
  }
  for (const auto& [k, v] : a.terms) {
    auto it = b.terms.find(k);
    if (it == b.terms.end() || !equal(v, it->second)) return false;
  }
  return true;
}

FormulaPtr scheme_pattern(SchemeId s) {
  static const FormulaPtr phi = Formula::atom("phi");
  static const FormulaPtr psi = Formula::atom("psi");
  static const FormulaPtr chi = Formula::atom("chi");
  static const TermPtr ts = Term::variable("s");
  static const TermPtr tt = Term::variable("t");
  switch (s) {
    case SchemeId::L1:
      return Formula::impl(phi, Formula::impl(psi, phi));
    case SchemeId::L2:
      return Formula::impl(
          Formula::impl(phi, Formula::impl(psi, chi)),
          Formula::impl(Formula::impl(phi, psi), Formula::impl(phi, chi)));
    case SchemeId::L3:
      return Formula::impl(
          Formula::impl(Formula::neg(phi), Formula::neg(psi)),
          Formula::impl(psi, phi));
    case SchemeId::App:
      return Formula::impl(
          Formula::just(ts, Formula::impl(phi, psi)),
          Formula::impl(Formula::just(tt, phi),
                        Formula::just(Term::app(ts, tt), psi)));
    case SchemeId::SumL:
      return Formula::impl(Formula::just(ts, psi),
                           Formula::just(Term::sum(ts, tt), psi));
    case SchemeId::SumR:
      return Formula::impl(Formula::just(tt, psi),
                           Formula::just(Term::sum(ts, tt), psi));
  }
  throw KernelError("unknown scheme");
}

namespace {

bool is_formula_hole(const FormulaPtr& pat) {
  return pat->kind == FormulaKind::Atom &&
         (pat->name == "phi" || pat->name == "psi" || pat->name == "chi");
}

bool is_term_hole(const TermPtr& pat) {
  return pat->kind == TermKind::Var && (pat->name == "s" || pat->name == "t");
}

bool match_term(const TermPtr& pat, const TermPtr& t, Substitution& sub) {
  if (is_term_hole(pat)) {
    auto [it, inserted] = sub.terms.emplace(pat->name, t);
    return inserted || equal(it->second, t);
  }
  if (pat->kind != t->kind) return false;
  switch (pat->kind) {
    case TermKind::Const:
    case TermKind::Var:
      return pat->name == t->name;
    case TermKind::App:
    case TermKind::Sum:
      return match_term(pat->left, t->left, sub) &&
             match_term(pat->right, t->right, sub);
  }
  return false;
}

bool match_formula(const FormulaPtr& pat, const FormulaPtr& f,
                   Substitution& sub) {
  if (is_formula_hole(pat)) {
    auto [it, inserted] = sub.formulas.emplace(pat->name, f);
    return inserted || equal(it->second, f);
  }
  if (pat->kind != f->kind) return false;
  switch (pat->kind) {
    case FormulaKind::Atom:
      return pat->name == f->name;
    case FormulaKind::Neg:
      return match_formula(pat->lhs, f->lhs, sub);
    case FormulaKind::Impl:
    case FormulaKind::And:
    case FormulaKind::Or:
      return match_formula(pat->lhs, f->lhs, sub) &&
             match_formula(pat->rhs, f->rhs, sub);
    case FormulaKind::Just:
      return match_term(pat->term, f->term, sub) &&
             match_formula(pat->lhs, f->lhs, sub);
  }
  return false;
}

// Collect the hole names of a pattern.
void pattern_holes(const FormulaPtr& pat, std::map<std::string, int>& formulas,
                   std::map<std::string, int>& terms);

void pattern_term_holes(const TermPtr& pat, std::map<std::string, int>& terms) {
  if (is_term_hole(pat)) {
    terms[pat->name] = 1;
  } else if (pat->kind == TermKind::App || pat->kind == TermKind::Sum) {
    pattern_term_holes(pat->left, terms);
    pattern_term_holes(pat->right, terms);
  }
}

void pattern_holes(const FormulaPtr& pat, std::map<std::string, int>& formulas,
                   std::map<std::string, int>& terms) {
  if (is_formula_hole(pat)) {
    formulas[pat->name] = 1;
    return;
  }
  switch (pat->kind) {
    case FormulaKind::Atom: break;
    case FormulaKind::Neg: pattern_holes(pat->lhs, formulas, terms); break;
    case FormulaKind::Just:
      pattern_term_holes(pat->term, terms);
      pattern_holes(pat->lhs, formulas, terms);
      break;
    default:
      pattern_holes(pat->lhs, formulas, terms);
      pattern_holes(pat->rhs, formulas, terms);
  }
}

TermPtr build_term(const TermPtr& pat, const Substitution& sub) {
  if (is_term_hole(pat)) return sub.terms.at(pat->name);
  switch (pat->kind) {
    case TermKind::Const:
    case TermKind::Var:
      return pat;
    case TermKind::App:
      return Term::app(build_term(pat->left, sub), build_term(pat->right, sub));
    case TermKind::Sum:
      return Term::sum(build_term(pat->left, sub), build_term(pat->right, sub));
  }
  throw KernelError("unreachable term kind");
}

FormulaPtr build_formula(const FormulaPtr& pat, const Substitution& sub) {
  if (is_formula_hole(pat)) return sub.formulas.at(pat->name);
  switch (pat->kind) {
    case FormulaKind::Atom:
      return pat;
    case FormulaKind::Neg:
      return Formula::neg(build_formula(pat->lhs, sub));
    case FormulaKind::Impl:
      return Formula::impl(build_formula(pat->lhs, sub),
                           build_formula(pat->rhs, sub));
    case FormulaKind::And:
      return Formula::conj(build_formula(pat->lhs, sub),
                           build_formula(pat->rhs, sub));
    case FormulaKind::Or:
      return Formula::disj(build_formula(pat->lhs, sub),
                           build_formula(pat->rhs, sub));
    case FormulaKind::Just:
      return Formula::just(build_term(pat->term, sub),
                           build_formula(pat->lhs, sub));
  }
  throw KernelError("unreachable formula kind");
}

} // namespace

std::optional<Substitution> match_scheme(const FormulaPtr& f, SchemeId s) {
  if (!f) return std::nullopt;
  Substitution sub;
  if (!match_formula(scheme_pattern(s), f, sub)) return std::nullopt;
  return sub;
}

FormulaPtr apply_substitution(SchemeId s, const Substitution& sub) {
  FormulaPtr pat = scheme_pattern(s);
  std::map<std::string, int> fholes, tholes;
  pattern_holes(pat, fholes, tholes);
  for (const auto& [name, _] : fholes)
    if (!sub.formulas.count(name))
      throw KernelError(std::string("substitution misses metavariable '") +
                        name + "' of scheme " + scheme_name(s));
  for (const auto& [name, _] : tholes)
    if (!sub.terms.count(name))
      throw KernelError(std::string("substitution misses term metavariable '") +
                        name + "' of scheme " + scheme_name(s));
  for (const auto& [name, _] : sub.formulas)
    if (!fholes.count(name))
      throw KernelError(std::string("substitution binds '") + name +
                        "', which scheme " + scheme_name(s) + " does not use");
  for (const auto& [name, _] : sub.terms)
    if (!tholes.count(name))
      throw KernelError(std::string("substitution binds term '") + name +
                        "', which scheme " + scheme_name(s) + " does not use");
  return build_formula(pat, sub);
}

} // namespace jluk
