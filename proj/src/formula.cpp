#include "jluk/formula.hpp"

#include <stdexcept>
#include <unordered_map>

#include "jluk/errors.hpp"

namespace jluk {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  // splitmix-style combine; only quality matters, not stability
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_string(const std::string& s) {
  return std::hash<std::string>{}(s);
}

void require_identifier(const std::string& s, const char* what) {
  if (!identifier_ok(s))
    throw KernelError(std::string(what) + " '" + s +
                      "' is not a valid identifier ([a-z][a-z0-9_]*)");
}

} // namespace

bool identifier_ok(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

TermPtr Term::constant(std::string id) {
  require_identifier(id, "constant");
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Const;
  t->name = std::move(id);
  t->hash = mix(1, hash_string(t->name));
  return t;
}

TermPtr Term::variable(std::string id) {
  require_identifier(id, "variable");
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->name = std::move(id);
  t->hash = mix(2, hash_string(t->name));
  return t;
}

static TermPtr binary_term(TermKind k, TermPtr l, TermPtr r, std::size_t tag) {
  if (!l || !r) throw KernelError("null subterm");
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->left = std::move(l);
  t->right = std::move(r);
  t->hash = mix(mix(tag, t->left->hash), t->right->hash);
  return t;
}

TermPtr Term::app(TermPtr l, TermPtr r) {
  return binary_term(TermKind::App, std::move(l), std::move(r), 3);
}

TermPtr Term::sum(TermPtr l, TermPtr r) {
  return binary_term(TermKind::Sum, std::move(l), std::move(r), 4);
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Const:
    case TermKind::Var:
      return a->name == b->name;
    case TermKind::App:
    case TermKind::Sum:
      return equal(a->left, b->left) && equal(a->right, b->right);
  }
  return false;
}

std::size_t term_size(const TermPtr& t) {
  if (!t) return 0;
  if (t->kind == TermKind::Const || t->kind == TermKind::Var) return 1;
  return term_size(t->left) + term_size(t->right) + 1;
}

std::size_t term_depth(const TermPtr& t) {
  if (!t) return 0;
  if (t->kind == TermKind::Const || t->kind == TermKind::Var) return 1;
  return std::max(term_depth(t->left), term_depth(t->right)) + 1;
}

std::size_t term_variable_count(const TermPtr& t) {
  if (!t) return 0;
  if (t->kind == TermKind::Var) return 1;
  if (t->kind == TermKind::Const) return 0;
  return term_variable_count(t->left) + term_variable_count(t->right);
}

void collect_term_variables(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) {
    out.insert(t->name);
  } else if (t->kind == TermKind::App || t->kind == TermKind::Sum) {
    collect_term_variables(t->left, out);
    collect_term_variables(t->right, out);
  }
}

FormulaPtr Formula::atom(std::string name) {
  require_identifier(name, "atom");
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Atom;
  f->name = std::move(name);
  f->hash = mix(11, hash_string(f->name));
  f->has_just = false;
  return f;
}

FormulaPtr Formula::neg(FormulaPtr g) {
  if (!g) throw KernelError("null subformula");
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Neg;
  f->lhs = std::move(g);
  f->hash = mix(12, f->lhs->hash);
  f->has_just = f->lhs->has_just;
  return f;
}

static FormulaPtr binary_formula(FormulaKind k, FormulaPtr l, FormulaPtr r,
                                 std::size_t tag) {
  if (!l || !r) throw KernelError("null subformula");
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  f->hash = mix(mix(tag, f->lhs->hash), f->rhs->hash);
  f->has_just = f->lhs->has_just || f->rhs->has_just;
  return f;
}

FormulaPtr Formula::impl(FormulaPtr a, FormulaPtr c) {
  return binary_formula(FormulaKind::Impl, std::move(a), std::move(c), 13);
}

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
  return binary_formula(FormulaKind::And, std::move(l), std::move(r), 14);
}

FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
  return binary_formula(FormulaKind::Or, std::move(l), std::move(r), 15);
}

FormulaPtr Formula::just(TermPtr t, FormulaPtr scope) {
  if (!t || !scope) throw KernelError("null justification component");
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Just;
  f->term = std::move(t);
  f->lhs = std::move(scope);
  f->hash = mix(mix(16, f->term->hash), f->lhs->hash);
  f->has_just = true;
  return f;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Atom:
      return a->name == b->name;
    case FormulaKind::Neg:
      return equal(a->lhs, b->lhs);
    case FormulaKind::Impl:
    case FormulaKind::And:
    case FormulaKind::Or:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case FormulaKind::Just:
      return equal(a->term, b->term) && equal(a->lhs, b->lhs);
  }
  return false;
}

bool contains_justification(const FormulaPtr& f) {
  return f && f->has_just;
}

static void collect_atoms_into(const FormulaPtr& f, std::set<std::string>& s) {
  if (!f) return;
  switch (f->kind) {
    case FormulaKind::Atom: s.insert(f->name); break;
    case FormulaKind::Neg:
    case FormulaKind::Just: collect_atoms_into(f->lhs, s); break;
    default:
      collect_atoms_into(f->lhs, s);
      collect_atoms_into(f->rhs, s);
  }
}

std::vector<std::string> collect_atoms(const FormulaPtr& f) {
  std::set<std::string> s;
  collect_atoms_into(f, s);
  return {s.begin(), s.end()};
}

namespace {

using Memo = std::unordered_map<const Formula*, FormulaPtr>;

FormulaPtr substitute_rec(const FormulaPtr& f,
                          const std::map<std::string, FormulaPtr>& repl,
                          Memo& memo) {
  auto it = memo.find(f.get());
  if (it != memo.end()) return it->second;
  FormulaPtr out;
  switch (f->kind) {
    case FormulaKind::Atom: {
      auto r = repl.find(f->name);
      out = (r == repl.end()) ? f : r->second;
      break;
    }
    case FormulaKind::Neg:
      out = Formula::neg(substitute_rec(f->lhs, repl, memo));
      break;
    case FormulaKind::Impl:
      out = Formula::impl(substitute_rec(f->lhs, repl, memo),
                          substitute_rec(f->rhs, repl, memo));
      break;
    case FormulaKind::And:
      out = Formula::conj(substitute_rec(f->lhs, repl, memo),
                          substitute_rec(f->rhs, repl, memo));
      break;
    case FormulaKind::Or:
      out = Formula::disj(substitute_rec(f->lhs, repl, memo),
                          substitute_rec(f->rhs, repl, memo));
      break;
    case FormulaKind::Just:
      out = Formula::just(f->term, substitute_rec(f->lhs, repl, memo));
      break;
  }
  memo.emplace(f.get(), out);
  return out;
}

} // namespace

FormulaPtr substitute_atoms(const FormulaPtr& f,
                            const std::map<std::string, FormulaPtr>& repl) {
  if (!f) throw KernelError("null formula");
  Memo memo;
  return substitute_rec(f, repl, memo);
}

FormulaPtr AtomSubstituter::operator()(const FormulaPtr& f) {
  if (!f) throw KernelError("null formula");
  return substitute_rec(f, repl_, memo_);
}

FormulaPtr expand_connectives(const FormulaPtr& f) {
  if (!f) throw KernelError("null formula");
  switch (f->kind) {
    case FormulaKind::Atom:
      return f;
    case FormulaKind::Neg:
      return Formula::neg(expand_connectives(f->lhs));
    case FormulaKind::Impl:
      return Formula::impl(expand_connectives(f->lhs),
                           expand_connectives(f->rhs));
    case FormulaKind::Or: // a|b  =>  ~a -> b
      return Formula::impl(Formula::neg(expand_connectives(f->lhs)),
                           expand_connectives(f->rhs));
    case FormulaKind::And: // a&b  =>  ~(a -> ~b)
      return Formula::neg(
          Formula::impl(expand_connectives(f->lhs),
                        Formula::neg(expand_connectives(f->rhs))));
    case FormulaKind::Just:
      return Formula::just(f->term, expand_connectives(f->lhs));
  }
  throw KernelError("unreachable formula kind");
}

} // namespace jluk
