#include "jluk/prover.hpp"

#include <cstdint>
#include <map>
#include <string_view>
#include <tuple>
#include <unordered_map>

#include "jluk/deduction.hpp"
#include "jluk/lemmas.hpp"
#include "jluk/printer.hpp"
#include "jluk/semantics.hpp"

namespace jluk {

namespace {

// the formula a valuation forces for f: f itself when true under v, ~f when
// false.  Kalmár's signed form.
FormulaPtr signed_form(const FormulaPtr& f, bool truth) {
  return truth ? f : Formula::neg(f);
}

// lemma instances recur across the valuation branches (the subformula
// nodes are shared), so instantiate each once per prove call
struct LemmaCache {
  std::map<std::tuple<std::string_view, const Formula*, const Formula*>,
           ProofScript>
      instances;

  const ProofScript& get(std::string_view name, const char* mv1,
                         const FormulaPtr& f1, const char* mv2 = nullptr,
                         const FormulaPtr& f2 = nullptr) {
    auto key = std::make_tuple(name, f1.get(), f2.get());
    auto it = instances.find(key);
    if (it != instances.end()) return it->second;
    Substitution s;
    s.formulas[mv1] = f1;
    if (mv2) s.formulas[mv2] = f2;
    return instances.emplace(key, derive_lemma(std::string(name), s))
        .first->second;
  }
};

struct BranchProver {
  const std::vector<std::string>& atoms;
  std::uint64_t mask;
  ProofBuilder& b;
  LemmaCache& lemmas;
  std::unordered_map<const Formula*, std::uint32_t> memo;

  bool truth_of_atom(const std::string& name) const {
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (atoms[k] == name) return (mask >> k) & 1u;
    throw KernelError("atom '" + name + "' missing from enumeration");
  }

  bool eval(const FormulaPtr& f) const {
    switch (f->kind) {
      case FormulaKind::Atom:
        return truth_of_atom(f->name);
      case FormulaKind::Neg:
        return !eval(f->lhs);
      case FormulaKind::Impl:
        return !eval(f->lhs) || eval(f->rhs);
      default:
        throw KernelError("branch prover expects ->/~ form");
    }
  }

  // prove the signed form of f under this valuation; returns a line index
  std::uint32_t derive(const FormulaPtr& f) {
    auto it = memo.find(f.get());
    if (it != memo.end()) return it->second;
    std::uint32_t out = derive_uncached(f);
    memo.emplace(f.get(), out);
    return out;
  }

  std::uint32_t derive_uncached(const FormulaPtr& f) {
    switch (f->kind) {
      case FormulaKind::Atom:
        return b.premise(signed_form(f, truth_of_atom(f->name)));
      case FormulaKind::Neg: {
        std::uint32_t inner = derive(f->lhs);
        if (eval(f->lhs)) {
          // have lhs, want ~~lhs
          std::uint32_t dni = b.append(lemmas.get("dn_intro", "phi", f->lhs));
          return b.mp(dni, inner);
        }
        return inner; // signed form of f is ~lhs, already in hand
      }
      case FormulaKind::Impl: {
        bool ta = eval(f->lhs), tc = eval(f->rhs);
        if (!ta) {
          // ~lhs |- lhs -> rhs
          std::uint32_t na = derive(f->lhs);
          std::uint32_t ef =
              b.append(lemmas.get("ex_falso", "phi", f->lhs, "psi", f->rhs));
          return b.mp(ef, na);
        }
        if (tc) {
          // rhs |- lhs -> rhs
          std::uint32_t cons = derive(f->rhs);
          std::uint32_t a1 = b.axiom(
              SchemeId::L1,
              Formula::impl(f->rhs, Formula::impl(f->lhs, f->rhs)));
          return b.mp(a1, cons);
        }
        // lhs, ~rhs |- ~(lhs -> rhs)
        std::uint32_t ant = derive(f->lhs);
        std::uint32_t nc = derive(f->rhs);
        std::uint32_t ri =
            b.append(lemmas.get("refute_impl", "phi", f->lhs, "psi", f->rhs));
        return b.mp(b.mp(ri, ant), nc);
      }
      default:
        throw KernelError("branch prover expects ->/~ form");
    }
  }
};

ProofScript branch_proof(const FormulaPtr& g,
                         const std::vector<std::string>& atoms,
                         const std::vector<FormulaPtr>& atom_nodes,
                         std::uint64_t mask, LemmaCache& lemmas) {
  std::vector<FormulaPtr> premises;
  for (std::size_t k = 0; k < atoms.size(); ++k)
    premises.push_back(signed_form(atom_nodes[k], (mask >> k) & 1u));
  ProofBuilder b(Calculus::Luk, premises, true);
  BranchProver bp{atoms, mask, b, lemmas, {}};
  return b.take(bp.derive(g));
}

// one-line proof when g is itself an axiom instance
bool axiom_scheme_of(const FormulaPtr& g, SchemeId& out) {
  for (SchemeId s : {SchemeId::L1, SchemeId::L2, SchemeId::L3}) {
    if (match_scheme(g, s)) {
      out = s;
      return true;
    }
  }
  return false;
}

} // namespace

ProofScript prove_tautology(const FormulaPtr& f, std::size_t max_atoms) {
  if (contains_justification(f))
    throw KernelError("cannot prove a formula containing justification terms");
  std::vector<std::string> atoms = collect_atoms(f);
  if (atoms.size() > max_atoms)
    throw AtomBoundExceeded("formula has " + std::to_string(atoms.size()) +
                            " atoms, bound is " + std::to_string(max_atoms));
  if (auto v = find_falsifying(f))
    throw NotATautology("not a tautology: falsified by " + render_valuation(*v),
                        *v);

  FormulaPtr g = expand_connectives(f);

  SchemeId s;
  if (axiom_scheme_of(g, s)) {
    ProofBuilder b(Calculus::Luk, {}, false);
    return b.take(b.axiom(s, g));
  }

  std::size_t n = atoms.size();
  LemmaCache lemmas;
  std::vector<FormulaPtr> atom_nodes;
  for (const auto& name : atoms) atom_nodes.push_back(Formula::atom(name));

  std::uint64_t total = n >= 64 ? 0 : (std::uint64_t{1} << n);
  std::vector<ProofScript> branch(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    branch[mask] = branch_proof(g, atoms, atom_nodes, mask, lemmas);

  // eliminate atoms last-first: each round halves the branch count
  for (std::size_t k = n; k-- > 0;) {
    const FormulaPtr& atom = atom_nodes[k];
    const FormulaPtr not_atom = Formula::neg(atom);
    const ProofScript& cases =
        lemmas.get("case_analysis", "phi", atom, "chi", g);
    std::uint64_t half = std::uint64_t{1} << k;
    std::vector<ProofScript> merged(half);
    for (std::uint64_t mask = 0; mask < half; ++mask) {
      ProofScript on_true = detail::discharge(branch[mask | half], atom);
      ProofScript on_false = detail::discharge(branch[mask], not_atom);
      ProofBuilder b(Calculus::Luk, on_true.premises, true);
      std::uint32_t pos = b.append(on_true);
      std::uint32_t neg = b.append(on_false);
      std::uint32_t ca = b.append(cases);
      merged[mask] = b.take(b.mp(b.mp(ca, pos), neg));
    }
    branch = std::move(merged);
  }

  return branch[0];
}

} // namespace jluk
