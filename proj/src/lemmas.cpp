#include "jluk/lemmas.hpp"

#include <map>

#include "jluk/deduction.hpp"
#include "jluk/errors.hpp"

namespace jluk {

namespace {

const FormulaPtr& mv_phi() {
  static const FormulaPtr f = Formula::atom("phi");
  return f;
}
const FormulaPtr& mv_psi() {
  static const FormulaPtr f = Formula::atom("psi");
  return f;
}
const FormulaPtr& mv_chi() {
  static const FormulaPtr f = Formula::atom("chi");
  return f;
}

FormulaPtr neg(const FormulaPtr& f) { return Formula::neg(f); }
FormulaPtr impl(const FormulaPtr& a, const FormulaPtr& b) {
  return Formula::impl(a, b);
}

// phi -> phi
ProofScript build_identity() {
  ProofBuilder b(Calculus::Luk, {}, true);
  return b.take(emit_identity(b, mv_phi()));
}

// phi -> (psi -> phi): a single L1 instance
ProofScript build_weakening() {
  ProofBuilder b(Calculus::Luk, {}, true);
  return b.take(b.axiom(SchemeId::L1, impl(mv_phi(), impl(mv_psi(), mv_phi()))));
}

// ~phi -> (phi -> psi)
ProofScript build_ex_falso() {
  const FormulaPtr p = mv_phi(), q = mv_psi();
  ProofBuilder b(Calculus::Luk, {neg(p), p}, true);
  std::uint32_t prn = b.premise(neg(p));
  std::uint32_t prp = b.premise(p);
  std::uint32_t a1 =
      b.axiom(SchemeId::L1, impl(neg(p), impl(neg(q), neg(p))));
  std::uint32_t m1 = b.mp(a1, prn); // ~psi -> ~phi
  std::uint32_t a3 =
      b.axiom(SchemeId::L3, impl(impl(neg(q), neg(p)), impl(p, q)));
  std::uint32_t m2 = b.mp(a3, m1); // phi -> psi
  std::uint32_t m3 = b.mp(m2, prp); // psi
  ProofScript inner = b.take(m3);
  return detail::discharge(detail::discharge(inner, p), neg(p));
}

// ~~phi -> phi
ProofScript build_dn_elim() {
  const FormulaPtr p = mv_phi();
  const FormulaPtr nn = neg(neg(p));
  ProofBuilder b(Calculus::Luk, {nn}, true);
  std::uint32_t pr = b.premise(nn);
  std::uint32_t a1 =
      b.axiom(SchemeId::L1, impl(nn, impl(neg(neg(nn)), nn)));
  std::uint32_t m1 = b.mp(a1, pr); // ~~~~phi -> ~~phi
  std::uint32_t a2 = b.axiom(
      SchemeId::L3, impl(impl(neg(neg(nn)), nn), impl(neg(p), neg(nn))));
  std::uint32_t m2 = b.mp(a2, m1); // ~phi -> ~~~phi
  std::uint32_t a3 =
      b.axiom(SchemeId::L3, impl(impl(neg(p), neg(nn)), impl(nn, p)));
  std::uint32_t m3 = b.mp(a3, m2); // ~~phi -> phi
  std::uint32_t m4 = b.mp(m3, pr); // phi
  ProofScript inner = b.take(m4);
  return detail::discharge(inner, nn);
}

ProofScript instantiated(const std::string& name,
                         std::map<std::string, FormulaPtr> repl);

// phi -> ~~phi: from dn_elim at ~phi by contraposition (L3)
ProofScript build_dn_intro() {
  const FormulaPtr p = mv_phi();
  ProofBuilder b(Calculus::Luk, {}, true);
  std::uint32_t dne = b.append(instantiated("dn_elim", {{"phi", neg(p)}}));
  // dne : ~~~phi -> ~phi
  std::uint32_t a = b.axiom(
      SchemeId::L3,
      impl(impl(neg(neg(neg(p))), neg(p)), impl(p, neg(neg(p)))));
  return b.take(b.mp(a, dne));
}

// (phi -> psi) -> (~psi -> ~phi)
ProofScript build_contraposition() {
  const FormulaPtr p = mv_phi(), q = mv_psi();
  const FormulaPtr pq = impl(p, q);
  ProofBuilder b(Calculus::Luk, {pq}, true);
  std::uint32_t pr = b.premise(pq);
  std::uint32_t dne = b.append(instantiated("dn_elim", {{"phi", p}}));
  std::uint32_t dni = b.append(instantiated("dn_intro", {{"phi", q}}));
  std::uint32_t c1 = emit_compose(b, dne, pr); // ~~phi -> psi
  std::uint32_t c2 = emit_compose(b, c1, dni); // ~~phi -> ~~psi
  std::uint32_t a = b.axiom(
      SchemeId::L3,
      impl(impl(neg(neg(p)), neg(neg(q))), impl(neg(q), neg(p))));
  std::uint32_t m = b.mp(a, c2); // ~psi -> ~phi
  return detail::discharge(b.take(m), pq);
}

// phi -> (~psi -> ~(phi -> psi))
ProofScript build_refute_impl() {
  const FormulaPtr p = mv_phi(), q = mv_psi();
  const FormulaPtr pq = impl(p, q);

  ProofScript applied; // {phi, ~psi} |- (phi -> psi) -> psi
  {
    ProofBuilder b(Calculus::Luk, {p, neg(q), pq}, true);
    std::uint32_t pr_imp = b.premise(pq);
    std::uint32_t pr_p = b.premise(p);
    std::uint32_t m = b.mp(pr_imp, pr_p); // psi
    applied = detail::discharge(b.take(m), pq);
  }

  ProofBuilder b(Calculus::Luk, {p, neg(q)}, true);
  std::uint32_t i1 = b.append(applied);
  std::uint32_t ccp = b.append(
      instantiated("contraposition", {{"phi", pq}, {"psi", q}}));
  std::uint32_t m1 = b.mp(ccp, i1);            // ~psi -> ~(phi -> psi)
  std::uint32_t m2 = b.mp(m1, b.premise(neg(q))); // ~(phi -> psi)
  ProofScript mid = b.take(m2);
  return detail::discharge(detail::discharge(mid, neg(q)), p);
}

// (phi -> chi) -> ((~phi -> chi) -> chi)
ProofScript build_case_analysis() {
  const FormulaPtr p = mv_phi(), c = mv_chi();
  const FormulaPtr pos = impl(p, c);
  const FormulaPtr negcase = impl(neg(p), c);
  const FormulaPtr cc = impl(c, c);

  ProofScript absurd; // {pos, negcase} |- ~chi -> ~(chi -> chi)
  {
    ProofBuilder b(Calculus::Luk, {pos, negcase, neg(c)}, true);
    std::uint32_t pr_pos = b.premise(pos);
    std::uint32_t pr_neg = b.premise(negcase);
    std::uint32_t pr_nc = b.premise(neg(c));
    std::uint32_t cp1 = b.append(
        instantiated("contraposition", {{"phi", p}, {"psi", c}}));
    std::uint32_t np = b.mp(b.mp(cp1, pr_pos), pr_nc); // ~phi
    std::uint32_t cp2 = b.append(
        instantiated("contraposition", {{"phi", neg(p)}, {"psi", c}}));
    std::uint32_t nnp = b.mp(b.mp(cp2, pr_neg), pr_nc); // ~~phi
    std::uint32_t ef = b.append(
        instantiated("ex_falso", {{"phi", neg(p)}, {"psi", neg(cc)}}));
    std::uint32_t boom = b.mp(b.mp(ef, nnp), np); // ~(chi -> chi)
    absurd = detail::discharge(b.take(boom), neg(c));
  }

  ProofBuilder b(Calculus::Luk, {pos, negcase}, true);
  std::uint32_t i1 = b.append(absurd); // ~chi -> ~(chi -> chi)
  std::uint32_t a =
      b.axiom(SchemeId::L3, impl(impl(neg(c), neg(cc)), impl(cc, c)));
  std::uint32_t m1 = b.mp(a, i1); // (chi -> chi) -> chi
  std::uint32_t id = emit_identity(b, c);
  std::uint32_t m2 = b.mp(m1, id); // chi
  return detail::discharge(detail::discharge(b.take(m2), negcase), pos);
}

struct LemmaDef {
  std::vector<std::string> metavars;
  ProofScript (*build)();
};

const std::map<std::string, LemmaDef>& definitions() {
  static const std::map<std::string, LemmaDef> defs = {
      {"identity", {{"phi"}, build_identity}},
      {"weakening", {{"phi", "psi"}, build_weakening}},
      {"dn_intro", {{"phi"}, build_dn_intro}},
      {"dn_elim", {{"phi"}, build_dn_elim}},
      {"ex_falso", {{"phi", "psi"}, build_ex_falso}},
      {"contraposition", {{"phi", "psi"}, build_contraposition}},
      {"refute_impl", {{"phi", "psi"}, build_refute_impl}},
      {"case_analysis", {{"phi", "chi"}, build_case_analysis}},
  };
  return defs;
}

// Builders may instantiate earlier templates.  While the cache is being
// filled we cannot re-enter its initializer, so the partial map is exposed
// through this pointer for the duration of the build.  Only the thread
// running the initializer ever sees it non-null.
std::map<std::string, ProofScript>* g_building = nullptr;

const std::map<std::string, ProofScript>& all_templates() {
  static const std::map<std::string, ProofScript> built = [] {
    std::map<std::string, ProofScript> m;
    g_building = &m;
    // dependency order: later entries instantiate earlier ones
    for (const char* n : {"identity", "weakening", "ex_falso", "dn_elim",
                          "dn_intro", "contraposition", "refute_impl",
                          "case_analysis"})
      m.emplace(n, definitions().at(n).build());
    g_building = nullptr;
    return m;
  }();
  return built;
}

const ProofScript& lemma_template(const std::string& name) {
  const std::map<std::string, ProofScript>& m =
      g_building ? *g_building : all_templates();
  auto it = m.find(name);
  if (it == m.end()) throw KernelError("unknown lemma '" + name + "'");
  return it->second;
}

ProofScript substitute_script(const ProofScript& s,
                              const std::map<std::string, FormulaPtr>& repl) {
  AtomSubstituter sub(repl);
  ProofScript out;
  out.calculus = s.calculus;
  for (const auto& f : s.premises) out.premises.push_back(sub(f));
  for (const auto& line : s.lines)
    out.lines.push_back({line.index, sub(line.formula), line.rule});
  return out;
}

ProofScript instantiated(const std::string& name,
                         std::map<std::string, FormulaPtr> repl) {
  return substitute_script(lemma_template(name), repl);
}

} // namespace

std::vector<std::string> lemma_catalogue() {
  std::vector<std::string> names;
  for (const auto& [name, _] : definitions()) names.push_back(name);
  return names;
}

std::vector<std::string> lemma_metavariables(const std::string& name) {
  auto it = definitions().find(name);
  if (it == definitions().end())
    throw KernelError("unknown lemma '" + name + "'");
  return it->second.metavars;
}

ProofScript derive_lemma(const std::string& name, const Substitution& sub) {
  auto it = definitions().find(name);
  if (it == definitions().end())
    throw KernelError("unknown lemma '" + name + "'");
  const LemmaDef& def = it->second;
  if (!sub.terms.empty())
    throw KernelError("lemmas take formula metavariables only");
  std::map<std::string, FormulaPtr> repl;
  for (const auto& mv : def.metavars) {
    auto b = sub.formulas.find(mv);
    if (b == sub.formulas.end())
      throw KernelError("lemma '" + name + "' needs a binding for '" + mv + "'");
    repl[mv] = b->second;
  }
  if (sub.formulas.size() != def.metavars.size())
    throw KernelError("lemma '" + name + "' got bindings it does not use");
  return substitute_script(lemma_template(name), repl);
}

FormulaPtr lemma_statement(const std::string& name, const Substitution& sub) {
  // cheap: instantiate the template's final line only
  auto it = definitions().find(name);
  if (it == definitions().end())
    throw KernelError("unknown lemma '" + name + "'");
  if (!sub.terms.empty())
    throw KernelError("lemmas take formula metavariables only");
  std::map<std::string, FormulaPtr> repl(sub.formulas.begin(),
                                         sub.formulas.end());
  return substitute_atoms(lemma_template(name).final_formula(), repl);
}

} // namespace jluk
