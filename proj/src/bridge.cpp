#include "jluk/bridge.hpp"

#include <string>
#include <vector>

#include "jluk/errors.hpp"
#include "jluk/printer.hpp"

namespace jluk {

PremiseBinding PremiseBinding::automatic(const ProofScript& p) {
  PremiseBinding b;
  std::size_t k = 0;
  for (const auto& f : p.premises) {
    if (b.lookup(f)) continue; // duplicate premise entries share a variable
    b.bind(f, Term::variable("x" + std::to_string(++k)));
  }
  return b;
}

void PremiseBinding::bind(const FormulaPtr& premise, const TermPtr& variable) {
  if (variable->kind != TermKind::Var)
    throw KernelError("premises must be bound to justification variables");
  for (const auto& [f, v] : pairs_) {
    if (equal(f, premise))
      throw KernelError("premise '" + render_formula(premise) +
                        "' bound twice");
    if (equal(v, variable))
      throw KernelError("variable '" + render_term(variable) +
                        "' bound to two premises");
  }
  pairs_.emplace_back(premise, variable);
}

std::optional<TermPtr> PremiseBinding::lookup(const FormulaPtr& premise) const {
  for (const auto& [f, v] : pairs_)
    if (equal(f, premise)) return v;
  return std::nullopt;
}

namespace {

void require_valid(const ProofScript& p, Calculus expected, const char* who) {
  if (p.calculus != expected)
    throw KernelError(std::string(who) + ": wrong calculus");
  Verdict v = check_proof(p);
  if (!v.valid)
    throw KernelError(std::string(who) + ": input proof invalid: " + v.reason);
}

ProofScript lift_impl(const ProofScript& p, const PremiseBinding* binding,
                      const ConstantSpecification& cs, const char* who) {
  require_valid(p, Calculus::Luk, who);

  ProofScript out;
  out.calculus = Calculus::JL;
  if (binding) {
    for (const auto& f : p.premises) {
      auto v = binding->lookup(f);
      if (!v)
        throw KernelError(std::string(who) + ": premise '" +
                          render_formula(f) + "' has no bound variable");
      FormulaPtr jf = Formula::just(*v, f);
      bool seen = false;
      for (const auto& g : out.premises) seen = seen || equal(g, jf);
      if (!seen) out.premises.push_back(jf);
    }
  } else if (!p.premises.empty()) {
    throw KernelError(std::string(who) + ": proof has premises; use lift");
  }

  std::vector<TermPtr> term_of(p.lines.size() + 1);
  for (const auto& line : p.lines) {
    ProofLine jl_line;
    jl_line.index = line.index;
    switch (line.rule.kind) {
      case RuleKind::Premise: {
        TermPtr v = *binding->lookup(line.formula);
        jl_line.formula = Formula::just(v, line.formula);
        jl_line.rule = Rule::premise();
        term_of[line.index] = v;
        break;
      }
      case RuleKind::Axiom: {
        TermPtr c = Term::constant(cs.of(line.rule.scheme));
        jl_line.formula = Formula::just(c, line.formula);
        jl_line.rule = Rule::cs_axiom(line.rule.scheme);
        term_of[line.index] = c;
        break;
      }
      case RuleKind::MP: {
        TermPtr t =
            Term::app(term_of[line.rule.ref1], term_of[line.rule.ref2]);
        jl_line.formula = Formula::just(t, line.formula);
        jl_line.rule = Rule::app_intro(line.rule.ref1, line.rule.ref2);
        term_of[line.index] = t;
        break;
      }
      default:
        throw KernelError(std::string(who) + ": unexpected rule in luk proof");
    }
    out.lines.push_back(std::move(jl_line));
  }
  return out;
}

} // namespace

ProofScript internalize(const ProofScript& p, const ConstantSpecification& cs) {
  return lift_impl(p, nullptr, cs, "internalize");
}

ProofScript lift(const ProofScript& p, const PremiseBinding& b,
                 const ConstantSpecification& cs) {
  return lift_impl(p, &b, cs, "lift");
}

TermPtr extract_term(const ProofScript& p) {
  FormulaPtr f = p.final_formula();
  if (f->kind != FormulaKind::Just)
    throw KernelError("final formula is not of shape t:F");
  return f->term;
}

namespace {

struct Externalizer {
  const ProofScript& src;
  ProofBuilder& b;
  std::vector<std::uint32_t> done; // src line -> output line, 0 = pending

  // formula of a src line, which must be t:F; returns F
  const FormulaPtr& scope(std::uint32_t idx) const {
    const FormulaPtr& f = src.lines[idx - 1].formula;
    if (f->kind != FormulaKind::Just)
      throw KernelError("line " + std::to_string(idx) +
                        ": expected a justified formula");
    return f->lhs;
  }

  std::uint32_t ext(std::uint32_t idx) {
    if (done[idx]) return done[idx];
    std::uint32_t out = ext_uncached(idx);
    done[idx] = out;
    return out;
  }

  std::uint32_t ext_uncached(std::uint32_t idx) {
    const ProofLine& line = src.lines[idx - 1];
    switch (line.rule.kind) {
      case RuleKind::Premise:
        return b.premise(scope(idx));
      case RuleKind::CSAxiom:
        return b.axiom(line.rule.scheme, scope(idx));
      case RuleKind::AppIntro: {
        auto roles = infer_app_intro_roles(src, line.rule.ref1, line.rule.ref2,
                                           line.formula);
        if (!roles)
          throw KernelError("line " + std::to_string(idx) +
                            ": appintro roles unresolved");
        return b.mp(ext(roles->major), ext(roles->minor));
      }
      case RuleKind::MP: {
        const ProofLine& major = src.lines[line.rule.ref1 - 1];
        // sum detour: major is s:F -> [s+t]:F, so the minor already
        // derives a justification of the same scope
        if (major.rule.kind == RuleKind::SumAxiom)
          return ext(line.rule.ref2);
        // partial application: major was itself obtained by mp from an
        // application axiom, so it reads t:F -> [s*t]:G with the first
        // mp's minor witnessing s:(F -> G)
        if (major.rule.kind == RuleKind::MP) {
          const ProofLine& root = src.lines[major.rule.ref1 - 1];
          if (root.rule.kind == RuleKind::AppAxiom)
            return b.mp(ext(major.rule.ref2), ext(line.rule.ref2));
        }
        throw KernelError("line " + std::to_string(idx) +
                          ": term structure not witnessed by the script");
      }
      case RuleKind::AppAxiom:
      case RuleKind::SumAxiom:
        throw KernelError("line " + std::to_string(idx) +
                          ": term structure not witnessed by the script");
      default:
        throw KernelError("line " + std::to_string(idx) +
                          ": unexpected rule in jl proof");
    }
  }
};

} // namespace

ProofScript externalize(const ProofScript& p, const ConstantSpecification& cs) {
  if (p.calculus != Calculus::JL)
    throw KernelError("externalize: wrong calculus");
  Verdict v = check_jl_proof(p, cs);
  if (!v.valid)
    throw KernelError("externalize: input proof invalid: " + v.reason);

  FormulaPtr fin = p.final_formula();
  if (fin->kind != FormulaKind::Just)
    throw KernelError("externalize: final formula is not of shape t:F");
  if (contains_justification(fin->lhs))
    throw KernelError("externalize: justified scope is not a base formula");

  std::vector<FormulaPtr> premises;
  for (const auto& f : p.premises) {
    if (f->kind != FormulaKind::Just || f->term->kind != TermKind::Var ||
        contains_justification(f->lhs))
      throw KernelError("externalize: premise '" + render_formula(f) +
                        "' is not of shape x:A");
    premises.push_back(f->lhs);
  }

  ProofBuilder b(Calculus::Luk, premises, true);
  Externalizer ex{p, b, std::vector<std::uint32_t>(p.lines.size() + 1, 0)};
  return b.take(ex.ext(static_cast<std::uint32_t>(p.lines.size())));
}

ProofScript expand_app_intro(const ProofScript& p) {
  if (p.calculus != Calculus::JL)
    throw KernelError("expand_app_intro: wrong calculus");

  ProofScript out;
  out.calculus = Calculus::JL;
  out.premises = p.premises;
  std::vector<std::uint32_t> remap(p.lines.size() + 1, 0);
  std::uint32_t next = 1;

  auto push = [&](FormulaPtr f, Rule r) {
    out.lines.push_back({next, std::move(f), std::move(r)});
    return next++;
  };

  for (const auto& line : p.lines) {
    if (line.rule.kind != RuleKind::AppIntro) {
      Rule r = line.rule;
      if (r.kind == RuleKind::MP)
        r = Rule::mp(remap[r.ref1], remap[r.ref2]);
      remap[line.index] = push(line.formula, r);
      continue;
    }
    auto roles = infer_app_intro_roles(p, line.rule.ref1, line.rule.ref2,
                                       line.formula);
    if (!roles)
      throw KernelError("line " + std::to_string(line.index) +
                        ": appintro roles unresolved");
    const FormulaPtr& fmaj = p.lines[roles->major - 1].formula;
    const FormulaPtr& fmin = p.lines[roles->minor - 1].formula;
    FormulaPtr ax = Formula::impl(fmaj, Formula::impl(fmin, line.formula));
    std::uint32_t a = push(ax, Rule::app_axiom());
    std::uint32_t m1 =
        push(Formula::impl(fmin, line.formula), Rule::mp(a, remap[roles->major]));
    remap[line.index] = push(line.formula, Rule::mp(m1, remap[roles->minor]));
  }
  validate_structure(out);
  return out;
}

} // namespace jluk
