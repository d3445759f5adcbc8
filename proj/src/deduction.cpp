#include "jluk/deduction.hpp"

#include <vector>

#include "jluk/check.hpp"
#include "jluk/errors.hpp"

namespace jluk {

namespace {

std::vector<FormulaPtr> drop_premise(const std::vector<FormulaPtr>& premises,
                                     const FormulaPtr& hyp) {
  std::vector<FormulaPtr> out;
  for (const auto& f : premises)
    if (!equal(f, hyp)) out.push_back(f);
  return out;
}

void require_valid_with_hyp(const ProofScript& p, const FormulaPtr& hyp,
                            const char* who) {
  if (p.calculus != Calculus::Luk)
    throw KernelError(std::string(who) + " expects a luk script");
  if (!p.has_premise(hyp))
    throw KernelError(std::string(who) +
                      ": the hypothesis is not among the premises");
  Verdict v = check_luk_proof(p);
  if (!v.valid)
    throw KernelError(std::string(who) + ": input proof is invalid (" +
                      v.reason + ")");
}

// f -> (hyp -> f) via L1, then MP against line `have` proving f.
std::uint32_t weaken_under(ProofBuilder& b, const FormulaPtr& hyp,
                           std::uint32_t have) {
  const FormulaPtr& f = b.formula_at(have);
  std::uint32_t a =
      b.axiom(SchemeId::L1, Formula::impl(f, Formula::impl(hyp, f)));
  return b.mp(a, have);
}

// (hyp -> (x -> y)) -> ((hyp -> x) -> (hyp -> y)), then MP twice.
std::uint32_t distribute_under(ProofBuilder& b, const FormulaPtr& hyp,
                               std::uint32_t imp_major,
                               std::uint32_t imp_minor) {
  const FormulaPtr& hmaj = b.formula_at(imp_major); // hyp -> (x -> y)
  const FormulaPtr& hmin = b.formula_at(imp_minor); // hyp -> x
  const FormulaPtr& xy = hmaj->rhs;
  std::uint32_t a = b.axiom(
      SchemeId::L2,
      Formula::impl(hmaj, Formula::impl(hmin, Formula::impl(hyp, xy->rhs))));
  std::uint32_t m = b.mp(a, imp_major);
  return b.mp(m, imp_minor);
}

} // namespace

ProofScript deduction_theorem(const ProofScript& p, const FormulaPtr& hyp) {
  require_valid_with_hyp(p, hyp, "deduction_theorem");

  ProofBuilder b(Calculus::Luk, drop_premise(p.premises, hyp), /*dedup=*/false);
  // compiled[i] proves hyp -> (formula of source line i)
  std::vector<std::uint32_t> compiled(p.lines.size() + 1, 0);

  for (const auto& line : p.lines) {
    const FormulaPtr& f = line.formula;
    if (equal(f, hyp)) {
      compiled[line.index] = emit_identity(b, hyp);
      continue;
    }
    switch (line.rule.kind) {
      case RuleKind::Premise:
        compiled[line.index] = weaken_under(b, hyp, b.premise(f));
        break;
      case RuleKind::Axiom:
        compiled[line.index] =
            weaken_under(b, hyp, b.axiom(line.rule.scheme, f));
        break;
      case RuleKind::MP:
        compiled[line.index] = distribute_under(
            b, hyp, compiled[line.rule.ref1], compiled[line.rule.ref2]);
        break;
      default:
        throw KernelError("deduction_theorem: unexpected rule");
    }
  }
  return b.take(compiled[p.lines.size()]);
}

namespace detail {

ProofScript discharge(const ProofScript& p, const FormulaPtr& hyp) {
  if (p.calculus != Calculus::Luk)
    throw KernelError("discharge expects a luk script");
  if (!p.has_premise(hyp))
    throw KernelError("discharge: the hypothesis is not among the premises");

  const std::size_t n = p.lines.size();
  std::vector<bool> depends(n + 1, false);
  for (const auto& line : p.lines) {
    if (line.rule.kind == RuleKind::Premise && equal(line.formula, hyp))
      depends[line.index] = true;
    else if (line.rule.kind == RuleKind::MP)
      depends[line.index] =
          depends[line.rule.ref1] || depends[line.rule.ref2];
  }

  ProofBuilder b(Calculus::Luk, drop_premise(p.premises, hyp), /*dedup=*/true);
  std::vector<std::uint32_t> plain(n + 1, 0); // proves the source formula
  std::vector<std::uint32_t> under(n + 1, 0); // proves hyp -> source formula

  auto imp_of = [&](std::uint32_t i) -> std::uint32_t {
    if (under[i]) return under[i];
    under[i] = weaken_under(b, hyp, plain[i]);
    return under[i];
  };

  for (const auto& line : p.lines) {
    const std::uint32_t i = line.index;
    const FormulaPtr& f = line.formula;
    if (!depends[i]) {
      switch (line.rule.kind) {
        case RuleKind::Premise: plain[i] = b.premise(f); break;
        case RuleKind::Axiom: plain[i] = b.axiom(line.rule.scheme, f); break;
        case RuleKind::MP:
          plain[i] = b.mp(plain[line.rule.ref1], plain[line.rule.ref2]);
          break;
        default:
          throw KernelError("discharge: unexpected rule");
      }
      continue;
    }
    if (line.rule.kind == RuleKind::Premise) {
      under[i] = emit_identity(b, hyp);
    } else { // a dependent line is either the hyp premise or an MP
      under[i] =
          distribute_under(b, hyp, imp_of(line.rule.ref1), imp_of(line.rule.ref2));
    }
  }
  return b.take(imp_of(static_cast<std::uint32_t>(n)));
}

} // namespace detail

} // namespace jluk
