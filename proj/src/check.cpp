#include "jluk/check.hpp"

#include <string>

#include "jluk/errors.hpp"
#include "jluk/printer.hpp"

namespace jluk {

ConstantSpecification::ConstantSpecification(std::string for_l1,
                                             std::string for_l2,
                                             std::string for_l3)
    : c_{std::move(for_l1), std::move(for_l2), std::move(for_l3)} {
  for (const auto& c : c_) {
    if (!identifier_ok(c) || c[0] != 'c')
      throw KernelError("constant specification entry '" + c +
                        "' is not a constant identifier");
  }
  if (c_[0] == c_[1] || c_[0] == c_[2] || c_[1] == c_[2])
    throw KernelError("constant specification must be injective");
}

const ConstantSpecification& ConstantSpecification::standard() {
  static const ConstantSpecification cs("c1", "c2", "c3");
  return cs;
}

const std::string& ConstantSpecification::of(SchemeId s) const {
  switch (s) {
    case SchemeId::L1: return c_[0];
    case SchemeId::L2: return c_[1];
    case SchemeId::L3: return c_[2];
    default:
      throw KernelError(
          "constant specification covers ax1, ax2 and ax3 only");
  }
}

namespace {

std::string describe(std::uint32_t index, const Rule& r, const std::string& why) {
  return "line " + std::to_string(index) + ": " + render_rule(r) + ": " + why;
}

// nullopt when fine, reason otherwise
std::optional<std::string> check_premise(const ProofScript& p,
                                         const ProofLine& line) {
  if (!p.has_premise(line.formula))
    return "formula is not among the declared premises";
  return std::nullopt;
}

std::optional<std::string> check_mp(const ProofScript& p,
                                    const ProofLine& line) {
  const FormulaPtr& major = p.lines[line.rule.ref1 - 1].formula;
  const FormulaPtr& minor = p.lines[line.rule.ref2 - 1].formula;
  if (major->kind != FormulaKind::Impl)
    return "line " + std::to_string(line.rule.ref1) + " is not an implication";
  if (!equal(major->lhs, minor))
    return "antecedent of line " + std::to_string(line.rule.ref1) +
           " does not match line " + std::to_string(line.rule.ref2);
  if (!equal(major->rhs, line.formula))
    return "consequent of line " + std::to_string(line.rule.ref1) +
           " does not match this line";
  return std::nullopt;
}

} // namespace

Verdict check_luk_proof(const ProofScript& p) {
  if (p.calculus != Calculus::Luk)
    throw KernelError("check_luk_proof expects a luk script");
  validate_structure(p);
  for (const auto& line : p.lines) {
    std::optional<std::string> why;
    switch (line.rule.kind) {
      case RuleKind::Premise:
        why = check_premise(p, line);
        break;
      case RuleKind::Axiom:
        if (!match_scheme(line.formula, line.rule.scheme))
          why = "formula is not an instance of " +
                std::string(scheme_name(line.rule.scheme));
        break;
      case RuleKind::MP:
        why = check_mp(p, line);
        break;
      default:
        why = "rule is not part of the luk calculus"; // unreachable
    }
    if (why) return Verdict::fail(line.index, describe(line.index, line.rule, *why));
  }
  return Verdict::ok(static_cast<std::uint32_t>(p.lines.size()));
}

std::optional<AppIntroRoles> infer_app_intro_roles(const ProofScript& p,
                                                   std::uint32_t i,
                                                   std::uint32_t j,
                                                   const FormulaPtr& conclusion) {
  if (conclusion->kind != FormulaKind::Just ||
      conclusion->term->kind != TermKind::App)
    return std::nullopt;
  auto fits = [&](std::uint32_t major, std::uint32_t minor) {
    const FormulaPtr& mj = p.lines[major - 1].formula;
    const FormulaPtr& mn = p.lines[minor - 1].formula;
    if (mj->kind != FormulaKind::Just || mn->kind != FormulaKind::Just)
      return false;
    if (mj->lhs->kind != FormulaKind::Impl) return false;
    if (!equal(mj->lhs->lhs, mn->lhs)) return false;
    if (!equal(conclusion->term->left, mj->term)) return false;
    if (!equal(conclusion->term->right, mn->term)) return false;
    return equal(conclusion->lhs, mj->lhs->rhs);
  };
  if (fits(i, j)) return AppIntroRoles{i, j};
  if (fits(j, i)) return AppIntroRoles{j, i};
  return std::nullopt;
}

Verdict check_jl_proof(const ProofScript& p, const ConstantSpecification& cs) {
  if (p.calculus != Calculus::JL)
    throw KernelError("check_jl_proof expects a jl script");
  validate_structure(p);
  for (const auto& line : p.lines) {
    std::optional<std::string> why;
    const FormulaPtr& f = line.formula;
    switch (line.rule.kind) {
      case RuleKind::Premise:
        why = check_premise(p, line);
        break;
      case RuleKind::CSAxiom: {
        const std::string& c = cs.of(line.rule.scheme);
        if (f->kind != FormulaKind::Just ||
            f->term->kind != TermKind::Const || f->term->name != c)
          why = "formula must be certified by constant " + c;
        else if (!match_scheme(f->lhs, line.rule.scheme))
          why = "certified formula is not an instance of " +
                std::string(scheme_name(line.rule.scheme));
        break;
      }
      case RuleKind::AppAxiom:
        if (!recognize_application_instance(f))
          why = "formula is not an instance of the application scheme";
        break;
      case RuleKind::SumAxiom:
        if (!recognize_sum_instance(f))
          why = "formula is not an instance of a sum scheme";
        break;
      case RuleKind::MP:
        why = check_mp(p, line);
        break;
      case RuleKind::AppIntro:
        if (!infer_app_intro_roles(p, line.rule.ref1, line.rule.ref2, f))
          why = "referenced lines do not fit the application-introduction shape";
        break;
      default:
        why = "rule is not part of the jl calculus"; // unreachable
    }
    if (why) return Verdict::fail(line.index, describe(line.index, line.rule, *why));
  }
  return Verdict::ok(static_cast<std::uint32_t>(p.lines.size()));
}

Verdict check_proof(const ProofScript& p) {
  return p.calculus == Calculus::Luk ? check_luk_proof(p) : check_jl_proof(p);
}

bool recognize_application_instance(const FormulaPtr& f) {
  return f && match_scheme(f, SchemeId::App).has_value();
}

bool recognize_sum_instance(const FormulaPtr& f) {
  return f && (match_scheme(f, SchemeId::SumL).has_value() ||
               match_scheme(f, SchemeId::SumR).has_value());
}

} // namespace jluk
