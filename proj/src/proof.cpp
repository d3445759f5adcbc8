#include "jluk/proof.hpp"

#include <string>

#include "jluk/errors.hpp"

namespace jluk {

namespace {

std::string at_line(std::uint32_t index) {
  return "line " + std::to_string(index) + ": ";
}

} // namespace

const FormulaPtr& ProofScript::final_formula() const {
  if (lines.empty()) throw KernelError("script has no lines");
  return lines.back().formula;
}

bool ProofScript::has_premise(const FormulaPtr& f) const {
  for (const auto& g : premises)
    if (equal(f, g)) return true;
  return false;
}

bool equal(const Rule& a, const Rule& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RuleKind::Axiom:
    case RuleKind::CSAxiom:
      return a.scheme == b.scheme;
    case RuleKind::MP:
    case RuleKind::AppIntro:
      return a.ref1 == b.ref1 && a.ref2 == b.ref2;
    default:
      return true;
  }
}

bool equal(const ProofScript& a, const ProofScript& b) {
  if (a.calculus != b.calculus) return false;
  if (a.premises.size() != b.premises.size()) return false;
  if (a.lines.size() != b.lines.size()) return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!equal(a.premises[i], b.premises[i])) return false;
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    if (a.lines[i].index != b.lines[i].index) return false;
    if (!equal(a.lines[i].formula, b.lines[i].formula)) return false;
    if (!equal(a.lines[i].rule, b.lines[i].rule)) return false;
  }
  return true;
}

void validate_structure(const ProofScript& p) {
  if (p.lines.empty()) throw StructureError("script has no lines");
  for (const auto& f : p.premises)
    if (!f) throw StructureError("null premise formula");
  if (p.calculus == Calculus::Luk)
    for (const auto& f : p.premises)
      if (contains_justification(f))
        throw StructureError(
            "justification formulas are not allowed in a luk script");
  std::uint32_t expected = 1;
  for (const auto& line : p.lines) {
    if (line.index != expected)
      throw StructureError("line indices must be contiguous from 1; found " +
                           std::to_string(line.index) + " where " +
                           std::to_string(expected) + " was expected");
    if (!line.formula) throw StructureError(at_line(line.index) + "no formula");
    if (p.calculus == Calculus::Luk && contains_justification(line.formula))
      throw StructureError(
          at_line(line.index) +
          "justification formulas are not allowed in a luk script");

    const Rule& r = line.rule;
    bool luk_rule = r.kind == RuleKind::Premise || r.kind == RuleKind::Axiom ||
                    r.kind == RuleKind::MP;
    bool jl_rule = r.kind != RuleKind::Axiom;
    if (p.calculus == Calculus::Luk && !luk_rule)
      throw StructureError(at_line(line.index) +
                           "rule is not part of the luk calculus");
    if (p.calculus == Calculus::JL && !jl_rule)
      throw StructureError(at_line(line.index) +
                           "rule is not part of the jl calculus");
    if ((r.kind == RuleKind::Axiom || r.kind == RuleKind::CSAxiom) &&
        r.scheme != SchemeId::L1 && r.scheme != SchemeId::L2 &&
        r.scheme != SchemeId::L3)
      throw StructureError(at_line(line.index) +
                           "axiom tag must be ax1, ax2 or ax3");
    if (r.kind == RuleKind::MP || r.kind == RuleKind::AppIntro) {
      for (std::uint32_t ref : {r.ref1, r.ref2}) {
        if (ref < 1 || ref >= line.index)
          throw StructureError(at_line(line.index) + "reference " +
                               std::to_string(ref) +
                               " does not point to an earlier line");
      }
      if (r.ref1 == r.ref2)
        throw StructureError(at_line(line.index) +
                             "rule references must be distinct");
    }
    ++expected;
  }
}

ProofBuilder::ProofBuilder(Calculus calc, std::vector<FormulaPtr> premises,
                           bool dedup)
    : dedup_(dedup) {
  script_.calculus = calc;
  script_.premises = std::move(premises);
}

std::uint32_t ProofBuilder::add_line(const FormulaPtr& f, Rule r) {
  if (dedup_) {
    auto it = by_formula_.find(f);
    if (it != by_formula_.end()) return it->second;
  }
  std::uint32_t index = static_cast<std::uint32_t>(script_.lines.size()) + 1;
  script_.lines.push_back({index, f, r});
  if (dedup_) by_formula_.emplace(f, index);
  return index;
}

std::uint32_t ProofBuilder::premise(const FormulaPtr& f) {
  if (!script_.has_premise(f))
    throw KernelError("premise line is not among the declared premises");
  return add_line(f, Rule::premise());
}

std::uint32_t ProofBuilder::axiom(SchemeId s, const FormulaPtr& instance) {
  return add_line(instance, Rule::axiom(s));
}

std::uint32_t ProofBuilder::mp(std::uint32_t major, std::uint32_t minor) {
  const FormulaPtr& imp = formula_at(major);
  const FormulaPtr& ant = formula_at(minor);
  if (imp->kind != FormulaKind::Impl || !equal(imp->lhs, ant))
    throw KernelError("builder mp: lines do not fit modus ponens");
  FormulaPtr conclusion = imp->rhs;
  if (dedup_) {
    auto it = by_formula_.find(conclusion);
    if (it != by_formula_.end()) return it->second;
  }
  return add_line(conclusion, Rule::mp(major, minor));
}

std::uint32_t ProofBuilder::append(const ProofScript& s) {
  if (s.lines.empty()) throw KernelError("cannot append an empty script");
  std::vector<std::uint32_t> remap(s.lines.size() + 1, 0);
  for (const auto& line : s.lines) {
    std::uint32_t idx = 0;
    switch (line.rule.kind) {
      case RuleKind::Premise:
        idx = premise(line.formula);
        break;
      case RuleKind::Axiom:
        idx = axiom(line.rule.scheme, line.formula);
        break;
      case RuleKind::MP:
        idx = mp(remap[line.rule.ref1], remap[line.rule.ref2]);
        break;
      default:
        throw KernelError("builder append supports luk scripts only");
    }
    remap[line.index] = idx;
  }
  return remap[s.lines.back().index];
}

const FormulaPtr& ProofBuilder::formula_at(std::uint32_t index) const {
  if (index < 1 || index > script_.lines.size())
    throw KernelError("builder index out of range");
  return script_.lines[index - 1].formula;
}

std::uint32_t ProofBuilder::line_count() const {
  return static_cast<std::uint32_t>(script_.lines.size());
}

ProofScript ProofBuilder::take(std::uint32_t final_index) {
  if (final_index < 1 || final_index > script_.lines.size())
    throw KernelError("builder final index out of range");
  if (final_index != script_.lines.size()) {
    // re-state the intended conclusion so the script ends with it
    const ProofLine& src = script_.lines[final_index - 1];
    std::uint32_t index = static_cast<std::uint32_t>(script_.lines.size()) + 1;
    script_.lines.push_back({index, src.formula, src.rule});
  }
  return std::move(script_);
}

std::uint32_t emit_identity(ProofBuilder& b, const FormulaPtr& f) {
  FormulaPtr ff = Formula::impl(f, f);
  FormulaPtr step = Formula::impl(Formula::impl(f, f), f); // (f->f)->f
  std::uint32_t a1 = b.axiom(SchemeId::L1, Formula::impl(f, step));
  std::uint32_t a2 = b.axiom(
      SchemeId::L2, Formula::impl(Formula::impl(f, step),
                                  Formula::impl(Formula::impl(f, ff), ff)));
  std::uint32_t m1 = b.mp(a2, a1); // (f -> (f -> f)) -> (f -> f)
  std::uint32_t a3 = b.axiom(SchemeId::L1, Formula::impl(f, ff));
  return b.mp(m1, a3);
}

std::uint32_t emit_compose(ProofBuilder& b, std::uint32_t ia,
                           std::uint32_t ib) {
  const FormulaPtr& ab = b.formula_at(ia);
  const FormulaPtr& bc = b.formula_at(ib);
  if (ab->kind != FormulaKind::Impl || bc->kind != FormulaKind::Impl ||
      !equal(ab->rhs, bc->lhs))
    throw KernelError("builder compose: lines do not chain");
  FormulaPtr x = ab->lhs, y = ab->rhs, z = bc->rhs;
  std::uint32_t a1 =
      b.axiom(SchemeId::L1, Formula::impl(bc, Formula::impl(x, bc)));
  std::uint32_t m1 = b.mp(a1, ib); // x -> (y -> z)
  std::uint32_t a2 = b.axiom(
      SchemeId::L2,
      Formula::impl(Formula::impl(x, bc),
                    Formula::impl(Formula::impl(x, y), Formula::impl(x, z))));
  std::uint32_t m2 = b.mp(a2, m1); // (x -> y) -> (x -> z)
  return b.mp(m2, ia);
}

} // namespace jluk
