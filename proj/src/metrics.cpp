#include "jluk/metrics.hpp"

#include <sstream>

#include "jluk/errors.hpp"
#include "jluk/printer.hpp"
#include "jluk/scheme.hpp"

namespace jluk {

namespace {

const char* rule_key(const Rule& r) {
  switch (r.kind) {
    case RuleKind::Premise: return "premise";
    case RuleKind::Axiom: return "axiom";
    case RuleKind::MP: return "mp";
    case RuleKind::CSAxiom: return "cs";
    case RuleKind::AppAxiom: return "app";
    case RuleKind::SumAxiom: return "sum";
    case RuleKind::AppIntro: return "appintro";
  }
  throw KernelError("unknown rule kind");
}

void histogram_line(std::ostream& os, const char* label,
                    const std::map<std::string, std::uint32_t>& h) {
  os << label;
  bool first = true;
  for (const auto& [k, v] : h) {
    os << (first ? " " : ", ") << k << "=" << v;
    first = false;
  }
  if (first) os << " -";
  os << "\n";
}

} // namespace

Metrics proof_metrics(const ProofScript& p) {
  Verdict v = check_proof(p);
  if (!v.valid)
    throw KernelError("metrics require a valid proof: " + v.reason);

  Metrics m;
  m.step_count = static_cast<std::uint32_t>(p.lines.size());
  for (const auto& line : p.lines) {
    ++m.rule_histogram[rule_key(line.rule)];
    if (line.rule.kind == RuleKind::Axiom ||
        line.rule.kind == RuleKind::CSAxiom)
      ++m.axiom_histogram[scheme_name(line.rule.scheme)];
  }

  if (p.calculus == Calculus::JL) {
    FormulaPtr fin = p.final_formula();
    if (fin->kind == FormulaKind::Just) {
      m.term_size = term_size(fin->term);
      m.term_depth = term_depth(fin->term);
      m.variable_count = term_variable_count(fin->term);
    }
  }
  return m;
}

std::string ContributionReport::to_text() const {
  std::ostringstream os;
  os << "base steps: " << luk.step_count << "\n";
  histogram_line(os, "base rules:", luk.rule_histogram);
  histogram_line(os, "base axioms:", luk.axiom_histogram);
  os << "justified steps: " << jl.step_count << "\n";
  histogram_line(os, "justified rules:", jl.rule_histogram);
  histogram_line(os, "justified axioms:", jl.axiom_histogram);
  if (jl.term_size)
    os << "term size: " << *jl.term_size << ", depth: " << *jl.term_depth
       << ", variables: " << *jl.variable_count << "\n";
  os << "steps preserved: " << (steps_preserved ? "yes" : "no") << "\n";
  return os.str();
}

ContributionReport contribution_report(const ProofScript& l,
                                       const ProofScript& j) {
  if (l.calculus != Calculus::Luk || j.calculus != Calculus::JL)
    throw KernelError("contribution report wants a luk proof and a jl proof");
  ContributionReport r;
  r.luk = proof_metrics(l);
  r.jl = proof_metrics(j);
  FormulaPtr fin = j.final_formula();
  if (fin->kind != FormulaKind::Just ||
      !equal(fin->lhs, l.final_formula()))
    throw KernelError("final formulas do not correspond");
  r.steps_preserved = l.lines.size() == j.lines.size();
  return r;
}

} // namespace jluk
