#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "jluk/check.hpp"
#include "jluk/proof.hpp"

namespace jluk {

/// Size data for a checked proof. The term fields are present exactly
/// when the script is a jl script whose final line has shape t:F.
struct Metrics {
  std::uint32_t step_count = 0;
  std::map<std::string, std::uint32_t> rule_histogram;  // premise, axiom, mp, cs, app, sum, appintro
  std::map<std::string, std::uint32_t> axiom_histogram; // ax1, ax2, ax3 (axiom and cs lines)
  std::optional<std::uint32_t> term_size;
  std::optional<std::uint32_t> term_depth;
  std::optional<std::uint32_t> variable_count;
};

/// Compute metrics; the proof must check as valid (KernelError otherwise).
Metrics proof_metrics(const ProofScript& p);

/// Side-by-side metrics for a luk proof and a jl counterpart whose final
/// line justifies the same formula.
struct ContributionReport {
  Metrics luk;
  Metrics jl;
  bool steps_preserved = false;

  std::string to_text() const;
};

/// Requires: l is a luk script, j a jl script, both valid, and j's final
/// line is t:F with F equal to l's final formula.
ContributionReport contribution_report(const ProofScript& l,
                                       const ProofScript& j);

} // namespace jluk
