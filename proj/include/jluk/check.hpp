#pragma once

#include <optional>
#include <string>

#include "jluk/proof.hpp"

namespace jluk {

/// Which constant certifies which axiom scheme in the justification
/// calculus. The standard specification is c1/c2/c3 for ax1/ax2/ax3; any
/// injective assignment of constant identifiers works.
class ConstantSpecification {
public:
  ConstantSpecification(std::string for_l1, std::string for_l2,
                        std::string for_l3);
  static const ConstantSpecification& standard();

  const std::string& of(SchemeId s) const;

private:
  std::string c_[3];
};

struct Verdict {
  bool valid = false;
  std::optional<std::uint32_t> failing_line;
  std::string reason;               // empty when valid
  std::uint32_t checked_lines = 0;  // lines examined, failing one included

  static Verdict ok(std::uint32_t n) { return {true, std::nullopt, "", n}; }
  static Verdict fail(std::uint32_t line, std::string why) {
    return {false, line, std::move(why), line};
  }
};

/// Check a luk script line by line: premises must be declared, axiom
/// lines must match their scheme, and "mp I J" needs line I to be exactly
/// (formula of J) -> (formula of the current line).
Verdict check_luk_proof(const ProofScript& p);

/// Check a jl script. "cs axK" lines must be c:A with c the constant for
/// scheme K and A an instance of K; app/sum lines must instantiate the
/// corresponding term scheme; "appintro I J" accepts its references in
/// either order, inferring major/minor from their shapes.
Verdict check_jl_proof(
    const ProofScript& p,
    const ConstantSpecification& cs = ConstantSpecification::standard());

/// Dispatch on the script's calculus tag.
Verdict check_proof(const ProofScript& p);

/// f is s:(F -> G) -> (t:F -> [s*t]:G) for some terms and formulas, with
/// the conclusion term literally the application node.
bool recognize_application_instance(const FormulaPtr& f);

/// f is s:G -> [s+t]:G or t:G -> [s+t]:G.
bool recognize_sum_instance(const FormulaPtr& f);

/// Major/minor roles of an appintro step, inferred from shapes. `i`, `j`
/// are the references as written, `conclusion` the line being justified.
struct AppIntroRoles {
  std::uint32_t major = 0, minor = 0;
};
std::optional<AppIntroRoles> infer_app_intro_roles(const ProofScript& p,
                                                   std::uint32_t i,
                                                   std::uint32_t j,
                                                   const FormulaPtr& conclusion);

} // namespace jluk
