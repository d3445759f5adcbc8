#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "jluk/bridge.hpp"
#include "jluk/check.hpp"
#include "jluk/errors.hpp"
#include "jluk/metrics.hpp"
#include "jluk/parser.hpp"
#include "jluk/printer.hpp"
#include "jluk/prover.hpp"
#include "jluk/semantics.hpp"

namespace {

using nlohmann::json;
using namespace jluk;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kError = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw KernelError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json metrics_json(const Metrics& m) {
  json j;
  j["step_count"] = m.step_count;
  j["rule_histogram"] = m.rule_histogram;
  j["axiom_histogram"] = m.axiom_histogram;
  j["term_size"] = m.term_size ? json(*m.term_size) : json();
  j["term_depth"] = m.term_depth ? json(*m.term_depth) : json();
  j["variable_count"] = m.variable_count ? json(*m.variable_count) : json();
  return j;
}

json valuation_json(const Valuation& v) {
  json j = json::object();
  for (const auto& [atom, value] : v) j[atom] = value;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string metrics_text(const Metrics& m) {
  std::ostringstream os;
  os << "steps: " << m.step_count << "\n";
  auto hist = [&](const char* label,
                  const std::map<std::string, std::uint32_t>& h) {
    os << label;
    bool first = true;
    for (const auto& [k, v] : h) {
      os << (first ? " " : ", ") << k << "=" << v;
      first = false;
    }
    if (first) os << " -";
    os << "\n";
  };
  hist("rules:", m.rule_histogram);
  hist("axioms:", m.axiom_histogram);
  if (m.term_size)
    os << "term size: " << *m.term_size << ", depth: " << *m.term_depth
       << ", variables: " << *m.variable_count << "\n";
  return os.str();
}

PremiseBinding parse_binding(const std::string& spec) {
  PremiseBinding b;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string entry = spec.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? spec.size() : comma + 1;
    std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw KernelError("binding entry '" + entry + "' is not FORMULA=VAR");
    TermPtr var = parse_term(entry.substr(eq + 1));
    b.bind(parse_formula(entry.substr(0, eq)), var);
  }
  return b;
}

int cmd_check(const std::string& file, bool as_json) {
  ProofScript p = parse_script(slurp(file));
  Verdict v = check_proof(p);
  if (as_json) {
    json j;
    j["status"] = v.valid ? "valid" : "invalid";
    j["failing_line"] = v.failing_line ? json(*v.failing_line) : json();
    j["reason"] = v.reason;
    j["checked_lines"] = v.checked_lines;
    j["metrics"] = v.valid ? metrics_json(proof_metrics(p)) : json();
    emit(j);
  } else {
    for (std::uint32_t i = 1; i <= v.checked_lines; ++i) {
      if (v.failing_line && i == *v.failing_line) break;
      std::cout << "line " << i << ": ok\n";
    }
    if (v.valid)
      std::cout << "valid\n";
    else
      std::cout << "invalid at line " << *v.failing_line << ": " << v.reason
                << "\n";
  }
  return v.valid ? kOk : kInvalid;
}

int emit_script(const ProofScript& p, bool as_json) {
  if (as_json) {
    json j;
    j["status"] = "ok";
    j["reason"] = "";
    j["script"] = render_script(p);
    emit(j);
  } else {
    std::cout << render_script(p);
  }
  return kOk;
}

int reject_invalid(const Verdict& v, bool as_json) {
  if (as_json) {
    json j;
    j["status"] = "invalid";
    j["reason"] = v.reason;
    j["script"] = json();
    emit(j);
  }
  std::cerr << "error: input proof invalid: " << v.reason << "\n";
  return kInvalid;
}

int cmd_internalize(const std::string& file, const std::string& bind_spec,
                    bool expand, bool as_json) {
  ProofScript p = parse_script(slurp(file));
  Verdict v = check_proof(p);
  if (!v.valid) return reject_invalid(v, as_json);
  ProofScript out;
  if (!p.premises.empty() || !bind_spec.empty()) {
    PremiseBinding b = bind_spec.empty() ? PremiseBinding::automatic(p)
                                         : parse_binding(bind_spec);
    out = lift(p, b);
  } else {
    out = internalize(p);
  }
  if (expand) out = expand_app_intro(out);
  return emit_script(out, as_json);
}

int cmd_externalize(const std::string& file, bool as_json) {
  ProofScript p = parse_script(slurp(file));
  Verdict v = check_proof(p);
  if (!v.valid) return reject_invalid(v, as_json);
  return emit_script(externalize(p), as_json);
}

int cmd_prove(const std::string& text, bool justified, std::size_t max_atoms,
              bool as_json) {
  FormulaPtr f = parse_formula(text);
  ProofScript proof;
  try {
    proof = prove_tautology(f, max_atoms);
  } catch (const NotATautology& e) {
    if (as_json) {
      json j;
      j["status"] = "falsifiable";
      j["valuation"] = valuation_json(e.counterexample());
      j["script"] = json();
      emit(j);
    } else {
      std::cout << "falsifiable: " << render_valuation(e.counterexample())
                << "\n";
    }
    return kInvalid;
  }
  if (justified) proof = internalize(proof);
  if (as_json) {
    json j;
    j["status"] = "tautology";
    j["valuation"] = json();
    j["script"] = render_script(proof);
    emit(j);
    return kOk;
  }
  return emit_script(proof, false);
}

int cmd_taut(const std::string& text, bool as_json) {
  FormulaPtr f = parse_formula(text);
  auto falsifying = find_falsifying(f);
  if (as_json) {
    json j;
    j["status"] = falsifying ? "falsifiable" : "tautology";
    j["valuation"] = falsifying ? valuation_json(*falsifying) : json();
    emit(j);
  } else if (falsifying) {
    std::cout << "falsifiable: " << render_valuation(*falsifying) << "\n";
  } else {
    std::cout << "tautology\n";
  }
  return falsifying ? kInvalid : kOk;
}

int cmd_metrics(const std::string& file, const std::string& second,
                bool as_json) {
  ProofScript p = parse_script(slurp(file));
  if (second.empty()) {
    Metrics m = proof_metrics(p);
    if (as_json)
      emit(metrics_json(m));
    else
      std::cout << metrics_text(m);
    return kOk;
  }
  ProofScript q = parse_script(slurp(second));
  ContributionReport r = contribution_report(p, q);
  if (as_json) {
    json j;
    j["luk"] = metrics_json(r.luk);
    j["jl"] = metrics_json(r.jl);
    j["steps_preserved"] = r.steps_preserved;
    emit(j);
  } else {
    std::cout << r.to_text();
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof kernel for an axiomatic propositional calculus and its "
               "justification counterpart"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file, second, bind_spec, formula;
  bool justified = false, expand = false;
  std::size_t max_atoms = kDefaultProverAtomBound;

  CLI::App* check = app.add_subcommand("check", "check a proof script");
  check->add_option("file", file, "script file, or - for standard input")
      ->required();

  CLI::App* internalize =
      app.add_subcommand("internalize", "rebuild a base proof as a justified proof");
  internalize->add_option("file", file, "script file, or - for standard input")
      ->required();
  internalize->add_option("--bind", bind_spec,
                          "premise bindings FORMULA=VAR[,...]");
  internalize->add_flag("--expand-appintro", expand,
                        "replace appintro steps by axiom + two mp steps");

  CLI::App* externalize =
      app.add_subcommand("externalize", "recover the base proof from a justified one");
  externalize->add_option("file", file, "script file, or - for standard input")
      ->required();

  CLI::App* prove = app.add_subcommand("prove", "derive a tautology");
  prove->add_option("formula", formula, "formula text")->required();
  prove->add_flag("--justified", justified, "internalize the derivation");
  prove->add_option("--max-atoms", max_atoms, "atom bound for the prover");

  CLI::App* taut = app.add_subcommand("taut", "truth-table tautology test");
  taut->add_option("formula", formula, "formula text")->required();

  CLI::App* metrics =
      app.add_subcommand("metrics", "proof metrics, or a two-proof report");
  metrics->add_option("file", file, "script file, or - for standard input")
      ->required();
  metrics->add_option("jl_file", second,
                      "justified counterpart for a side-by-side report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*check) return cmd_check(file, as_json);
    if (*internalize)
      return cmd_internalize(file, bind_spec, expand, as_json);
    if (*externalize) return cmd_externalize(file, as_json);
    if (*prove) return cmd_prove(formula, justified, max_atoms, as_json);
    if (*taut) return cmd_taut(formula, as_json);
    if (*metrics) return cmd_metrics(file, second, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
