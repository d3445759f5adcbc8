#include "jluk/semantics.hpp"

#include <atomic>
#include <cstdint>
#include <memory>
#include <sstream>
#include <unordered_map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jluk/errors.hpp"

namespace jluk {

bool eval_formula(const FormulaPtr& f, const Valuation& v) {
  if (!f) throw KernelError("null formula");
  switch (f->kind) {
    case FormulaKind::Atom: {
      auto it = v.find(f->name);
      if (it == v.end())
        throw KernelError("valuation does not assign atom '" + f->name + "'");
      return it->second;
    }
    case FormulaKind::Neg:
      return !eval_formula(f->lhs, v);
    case FormulaKind::Impl:
      return !eval_formula(f->lhs, v) || eval_formula(f->rhs, v);
    case FormulaKind::And:
      return eval_formula(f->lhs, v) && eval_formula(f->rhs, v);
    case FormulaKind::Or:
      return eval_formula(f->lhs, v) || eval_formula(f->rhs, v);
    case FormulaKind::Just:
      throw KernelError(
          "justification formulas have no truth-table semantics");
  }
  throw KernelError("unreachable formula kind");
}

namespace {

// Flat postorder program for fast repeated evaluation under bitmask
// valuations: atom k of the sorted atom list is bit k of the mask.
struct Compiled {
  struct Node {
    FormulaKind kind;
    std::uint32_t a = 0, b = 0; // child slots / atom bit
  };
  std::vector<Node> nodes;
  std::vector<std::string> atoms;

  static Compiled build(const FormulaPtr& f) {
    Compiled c;
    c.atoms = collect_atoms(f);
    std::unordered_map<std::string, std::uint32_t> bit;
    for (std::uint32_t i = 0; i < c.atoms.size(); ++i) bit[c.atoms[i]] = i;
    compile(f, bit, c.nodes);
    return c;
  }

  bool eval(std::uint64_t mask) const {
    // nodes are in postorder, children before parents
    bool stack_buf[256];
    bool* slot = stack_buf;
    std::unique_ptr<bool[]> heap_buf;
    if (nodes.size() > 256) {
      heap_buf.reset(new bool[nodes.size()]);
      slot = heap_buf.get();
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      switch (n.kind) {
        case FormulaKind::Atom: slot[i] = (mask >> n.a) & 1u; break;
        case FormulaKind::Neg: slot[i] = !slot[n.a]; break;
        case FormulaKind::Impl: slot[i] = !slot[n.a] || slot[n.b]; break;
        case FormulaKind::And: slot[i] = slot[n.a] && slot[n.b]; break;
        case FormulaKind::Or: slot[i] = slot[n.a] || slot[n.b]; break;
        case FormulaKind::Just: slot[i] = false; break; // rejected earlier
      }
    }
    return slot[nodes.size() - 1];
  }

private:
  static std::uint32_t compile(const FormulaPtr& f,
                               const std::unordered_map<std::string, std::uint32_t>& bit,
                               std::vector<Node>& nodes) {
    Node n;
    n.kind = f->kind;
    switch (f->kind) {
      case FormulaKind::Atom:
        n.a = bit.at(f->name);
        break;
      case FormulaKind::Neg:
        n.a = compile(f->lhs, bit, nodes);
        break;
      case FormulaKind::Just:
        throw KernelError(
            "justification formulas have no truth-table semantics");
      default:
        n.a = compile(f->lhs, bit, nodes);
        n.b = compile(f->rhs, bit, nodes);
    }
    nodes.push_back(n);
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }
};

Valuation valuation_from_mask(const std::vector<std::string>& atoms,
                              std::uint64_t mask) {
  Valuation v;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    v[atoms[i]] = (mask >> i) & 1u;
  return v;
}

Compiled prepare(const FormulaPtr& f) {
  if (!f) throw KernelError("null formula");
  if (contains_justification(f))
    throw KernelError("justification formulas have no truth-table semantics");
  Compiled c = Compiled::build(f);
  if (c.atoms.size() > kMaxSweepAtoms)
    throw KernelError("formula has " + std::to_string(c.atoms.size()) +
                      " atoms; the valuation sweep supports at most " +
                      std::to_string(kMaxSweepAtoms));
  return c;
}

} // namespace

std::optional<Valuation> find_falsifying_serial(const FormulaPtr& f) {
  Compiled c = prepare(f);
  std::uint64_t total = 1ull << c.atoms.size();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (!c.eval(mask)) return valuation_from_mask(c.atoms, mask);
  return std::nullopt;
}

std::optional<Valuation> find_falsifying_parallel(const FormulaPtr& f) {
  Compiled c = prepare(f);
  const std::uint64_t total = 1ull << c.atoms.size();
  const std::uint64_t none = ~0ull;
  std::atomic<std::uint64_t> best{none};
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
    std::uint64_t m = static_cast<std::uint64_t>(mask);
    if (m >= best.load(std::memory_order_relaxed)) continue;
    if (c.eval(m)) continue;
    // keep the smallest falsifying index so behaviour matches the serial scan
    std::uint64_t seen = best.load(std::memory_order_relaxed);
    while (m < seen &&
           !best.compare_exchange_weak(seen, m, std::memory_order_relaxed)) {
    }
  }
  std::uint64_t found = best.load();
  if (found == none) return std::nullopt;
  return valuation_from_mask(c.atoms, found);
}

std::optional<Valuation> find_falsifying(const FormulaPtr& f) {
  // the parallel sweep pays off only on big valuation spaces
  if (collect_atoms(f).size() >= 12) return find_falsifying_parallel(f);
  return find_falsifying_serial(f);
}

bool is_tautology(const FormulaPtr& f) { return !find_falsifying(f); }

std::string render_valuation(const Valuation& v) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [atom, value] : v) {
    if (!first) out << ',';
    out << atom << '=' << (value ? '1' : '0');
    first = false;
  }
  return out.str();
}

} // namespace jluk
