// compares the serial and parallel valuation sweeps on widening formulas
#include <chrono>
#include <cstdio>
#include <string>

#include "jluk/formula.hpp"
#include "jluk/semantics.hpp"

using namespace jluk;

namespace {

// a near-tautology over n atoms: (a1 -> (a2 -> ... -> (an -> a1)...)),
// true everywhere, so the sweep must visit every valuation
FormulaPtr chain(std::size_t n) {
  FormulaPtr head = Formula::atom("a1");
  FormulaPtr f = head;
  for (std::size_t k = n; k >= 2; --k)
    f = Formula::impl(Formula::atom("a" + std::to_string(k)), f);
  return Formula::impl(head, f);
}

double seconds(void (*run)(const FormulaPtr&), const FormulaPtr& f) {
  auto t0 = std::chrono::steady_clock::now();
  run(f);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void run_serial(const FormulaPtr& f) { (void)find_falsifying_serial(f); }
void run_parallel(const FormulaPtr& f) { (void)find_falsifying_parallel(f); }

} // namespace

int main() {
  std::printf("%6s %12s %12s %8s\n", "atoms", "serial_s", "parallel_s",
              "speedup");
  for (std::size_t n : {16, 18, 20, 22, 24}) {
    FormulaPtr f = chain(n);
    double ts = seconds(run_serial, f);
    double tp = seconds(run_parallel, f);
    std::printf("%6zu %12.4f %12.4f %8.2f\n", n, ts, tp,
                tp > 0 ? ts / tp : 0.0);
  }
  return 0;
}
