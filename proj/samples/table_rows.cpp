// Counts of non-degenerate self-reverse labelings for a range of orders,
// compared with the published reference values.
//
//   sample_table_rows [LO [HI]]    (default 16 21)

#include <cstdlib>
#include <iostream>
#include <thread>

#include "magiclab/enumerate.hpp"

int main(int argc, char** argv) {
  using namespace magiclab;
  const int lo = argc > 1 ? std::atoi(argv[1]) : 16;
  const int hi = argc > 2 ? std::atoi(argv[2]) : (argc > 1 ? lo : 21);
  SearchOptions opts;
  opts.thread_budget = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const Table1Report t = table1_report(lo, hi, opts);
  std::cout << t.text();
  int mismatches = 0;
  for (const auto& r : t.rows) {
    const auto ref = reference_row(r.order);
    if (!ref) continue;
    if (r.sr_count != ref->sr_count || r.iso_class_count != ref->iso_class_count || r.vt_count != ref->vt_count) {
      std::cout << "order " << r.order << " differs from the reference\n";
      ++mismatches;
    }
  }
  return mismatches == 0 ? 0 : 1;
}
