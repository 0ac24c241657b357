// Builds a non-degenerate self-reverse labeling of a given order (default 29)
// from a cached base graph and repeated W(4) extensions, then checks it.
//
//   sample_extend_to_order [N]

#include <cstdlib>
#include <iostream>

#include "magiclab/witness.hpp"

int main(int argc, char** argv) {
  using namespace magiclab;
  const int n = argc > 1 ? std::atoi(argv[1]) : 29;
  if (n < 5) {
    std::cerr << "order must be at least 5\n";
    return 1;
  }
  const auto w = witness_nondegenerate(n);
  if (!w) {
    std::cout << "no connected tetravalent graph of order " << n
              << " has a non-degenerate self-reverse labeling\n";
    return 0;
  }
  const bool ok = is_connected(w->graph) && is_regular(w->graph, 4) && is_distance_magic(w->graph, w->labeling) &&
                  is_self_reverse(w->graph, w->labeling) && !is_degenerate(w->graph, w->labeling);
  const QuotientGraph q = quotient(w->graph, w->labeling);
  std::cout << "order " << n << ": " << (ok ? "verified" : "FAILED verification") << "\n";
  std::cout << "quotient edges " << q.edges.size() << ", semiedges " << q.semiedges.size() << "\n";
  std::cout << "extensible quotient edges:";
  for (auto [a, b] : extensible_edges(q)) std::cout << " {" << a << "," << b << "}";
  std::cout << "\n";
  return ok ? 0 : 1;
}
