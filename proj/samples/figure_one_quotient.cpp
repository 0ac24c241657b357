// Quotient of the non-degenerate self-reverse labeling of W(4), as JSON and DOT.

#include <iostream>

#include "magiclab/families.hpp"
#include "magiclab/io.hpp"
#include "magiclab/quotient.hpp"

int main() {
  using namespace magiclab;
  const Graph g = wreath(4);
  const Labeling l = wreath_nondegenerate_labeling(4);
  const QuotientGraph q = quotient(g, l);
  std::cout << to_json(q).dump(2) << "\n\n" << export_dot(q);

  const Lift back = lift(q);
  return are_equivalent(back.graph, back.labeling, g, l) ? 0 : 1;
}
