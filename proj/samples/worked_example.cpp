// Walks the (12,8) example: skeleton, graph, minimal representative, gluing, coloring.

#include <iostream>
#include <string>

#include "ratcat/ratcat.hpp"

using namespace ratcat;

namespace {

void print(const char* label, const std::vector<Int>& v) {
  std::cout << label;
  for (Int x : v) std::cout << ' ' << x;
  std::cout << '\n';
}

}  // namespace

int main() {
  const GridParams p(3, 2, 4);
  std::vector<Int> elements{0, 1, 5, 8, 9, 12, 13, 16, 17, 20, 21, 24, 25, 27, 28, 29, 30};
  for (Int x = 32; x < 50; ++x) elements.push_back(x);
  const InvariantSet s = InvariantSet::from_generators(p, elements);

  const Skeleton sk = skeleton(s);
  std::cout << "skeleton parts\n";
  for (int i = 0; i < p.d(); ++i) print(("  S" + std::to_string(i)).c_str(), sk.part(i));

  const GraphData data = build_graph_data(s);
  print("minimal shifting", data.shift);
  std::cout << "graph " << canonical_form(data.graph) << '\n';

  const InvariantSet rep = minimal_representative(data.graph);
  std::cout << "gap " << gap(s) << ", least gap in the class " << gap(rep) << '\n';

  const DyckPath D = map_D(s);
  std::cout << "glued path " << D.steps() << " with area " << area(D) << '\n';
  std::cout << "zeta(D)    " << zeta(D).steps() << '\n';
  std::cout << "G(rep)     " << map_G(rep).steps() << '\n';

  const ColoredPath c = color(D);
  std::cout << "colors     ";
  for (int x : c.colors) std::cout << x;
  std::cout << '\n';
  for (std::size_t i = 0; i < c.components.size(); ++i)
    std::cout << "  color " << i << ": " << c.components[i].steps() << '\n';
  return zeta(D) == map_G(rep) ? 0 : 1;
}
