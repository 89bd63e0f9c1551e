// Prints structural facts and cellular Betti numbers of a simplicial complex.
//
//   sample_report samples/torus7.json

#include <fstream>
#include <iostream>

#include "thinposet/thinposet.hpp"

int main(int argc, char** argv) {
  using namespace thinposet;
  if (argc != 2) {
    std::cerr << "usage: sample_report FACETS.json\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot read " << argv[1] << "\n";
    return 2;
  }
  const auto facets = io::facets_from_json(io::json::parse(in));

  const Poset with_empty = face_poset_simplicial(facets, true);
  std::cout << "faces (with empty face): " << with_empty.size() << "\n"
            << "thin: " << is_thin(with_empty).holds << "\n"
            << "eulerian: " << is_eulerian(with_empty).holds << "\n"
            << "diamond transitive: " << is_diamond_transitive(with_empty).transitive << "\n"
            << "balanced colorable: " << find_balanced_coloring(with_empty).has_value() << "\n";

  const Poset cells = face_poset_simplicial(facets, false);
  const FreeFunctor f = constant_functor(cells, 1, BaseRing::rationals());
  const auto c = find_bottom_extendable_coloring(cells);
  if (!c) {
    std::cerr << "no balanced coloring\n";
    return 4;
  }
  const CohomologyResult h = cohomology(assemble(f, *c));
  std::cout << "betti over Q:";
  for (const auto& g : h.groups) std::cout << " " << g.betti;
  std::cout << "\n";
}
