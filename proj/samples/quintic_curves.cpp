// Builds one rational quintic for every admissible splitting type of its
// restricted tangent bundle and prints the curve together with the type of
// the vertex subspace it came from.

#include <iostream>

#include "binform/json.hpp"

int main() {
  using namespace binform;
  constexpr int d = 5;
  Rng rng = sub_rng(kDefaultSeed, 0);
  for (const auto &target : admissible_splittings(d)) {
    const auto built = construct_with_splitting(target, rng);
    std::cout << "splitting " << to_string(target) << "  vertex type "
              << to_string(built.type) << "  dim vertex " << built.vertex.dim()
              << '\n';
    for (std::size_t j = 0; j < built.curve.components.size(); ++j)
      std::cout << "  g" << j << " = " << to_json(built.curve.components[j]).dump()
                << '\n';
  }
}
