#pragma once

// Splits the generating set by the effect of one more right multiplication:
// d-(w) holds the generators that shorten the element of w, d+(w) those that
// lengthen it.  Every relator of F has even length, so the Cayley graph is
// bipartite and no generator ever preserves the length — the two sets always
// partition all four generators.

#include <array>
#include <stdexcept>
#include <vector>

#include "forest_core.hpp"

namespace thompsonf {

struct GeneratorPartition {
  std::vector<Generator> down;  // shorten: |w·x| = |w| − 1
  std::vector<Generator> up;    // lengthen: |w·x| = |w| + 1
};

// Partition plus the already-reduced neighbour diagrams, in generator order;
// callers walking the Cayley graph keep the multiplications instead of
// redoing them.
struct ClassifiedNeighbors {
  GeneratorPartition partition;
  std::array<ForestDiagram, 4> neighbor;
  std::array<long long, 4> neighbor_length;
};

inline ClassifiedNeighbors classify_neighbors(const ForestDiagram& d, long long len) {
  ClassifiedNeighbors out;
  for (Generator g : kGenerators) {
    std::size_t i = static_cast<std::size_t>(g);
    out.neighbor[i] = multiply(d, g);
    out.neighbor_length[i] = weight(out.neighbor[i]);
    if (out.neighbor_length[i] == len - 1)
      out.partition.down.push_back(g);
    else if (out.neighbor_length[i] == len + 1)
      out.partition.up.push_back(g);
    else
      throw std::logic_error("classify_neighbors: generator changed the length by " +
                             std::to_string(out.neighbor_length[i] - len));
  }
  return out;
}

inline GeneratorPartition classify_incremental(const ForestDiagram& d, long long len) {
  return classify_neighbors(d, len).partition;
}

inline GeneratorPartition classify(const Word& w) {
  ForestDiagram d = diagram_of(w);
  return classify_incremental(d, weight(d));
}

}  // namespace thompsonf
