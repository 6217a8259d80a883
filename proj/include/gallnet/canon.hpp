#pragma once

#include <string>
#include <vector>

namespace gallnet {

// Directed multigraph with vertex colors.  Parallel arcs appear as repeated
// adjacency entries.  The initial colors are part of the graph's identity:
// two graphs are considered isomorphic only under color-preserving bijections.
struct digraph {
  int n = 0;
  std::vector<std::vector<int>> out;
  std::vector<int> color;
};

// Canonical labeling by color refinement with individualization on the first
// non-singleton cell.  Exhaustive over the branch tree, so correct on any
// input; fast on the small, leaf-labeled graphs this library handles.
// order[i] is the vertex placed at canonical position i.
std::vector<int> canonical_order(const digraph& g);

// Serialization of the canonically relabeled graph.  Equal codes <=> the
// graphs are isomorphic respecting colors.
std::string canonical_code(const digraph& g);

}  // namespace gallnet
