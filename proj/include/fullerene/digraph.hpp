#pragma once

#include <array>
#include <string>
#include <vector>

#include "fullerene/distance_array.hpp"

namespace fullerene::patchwork {

struct Arc {
  int from = -1, to = -1;
  OpTag tag;  // first applicable operation realizing this arc

  auto operator<=>(const Arc&) const = default;
};

// Closure of the fifteen initial boundary codes under O1-O4, pruned to the
// nodes that reach the empty array. Nodes are canonical distance arrays in
// (length, lex) order; arcs are deduplicated by endpoint pair.
struct ArrayDigraph {
  std::vector<DistanceArray> nodes;
  std::vector<Arc> arcs;

  int node_id(const DistanceArray& a) const;
  bool has_node(const DistanceArray& a) const { return node_id(a) >= 0; }
  std::vector<int> out_arcs(int node) const;

  int loop_count() const;
  int symmetric_pair_count() const;
};

// The fifteen initial arrays, in catalog order (index 0 is the first).
const std::array<DistanceArray, 15>& initial_arrays();

// Worklist closure over every applicable operation at every canonical
// position, canonical-form deduplication, then reverse-reachability pruning
// from the empty array. Deterministic.
ArrayDigraph generate_digraph();

std::string to_dot(const ArrayDigraph& d);
std::string to_dump(const ArrayDigraph& d);

// Shortest tag sequence from `from` to `to` inside the digraph (breadth
// first, lexicographic tie-break); empty when unreachable and from != to.
std::vector<OpTag> shortest_walk(const ArrayDigraph& d, const DistanceArray& from,
                                 const DistanceArray& to, bool* found);

// All simple directed paths from `from` to `to` as tag sequences.
std::vector<std::vector<OpTag>> all_simple_paths(const ArrayDigraph& d,
                                                 const DistanceArray& from,
                                                 const DistanceArray& to);

}  // namespace fullerene::patchwork
