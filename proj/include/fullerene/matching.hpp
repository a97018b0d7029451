#pragma once

#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

// Result of iterated pendant-edge stripping. Pendant edges are removed with
// both endpoints, lowest pendant vertex id first, until no degree-1 vertex
// remains. `residual` is what survives (F'), `stripped` the deleted part
// (F''), `boundary` the host edges between them. If a degree-0 vertex ever
// appears the host has no perfect matching; this is reported in-band.
struct KotzigReduction {
  std::vector<int> forced;             // pendant edge ids in removal order
  std::vector<int> residual_vertices;  // F'
  std::vector<int> stripped_vertices;  // F''
  EdgeSet boundary;                    // X, edges of the host from F' to F''
  bool no_perfect_matching = false;

  bool residual_empty() const { return residual_vertices.empty(); }
};

KotzigReduction kotzig_reduce(const Graph& g);

// Exact enumeration by backtracking on the lowest-id uncovered vertex.
// Stops after `cap` matchings when cap > 0; `truncated` reports whether the
// cap was hit. Odd alive vertex count yields an empty list.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, int cap = 0,
                                                  bool* truncated = nullptr);

struct UniquenessResult {
  bool unique = false;
  Matching matching;  // the perfect matching when unique
};

// True iff the graph has exactly one perfect matching. Runs kotzig_reduce,
// then looks for an alternating cycle through one matching of the residual;
// agrees with enumerate_perfect_matchings(cap = 2) by construction.
UniquenessResult has_unique_perfect_matching(const Graph& g);

// Cut edges by the standard low-link computation.
EdgeSet bridges(const Graph& g);

namespace detail {

// Flat copy of a subcubic graph used by the subset-search kernels; assigning
// from a template reuses capacity, so per-probe resets stay allocation-free.
struct Scratch {
  int n = 0;
  int m = 0;
  std::vector<std::array<int, 3>> inc;  // incident edge ids, inc_count used
  std::vector<int> inc_count;
  std::vector<std::array<int, 2>> ends;
  std::vector<int8_t> deg;
  std::vector<uint8_t> valive;
  std::vector<uint8_t> ealive;

  static Scratch from(const Graph& g);
  void drop_edge(int e);
};

// Uniqueness kernel: returns +1 unique, 0 not unique, -1 no perfect
// matching. Destroys the scratch; pass `forced` to collect the matching.
int unique_matching_decompose(Scratch& s, std::vector<int>* forced);

}  // namespace detail

}  // namespace fullerene
