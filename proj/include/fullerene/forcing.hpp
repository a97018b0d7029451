#pragma once

#include <string>
#include <vector>

#include "fullerene/fullerene_graph.hpp"
#include "fullerene/matching.hpp"

namespace fullerene::forcing {

struct SearchOptions {
  int jobs = 1;
  // Order size-4 candidates with adjacent pairs first. Changes search order
  // only; every subset is still probed when nothing smaller works.
  bool prefer_non_matching = false;
};

struct AntiForcingCertificate {
  int number = -1;  // af value; -1 when over budget
  EdgeSet witness;
  bool exhausted_below = false;  // all smaller sizes swept and refuted
  bool over_budget = false;
  int budget = 0;
};

// Exact anti-forcing number by increasing-size subset enumeration; each
// candidate S is tested with has_unique_perfect_matching(g - S). The
// returned witness is the lexicographically first one of minimum size.
AntiForcingCertificate anti_forcing_number(const Graph& g, int budget = 6,
                                           const SearchOptions& opt = {});
inline AntiForcingCertificate anti_forcing_number(const FullereneGraph& f,
                                                  int budget = 6,
                                                  const SearchOptions& o = {}) {
  return anti_forcing_number(f.g, budget, o);
}

// Brute-force oracle: true iff no k-subset of edges is anti-forcing.
// Plain exhaustive sweep, no ordering tricks, no pruning.
bool refute_size(const Graph& g, int k);
inline bool refute_size(const FullereneGraph& f, int k) {
  return refute_size(f.g, k);
}

// Every anti-forcing k-subset, in lexicographic order.
std::vector<EdgeSet> all_antiforcing_sets(const Graph& g, int k);

enum class WitnessShape { path2_plus_two_edges, path3_plus_edge, other };

struct ShapeResult {
  bool is_antiforcing = false;  // false: input error, shape meaningless
  WitnessShape shape = WitnessShape::other;
};

// Isomorphism type of the subgraph formed by the four witness edges.
ShapeResult classify_antiforcing_shape(const Graph& g, const EdgeSet& s);

struct ResidualReport {
  bool ok = false;  // input was anti-forcing and the residual shape is legal
  bool input_antiforcing = false;
  bool residual_empty = false;
  bool gadget_case = false;
  int residual_vertex_count = 0;
  int host_boundary_edges = 0;  // |X| counted in the fullerene itself
  std::string detail;
};

// Runs kotzig_reduce(g - s) and checks that the residual is either empty or
// a copy of the two-pentagon gadget with exactly 8 host edges to the rest.
ResidualReport residual_structure_check(const Graph& g, const EdgeSet& s);

struct ForcingCertificate {
  int number = -1;
  Matching matching;  // a perfect matching attaining the minimum
  EdgeSet witness;    // forcing subset of that matching
  bool exhausted = false;
  bool over_budget = false;
  int budget = 0;
};

// Minimum forcing number over all perfect matchings. A subset S of M forces
// M iff the graph with V(S) deleted has a unique perfect matching.
ForcingCertificate forcing_number(const Graph& g, int budget = 5);
inline ForcingCertificate forcing_number(const FullereneGraph& f,
                                         int budget = 5) {
  return forcing_number(f.g, budget);
}

std::string certificate_text(const AntiForcingCertificate& c);
std::string certificate_text(const ForcingCertificate& c);

}  // namespace fullerene::forcing
