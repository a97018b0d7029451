#pragma once

#include <string>
#include <vector>

#include "fullerene/digraph.hpp"
#include "fullerene/matching.hpp"
#include "fullerene/patch.hpp"

namespace fullerene::patchwork {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SeedGraph {
  std::string name;  // "Fs1".."Fs15"
  int index = 0;     // 1-based
  PatchMap map;
};

// The fifteen initial seed graphs with marked edge slots and forced
// pairings; seed i reproduces the i-th initial array as its boundary.
const std::vector<SeedGraph>& seed_catalog();
const SeedGraph* seed_by_name(const std::string& name);

struct Walk {
  int seed_index = 0;  // 1-based into the catalog
  std::vector<OpTag> steps;
};

std::string walk_to_text(const Walk& w);  // tags only, one per line
// Parses a tag-per-line file; `#` comments allowed. Seed is given separately.
std::vector<OpTag> parse_walk_steps(const std::string& text, std::string* err);

struct SynthesisResult {
  FullereneGraph graph;
  EdgeSet e0;         // the four realized marked edges
  Matching matching;  // unique perfect matching of graph - e0
};

// Replays the walk from its seed. Throws GrowError naming the failing step
// when the walk stalls, DomainError on a bad seed index. The result is
// checked: valid fullerene, |e0| = 4, graph - e0 has the recorded unique
// perfect matching.
SynthesisResult synthesize(const Walk& w);

// Fullerene on n vertices with anti-forcing number 4, built from the fixed
// walk family: fixed walks for n in {20, 24}; for n = 2k >= 28 the
// length-preserving loop is repeated k - 14 times. n must be even, >= 20,
// and not 22 or 26.
SynthesisResult construct_af4(int n);

// The fixed 20-vertex walk (ten steps from the 15th seed).
Walk f20_reference_walk();

struct ParityReport {
  bool bipartite = false;
  bool path10_from_l11 = false;
  bool path10_from_l15 = false;
  bool mod4_ok = false;  // all short-walk syntheses from L15 are 0 mod 4
  int dprime_nodes = 0;
  int walks_checked = 0;
  std::string detail;
  bool ok() const {
    return bipartite && path10_from_l11 && path10_from_l15 && mod4_ok;
  }
};

// Restriction of the digraph to walks from the 4th, 11th and 15th initial
// arrays to the empty array: bipartiteness, existence of length-10 paths,
// and vertex counts divisible by 4 along every walk from the 15th seed of
// length at most 12.
ParityReport f26_parity_check(const ArrayDigraph& d);

}  // namespace fullerene::patchwork
