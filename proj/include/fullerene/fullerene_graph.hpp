#pragma once

#include <string>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

// Cubic plane graph given as a rotation system: for every vertex the three
// incident edge ids in clockwise order. Faces are derived by the usual
// face-walk over darts, so the embedding is part of the value.
struct FullereneGraph {
  Graph g;
  std::vector<std::vector<int>> rot;  // rot[v] = clockwise incident edge ids

  int vertex_count() const { return g.n; }
  int edge_count() const { return g.edge_ids(); }
};

struct Face {
  std::vector<int> vertices;  // cyclic
  std::vector<int> edges;     // cyclic, edges[i] joins vertices[i], vertices[i+1]
  int size() const { return static_cast<int>(vertices.size()); }
};

struct Verdict {
  bool ok = false;
  std::string diagnostic;  // names the first violated invariant when !ok
};

// Structural acceptance test for the fullerene property: cubic, simple,
// connected, all faces pentagons or hexagons with exactly 12 pentagons,
// Euler count V - E + F = 2.
Verdict validate_fullerene(const FullereneGraph& f);

// Face walk of the rotation system. Precondition: validate_fullerene ok
// (every directed edge is used exactly once across all returned faces).
std::vector<Face> faces(const FullereneGraph& f);

// Faces walked without any validity assumption; used by the validator.
// Returns false on malformed rotations (wrong length, bad ids).
bool trace_faces(const FullereneGraph& f, std::vector<Face>& out,
                 std::string* error = nullptr);

int pentagon_count(const std::vector<Face>& fs);
int hexagon_count(const std::vector<Face>& fs);

// Plane-map isomorphism via canonical boundary-first codes. For valid
// fullerenes (3-connected planar) this coincides with graph isomorphism.
std::vector<int> canonical_code(const FullereneGraph& f);
bool isomorphic(const FullereneGraph& a, const FullereneGraph& b);

struct CyclicCutVerdict {
  bool value5 = false;     // no cyclic cut of size <= 4; a 5-cut exhibited
  EdgeSet witness;         // pentagon cut when value5, offending cut otherwise
};

// Confirms cyclic edge connectivity 5 by min-cut sweeps between all pairs of
// vertex-disjoint face cycles; any pair separated by fewer than 5 edges is
// reported as a witness (signals invalid input or a bug).
CyclicCutVerdict cyclic_edge_connectivity_at_most_5(const FullereneGraph& f);

}  // namespace fullerene
