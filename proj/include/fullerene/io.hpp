#pragma once

#include <string>

#include "fullerene/fullerene_graph.hpp"

namespace fullerene {

// Graph text format:
//   line 1: `n m`
//   n lines `v: e_a e_b e_c` (clockwise rotation as edge ids)
//   m lines `e: u v`
// `#` starts a comment line. Single spaces, LF line endings.
std::string graph_to_text(const FullereneGraph& f);

struct ParsedGraph {
  bool ok = false;
  FullereneGraph graph;
  std::string error;
};

ParsedGraph graph_from_text(const std::string& text);

}  // namespace fullerene
