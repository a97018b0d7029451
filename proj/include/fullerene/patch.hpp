#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fullerene/distance_array.hpp"
#include "fullerene/fullerene_graph.hpp"

namespace fullerene::patchwork {

// A generalized patch: plane graph with pentagon/hexagon inner faces and
// half-edge stubs on the outer face. Every vertex carries exactly three
// slots (edges or stubs) in clockwise order, so grown patches close directly
// into cubic plane graphs.
struct Slot {
  bool stub = false;
  int id = -1;  // edge id or stub id

  bool operator==(const Slot&) const = default;
};

struct GrowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundaryReading {
  std::vector<uint8_t> raw;    // segment lengths in outer-walk order
  std::vector<int> seg_stub;   // stub id opening each segment
  DistanceArray canonical;
  std::vector<int> canon_to_raw;  // canonical index -> raw segment index
};

class PatchMap {
 public:
  int add_vertex() {
    rot_.emplace_back();
    return static_cast<int>(rot_.size()) - 1;
  }
  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int alive_stub_count() const;

  int add_edge(int u, int v, int mark = 0);
  int add_stub(int v, int mark = 0);  // returns stub id
  void set_rotation(int v, std::vector<Slot> slots);

  const std::vector<Slot>& rotation(int v) const { return rot_[v]; }
  std::array<int, 2> edge_ends(int e) const { return edges_[e]; }
  int stub_vertex(int s) const { return stub_vert_[s]; }
  int stub_mark(int s) const { return stub_mark_[s]; }
  int edge_mark(int e) const { return edge_mark_[e]; }

  void add_pair(int a, int b) { pairing_.push_back({a, b}); }
  const std::vector<std::pair<int, int>>& pairing() const { return pairing_; }

  // Outer-face reading. Throws GrowError if the stubs do not all lie on a
  // single face (a corrupted patch).
  BoundaryReading boundary() const;

  // Inner faces must be pentagons/hexagons and all stubs on one face.
  bool patch_valid(std::string* why = nullptr) const;

  // Applies the geometric counterpart of an array operation at the given
  // canonical position and verifies afterwards that the boundary matches
  // the array-level rewrite.
  void grow(const OpTag& tag);

  bool closed() const { return alive_stub_count() == 0; }

  struct Finished {
    FullereneGraph graph;
    EdgeSet e0;
    Matching unique_matching;  // the accumulated forced pairing
  };
  // Converts a closed patch into a fullerene graph plus the realized marked
  // edge set and the forced pairing as edge ids.
  Finished finish() const;

 private:
  std::vector<std::vector<Slot>> rot_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<int8_t> edge_mark_;
  std::vector<int> stub_vert_;  // -1 when consumed
  std::vector<int8_t> stub_mark_;
  std::vector<std::pair<int, int>> pairing_;

  struct Dart {
    int v, slot;
    bool operator==(const Dart&) const = default;
  };
  Dart next_dart(Dart d) const;
  int slot_index(int v, const Slot& s) const;
  void replace_stub_with_edge(int stub_id, int edge_id);
  void apply_o1(int raw_seg, const BoundaryReading& b);
  void apply_o2(int raw_seg, const BoundaryReading& b);
  void apply_o4(int raw_seg, const BoundaryReading& b);
};

// The ten-vertex gadget (two pentagons joined by an edge) as a patch with
// eight stubs; the terminal attachment target.
PatchMap gadget_patch();

}  // namespace fullerene::patchwork
