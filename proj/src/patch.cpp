#include "fullerene/patch.hpp"

#include <algorithm>
#include <map>

namespace fullerene::patchwork {

int PatchMap::alive_stub_count() const {
  int c = 0;
  for (int v : stub_vert_)
    if (v >= 0) ++c;
  return c;
}

int PatchMap::add_edge(int u, int v, int mark) {
  edges_.push_back({u, v});
  edge_mark_.push_back(static_cast<int8_t>(mark));
  return static_cast<int>(edges_.size()) - 1;
}

int PatchMap::add_stub(int v, int mark) {
  stub_vert_.push_back(v);
  stub_mark_.push_back(static_cast<int8_t>(mark));
  return static_cast<int>(stub_vert_.size()) - 1;
}

void PatchMap::set_rotation(int v, std::vector<Slot> slots) {
  if (slots.size() != 3) throw GrowError("rotation must have three slots");
  rot_[v] = std::move(slots);
}

int PatchMap::slot_index(int v, const Slot& s) const {
  for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i)
    if (rot_[v][i] == s) return i;
  throw GrowError("slot not found at vertex");
}

PatchMap::Dart PatchMap::next_dart(Dart d) const {
  const Slot& s = rot_[d.v][d.slot];
  if (s.stub) return {d.v, (d.slot + 1) % static_cast<int>(rot_[d.v].size())};
  auto [a, b] = edges_[s.id];
  int w = a == d.v ? b : a;
  int j = slot_index(w, Slot{false, s.id});
  return {w, (j + 1) % static_cast<int>(rot_[w].size())};
}

BoundaryReading PatchMap::boundary() const {
  BoundaryReading out;
  int total_stubs = alive_stub_count();
  if (total_stubs == 0) {
    out.canonical = DistanceArray::from({});
    return out;
  }
  int s0 = -1;
  for (int s = 0; s < static_cast<int>(stub_vert_.size()); ++s)
    if (stub_vert_[s] >= 0) {
      s0 = s;
      break;
    }
  Dart start{stub_vert_[s0], slot_index(stub_vert_[s0], Slot{true, s0})};
  // Walk the outer face; a segment opens after each stub bounce.
  std::vector<int> seg_stub;
  std::vector<uint8_t> raw;
  int edge_darts = 0;
  int seen_stubs = 0;
  Dart d = next_dart(start);
  seg_stub.push_back(s0);
  int guard = 0;
  int max_steps = 2 * edge_count() + total_stubs + 4;
  while (!(d == start)) {
    if (++guard > max_steps) throw GrowError("boundary walk does not close");
    const Slot& s = rot_[d.v][d.slot];
    if (s.stub) {
      raw.push_back(static_cast<uint8_t>(edge_darts + 1));
      edge_darts = 0;
      seg_stub.push_back(s.id);
      ++seen_stubs;
    } else {
      ++edge_darts;
    }
    d = next_dart(d);
  }
  raw.push_back(static_cast<uint8_t>(edge_darts + 1));
  if (seen_stubs + 1 != total_stubs)
    throw GrowError("stubs are not all on one face");

  out.raw = raw;
  out.seg_stub = seg_stub;
  std::vector<int> as_int(raw.begin(), raw.end());
  out.canonical = DistanceArray::from(as_int);

  // First rotation/reflection of raw matching the canonical form.
  int k = static_cast<int>(raw.size());
  const auto& canon = out.canonical.entries();
  out.canon_to_raw.assign(k, 0);
  bool found = false;
  for (int dir : {1, -1}) {
    for (int r = 0; r < k && !found; ++r) {
      bool match = true;
      for (int i = 0; i < k; ++i)
        if (canon[i] != raw[((r + dir * i) % k + k) % k]) {
          match = false;
          break;
        }
      if (match) {
        for (int i = 0; i < k; ++i)
          out.canon_to_raw[i] = ((r + dir * i) % k + k) % k;
        found = true;
      }
    }
    if (found) break;
  }
  if (!found) throw GrowError("canonical alignment failed");
  return out;
}

bool PatchMap::patch_valid(std::string* why) const {
  // Trace every face of the map (stubs bounce); exactly one face carries
  // stubs and every other face is a pentagon or hexagon.
  std::map<std::pair<int, int>, char> used;  // dart (v, slot) -> visited
  int faces_with_stubs = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (rot_[v].size() != 3) {
      if (why) *why = "vertex without three slots";
      return false;
    }
    for (int i = 0; i < 3; ++i) {
      if (used.count({v, i})) continue;
      // walk one face
      Dart d{v, i};
      int stubs = 0, corners = 0;
      do {
        used[{d.v, d.slot}] = 1;
        if (rot_[d.v][d.slot].stub) ++stubs;
        ++corners;
        d = next_dart(d);
        if (corners > 4 * (edge_count() + vertex_count() + 4)) {
          if (why) *why = "face walk does not close";
          return false;
        }
      } while (!(d == Dart{v, i}));
      if (stubs > 0) {
        ++faces_with_stubs;
      } else if (corners != 5 && corners != 6) {
        if (why) *why = "inner face of size " + std::to_string(corners);
        return false;
      }
    }
  }
  if (closed()) {
    if (faces_with_stubs != 0) {
      if (why) *why = "stub bookkeeping broken";
      return false;
    }
    return true;
  }
  if (faces_with_stubs != 1) {
    if (why) *why = "stubs lie on more than one face";
    return false;
  }
  return true;
}

void PatchMap::replace_stub_with_edge(int stub_id, int edge_id) {
  int v = stub_vert_[stub_id];
  int i = slot_index(v, Slot{true, stub_id});
  rot_[v][i] = Slot{false, edge_id};
  if (stub_mark_[stub_id]) {
    if (edge_mark_[edge_id])
      throw GrowError("two marked stubs merged into one edge");
    edge_mark_[edge_id] = stub_mark_[stub_id];
  }
  stub_vert_[stub_id] = -1;
}

void PatchMap::apply_o1(int raw_seg, const BoundaryReading& b) {
  int k = static_cast<int>(b.raw.size());
  int sa = b.seg_stub[raw_seg];
  int sb = b.seg_stub[(raw_seg + 1) % k];
  int va = stub_vert_[sa], vb = stub_vert_[sb];
  if (va == vb) throw GrowError("o1 would create a loop");
  int u = add_vertex();
  int v = add_vertex();
  int ea = add_edge(va, u);
  int eb = add_edge(u, vb);
  int euv = add_edge(u, v);
  replace_stub_with_edge(sa, ea);
  replace_stub_with_edge(sb, eb);
  // u closes the old segment into a face; v hangs outward with two stubs.
  set_rotation(u, {Slot{false, eb}, Slot{false, ea}, Slot{false, euv}});
  int st1 = add_stub(v);
  int st2 = add_stub(v);
  set_rotation(v, {Slot{false, euv}, Slot{true, st1}, Slot{true, st2}});
  add_pair(u, v);
}

void PatchMap::apply_o2(int raw_seg, const BoundaryReading& b) {
  int k = static_cast<int>(b.raw.size());
  int sa = b.seg_stub[raw_seg];
  int sb = b.seg_stub[(raw_seg + 1) % k];
  int va = stub_vert_[sa], vb = stub_vert_[sb];
  if (va == vb) throw GrowError("merge would create a loop");
  for (auto [x, y] : edges_)
    if ((x == va && y == vb) || (x == vb && y == va))
      throw GrowError("merge would create a parallel edge");
  int e = add_edge(va, vb);
  replace_stub_with_edge(sa, e);
  replace_stub_with_edge(sb, e);
}

void PatchMap::apply_o4(int raw_seg, const BoundaryReading& b) {
  // Try every alignment of the gadget boundary against ours; keep the ones
  // whose completion is a valid fullerene. All survivors are isomorphic
  // (gadget symmetry); commit the first.
  const PatchMap gadget = gadget_patch();
  BoundaryReading gb = gadget.boundary();
  int k = 8;
  std::vector<int> patch_stubs(k), gadget_stubs(k);
  for (int t = 0; t < k; ++t)
    patch_stubs[t] = b.seg_stub[(raw_seg + t) % k];
  for (int t = 0; t < k; ++t) gadget_stubs[t] = gb.seg_stub[t];

  std::optional<PatchMap> committed;
  std::vector<std::vector<int>> accepted_codes;
  for (int dir : {1, -1}) {
    for (int off = 0; off < k; ++off) {
      PatchMap trial = *this;
      int base = trial.vertex_count();
      // splice gadget vertices/edges/stubs into the trial map
      std::vector<int> emap(gadget.edge_count());
      for (int gv = 0; gv < gadget.vertex_count(); ++gv) trial.add_vertex();
      for (int ge = 0; ge < gadget.edge_count(); ++ge) {
        auto [x, y] = gadget.edge_ends(ge);
        emap[ge] = trial.add_edge(base + x, base + y, gadget.edge_mark(ge));
      }
      std::vector<int> smap(gadget_stubs.size());
      for (size_t gs = 0; gs < gadget_stubs.size(); ++gs)
        smap[gs] =
            trial.add_stub(base + gadget.stub_vertex(gadget_stubs[gs]), 0);
      for (int gv = 0; gv < gadget.vertex_count(); ++gv) {
        std::vector<Slot> slots = gadget.rotation(gv);
        for (auto& s : slots) {
          if (s.stub) {
            for (size_t gs = 0; gs < gadget_stubs.size(); ++gs)
              if (gadget_stubs[gs] == s.id) s.id = smap[gs];
          } else {
            s.id = emap[s.id];
          }
        }
        trial.set_rotation(base + gv, slots);
      }
      for (auto [a, c] : gadget.pairing()) trial.add_pair(base + a, base + c);
      bool ok = true;
      try {
        for (int t = 0; t < k; ++t) {
          int ps = patch_stubs[t];
          int gs = smap[((off + dir * t) % k + k) % k];
          int pv = trial.stub_vert_[ps], gvx = trial.stub_vert_[gs];
          int e = trial.add_edge(pv, gvx);
          trial.replace_stub_with_edge(ps, e);
          trial.replace_stub_with_edge(gs, e);
        }
      } catch (const GrowError&) {
        ok = false;
      }
      if (!ok || !trial.closed()) continue;
      std::string why;
      if (!trial.patch_valid(&why)) continue;
      PatchMap::Finished fin;
      try {
        fin = trial.finish();
      } catch (const GrowError&) {
        continue;
      }
      if (!validate_fullerene(fin.graph).ok) continue;
      accepted_codes.push_back(canonical_code(fin.graph));
      if (!committed) committed = std::move(trial);
    }
  }
  if (!committed) throw GrowError("gadget attachment: no admissible way");
  for (size_t i = 1; i < accepted_codes.size(); ++i)
    if (accepted_codes[i] != accepted_codes[0])
      throw GrowError("gadget attachment: ambiguous embeddings");
  *this = std::move(*committed);
}

void PatchMap::grow(const OpTag& tag) {
  BoundaryReading b = boundary();
  auto expected = apply(b.canonical, tag);
  if (!expected)
    throw GrowError("operation " + tag_str(tag) + " not applicable at " +
                    b.canonical.str());
  int raw_seg = b.canon_to_raw.empty() ? 0 : b.canon_to_raw[tag.pos < 0 ? 0 : tag.pos];
  switch (tag.kind) {
    case OpKind::O1:
      apply_o1(raw_seg, b);
      break;
    case OpKind::O2:
      apply_o2(raw_seg, b);
      break;
    case OpKind::O3:
      apply_o2(0, b);  // k == 2: merge the two stubs, same mechanics
      break;
    case OpKind::O4:
      apply_o4(raw_seg, b);
      break;
  }
  BoundaryReading after = boundary();
  if (!(after.canonical == *expected))
    throw GrowError("boundary mismatch after " + tag_str(tag) + ": got " +
                    after.canonical.str() + ", expected " + expected->str());
  std::string why;
  if (!patch_valid(&why)) throw GrowError("patch invalid after grow: " + why);
}

PatchMap::Finished PatchMap::finish() const {
  if (!closed()) throw GrowError("finish on a patch with stubs");
  Finished fin;
  fin.graph.g = Graph::with_vertices(vertex_count());
  for (int e = 0; e < edge_count(); ++e)
    fin.graph.g.add_edge(edges_[e][0], edges_[e][1]);
  fin.graph.rot.assign(vertex_count(), {});
  for (int v = 0; v < vertex_count(); ++v) {
    if (rot_[v].size() != 3) throw GrowError("open vertex in finished patch");
    for (const Slot& s : rot_[v]) {
      if (s.stub) throw GrowError("stub in finished patch");
      fin.graph.rot[v].push_back(s.id);
    }
  }
  for (int e = 0; e < edge_count(); ++e)
    if (edge_mark_[e]) fin.e0.push_back(e);
  fin.e0 = normalize_edge_set(fin.e0);
  for (auto [a, b] : pairing_) {
    auto e = fin.graph.g.edge_between(a, b);
    if (!e) throw GrowError("pairing refers to a missing edge");
    fin.unique_matching.edges.push_back(*e);
  }
  fin.unique_matching.edges = normalize_edge_set(fin.unique_matching.edges);
  return fin;
}

PatchMap gadget_patch() {
  PatchMap p;
  for (int i = 0; i < 10; ++i) p.add_vertex();
  // pentagon a: 0..4, pentagon b: 5..9, bridge 0-5
  int ea[5], eb[5];
  for (int i = 0; i < 5; ++i) ea[i] = p.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) eb[i] = p.add_edge(5 + i, 5 + (i + 1) % 5);
  int bridge = p.add_edge(0, 5);
  // pentagon faces: rotations chosen so each 5-cycle closes as a face
  p.set_rotation(0, {Slot{false, ea[4]}, Slot{false, ea[0]}, Slot{false, bridge}});
  for (int i = 1; i < 5; ++i) {
    int st = p.add_stub(i);
    p.set_rotation(i, {Slot{false, ea[i - 1]}, Slot{false, ea[i]}, Slot{true, st}});
  }
  p.set_rotation(5, {Slot{false, eb[4]}, Slot{false, eb[0]}, Slot{false, bridge}});
  for (int i = 1; i < 5; ++i) {
    int st = p.add_stub(5 + i);
    p.set_rotation(5 + i,
                   {Slot{false, eb[i - 1]}, Slot{false, eb[i]}, Slot{true, st}});
  }
  p.add_pair(0, 5);
  p.add_pair(1, 2);
  p.add_pair(3, 4);
  p.add_pair(6, 7);
  p.add_pair(8, 9);
  return p;
}

}  // namespace fullerene::patchwork
