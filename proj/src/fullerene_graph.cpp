#include "fullerene/fullerene_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace fullerene {

namespace {

int rot_position(const FullereneGraph& f, int v, int e) {
  for (int i = 0; i < static_cast<int>(f.rot[v].size()); ++i)
    if (f.rot[v][i] == e) return i;
  return -1;
}

}  // namespace

bool trace_faces(const FullereneGraph& f, std::vector<Face>& out,
                 std::string* error) {
  out.clear();
  int m = f.g.edge_ids();
  if (static_cast<int>(f.rot.size()) != f.g.n) {
    if (error) *error = "malformed rotation: wrong number of rotation lists";
    return false;
  }
  for (int v = 0; v < f.g.n; ++v) {
    if (f.rot[v].size() != 3) {
      if (error) *error = "malformed rotation: list length != 3";
      return false;
    }
    for (int e : f.rot[v]) {
      if (e < 0 || e >= m) {
        if (error) *error = "malformed rotation: unknown edge id";
        return false;
      }
      if (f.g.edges[e][0] != v && f.g.edges[e][1] != v) {
        if (error) *error = "malformed rotation: edge not incident to vertex";
        return false;
      }
    }
  }

  // Dart (e, side): edge e traversed from ends[side] to ends[1-side].
  std::vector<std::array<uint8_t, 2>> used(m, {0, 0});
  for (int e0 = 0; e0 < m; ++e0) {
    for (int s0 = 0; s0 < 2; ++s0) {
      if (used[e0][s0]) continue;
      Face face;
      int e = e0, s = s0;
      do {
        used[e][s] = 1;
        int tail = f.g.edges[e][s];
        int head = f.g.edges[e][1 - s];
        face.vertices.push_back(tail);
        face.edges.push_back(e);
        int pos = rot_position(f, head, e);
        if (pos < 0) {
          if (error) *error = "malformed rotation: inconsistent incidence";
          return false;
        }
        int ne = f.rot[head][(pos + 1) % 3];
        e = ne;
        s = f.g.edges[ne][0] == head ? 0 : 1;
        if (f.g.edges[ne][0] != head && f.g.edges[ne][1] != head) {
          if (error) *error = "malformed rotation: broken face walk";
          return false;
        }
        if (static_cast<int>(face.vertices.size()) > 2 * m + 1) {
          if (error) *error = "malformed rotation: face walk does not close";
          return false;
        }
      } while (!(e == e0 && s == s0));
      out.push_back(std::move(face));
    }
  }
  return true;
}

std::vector<Face> faces(const FullereneGraph& f) {
  std::vector<Face> out;
  std::string err;
  if (!trace_faces(f, out, &err)) out.clear();
  return out;
}

int pentagon_count(const std::vector<Face>& fs) {
  int c = 0;
  for (const auto& f : fs)
    if (f.size() == 5) ++c;
  return c;
}

int hexagon_count(const std::vector<Face>& fs) {
  int c = 0;
  for (const auto& f : fs)
    if (f.size() == 6) ++c;
  return c;
}

Verdict validate_fullerene(const FullereneGraph& f) {
  if (f.g.n == 0) return {false, "empty graph"};
  for (int v = 0; v < f.g.n; ++v)
    if (!f.g.vertex_alive[v]) return {false, "dead vertex in candidate"};
  for (int e = 0; e < f.g.edge_ids(); ++e) {
    if (!f.g.edge_alive[e]) return {false, "dead edge in candidate"};
    auto [u, v] = f.g.edges[e];
    if (u == v) return {false, "loop edge"};
    if (u < 0 || v < 0 || u >= f.g.n || v >= f.g.n)
      return {false, "edge endpoint out of range"};
  }
  {
    std::vector<std::array<int, 2>> keys;
    for (auto [u, v] : f.g.edges)
      keys.push_back({std::min(u, v), std::max(u, v)});
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      return {false, "duplicate edge"};
  }
  if (static_cast<int>(f.rot.size()) != f.g.n)
    return {false, "malformed rotation: wrong number of rotation lists"};
  for (int v = 0; v < f.g.n; ++v) {
    if (f.rot[v].size() != 3)
      return {false, "malformed rotation: list length != 3"};
    auto sorted = f.rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return {false, "malformed rotation: repeated edge id"};
  }
  for (int v = 0; v < f.g.n; ++v)
    if (f.g.degree(v) != 3) return {false, "vertex degree != 3"};
  for (int v = 0; v < f.g.n; ++v)
    for (int e : f.rot[v])
      if (f.g.edges[e][0] != v && f.g.edges[e][1] != v)
        return {false, "malformed rotation: edge not incident to vertex"};
  if (!f.g.connected()) return {false, "disconnected graph"};

  std::vector<Face> fs;
  std::string err;
  if (!trace_faces(f, fs, &err)) return {false, err};
  for (const auto& face : fs)
    if (face.size() != 5 && face.size() != 6)
      return {false, "face of size " + std::to_string(face.size())};
  if (pentagon_count(fs) != 12)
    return {false, "pentagon count " + std::to_string(pentagon_count(fs)) +
                       " != 12"};
  int V = f.g.n, E = f.g.edge_ids(), F = static_cast<int>(fs.size());
  if (V - E + F != 2) return {false, "Euler check failed"};
  return {true, ""};
}

namespace {

// Breadth-first code of the map from a start dart; vertices are labeled in
// first-visit order and each visited vertex contributes its neighbour labels
// read in rotation order (direction dir) starting after the arrival edge.
std::vector<int> bfs_code(const FullereneGraph& f, int sv, int spos, int dir) {
  int n = f.g.n;
  std::vector<int> label(n, -1), order;
  order.reserve(n);
  label[sv] = 0;
  order.push_back(sv);
  // arrival rotation position per vertex
  std::vector<int> arr(n, -1);
  arr[sv] = spos;
  std::vector<int> code;
  code.reserve(3 * n);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    for (int k = 0; k < 3; ++k) {
      int pos = ((arr[v] + dir * (qi == 0 ? k : k + 1)) % 3 + 3) % 3;
      int e = f.rot[v][pos];
      int w = f.g.other_end(e, v);
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        order.push_back(w);
        arr[w] = rot_position(f, w, e);
      }
      code.push_back(label[w]);
    }
  }
  return code;
}

}  // namespace

std::vector<int> canonical_code(const FullereneGraph& f) {
  std::vector<int> best;
  for (int v = 0; v < f.g.n; ++v)
    for (int p = 0; p < 3; ++p)
      for (int dir : {1, -1}) {
        auto code = bfs_code(f, v, p, dir);
        if (best.empty() || code < best) best = std::move(code);
      }
  return best;
}

bool isomorphic(const FullereneGraph& a, const FullereneGraph& b) {
  if (a.g.n != b.g.n || a.g.edge_ids() != b.g.edge_ids()) return false;
  return canonical_code(a) == canonical_code(b);
}

namespace {

// Unit-capacity max flow between two vertex sets (min edge cut).
struct FlowNet {
  int n;
  std::vector<std::array<int, 2>> ends;
  std::vector<int> cap;  // per arc; arcs 2e, 2e+1 are the two directions
  std::vector<std::vector<int>> out;

  FlowNet(const Graph& g) : n(g.n), out(g.n) {
    for (int e = 0; e < g.edge_ids(); ++e) {
      if (!g.edge_alive[e]) continue;
      auto [u, v] = g.edges[e];
      out[u].push_back(static_cast<int>(ends.size()));
      ends.push_back({u, v});
      cap.push_back(1);
      out[v].push_back(static_cast<int>(ends.size()));
      ends.push_back({v, u});
      cap.push_back(1);
    }
  }

  // One BFS augmentation from any source to any sink; returns false when
  // no augmenting path remains. `reach` is filled with the visited set.
  bool augment(const std::vector<int>& sources, const std::vector<uint8_t>& sink,
               std::vector<uint8_t>& reach) {
    std::fill(reach.begin(), reach.end(), 0);
    std::queue<int> q;
    for (int s : sources) {
      reach[s] = 1;
      q.push(s);
    }
    int hit = -1;
    std::vector<int> via(n, -1);
    while (!q.empty() && hit < 0) {
      int v = q.front();
      q.pop();
      for (int a : out[v]) {
        if (cap[a] <= 0) continue;
        int w = ends[a][1];
        if (reach[w]) continue;
        reach[w] = 1;
        via[w] = a;
        if (sink[w]) {
          hit = w;
          break;
        }
        q.push(w);
      }
    }
    if (hit < 0) return false;
    for (int v = hit; via[v] >= 0;) {
      int a = via[v];
      cap[a] -= 1;
      cap[a ^ 1] += 1;
      v = ends[a][0];
    }
    return true;
  }
};

}  // namespace

CyclicCutVerdict cyclic_edge_connectivity_at_most_5(const FullereneGraph& f) {
  CyclicCutVerdict verdict;
  auto fs = faces(f);
  // Witness 5-cut: the edges leaving any pentagon.
  for (const auto& face : fs) {
    if (face.size() != 5) continue;
    std::vector<uint8_t> in(f.g.n, 0);
    for (int v : face.vertices) in[v] = 1;
    EdgeSet cut;
    for (int e = 0; e < f.g.edge_ids(); ++e) {
      auto [u, v] = f.g.edges[e];
      if (in[u] != in[v]) cut.push_back(e);
    }
    verdict.witness = normalize_edge_set(cut);
    break;
  }
  verdict.value5 = true;

  for (size_t i = 0; i < fs.size(); ++i) {
    for (size_t j = i + 1; j < fs.size(); ++j) {
      bool disjoint = true;
      std::vector<uint8_t> inA(f.g.n, 0);
      for (int v : fs[i].vertices) inA[v] = 1;
      for (int v : fs[j].vertices)
        if (inA[v]) disjoint = false;
      if (!disjoint) continue;
      FlowNet net(f.g);
      std::vector<uint8_t> sink(f.g.n, 0);
      for (int v : fs[j].vertices) sink[v] = 1;
      std::vector<uint8_t> reach(f.g.n, 0);
      int flow = 0;
      while (flow < 5 && net.augment(fs[i].vertices, sink, reach)) ++flow;
      if (flow < 5) {
        // Cut edges: saturated arcs from the residual-reachable side.
        net.augment(fs[i].vertices, sink, reach);  // final reachability
        EdgeSet cut;
        for (int e = 0; e < f.g.edge_ids(); ++e) {
          auto [u, v] = f.g.edges[e];
          if (reach[u] != reach[v]) cut.push_back(e);
        }
        verdict.value5 = false;
        verdict.witness = normalize_edge_set(cut);
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace fullerene
