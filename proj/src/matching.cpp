#include "fullerene/matching.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace fullerene {

namespace detail {

Scratch Scratch::from(const Graph& g) {
  Scratch s;
  s.n = g.n;
  s.m = g.edge_ids();
  s.inc.assign(s.n, {});
  s.inc_count.assign(s.n, 0);
  s.ends.resize(s.m);
  s.deg.assign(s.n, 0);
  s.valive.assign(s.n, 0);
  s.ealive.resize(s.m);
  for (int v = 0; v < s.n; ++v) s.valive[v] = g.vertex_alive[v];
  for (int e = 0; e < s.m; ++e) {
    s.ends[e][0] = g.edges[e][0];
    s.ends[e][1] = g.edges[e][1];
    s.ealive[e] = g.edge_alive[e];
    if (!s.ealive[e]) continue;
    for (int side = 0; side < 2; ++side) {
      int v = s.ends[e][side];
      if (s.inc_count[v] >= 3)
        throw std::invalid_argument("kernel supports subcubic graphs only");
      s.inc[v][s.inc_count[v]++] = e;
      ++s.deg[v];
    }
  }
  return s;
}

void Scratch::drop_edge(int e) {
  if (!ealive[e]) return;
  ealive[e] = 0;
  --deg[ends[e][0]];
  --deg[ends[e][1]];
}

namespace {

// Removes v and its unique alive neighbour; assumes deg[v] == 1.
inline int strip_pendant(Scratch& s, int v, std::vector<int>* forced) {
  int pe = -1;
  for (int i = 0; i < s.inc_count[v]; ++i)
    if (s.ealive[s.inc[v][i]]) {
      pe = s.inc[v][i];
      break;
    }
  int u = s.ends[pe][0] == v ? s.ends[pe][1] : s.ends[pe][0];
  if (forced) forced->push_back(pe);
  for (int x : {v, u}) {
    s.valive[x] = 0;
    for (int i = 0; i < s.inc_count[x]; ++i) s.drop_edge(s.inc[x][i]);
  }
  return u;
}

// Pendant loop shared by the reduction and the uniqueness probe.
// Returns false when an isolated alive vertex shows up (no perfect matching).
bool strip_all_pendants(Scratch& s, std::vector<int>* forced) {
  for (;;) {
    int pendant = -1;
    for (int v = 0; v < s.n; ++v) {
      if (!s.valive[v]) continue;
      if (s.deg[v] == 0) return false;
      if (s.deg[v] == 1 && pendant < 0) pendant = v;
    }
    if (pendant < 0) return true;
    strip_pendant(s, pendant, forced);
  }
}

struct BridgeScan {
  const Scratch& s;
  std::vector<int> disc, low, comp;
  std::vector<int> out;
  int timer = 0;

  explicit BridgeScan(const Scratch& sc)
      : s(sc), disc(sc.n, -1), low(sc.n, 0), comp(sc.n, -1) {}

  // Iterative DFS; labels components and collects bridges.
  void run() {
    std::vector<std::array<int, 3>> stack;  // vertex, parent edge, slot
    int ncomp = 0;
    for (int r = 0; r < s.n; ++r) {
      if (!s.valive[r] || disc[r] >= 0) continue;
      stack.push_back({r, -1, 0});
      disc[r] = low[r] = timer++;
      comp[r] = ncomp;
      while (!stack.empty()) {
        int v = stack.back()[0];
        int pe = stack.back()[1];
        if (stack.back()[2] < s.inc_count[v]) {
          int e = s.inc[v][stack.back()[2]++];
          if (!s.ealive[e] || e == pe) continue;
          int w = s.ends[e][0] == v ? s.ends[e][1] : s.ends[e][0];
          if (disc[w] < 0) {
            disc[w] = low[w] = timer++;
            comp[w] = ncomp;
            stack.push_back({w, e, 0});
          } else {
            low[v] = std::min(low[v], disc[w]);
          }
        } else {
          stack.pop_back();
          if (!stack.empty()) {
            int parent = stack.back()[0];
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] > disc[parent]) out.push_back(pe);
          }
        }
      }
      ++ncomp;
    }
  }
};

}  // namespace

// Uniqueness by pendant stripping plus bridge decomposition. After pendants
// are gone every surviving component has minimum degree 2; if such a
// component has no bridge it admits either zero or at least two perfect
// matchings (Kotzig), so uniqueness fails either way. A bridge is resolved
// by parity: it lies in every perfect matching or in none.
int unique_matching_decompose(Scratch& s, std::vector<int>* forced) {
  for (;;) {
    if (!strip_all_pendants(s, forced)) return -1;
    int alive = 0;
    for (int v = 0; v < s.n; ++v)
      if (s.valive[v]) ++alive;
    if (alive == 0) return 1;

    BridgeScan scan(s);
    scan.run();
    std::vector<int> comp_size(s.n, 0);
    for (int v = 0; v < s.n; ++v)
      if (s.valive[v]) ++comp_size[scan.comp[v]];
    std::vector<uint8_t> comp_has_bridge(s.n, 0);
    for (int e : scan.out) comp_has_bridge[scan.comp[s.ends[e][0]]] = 1;
    for (int v = 0; v < s.n; ++v) {
      if (!s.valive[v]) continue;
      int c = scan.comp[v];
      if (comp_size[c] % 2 == 1) return -1;        // odd component: no matching
      if (!comp_has_bridge[c]) return 0;           // 2-edge-connected piece
    }

    // Resolve one bridge, then restart the pendant loop.
    int e = scan.out.front();
    auto [u, v] = s.ends[e];
    // Size of u's side of the split.
    std::vector<uint8_t> seen(s.n, 0);
    std::vector<int> stack{u};
    seen[u] = 1;
    int side = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int i = 0; i < s.inc_count[x]; ++i) {
        int f = s.inc[x][i];
        if (!s.ealive[f] || f == e) continue;
        int y = s.ends[f][0] == x ? s.ends[f][1] : s.ends[f][0];
        if (!seen[y]) {
          seen[y] = 1;
          ++side;
          stack.push_back(y);
        }
      }
    }
    if (side % 2 == 0) {
      s.drop_edge(e);  // even sides: the bridge lies in no perfect matching
    } else {
      if (forced) forced->push_back(e);  // odd sides: forced into every one
      for (int x : {u, v}) {
        s.valive[x] = 0;
        for (int i = 0; i < s.inc_count[x]; ++i) s.drop_edge(s.inc[x][i]);
      }
      // A vertex isolated by this removal is caught by the pendant loop.
    }
  }
}

}  // namespace detail

KotzigReduction kotzig_reduce(const Graph& g) {
  auto s = detail::Scratch::from(g);
  KotzigReduction r;
  r.no_perfect_matching = !detail::strip_all_pendants(s, &r.forced);
  for (int v = 0; v < g.n; ++v) {
    if (!g.vertex_alive[v]) continue;
    if (s.valive[v])
      r.residual_vertices.push_back(v);
    else
      r.stripped_vertices.push_back(v);
  }
  std::vector<uint8_t> in_residual(g.n, 0);
  for (int v : r.residual_vertices) in_residual[v] = 1;
  for (int e = 0; e < g.edge_ids(); ++e) {
    if (!g.edge_alive[e]) continue;
    auto [u, v] = g.edges[e];
    if (in_residual[u] != in_residual[v]) r.boundary.push_back(e);
  }
  r.boundary = normalize_edge_set(r.boundary);
  return r;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, int cap,
                                                  bool* truncated) {
  if (truncated) *truncated = false;
  std::vector<Matching> out;
  if (g.alive_vertex_count() % 2 == 1) return out;
  auto inc = g.adjacency();
  std::vector<uint8_t> covered(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    if (!g.vertex_alive[v]) covered[v] = 1;
  std::vector<int> chosen;

  // Backtracking on the lowest-id uncovered vertex.
  auto rec = [&](auto&& self, int from) -> bool {
    int v = from;
    while (v < g.n && covered[v]) ++v;
    if (v == g.n) {
      out.push_back({normalize_edge_set(chosen)});
      return cap > 0 && static_cast<int>(out.size()) >= cap;
    }
    for (int e : inc[v]) {
      int w = g.other_end(e, v);
      if (covered[w]) continue;
      covered[v] = covered[w] = 1;
      chosen.push_back(e);
      bool stop = self(self, v + 1);
      chosen.pop_back();
      covered[v] = covered[w] = 0;
      if (stop) return true;
    }
    return false;
  };
  if (rec(rec, 0) && truncated) *truncated = true;
  return out;
}

UniquenessResult has_unique_perfect_matching(const Graph& g) {
  UniquenessResult res;
  if (g.alive_vertex_count() % 2 == 1) return res;
  auto s = detail::Scratch::from(g);
  std::vector<int> forced;
  int verdict = detail::unique_matching_decompose(s, &forced);
  if (verdict == 1) {
    res.unique = true;
    res.matching.edges = normalize_edge_set(forced);
  }
  return res;
}

EdgeSet bridges(const Graph& g) {
  auto s = detail::Scratch::from(g);
  detail::BridgeScan scan(s);
  scan.run();
  return normalize_edge_set(scan.out);
}

}  // namespace fullerene
