#include "fullerene/graph.hpp"

#include <algorithm>

namespace fullerene {

bool Graph::connected() const {
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (vertex_alive[v]) {
      start = v;
      break;
    }
  if (start < 0) return true;
  auto inc = adjacency();
  std::vector<uint8_t> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : inc[v]) {
      int w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == alive_vertex_count();
}

bool Graph::is_simple() const {
  std::vector<std::array<int, 2>> seen;
  for (int e = 0; e < edge_ids(); ++e) {
    if (!edge_alive[e]) continue;
    auto [u, v] = edges[e];
    if (u == v) return false;
    std::array<int, 2> key{std::min(u, v), std::max(u, v)};
    seen.push_back(key);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

EdgeSet normalize_edge_set(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool valid_edge_set(const Graph& g, const EdgeSet& s) {
  for (int e : s)
    if (!g.edge_ok(e)) return false;
  return std::is_sorted(s.begin(), s.end()) &&
         std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool is_matching(const Graph& g, const EdgeSet& s) {
  std::vector<uint8_t> used(g.n, 0);
  for (int e : s) {
    if (!g.edge_ok(e)) return false;
    auto [u, v] = g.edges[e];
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

bool is_perfect_matching(const Graph& g, const EdgeSet& s) {
  if (!is_matching(g, s)) return false;
  return static_cast<int>(s.size()) * 2 == g.alive_vertex_count();
}

}  // namespace fullerene
