#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace fullerene {

// Simple undirected graph with stable integer edge ids. Subgraph operations
// keep the id space of the host and mark removed items dead, so edge ids
// reported by searches refer directly back to the original graph.
struct Graph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<uint8_t> edge_alive;
  std::vector<uint8_t> vertex_alive;

  static Graph with_vertices(int n) {
    Graph g;
    g.n = n;
    g.vertex_alive.assign(n, 1);
    return g;
  }

  int add_edge(int u, int v) {
    edges.push_back({u, v});
    edge_alive.push_back(1);
    return static_cast<int>(edges.size()) - 1;
  }

  int edge_ids() const { return static_cast<int>(edges.size()); }

  bool edge_ok(int e) const {
    return e >= 0 && e < edge_ids() && edge_alive[e];
  }

  bool vertex_ok(int v) const { return v >= 0 && v < n && vertex_alive[v]; }

  int alive_edge_count() const {
    int c = 0;
    for (int e = 0; e < edge_ids(); ++e)
      if (edge_alive[e]) ++c;
    return c;
  }

  int alive_vertex_count() const {
    int c = 0;
    for (int v = 0; v < n; ++v)
      if (vertex_alive[v]) ++c;
    return c;
  }

  int other_end(int e, int v) const {
    return edges[e][0] == v ? edges[e][1] : edges[e][0];
  }

  std::optional<int> edge_between(int u, int v) const {
    for (int e = 0; e < edge_ids(); ++e) {
      if (!edge_alive[e]) continue;
      if ((edges[e][0] == u && edges[e][1] == v) ||
          (edges[e][0] == v && edges[e][1] == u))
        return e;
    }
    return std::nullopt;
  }

  // Incident alive edge ids per alive vertex.
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < edge_ids(); ++e) {
      if (!edge_alive[e]) continue;
      inc[edges[e][0]].push_back(e);
      inc[edges[e][1]].push_back(e);
    }
    return inc;
  }

  int degree(int v) const {
    int d = 0;
    for (int e = 0; e < edge_ids(); ++e)
      if (edge_alive[e] && (edges[e][0] == v || edges[e][1] == v)) ++d;
    return d;
  }

  Graph without_edges(const std::vector<int>& ids) const {
    Graph g = *this;
    for (int e : ids)
      if (e >= 0 && e < g.edge_ids()) g.edge_alive[e] = 0;
    return g;
  }

  Graph without_vertices(const std::vector<int>& ids) const {
    Graph g = *this;
    for (int v : ids) {
      if (v < 0 || v >= n) continue;
      g.vertex_alive[v] = 0;
      for (int e = 0; e < g.edge_ids(); ++e)
        if (g.edge_alive[e] && (g.edges[e][0] == v || g.edges[e][1] == v))
          g.edge_alive[e] = 0;
    }
    return g;
  }

  bool connected() const;
  bool is_simple() const;
};

// Sorted set of edge ids referencing a host graph.
using EdgeSet = std::vector<int>;

EdgeSet normalize_edge_set(EdgeSet s);
bool valid_edge_set(const Graph& g, const EdgeSet& s);

struct Matching {
  EdgeSet edges;
};

bool is_matching(const Graph& g, const EdgeSet& s);
bool is_perfect_matching(const Graph& g, const EdgeSet& s);

}  // namespace fullerene
