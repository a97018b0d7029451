#include "fullerene/io.hpp"

#include <sstream>

namespace fullerene {

std::string graph_to_text(const FullereneGraph& f) {
  std::ostringstream os;
  os << f.g.n << ' ' << f.g.edge_ids() << '\n';
  for (int v = 0; v < f.g.n; ++v) {
    os << v << ':';
    for (int e : f.rot[v]) os << ' ' << e;
    os << '\n';
  }
  for (int e = 0; e < f.g.edge_ids(); ++e)
    os << e << ": " << f.g.edges[e][0] << ' ' << f.g.edges[e][1] << '\n';
  return os.str();
}

namespace {

bool parse_int(std::istringstream& is, int& out) {
  return static_cast<bool>(is >> out);
}

}  // namespace

ParsedGraph graph_from_text(const std::string& text) {
  ParsedGraph r;
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) lines.push_back(line);
  }
  size_t cur = 0;
  auto next_line = [&]() -> const std::string* {
    return cur < lines.size() ? &lines[cur++] : nullptr;
  };

  const std::string* l = next_line();
  if (!l) {
    r.error = "empty input";
    return r;
  }
  int n = 0, m = 0;
  {
    std::istringstream is(*l);
    if (!parse_int(is, n) || !parse_int(is, m) || n <= 0 || m < 0) {
      r.error = "bad header line";
      return r;
    }
  }
  FullereneGraph f;
  f.g = Graph::with_vertices(n);
  f.rot.assign(n, {});
  for (int i = 0; i < n; ++i) {
    l = next_line();
    if (!l) {
      r.error = "truncated file: missing rotation line";
      return r;
    }
    std::istringstream is(*l);
    int v;
    char colon;
    if (!(is >> v >> colon) || colon != ':' || v < 0 || v >= n) {
      r.error = "bad rotation line";
      return r;
    }
    int e;
    while (is >> e) f.rot[v].push_back(e);
    if (f.rot[v].empty()) {
      r.error = "bad rotation line";
      return r;
    }
  }
  std::vector<std::array<int, 2>> edges(m, {-1, -1});
  for (int i = 0; i < m; ++i) {
    l = next_line();
    if (!l) {
      r.error = "truncated file: missing edge line";
      return r;
    }
    std::istringstream is(*l);
    int e, u, v;
    char colon;
    if (!(is >> e >> colon >> u >> v) || colon != ':' || e < 0 || e >= m) {
      r.error = "bad edge line";
      return r;
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      r.error = "edge endpoint out of range";
      return r;
    }
    edges[e] = {u, v};
  }
  for (int e = 0; e < m; ++e) {
    if (edges[e][0] < 0) {
      r.error = "missing edge id " + std::to_string(e);
      return r;
    }
    f.g.add_edge(edges[e][0], edges[e][1]);
  }
  r.ok = true;
  r.graph = std::move(f);
  return r;
}

}  // namespace fullerene
