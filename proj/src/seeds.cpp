#include "fullerene/seeds.hpp"

#include <algorithm>
#include <sstream>

#include "fullerene/fixtures.hpp"

namespace fullerene::patchwork {

namespace {

// Seed table. Rotation tokens: >= 0 is an edge index (into the seed's edge
// list); negative is a stub, encoded -(mark+1) with mark 0 for plain stubs
// and 1..4 for the designated e1..e4 slots. Stub ids are assigned in
// reading order (vertex by vertex, slot by slot). Edge triples are
// {u, v, mark}. Each seed's boundary reproduces its initial array, which is
// checked in the test suite.
struct SeedSpec {
  const char* name;
  int nverts;
  std::vector<std::array<int, 3>> edges;
  std::vector<std::array<int, 3>> rot;
  std::vector<std::array<int, 2>> pairs;
};

const std::vector<SeedSpec>& seed_specs() {
  static const std::vector<SeedSpec> specs = {
      {"Fs1", 6,
       {{0,1,0},{1,2,0},{2,3,0},{3,4,0},{4,5,0}},
       {{-3,-2,0},{-1,0,1},{-4,1,2},{-1,2,3},{-5,3,4},{-1,-1,4}},
       {{0,1},{2,3},{4,5}}},
      {"Fs2", 6,
       {{0,1,0},{1,2,0},{2,3,0},{3,4,0},{4,5,0}},
       {{-3,-2,0},{-1,1,0},{-4,1,2},{-1,2,3},{-5,3,4},{-1,-1,4}},
       {{0,1},{2,3},{4,5}}},
      {"Fs3", 6,
       {{0,1,0},{1,2,0},{2,3,0},{3,4,0},{4,5,0}},
       {{-3,-2,0},{-1,0,1},{-4,2,1},{-1,2,3},{-5,3,4},{-1,-1,4}},
       {{0,1},{2,3},{4,5}}},
      {"Fs4", 6,
       {{0,1,0},{1,2,0},{2,3,0},{3,4,0},{4,5,0}},
       {{-3,-2,0},{-1,1,0},{-4,2,1},{-1,2,3},{-5,3,4},{-1,-1,4}},
       {{0,1},{2,3},{4,5}}},
      {"Fs5", 6,
       {{0,1,0},{1,2,0},{2,3,0},{3,4,0},{4,5,0}},
       {{-3,-2,0},{-1,0,1},{-4,2,1},{-1,3,2},{-5,3,4},{-1,-1,4}},
       {{0,1},{2,3},{4,5}}},
      {"Fs6", 6,
       {{0,1,0},{1,2,0},{2,3,0},{3,4,0},{4,5,0}},
       {{-3,-2,0},{-1,1,0},{-4,1,2},{-1,3,2},{-5,3,4},{-1,-1,4}},
       {{0,1},{2,3},{4,5}}},
      {"Fs7", 6,
       {{0,1,0},{1,2,0},{2,3,0},{1,4,0},{4,5,0}},
       {{-3,-2,0},{0,1,3},{-4,2,1},{-1,-1,2},{-5,3,4},{-1,-1,4}},
       {{0,1},{2,3},{4,5}}},
      {"Fs8", 6,
       {{0,1,0},{1,2,0},{2,3,0},{1,4,0},{4,5,0}},
       {{-3,-2,0},{0,3,1},{-4,2,1},{-1,-1,2},{-5,3,4},{-1,-1,4}},
       {{0,1},{2,3},{4,5}}},
      {"Fs9", 6,
       {{0,1,0},{1,2,0},{2,3,0},{1,4,0},{4,5,0}},
       {{-3,-2,0},{0,1,3},{-4,1,2},{-1,-1,2},{-5,3,4},{-1,-1,4}},
       {{0,1},{2,3},{4,5}}},
      {"Fs10", 8,
       {{0,1,0},{1,2,1},{2,3,0},{3,4,0},{4,0,0},{4,5,0},{0,6,0},{6,7,0}},
       {{0,4,6},{-3,1,0},{-4,2,1},{-1,3,2},{3,5,4},{-1,-1,5},{-5,6,7},
        {-1,-1,7}},
       {{0,1},{2,3},{4,5},{6,7}}},
      {"Fs11", 8,
       {{0,1,0},{1,2,1},{2,3,0},{3,4,0},{4,0,0},{4,5,0},{0,6,0},{6,7,0}},
       {{0,6,4},{-3,0,1},{-4,1,2},{-1,2,3},{3,4,5},{-1,-1,5},{-5,6,7},
        {-1,-1,7}},
       {{0,1},{2,3},{4,5},{6,7}}},
      {"Fs12", 8,
       {{0,1,0},{1,2,1},{2,3,0},{3,4,0},{4,0,0},{4,5,0},{1,6,2},{6,7,0}},
       {{-1,0,4},{0,6,1},{-4,2,1},{-1,3,2},{3,5,4},{-1,-1,5},{-5,6,7},
        {-1,-1,7}},
       {{0,1},{2,3},{4,5},{6,7}}},
      {"Fs13", 8,
       {{0,1,0},{1,2,1},{2,3,0},{3,4,0},{4,0,0},{4,5,0},{1,6,2},{6,7,0}},
       {{-1,4,0},{0,1,6},{-4,1,2},{-1,2,3},{3,4,5},{-1,-1,5},{-5,6,7},
        {-1,-1,7}},
       {{0,1},{2,3},{4,5},{6,7}}},
      {"Fs14", 8,
       {{0,1,0},{1,2,1},{2,3,0},{3,4,0},{4,0,0},{4,5,0},{5,6,0},{6,7,0}},
       {{-1,4,0},{-3,0,1},{-4,1,2},{-1,2,3},{3,4,5},{-1,5,6},{-5,6,7},
        {-1,-1,7}},
       {{0,1},{2,3},{4,5},{6,7}}},
      {"Fs15", 8,
       {{0,1,0},{1,2,1},{2,3,0},{3,4,0},{4,0,0},{4,5,0},{5,6,0},{6,7,0}},
       {{-1,4,0},{-3,0,1},{-4,1,2},{-1,2,3},{3,4,5},{-1,6,5},{-5,6,7},
        {-1,-1,7}},
       {{0,1},{2,3},{4,5},{6,7}}},
  };
  return specs;
}

PatchMap build_seed(const SeedSpec& spec) {
  PatchMap p;
  for (int v = 0; v < spec.nverts; ++v) p.add_vertex();
  std::vector<int> eids;
  for (const auto& e : spec.edges) eids.push_back(p.add_edge(e[0], e[1], e[2]));
  for (int v = 0; v < spec.nverts; ++v) {
    std::vector<Slot> slots;
    for (int t : spec.rot[v]) {
      if (t >= 0)
        slots.push_back(Slot{false, eids[t]});
      else
        slots.push_back(Slot{true, p.add_stub(v, -t - 1)});
    }
    p.set_rotation(v, std::move(slots));
  }
  for (const auto& pr : spec.pairs) p.add_pair(pr[0], pr[1]);
  return p;
}

}  // namespace

const std::vector<SeedGraph>& seed_catalog() {
  static const std::vector<SeedGraph> catalog = [] {
    std::vector<SeedGraph> out;
    int i = 0;
    for (const auto& spec : seed_specs()) {
      ++i;
      out.push_back({spec.name, i, build_seed(spec)});
    }
    return out;
  }();
  return catalog;
}

const SeedGraph* seed_by_name(const std::string& name) {
  for (const auto& s : seed_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

std::string walk_to_text(const Walk& w) {
  std::string out;
  for (const auto& t : w.steps) {
    out += tag_str(t);
    out += '\n';
  }
  return out;
}

std::vector<OpTag> parse_walk_steps(const std::string& text, std::string* err) {
  std::vector<OpTag> steps;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                             line.back() == '\t'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    auto tag = parse_tag(line.substr(start));
    if (!tag) {
      if (err) *err = "bad operation tag on line " + std::to_string(lineno);
      return {};
    }
    steps.push_back(*tag);
  }
  return steps;
}

SynthesisResult synthesize(const Walk& w) {
  const auto& catalog = seed_catalog();
  if (w.seed_index < 1 || w.seed_index > static_cast<int>(catalog.size()))
    throw DomainError("seed index out of range");
  PatchMap p = catalog[w.seed_index - 1].map;
  for (size_t i = 0; i < w.steps.size(); ++i) {
    try {
      p.grow(w.steps[i]);
    } catch (const GrowError& e) {
      throw GrowError("walk stalls at step " + std::to_string(i + 1) + " (" +
                      tag_str(w.steps[i]) + "): " + e.what());
    }
  }
  if (!p.closed())
    throw GrowError("walk ended with an open boundary " +
                    p.boundary().canonical.str());
  auto fin = p.finish();
  SynthesisResult res{std::move(fin.graph), std::move(fin.e0),
                      std::move(fin.unique_matching)};
  auto verdict = validate_fullerene(res.graph);
  if (!verdict.ok)
    throw GrowError("synthesis produced an invalid graph: " +
                    verdict.diagnostic);
  if (res.e0.size() != 4)
    throw GrowError("synthesis realized " + std::to_string(res.e0.size()) +
                    " marked edges instead of 4");
  auto unique = has_unique_perfect_matching(res.graph.g.without_edges(res.e0));
  if (!unique.unique)
    throw GrowError("graph minus marked edges lacks a unique perfect matching");
  if (!(unique.matching.edges == res.matching.edges))
    throw GrowError("forced pairing disagrees with the unique perfect matching");
  return res;
}

namespace {

std::vector<OpTag> tags_along(const std::vector<const char*>& arrays) {
  std::vector<OpTag> tags;
  for (size_t i = 0; i + 1 < arrays.size(); ++i) {
    DistanceArray from = *DistanceArray::parse(arrays[i]);
    DistanceArray to = *DistanceArray::parse(arrays[i + 1]);
    bool found = false;
    for (const OpTag& t : applicable_ops(from)) {
      if (*apply(from, t) == to) {
        tags.push_back(t);
        found = true;
        break;
      }
    }
    if (!found)
      throw DomainError(std::string("no operation sends ") + arrays[i] +
                        " to " + arrays[i + 1]);
  }
  return tags;
}

// Reference walk for the 20-vertex case, from the 15th seed.
const std::vector<const char*>& f20_walk_arrays() {
  static const std::vector<const char*> arr = {
      "[24213322]", "[23314142]", "[33143142]", "[33315142]",
      "[333242]",   "[333414]",   "[335134]",   "[3434]",
      "[5451]",     "[55]",       "[]"};
  return arr;
}

// Reference walk family for 2k >= 28 vertices, from the 14th seed; the
// loop at [33513333] is taken k - 14 times.
const std::vector<const char*>& f2k_head_arrays() {
  static const std::vector<const char*> arr = {
      "[25122322]", "[41322322]", "[13322324]", "[33322341]",
      "[33322513]", "[33324133]", "[33341333]", "[33513333]"};
  return arr;
}

const std::vector<const char*>& f2k_tail_arrays() {
  static const std::vector<const char*> arr = {
      "[33513333]", "[343333]", "[515333]", "[533513]",
      "[5343]",     "[5451]",   "[55]",     "[]"};
  return arr;
}

OpTag loop_tag() {
  DistanceArray loop_node = *DistanceArray::parse("[33513333]");
  for (const OpTag& t : applicable_ops(loop_node))
    if (*apply(loop_node, t) == loop_node) return t;
  throw DomainError("loop operation not found");
}

}  // namespace

Walk f20_reference_walk() { return {15, tags_along(f20_walk_arrays())}; }

SynthesisResult construct_af4(int n) {
  if (n % 2 == 1 || n < 20 || n == 22 || n == 26)
    throw DomainError(
        "no fullerene with anti-forcing number 4 on " + std::to_string(n) +
        " vertices: n must be even, >= 20, and not 22 or 26");
  if (n == 20) return synthesize(f20_reference_walk());
  if (n == 24) {
    // Any path from the 5th seed to the attachment boundary, then the
    // terminal gadget operation.
    ArrayDigraph d = generate_digraph();
    DistanceArray target = *DistanceArray::parse("[33133323]");
    bool found = false;
    auto tags = shortest_walk(d, initial_arrays()[4], target, &found);
    if (!found) throw DomainError("no walk to the gadget boundary");
    auto i = o4_applicable(target);
    tags.push_back({OpKind::O4, *i});
    return synthesize({5, tags});
  }
  int k = n / 2;  // k >= 14
  std::vector<OpTag> tags = tags_along(f2k_head_arrays());
  OpTag loop = loop_tag();
  for (int i = 0; i < k - 14; ++i) tags.push_back(loop);
  auto tail = tags_along(f2k_tail_arrays());
  tags.insert(tags.end(), tail.begin(), tail.end());
  return synthesize({14, tags});
}

ParityReport f26_parity_check(const ArrayDigraph& d) {
  ParityReport rep;
  DistanceArray empty = DistanceArray::from({});
  int t = d.node_id(empty);
  std::vector<int> sources;
  for (int idx : {3, 10, 14})  // 4th, 11th, 15th initial arrays
    sources.push_back(d.node_id(initial_arrays()[idx]));
  if (t < 0 || sources[0] < 0 || sources[1] < 0 || sources[2] < 0) {
    rep.detail = "restriction endpoints missing from the digraph";
    return rep;
  }

  int N = static_cast<int>(d.nodes.size());
  std::vector<uint8_t> fwd(N, 0), co(N, 0);
  auto bfs = [&](std::vector<int> starts, bool reverse, std::vector<uint8_t>& vis) {
    for (int s : starts) vis[s] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Arc& a : d.arcs) {
        int from = reverse ? a.to : a.from, to = reverse ? a.from : a.to;
        if (vis[from] && !vis[to]) {
          vis[to] = 1;
          grew = true;
        }
      }
    }
  };
  bfs(sources, false, fwd);
  bfs({t}, true, co);
  std::vector<uint8_t> in_d(N, 0);
  for (int v = 0; v < N; ++v) in_d[v] = fwd[v] && co[v];
  for (int v = 0; v < N; ++v)
    if (in_d[v]) ++rep.dprime_nodes;

  // Bipartiteness of the underlying undirected restriction.
  std::vector<int> color(N, -1);
  rep.bipartite = true;
  for (int s = 0; s < N && rep.bipartite; ++s) {
    if (!in_d[s] || color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size() && rep.bipartite; ++qi) {
      int v = queue[qi];
      for (const Arc& a : d.arcs) {
        if (!(a.from == v || a.to == v)) continue;
        int w = a.from == v ? a.to : a.from;
        if (!in_d[a.from] || !in_d[a.to]) continue;
        if (w == v) {
          rep.bipartite = false;  // self-loop inside the restriction
          break;
        }
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          rep.bipartite = false;
          break;
        }
      }
    }
  }

  // Simple directed paths of length exactly 10 to the empty array.
  auto has_path10 = [&](int s) {
    std::vector<uint8_t> on(N, 0);
    auto rec = [&](auto&& self, int v, int len) -> bool {
      if (len == 10) return v == t;
      if (v == t) return false;
      on[v] = 1;
      for (const Arc& a : d.arcs) {
        if (a.from != v || on[a.to]) continue;
        if (self(self, a.to, len + 1)) {
          on[v] = 0;
          return true;
        }
      }
      on[v] = 0;
      return false;
    };
    return rec(rec, s, 0);
  };
  rep.path10_from_l11 = has_path10(sources[1]);
  rep.path10_from_l15 = has_path10(sources[2]);

  // Every walk of length <= 12 from the 15th seed must synthesize a vertex
  // count divisible by 4.
  rep.mod4_ok = true;
  std::vector<OpTag> tags;
  auto sweep = [&](auto&& self, int v) -> void {
    if (!rep.mod4_ok) return;
    if (v == t) {
      ++rep.walks_checked;
      auto res = synthesize({15, tags});
      if (res.graph.g.n % 4 != 0) {
        rep.mod4_ok = false;
        rep.detail = "walk of length " + std::to_string(tags.size()) +
                     " gives " + std::to_string(res.graph.g.n) + " vertices";
      }
      return;
    }
    if (tags.size() >= 12) return;
    for (const Arc& a : d.arcs) {
      if (a.from != v) continue;
      tags.push_back(a.tag);
      self(self, a.to);
      tags.pop_back();
    }
  };
  sweep(sweep, sources[2]);
  return rep;
}

}  // namespace fullerene::patchwork
