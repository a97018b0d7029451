#include "fullerene/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fullerene::patchwork {

namespace {

bool node_less(const DistanceArray& a, const DistanceArray& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.entries() < b.entries();
}

}  // namespace

const std::array<DistanceArray, 15>& initial_arrays() {
  static const std::array<DistanceArray, 15> arr = [] {
    const char* lit[15] = {"[12222216]", "[13222152]", "[12322143]",
                           "[14221422]", "[12421323]", "[13321332]",
                           "[13215123]", "[14123214]", "[14124123]",
                           "[32151322]", "[41241322]", "[41232313]",
                           "[32142313]", "[25122322]", "[24213322]"};
    std::array<DistanceArray, 15> out;
    for (int i = 0; i < 15; ++i) out[i] = *DistanceArray::parse(lit[i]);
    return out;
  }();
  return arr;
}

int ArrayDigraph::node_id(const DistanceArray& a) const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (nodes[i] == a) return i;
  return -1;
}

std::vector<int> ArrayDigraph::out_arcs(int node) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
    if (arcs[i].from == node) out.push_back(i);
  return out;
}

int ArrayDigraph::loop_count() const {
  int c = 0;
  for (const auto& a : arcs)
    if (a.from == a.to) ++c;
  return c;
}

int ArrayDigraph::symmetric_pair_count() const {
  std::set<std::pair<int, int>> pairs;
  for (const auto& a : arcs)
    if (a.from != a.to) pairs.insert({a.from, a.to});
  int c = 0;
  for (auto [u, v] : pairs)
    if (u < v && pairs.count({v, u})) ++c;
  return c;
}

ArrayDigraph generate_digraph() {
  std::map<DistanceArray, std::map<DistanceArray, OpTag>> succ;
  std::vector<DistanceArray> worklist(initial_arrays().begin(),
                                      initial_arrays().end());
  std::set<DistanceArray> seen(worklist.begin(), worklist.end());
  for (size_t i = 0; i < worklist.size(); ++i) {
    DistanceArray cur = worklist[i];
    auto& out = succ[cur];
    for (const OpTag& tag : applicable_ops(cur)) {
      DistanceArray nxt = *apply(cur, tag);
      if (!out.count(nxt)) out.emplace(nxt, tag);
      if (!seen.count(nxt)) {
        seen.insert(nxt);
        worklist.push_back(nxt);
      }
    }
  }

  // Reverse reachability from the empty array.
  DistanceArray empty = DistanceArray::from({});
  std::set<DistanceArray> keep;
  if (seen.count(empty)) {
    keep.insert(empty);
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto& [from, outs] : succ) {
        if (keep.count(from)) continue;
        for (auto& [to, tag] : outs)
          if (keep.count(to)) {
            keep.insert(from);
            grew = true;
            break;
          }
      }
    }
  }

  ArrayDigraph d;
  d.nodes.assign(keep.begin(), keep.end());
  std::sort(d.nodes.begin(), d.nodes.end(), node_less);
  for (auto& [from, outs] : succ) {
    if (!keep.count(from)) continue;
    for (auto& [to, tag] : outs) {
      if (!keep.count(to)) continue;
      d.arcs.push_back({d.node_id(from), d.node_id(to), tag});
    }
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

std::string to_dot(const ArrayDigraph& d) {
  std::ostringstream os;
  os << "digraph D {\n";
  for (size_t i = 0; i < d.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << d.nodes[i].str() << "\"];\n";
  for (const auto& a : d.arcs)
    os << "  n" << a.from << " -> n" << a.to << " [label=\"" << tag_str(a.tag)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dump(const ArrayDigraph& d) {
  std::ostringstream os;
  os << "nodes " << d.nodes.size() << " arcs " << d.arcs.size() << '\n';
  for (const auto& n : d.nodes) os << n.str() << '\n';
  for (const auto& a : d.arcs)
    os << d.nodes[a.from].str() << " -> " << d.nodes[a.to].str() << " via "
       << tag_str(a.tag) << '\n';
  return os.str();
}

std::vector<OpTag> shortest_walk(const ArrayDigraph& d,
                                 const DistanceArray& from,
                                 const DistanceArray& to, bool* found) {
  if (found) *found = false;
  int s = d.node_id(from), t = d.node_id(to);
  if (s < 0 || t < 0) return {};
  std::vector<int> prev_node(d.nodes.size(), -1), prev_arc(d.nodes.size(), -1);
  std::vector<uint8_t> vis(d.nodes.size(), 0);
  std::vector<int> queue{s};
  vis[s] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    if (v == t) break;
    for (int ai = 0; ai < static_cast<int>(d.arcs.size()); ++ai) {
      const Arc& a = d.arcs[ai];
      if (a.from != v || vis[a.to]) continue;
      vis[a.to] = 1;
      prev_node[a.to] = v;
      prev_arc[a.to] = ai;
      queue.push_back(a.to);
    }
  }
  if (!vis[t]) return {};
  if (found) *found = true;
  std::vector<OpTag> tags;
  for (int v = t; v != s; v = prev_node[v]) tags.push_back(d.arcs[prev_arc[v]].tag);
  std::reverse(tags.begin(), tags.end());
  return tags;
}

std::vector<std::vector<OpTag>> all_simple_paths(const ArrayDigraph& d,
                                                 const DistanceArray& from,
                                                 const DistanceArray& to) {
  std::vector<std::vector<OpTag>> out;
  int s = d.node_id(from), t = d.node_id(to);
  if (s < 0 || t < 0) return out;
  std::vector<uint8_t> on_path(d.nodes.size(), 0);
  std::vector<OpTag> tags;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == t) {
      out.push_back(tags);
      return;
    }
    on_path[v] = 1;
    for (int ai = 0; ai < static_cast<int>(d.arcs.size()); ++ai) {
      const Arc& a = d.arcs[ai];
      if (a.from != v || on_path[a.to]) continue;
      tags.push_back(a.tag);
      self(self, a.to);
      tags.pop_back();
    }
    on_path[v] = 0;
  };
  rec(rec, s);
  return out;
}

}  // namespace fullerene::patchwork
