#include "fullerene/forcing.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

namespace fullerene::forcing {

namespace {

using detail::Scratch;

int probe_without_edges(const Scratch& base, const int* subset, int k) {
  thread_local Scratch s;
  s = base;  // vector assignment reuses capacity across probes
  for (int i = 0; i < k; ++i) s.drop_edge(subset[i]);
  return detail::unique_matching_decompose(s, nullptr);
}

// Lexicographic k-combinations of {0..m-1}; f returns true to stop.
template <typename F>
bool for_each_combination(int m, int k, F&& f) {
  if (k > m) return false;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if (f(c.data())) return true;
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Same enumeration restricted to combinations whose first element lies in
// [first_lo, first_hi); used to split a sweep across threads while keeping
// the lexicographic block order.
template <typename F>
bool for_each_combination_block(int m, int k, int first_lo, int first_hi,
                                F&& f) {
  for (int a = first_lo; a < first_hi && a <= m - k; ++a) {
    std::vector<int> c(k);
    c[0] = a;
    for (int i = 1; i < k; ++i) c[i] = a + i;
    for (;;) {
      if (f(c.data())) return true;
      int i = k - 1;
      while (i >= 1 && c[i] == m - k + i) --i;
      if (i < 1) break;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return false;
}

bool subset_has_adjacent_pair(const Graph& g, const int* c, int k) {
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      auto [a, b] = g.edges[c[i]];
      auto [x, y] = g.edges[c[j]];
      if (a == x || a == y || b == x || b == y) return true;
    }
  return false;
}

// First anti-forcing k-subset in lexicographic order, or empty.
EdgeSet find_witness(const Graph& g, const Scratch& base, int k,
                     const SearchOptions& opt) {
  int m = g.edge_ids();
  EdgeSet found;
  auto scan_block = [&](int lo, int hi, bool adjacent_only, bool skip_adjacent,
                        EdgeSet& out) {
    for_each_combination_block(m, k, lo, hi, [&](const int* c) {
      if (adjacent_only && !subset_has_adjacent_pair(g, c, k)) return false;
      if (skip_adjacent && subset_has_adjacent_pair(g, c, k)) return false;
      if (probe_without_edges(base, c, k) == 1) {
        out.assign(c, c + k);
        return true;
      }
      return false;
    });
  };

  auto sweep = [&](bool adjacent_only, bool skip_adjacent) -> EdgeSet {
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
      EdgeSet out;
      scan_block(0, m, adjacent_only, skip_adjacent, out);
      return out;
    }
    std::vector<EdgeSet> results(jobs);
    std::vector<std::thread> workers;
    int chunk = (m + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      int lo = t * chunk, hi = std::min(m, lo + chunk);
      workers.emplace_back([&, lo, hi, t] {
        if (lo < hi) scan_block(lo, hi, adjacent_only, skip_adjacent, results[t]);
      });
    }
    for (auto& w : workers) w.join();
    // Blocks are lexicographically ordered, so the first hit wins.
    for (auto& r : results)
      if (!r.empty()) return r;
    return {};
  };

  if (k == 4 && opt.prefer_non_matching) {
    EdgeSet w = sweep(true, false);
    if (!w.empty()) return w;
    return sweep(false, true);  // fallback: the remaining (matching) subsets
  }
  return sweep(false, false);
}

}  // namespace

AntiForcingCertificate anti_forcing_number(const Graph& g, int budget,
                                           const SearchOptions& opt) {
  AntiForcingCertificate cert;
  cert.budget = budget;
  Scratch base = Scratch::from(g);
  for (int k = 1; k <= budget; ++k) {
    EdgeSet w = find_witness(g, base, k, opt);
    if (!w.empty()) {
      cert.number = k;
      cert.witness = std::move(w);
      cert.exhausted_below = true;
      return cert;
    }
  }
  cert.over_budget = true;
  cert.exhausted_below = true;
  return cert;
}

bool refute_size(const Graph& g, int k) {
  Scratch base = Scratch::from(g);
  bool found = for_each_combination(g.edge_ids(), k, [&](const int* c) {
    return probe_without_edges(base, c, k) == 1;
  });
  return !found;
}

std::vector<EdgeSet> all_antiforcing_sets(const Graph& g, int k) {
  Scratch base = Scratch::from(g);
  std::vector<EdgeSet> out;
  for_each_combination(g.edge_ids(), k, [&](const int* c) {
    if (probe_without_edges(base, c, k) == 1) out.emplace_back(c, c + k);
    return false;
  });
  return out;
}

ShapeResult classify_antiforcing_shape(const Graph& g, const EdgeSet& s) {
  ShapeResult r;
  if (s.size() != 4 || !valid_edge_set(g, s)) return r;
  if (!has_unique_perfect_matching(g.without_edges(s)).unique) return r;
  r.is_antiforcing = true;

  // Component structure of the four witness edges.
  std::map<int, int> endpoint_deg;
  for (int e : s) {
    ++endpoint_deg[g.edges[e][0]];
    ++endpoint_deg[g.edges[e][1]];
  }
  int max_deg = 0, deg2_count = 0;
  for (auto& [v, d] : endpoint_deg) {
    max_deg = std::max(max_deg, d);
    if (d == 2) ++deg2_count;
  }
  auto share_endpoint = [&](int e, int f) {
    auto [a, b] = g.edges[e];
    auto [x, y] = g.edges[f];
    return a == x || a == y || b == x || b == y;
  };
  int comp[4] = {0, 1, 2, 3};
  for (int pass = 0; pass < 4; ++pass)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (share_endpoint(s[i], s[j])) comp[i] = comp[j] = std::min(comp[i], comp[j]);
  std::vector<int> comp_sizes;
  for (int c = 0; c < 4; ++c) {
    int n = 0;
    for (int i = 0; i < 4; ++i)
      if (comp[i] == c) ++n;
    if (n) comp_sizes.push_back(n);
  }
  std::sort(comp_sizes.begin(), comp_sizes.end());

  // Shapes per the two legal isomorphism types; a 3-edge component with all
  // endpoints of degree 2 would be a triangle, not a path, so the degree-2
  // count is checked as well.
  if (max_deg == 2 && comp_sizes == std::vector<int>{1, 1, 2} &&
      deg2_count == 1)
    r.shape = WitnessShape::path2_plus_two_edges;
  else if (max_deg == 2 && comp_sizes == std::vector<int>{1, 3} &&
           deg2_count == 2)
    r.shape = WitnessShape::path3_plus_edge;
  else
    r.shape = WitnessShape::other;
  return r;
}

ResidualReport residual_structure_check(const Graph& g, const EdgeSet& s) {
  ResidualReport rep;
  if (!has_unique_perfect_matching(g.without_edges(s)).unique) {
    rep.detail = "input set is not anti-forcing";
    return rep;
  }
  rep.input_antiforcing = true;
  KotzigReduction red = kotzig_reduce(g.without_edges(s));
  rep.residual_vertex_count = (int)red.residual_vertices.size();

  if (red.residual_vertices.empty()) {
    rep.residual_empty = true;
    rep.ok = true;
    rep.detail = "residual empty";
    return rep;
  }

  // Count host edges from the residual to the stripped part.
  std::vector<uint8_t> in_res(g.n, 0);
  for (int v : red.residual_vertices) in_res[v] = 1;
  for (int e = 0; e < g.edge_ids(); ++e) {
    auto [u, v] = g.edges[e];
    if (in_res[u] != in_res[v]) ++rep.host_boundary_edges;
  }

  // Residual must be the two-pentagon gadget: 10 vertices, 11 edges,
  // exactly one bridge whose removal leaves two 5-cycles.
  auto residual_ok = [&]() -> bool {
    if (rep.residual_vertex_count != 10) return false;
    Graph h = g.without_edges(s);
    std::vector<int> dead;
    for (int v = 0; v < g.n; ++v)
      if (!in_res[v]) dead.push_back(v);
    Graph res = h.without_vertices(dead);
    if (res.alive_edge_count() != 11) return false;
    EdgeSet br = bridges(res);
    if (br.size() != 1) return false;
    Graph two = res.without_edges(br);
    // each component: 5 vertices all of degree 2
    for (int v = 0; v < g.n; ++v)
      if (two.vertex_alive[v] && in_res[v] && two.degree(v) != 2) return false;
    return true;
  };

  if (residual_ok() && rep.host_boundary_edges == 8) {
    rep.gadget_case = true;
    rep.ok = true;
    rep.detail = "residual is the two-pentagon gadget, 8 boundary edges";
  } else {
    std::ostringstream os;
    os << "unexpected residual: " << rep.residual_vertex_count
       << " vertices, " << rep.host_boundary_edges << " boundary edges";
    rep.detail = os.str();
  }
  return rep;
}

ForcingCertificate forcing_number(const Graph& g, int budget) {
  ForcingCertificate cert;
  cert.budget = budget;
  auto matchings = enumerate_perfect_matchings(g);
  if (matchings.empty()) {
    cert.over_budget = true;
    return cert;
  }
  Scratch base = Scratch::from(g);
  for (int t = 0; t <= budget; ++t) {
    for (const auto& M : matchings) {
      int msize = (int)M.edges.size();
      if (t > msize) continue;
      bool found = for_each_combination(msize, t, [&](const int* idx) {
        thread_local Scratch s;
        s = base;
        for (int i = 0; i < t; ++i) {
          int e = M.edges[idx[i]];
          for (int side = 0; side < 2; ++side) {
            int v = g.edges[e][side];
            s.valive[v] = 0;
            for (int j = 0; j < s.inc_count[v]; ++j) s.drop_edge(s.inc[v][j]);
          }
        }
        if (detail::unique_matching_decompose(s, nullptr) == 1) {
          cert.witness.clear();
          for (int i = 0; i < t; ++i) cert.witness.push_back(M.edges[idx[i]]);
          return true;
        }
        return false;
      });
      if (found) {
        cert.number = t;
        cert.matching = M;
        cert.exhausted = true;
        return cert;
      }
    }
  }
  cert.over_budget = true;
  cert.exhausted = true;
  return cert;
}

std::string certificate_text(const AntiForcingCertificate& c) {
  std::ostringstream os;
  if (c.over_budget)
    os << "number: > " << c.budget << '\n';
  else
    os << "number: " << c.number << '\n';
  os << "witness:";
  for (int e : c.witness) os << ' ' << e;
  os << '\n';
  os << "exhausted_below: " << (c.exhausted_below ? "true" : "false") << '\n';
  return os.str();
}

std::string certificate_text(const ForcingCertificate& c) {
  std::ostringstream os;
  if (c.over_budget)
    os << "number: > " << c.budget << '\n';
  else
    os << "number: " << c.number << '\n';
  os << "matching:";
  for (int e : c.matching.edges) os << ' ' << e;
  os << '\n';
  os << "witness:";
  for (int e : c.witness) os << ' ' << e;
  os << '\n';
  os << "exhausted: " << (c.exhausted ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace fullerene::forcing
