#include "fullerene/verify.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <sstream>

#include "fullerene/fixtures.hpp"
#include "fullerene/forcing.hpp"
#include "fullerene/seeds.hpp"

namespace fullerene::verify {

namespace {

using namespace fullerene::patchwork;

struct Check {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
  void note(const std::string& s) {
    if (detail.tellp() > 0) detail << "; ";
    detail << s;
  }
};

bool witness_confirmed(const Graph& g, const EdgeSet& s) {
  bool truncated = false;
  auto pms = enumerate_perfect_matchings(g.without_edges(s), 2, &truncated);
  return pms.size() == 1;
}

// criterion 1: af(F20) = af(F24) = 4 with enumeration-confirmed witnesses
Check c1(int jobs) {
  Check c;
  forcing::SearchOptions opt;
  opt.jobs = jobs;
  auto a20 = forcing::anti_forcing_number(f20(), 6, opt);
  c.expect(a20.number == 4, "af(F20) = " + std::to_string(a20.number));
  c.expect(witness_confirmed(f20().g, a20.witness),
           "F20 witness not confirmed by enumeration");
  auto a24 = forcing::anti_forcing_number(f24(), 6, opt);
  c.expect(a24.number == 4, "af(F24) = " + std::to_string(a24.number));
  c.expect(witness_confirmed(f24().g, a24.witness),
           "F24 witness not confirmed by enumeration");
  return c;
}

// criterion 2: af(F26) = 5 with refuted size 4
Check c2(int jobs) {
  Check c;
  c.expect(forcing::refute_size(f26(), 4), "a 4-subset anti-forces F26");
  forcing::SearchOptions opt;
  opt.jobs = jobs;
  auto a26 = forcing::anti_forcing_number(f26(), 5, opt);
  c.expect(a26.number == 5, "af(F26) = " + std::to_string(a26.number));
  c.expect(witness_confirmed(f26().g, a26.witness),
           "F26 witness not confirmed by enumeration");
  return c;
}

// criterion 3: af lower bound sweep and forcing lower bound
Check c3(int) {
  Check c;
  c.expect(forcing::refute_size(f20(), 3), "3-subset anti-forces F20");
  c.expect(forcing::refute_size(f24(), 3), "3-subset anti-forces F24");
  c.expect(forcing::refute_size(f26(), 3), "3-subset anti-forces F26");
  auto fc20 = forcing::forcing_number(f20());
  c.expect(fc20.number >= 3,
           "forcing_number(F20) = " + std::to_string(fc20.number) + " < 3");
  auto fc24 = forcing::forcing_number(f24());
  c.expect(fc24.number >= 3,
           "forcing_number(F24) = " + std::to_string(fc24.number) + " < 3");
  return c;
}

// criterion 4: digraph reproduction
Check c4(int) {
  Check c;
  ArrayDigraph d = generate_digraph();
  c.expect(static_cast<int>(d.nodes.size()) == 52,
           "node count " + std::to_string(d.nodes.size()) + " != 52");
  c.expect(static_cast<int>(d.arcs.size()) == 72,
           "arc count " + std::to_string(d.arcs.size()) + " != 72");
  c.expect(d.loop_count() == 1,
           "loop count " + std::to_string(d.loop_count()) + " != 1");
  c.expect(d.symmetric_pair_count() == 3,
           "symmetric pairs " + std::to_string(d.symmetric_pair_count()) +
               " != 3");
  const int dead[] = {1, 2, 3, 6, 7, 8, 10, 12};
  for (int i : dead)
    c.expect(!d.has_node(initial_arrays()[i - 1]),
             "dead seed L" + std::to_string(i) + " not pruned");
  return c;
}

// criterion 5: reference walks synthesize the fixture fullerenes
Check c5(int) {
  Check c;
  auto res20 = construct_af4(20);
  c.expect(isomorphic(res20.graph, f20()), "20-walk output not the dodecahedron");

  ArrayDigraph d = generate_digraph();
  DistanceArray target = *DistanceArray::parse("[33133323]");
  int total_paths = 0;
  for (int seed : {5, 9, 13}) {
    auto paths = all_simple_paths(d, initial_arrays()[seed - 1], target);
    c.expect(!paths.empty(),
             "no path from seed " + std::to_string(seed) + " to the O4 boundary");
    for (auto& tags : paths) {
      ++total_paths;
      auto full = tags;
      full.push_back({OpKind::O4, *o4_applicable(target)});
      auto res = synthesize({seed, full});
      c.expect(res.graph.g.n == 24 && isomorphic(res.graph, f24()),
               "seed " + std::to_string(seed) + " path gives a non-F24 result");
    }
  }
  c.note(std::to_string(total_paths) + " gadget paths checked");
  return c;
}

// criterion 6: construct_af4 family with oracle-verified anti-forcing number
Check c6(int jobs) {
  Check c;
  forcing::SearchOptions opt;
  opt.jobs = jobs;
  for (int n : {20, 24, 28, 30, 32}) {
    auto res = construct_af4(n);
    auto verdict = validate_fullerene(res.graph);
    c.expect(verdict.ok, "construct(" + std::to_string(n) +
                             ") invalid: " + verdict.diagnostic);
    c.expect(res.graph.g.n == n, "construct(" + std::to_string(n) + ") has " +
                                     std::to_string(res.graph.g.n) +
                                     " vertices");
    auto cert = forcing::anti_forcing_number(res.graph.g, 4, opt);
    c.expect(cert.number == 4, "af(construct(" + std::to_string(n) +
                                   ")) = " + std::to_string(cert.number));
  }
  return c;
}

// criterion 7: structure theorems over every minimum witness of F20 and F24
Check c7(int) {
  Check c;
  const char* names[] = {"F20", "F24"};
  int which = 0;
  for (const auto* fix : {&f20(), &f24()}) {
    std::string name = names[which++];
    auto sets = forcing::all_antiforcing_sets(fix->g, 4);
    c.expect(!sets.empty(), name + ": no minimum witnesses found");
    int other = 0, residual_bad = 0;
    for (const auto& s : sets) {
      auto shape = forcing::classify_antiforcing_shape(fix->g, s);
      if (!shape.is_antiforcing ||
          shape.shape == forcing::WitnessShape::other)
        ++other;
      auto rep = forcing::residual_structure_check(fix->g, s);
      if (!rep.ok) ++residual_bad;
    }
    c.expect(other == 0, name + ": " + std::to_string(other) + " of " +
                             std::to_string(sets.size()) +
                             " witnesses classify as other");
    c.expect(residual_bad == 0, name + ": " + std::to_string(residual_bad) +
                                    " witnesses fail the residual check");
  }
  return c;
}

// criterion 8: uniqueness decision agrees with cap-2 enumeration
Check c8(int) {
  Check c;
  uint64_t state = 0x2545f4914f6cdd1dULL;
  auto rng = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  const Graph* hosts[] = {&f20().g, &f24().g, &f26().g};
  int mismatches = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const Graph& h = *hosts[rng() % 3];
    std::vector<int> del;
    int ndel = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < ndel; ++i)
      del.push_back(static_cast<int>(rng() % h.edge_ids()));
    Graph g = h.without_edges(del);
    if (rng() % 3 == 0)
      g = g.without_vertices({static_cast<int>(rng() % h.n)});
    auto u = has_unique_perfect_matching(g);
    auto pms = enumerate_perfect_matchings(g, 2);
    if (u.unique != (pms.size() == 1)) ++mismatches;
    if (u.unique && !(u.matching.edges == pms[0].edges)) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " oracle mismatches");
  c.note("500 random subgraphs");
  return c;
}

// criterion 9: parity corollary on the restricted digraph
Check c9(int) {
  Check c;
  auto rep = f26_parity_check(generate_digraph());
  c.expect(rep.bipartite, "restriction is not bipartite");
  c.expect(rep.path10_from_l11, "no length-10 path from L11");
  c.expect(rep.path10_from_l15, "no length-10 path from L15");
  c.expect(rep.mod4_ok, "vertex count not divisible by 4: " + rep.detail);
  c.note(std::to_string(rep.walks_checked) + " walks synthesized");
  return c;
}

// criterion 10: cyclic edge connectivity 5 on all fixtures
Check c10(int) {
  Check c;
  for (const auto* fix : {&f20(), &f24(), &f26()}) {
    auto v = cyclic_edge_connectivity_at_most_5(*fix);
    c.expect(v.value5, "cut of size " + std::to_string(v.witness.size()) +
                           " separates two faces");
    c.expect(v.witness.size() == 5, "witness cut is not a 5-cut");
  }
  return c;
}

}  // namespace

std::vector<CriterionResult> run_all_criteria(int jobs) {
  struct Entry {
    int id;
    const char* name;
    Check (*fn)(int);
  };
  const Entry entries[] = {
      {1, "af(F20) = 4 and af(F24) = 4 with confirmed witnesses", c1},
      {2, "af(F26) = 5 with size 4 refuted", c2},
      {3, "lower bounds: no anti-forcing 3-subsets; forcing numbers >= 3", c3},
      {4, "digraph: 52 nodes, 72 arcs, 1 loop, 3 symmetric pairs, dead seeds pruned",
       c4},
      {5, "walk synthesis: reference 20-walk and all gadget paths give the fixtures",
       c5},
      {6, "construct family n in {20,24,28,30,32} with oracle af = 4", c6},
      {7, "every minimum witness matches the shape and residual theorems", c7},
      {8, "uniqueness decision agrees with cap-2 enumeration", c8},
      {9, "parity: restriction bipartite, length-10 paths, counts mod 4", c9},
      {10, "cyclic edge connectivity 5 on all fixtures", c10},
  };
  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    auto start = std::chrono::steady_clock::now();
    Check c = e.fn(jobs);
    auto stop = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    r.pass = c.pass;
    r.detail = c.detail.str();
    r.seconds = std::chrono::duration<double>(stop - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

void print_report(std::ostream& os, const std::vector<CriterionResult>& rs,
                  bool with_timings) {
  for (const auto& r : rs) {
    os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": "
       << r.name;
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    if (with_timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " [%.2fs]", r.seconds);
      os << buf;
    }
    os << '\n';
  }
  int failed = failed_count(rs);
  os << (failed == 0 ? "all criteria passed"
                     : std::to_string(failed) + " criterion(s) failed")
     << '\n';
}

int failed_count(const std::vector<CriterionResult>& rs) {
  int failed = 0;
  for (const auto& r : rs)
    if (!r.pass) ++failed;
  return failed;
}

}  // namespace fullerene::verify
