#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "fullerene/fixtures.hpp"
#include "fullerene/matching.hpp"
#include "fullerene/seeds.hpp"

using namespace fullerene;
using namespace fullerene::patchwork;

namespace {

DistanceArray da(const char* s) { return *DistanceArray::parse(s); }

int op_vertex_delta(const OpTag& t) {
  switch (t.kind) {
    case OpKind::O1:
      return 2;
    case OpKind::O4:
      return 10;
    default:
      return 0;
  }
}

}  // namespace

TEST_CASE("gadget patch") {
  PatchMap g = gadget_patch();
  CHECK(g.vertex_count() == 10);
  CHECK(g.alive_stub_count() == 8);
  std::string why;
  CHECK_MESSAGE(g.patch_valid(&why), why);
  CHECK(g.boundary().canonical == DistanceArray::from({2, 2, 2, 4, 2, 2, 2, 4}));
}

TEST_CASE("seed catalog reproduces the initial arrays") {
  const auto& cat = seed_catalog();
  REQUIRE(cat.size() == 15);
  const auto& L = initial_arrays();
  for (int i = 0; i < 15; ++i) {
    CAPTURE(i);
    CHECK(cat[i].name == "Fs" + std::to_string(i + 1));
    CHECK(cat[i].index == i + 1);
    std::string why;
    CHECK_MESSAGE(cat[i].map.patch_valid(&why), why);
    CHECK(cat[i].map.boundary().canonical == L[i]);
  }
  SUBCASE("vertex counts: trees first, pentagon configurations after") {
    for (int i = 0; i < 9; ++i) CHECK(cat[i].map.vertex_count() == 6);
    for (int i = 9; i < 15; ++i) CHECK(cat[i].map.vertex_count() == 8);
  }
  SUBCASE("every seed carries four marked slots and a full pairing") {
    for (const auto& s : cat) {
      std::set<int> marks;
      for (int v = 0; v < s.map.vertex_count(); ++v)
        for (const Slot& sl : s.map.rotation(v)) {
          int m = sl.stub ? s.map.stub_mark(sl.id) : s.map.edge_mark(sl.id);
          if (m) marks.insert(m);
        }
      CHECK(marks == std::set<int>{1, 2, 3, 4});
      std::set<int> paired;
      for (auto [a, b] : s.map.pairing()) {
        paired.insert(a);
        paired.insert(b);
      }
      CHECK(static_cast<int>(paired.size()) == s.map.vertex_count());
    }
  }
  SUBCASE("lookup by name") {
    CHECK(seed_by_name("Fs15") == &cat[14]);
    CHECK(seed_by_name("Fs0") == nullptr);
  }
}

TEST_CASE("grow: vertex deltas and boundary commutation along the 20-walk") {
  PatchMap p = seed_catalog()[14].map;
  Walk w = f20_reference_walk();
  REQUIRE(w.steps.size() == 10);
  for (const auto& t : w.steps) {
    DistanceArray before = p.boundary().canonical;
    int verts = p.vertex_count();
    auto expected = apply(before, t);
    REQUIRE(expected.has_value());
    p.grow(t);
    CHECK(p.vertex_count() == verts + op_vertex_delta(t));
    CHECK(p.boundary().canonical == *expected);
  }
  CHECK(p.closed());
  CHECK(p.vertex_count() == 20);
}

TEST_CASE("commutation across the whole reachable digraph") {
  // One representative patch per digraph node (first reached); boundary of
  // grow(s, op) must equal the array rewrite for every arc.
  ArrayDigraph d = generate_digraph();
  std::map<int, PatchMap> rep;
  std::vector<int> queue;
  for (int i : {4, 5, 9, 11, 13, 14, 15}) {
    int id = d.node_id(initial_arrays()[i - 1]);
    REQUIRE(id >= 0);
    if (!rep.count(id)) {
      rep.emplace(id, seed_catalog()[i - 1].map);
      queue.push_back(id);
    }
  }
  int arcs_checked = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int ai : d.out_arcs(u)) {
      const Arc& a = d.arcs[ai];
      PatchMap next = rep.at(u);
      next.grow(a.tag);  // grow itself asserts the boundary rewrite
      ++arcs_checked;
      CHECK(next.boundary().canonical == d.nodes[a.to]);
      if (!rep.count(a.to) && !next.closed()) {
        rep.emplace(a.to, std::move(next));
        queue.push_back(a.to);
      }
    }
  }
  CHECK(arcs_checked > 40);
}

TEST_CASE("synthesis of the reference 20-walk") {
  auto res = synthesize(f20_reference_walk());
  CHECK(res.graph.g.n == 20);
  CHECK(validate_fullerene(res.graph).ok);
  CHECK(isomorphic(res.graph, f20()));
  CHECK(res.e0.size() == 4);
  SUBCASE("the marked set anti-forces and the pairing is the matching") {
    auto u = has_unique_perfect_matching(res.graph.g.without_edges(res.e0));
    REQUIRE(u.unique);
    CHECK(u.matching.edges == res.matching.edges);
  }
}

TEST_CASE("synthesis error paths") {
  SUBCASE("bad seed index") {
    CHECK_THROWS_AS(synthesize({0, {}}), DomainError);
    CHECK_THROWS_AS(synthesize({16, {}}), DomainError);
  }
  SUBCASE("stalling walk names the failing step") {
    Walk w{15, {{OpKind::O3, -1}}};
    try {
      synthesize(w);
      FAIL("expected a stall");
    } catch (const GrowError& e) {
      CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
  }
  SUBCASE("unterminated walk is rejected") {
    Walk w = f20_reference_walk();
    w.steps.pop_back();
    CHECK_THROWS_AS(synthesize(w), GrowError);
  }
}

TEST_CASE("walk text round trip") {
  Walk w = f20_reference_walk();
  std::string text = walk_to_text(w);
  std::string err;
  auto steps = parse_walk_steps(text, &err);
  CHECK(err.empty());
  CHECK(steps == w.steps);
  SUBCASE("comments are allowed") {
    auto steps2 = parse_walk_steps("# walk\n" + text + "\n# end\n", &err);
    CHECK(err.empty());
    CHECK(steps2 == w.steps);
  }
  SUBCASE("bad tags are reported with a line number") {
    parse_walk_steps("O1@2\nO9@1\n", &err);
    CHECK(err.find("line 2") != std::string::npos);
  }
}

TEST_CASE("construct_af4 family") {
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(construct_af4(22), DomainError);
    CHECK_THROWS_AS(construct_af4(26), DomainError);
    CHECK_THROWS_AS(construct_af4(21), DomainError);
    CHECK_THROWS_AS(construct_af4(18), DomainError);
  }
  SUBCASE("constructed sizes and validity") {
    for (int n : {20, 24, 28, 30, 34, 40, 66, 100}) {
      CAPTURE(n);
      auto res = construct_af4(n);
      CHECK(res.graph.g.n == n);
      CHECK(validate_fullerene(res.graph).ok);
      auto u = has_unique_perfect_matching(res.graph.g.without_edges(res.e0));
      CHECK(u.unique);
    }
  }
  SUBCASE("24 route ends with the gadget attachment") {
    auto res = construct_af4(24);
    CHECK(isomorphic(res.graph, f24()));
  }
}

TEST_CASE("vertex-count ledger along synthesized walks") {
  // |V| = |V_seed| + 2 * #O1 + 10 * #O4 on every digraph walk replayed
  ArrayDigraph d = generate_digraph();
  DistanceArray target = da("[33133323]");
  for (int seed : {5, 9, 13}) {
    for (auto& tags : all_simple_paths(d, initial_arrays()[seed - 1], target)) {
      auto full = tags;
      full.push_back({OpKind::O4, *o4_applicable(target)});
      int predicted = seed_catalog()[seed - 1].map.vertex_count();
      for (const auto& t : full) predicted += op_vertex_delta(t);
      auto res = synthesize({seed, full});
      CHECK(res.graph.g.n == predicted);
    }
  }
}

TEST_CASE("parity restriction report") {
  auto rep = f26_parity_check(generate_digraph());
  CHECK(rep.bipartite);
  CHECK(rep.path10_from_l11);
  CHECK(rep.path10_from_l15);
  CHECK(rep.mod4_ok);
  CHECK(rep.walks_checked > 0);
  CHECK(rep.ok());
}
