#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "fullerene/digraph.hpp"

using namespace fullerene::patchwork;

namespace {

DistanceArray da(const char* s) { return *DistanceArray::parse(s); }

}  // namespace

TEST_CASE("canonical form of cyclic sequences") {
  // rotations by one in both directions
  CHECK(da("[22222161]") == da("[12222216]"));
  CHECK(da("[61222221]") == da("[12222216]"));
  SUBCASE("reversal lands in the same class") {
    CHECK(da("[61222221]") == da("[12222216]"));
    CHECK(da("[16122222]") == da("[12222216]"));
  }
  SUBCASE("rotation by the period is invariant") {
    CHECK(da("[13321332]") == da("[13321332]"));
    CHECK(da("[33213321]") == da("[13321332]"));
  }
  SUBCASE("parse and print round trip") {
    CHECK(da("[25122322]").str() == DistanceArray::from({2, 5, 1, 2, 2, 3, 2, 2}).str());
    CHECK(da("[]").str() == "[]");
    CHECK(da("[]").empty());
    CHECK_FALSE(DistanceArray::parse("[1272]").has_value());
    CHECK_FALSE(DistanceArray::parse("25122322").has_value());
  }
}

TEST_CASE("operation o1") {
  SUBCASE("reference rewrite on the 2k-family head") {
    DistanceArray from = da("[25122322]");
    bool hit = false;
    for (int i = 0; i < from.size(); ++i)
      if (auto out = o1_apply(from, i))
        if (*out == da("[41322322]")) hit = true;
    CHECK(hit);
  }
  SUBCASE("the loop rewrite maps the array to itself") {
    DistanceArray loop = da("[33513333]");
    bool self = false;
    for (int i = 0; i < loop.size(); ++i)
      if (auto out = o1_apply(loop, i))
        if (*out == loop) self = true;
    CHECK(self);
  }
  SUBCASE("length-four case from the 20-walk") {
    DistanceArray from = da("[3434]");
    bool hit = false;
    for (int i = 0; i < from.size(); ++i)
      if (auto out = o1_apply(from, i))
        if (*out == da("[5451]")) hit = true;
    CHECK(hit);
  }
  SUBCASE("preconditions") {
    CHECK_FALSE(o1_apply(da("[55]"), 0).has_value());      // too short
    CHECK_FALSE(o1_apply(da("[3333]"), 0).has_value());    // no 4/5 entry
    // entry fine but a neighbour exceeds 4
    DistanceArray a = da("[5634]");
    for (int i = 0; i < a.size(); ++i)
      if (a.at(i) == 5) CHECK_FALSE(o1_apply(a, i).has_value());
  }
  SUBCASE("length is preserved") {
    DistanceArray from = da("[25122322]");
    for (int i = 0; i < from.size(); ++i)
      if (auto out = o1_apply(from, i)) CHECK(out->size() == from.size());
  }
}

TEST_CASE("operation o2") {
  SUBCASE("reference rewrites from the 20-walk") {
    DistanceArray a = da("[335134]");
    bool hit = false;
    for (int i = 0; i < a.size(); ++i)
      if (auto out = o2_apply(a, i))
        if (*out == da("[3434]")) hit = true;
    CHECK(hit);

    DistanceArray b = da("[5451]");
    hit = false;
    for (int i = 0; i < b.size(); ++i)
      if (auto out = o2_apply(b, i))
        if (*out == da("[55]")) hit = true;
    CHECK(hit);
  }
  SUBCASE("length two is out of range") {
    CHECK_FALSE(o2_apply(da("[55]"), 0).has_value());
    CHECK_FALSE(o2_apply(da("[55]"), 1).has_value());
  }
  SUBCASE("neighbour sum above six blocks the merge") {
    DistanceArray a = da("[4546]");
    for (int i = 0; i < a.size(); ++i)
      if (a.at(i) == 5) CHECK_FALSE(o2_apply(a, i).has_value());
  }
  SUBCASE("length drops by two") {
    DistanceArray a = da("[335134]");
    for (int i = 0; i < a.size(); ++i)
      if (auto out = o2_apply(a, i)) CHECK(out->size() == a.size() - 2);
  }
}

TEST_CASE("operation o3") {
  CHECK(o3_apply(da("[55]")).has_value());
  CHECK(o3_apply(da("[55]"))->empty());
  CHECK(o3_apply(da("[66]")).has_value());
  CHECK(o3_apply(da("[56]")).has_value());
  CHECK_FALSE(o3_apply(da("[54]")).has_value());
  CHECK_FALSE(o3_apply(da("[5451]")).has_value());
}

TEST_CASE("operation o4 applicability") {
  CHECK(o4_applicable(da("[33133323]")).has_value());
  CHECK_FALSE(o4_applicable(da("[33513333]")).has_value());
  CHECK(o4_applicable(da("[23332333]")).has_value());
  CHECK_FALSE(o4_applicable(da("[333333]")).has_value());     // wrong length
  CHECK_FALSE(o4_applicable(da("[13233333]")).has_value());   // pair not 4 apart
}

TEST_CASE("canonicalization is invariant under rotation and reversal") {
  uint64_t state = 0xc0ffee1234567ULL;
  auto rng = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int iter = 0; iter < 300; ++iter) {
    int k = 1 + static_cast<int>(rng() % 10);
    std::vector<int> raw(k);
    for (int& x : raw) x = 1 + static_cast<int>(rng() % 6);
    DistanceArray base = DistanceArray::from(raw);
    int r = static_cast<int>(rng() % k);
    std::vector<int> rotated;
    for (int i = 0; i < k; ++i) rotated.push_back(raw[(r + i) % k]);
    CHECK(DistanceArray::from(rotated) == base);
    std::vector<int> reversed(raw.rbegin(), raw.rend());
    CHECK(DistanceArray::from(reversed) == base);
  }
}

TEST_CASE("rewrite laws on random arrays") {
  uint64_t state = 0xabcdef987654321ULL;
  auto rng = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  int o1_seen = 0, o2_seen = 0;
  for (int iter = 0; iter < 500; ++iter) {
    int k = 4 + static_cast<int>(rng() % 5);
    std::vector<int> raw(k);
    for (int& x : raw) x = 1 + static_cast<int>(rng() % 6);
    DistanceArray a = DistanceArray::from(raw);
    int sum = 0;
    for (int i = 0; i < a.size(); ++i) sum += a.at(i);
    for (int i = 0; i < a.size(); ++i) {
      if (auto out = o1_apply(a, i)) {
        ++o1_seen;
        CHECK(out->size() == a.size());
        int osum = 0;
        for (int j = 0; j < out->size(); ++j) osum += out->at(j);
        CHECK(osum == sum + 5 - a.at(i));  // two +2 shifts, entry becomes 1
      }
      if (auto out = o2_apply(a, i)) {
        ++o2_seen;
        CHECK(out->size() == a.size() - 2);
        int osum = 0;
        for (int j = 0; j < out->size(); ++j) osum += out->at(j);
        CHECK(osum == sum - a.at(i));  // the closed segment leaves the code
      }
    }
  }
  CHECK(o1_seen > 50);
  CHECK(o2_seen > 50);
}

TEST_CASE("operation tags") {
  CHECK(tag_str({OpKind::O1, 2}) == "O1@3");
  CHECK(tag_str({OpKind::O3, -1}) == "O3");
  for (const char* s : {"O1@3", "O2@1", "O3", "O4@5"}) {
    auto t = parse_tag(s);
    REQUIRE(t.has_value());
    CHECK(tag_str(*t) == s);
  }
  CHECK_FALSE(parse_tag("O5@1").has_value());
  CHECK_FALSE(parse_tag("O1@0").has_value());
  CHECK_FALSE(parse_tag("").has_value());
}

TEST_CASE("initial arrays") {
  const auto& L = initial_arrays();
  CHECK(L[0] == da("[12222216]"));
  CHECK(L[13] == da("[25122322]"));
  CHECK(L[14] == da("[24213322]"));
}

TEST_CASE("digraph generation") {
  ArrayDigraph d = generate_digraph();

  SUBCASE("terminal and structural facts") {
    CHECK(d.has_node(da("[]")));
    CHECK(d.loop_count() == 1);
    CHECK(d.symmetric_pair_count() == 3);
    // the loop sits at the eight-entry class, not the seven-entry misprint
    for (const Arc& a : d.arcs)
      if (a.from == a.to) CHECK(d.nodes[a.from] == da("[33513333]"));
  }

  SUBCASE("size regression") {
    // Faithful generation yields 50/71; the expected constants differ
    // and the discrepancy is reported by the acceptance battery.
    CHECK(d.nodes.size() == 50);
    CHECK(d.arcs.size() == 71);
  }

  SUBCASE("dead seeds are pruned, productive seeds survive") {
    const auto& L = initial_arrays();
    for (int i : {1, 2, 3, 6, 7, 8, 10, 12}) CHECK_FALSE(d.has_node(L[i - 1]));
    for (int i : {4, 5, 9, 11, 13, 14, 15}) CHECK(d.has_node(L[i - 1]));
  }

  SUBCASE("every node reaches the empty array") {
    int t = d.node_id(da("[]"));
    std::vector<uint8_t> reach(d.nodes.size(), 0);
    reach[t] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Arc& a : d.arcs)
        if (!reach[a.from] && reach[a.to]) {
          reach[a.from] = 1;
          grew = true;
        }
    }
    for (size_t i = 0; i < d.nodes.size(); ++i) CHECK(reach[i]);
  }

  SUBCASE("reference 20-walk arcs are all present") {
    const char* walk[] = {"[24213322]", "[23314142]", "[33143142]",
                          "[33315142]", "[333242]",   "[333414]",
                          "[335134]",   "[3434]",     "[5451]",
                          "[55]",       "[]"};
    for (int i = 0; i + 1 < 11; ++i) {
      int u = d.node_id(da(walk[i])), v = d.node_id(da(walk[i + 1]));
      REQUIRE(u >= 0);
      REQUIRE(v >= 0);
      bool arc = false;
      for (const Arc& a : d.arcs)
        if (a.from == u && a.to == v) arc = true;
      CHECK(arc);
    }
  }

  SUBCASE("arc tags replay") {
    for (const Arc& a : d.arcs) {
      auto out = apply(d.nodes[a.from], a.tag);
      REQUIRE(out.has_value());
      CHECK(*out == d.nodes[a.to]);
    }
  }

  SUBCASE("digraph is exactly the pruned closure") {
    // Rebuild the closure independently; every op-image of a kept node is
    // either kept too or cannot reach the empty array at all.
    std::vector<DistanceArray> wl(initial_arrays().begin(),
                                  initial_arrays().end());
    std::set<DistanceArray> seen(wl.begin(), wl.end());
    std::map<DistanceArray, std::set<DistanceArray>> succ;
    for (size_t i = 0; i < wl.size(); ++i) {
      for (const auto& t : applicable_ops(wl[i])) {
        auto nxt = *apply(wl[i], t);
        succ[wl[i]].insert(nxt);
        if (!seen.count(nxt)) {
          seen.insert(nxt);
          wl.push_back(nxt);
        }
      }
    }
    std::set<DistanceArray> reaches{da("[]")};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto& [from, outs] : succ) {
        if (reaches.count(from)) continue;
        for (auto& to : outs)
          if (reaches.count(to)) {
            reaches.insert(from);
            grew = true;
            break;
          }
      }
    }
    for (const auto& n : seen)
      CHECK(d.has_node(n) == (reaches.count(n) > 0));
    // arcs: exactly the op-images between kept nodes
    for (const auto& n : d.nodes) {
      if (n.empty()) continue;
      std::set<int> targets;
      for (int ai : d.out_arcs(d.node_id(n)))
        targets.insert(d.arcs[ai].to);
      std::set<int> expected;
      for (const auto& to : succ[n])
        if (reaches.count(to)) expected.insert(d.node_id(to));
      CHECK(targets == expected);
    }
  }

  SUBCASE("generation is deterministic") {
    ArrayDigraph d2 = generate_digraph();
    CHECK(d.nodes == d2.nodes);
    CHECK(d.arcs == d2.arcs);
    CHECK(to_dot(d) == to_dot(d2));
    CHECK(to_dump(d) == to_dump(d2));
  }

  SUBCASE("exports carry the counts") {
    std::string dump = to_dump(d);
    CHECK(dump.find("nodes 50 arcs 71") == 0);
    std::string dot = to_dot(d);
    CHECK(dot.find("digraph D {") == 0);
    CHECK(dot.find("[33513333]") == std::string::npos);  // canonical labels only
    CHECK(dot.find(da("[33513333]").str()) != std::string::npos);
  }
}

TEST_CASE("walk helpers") {
  ArrayDigraph d = generate_digraph();
  bool found = false;
  auto tags = shortest_walk(d, initial_arrays()[14], da("[]"), &found);
  REQUIRE(found);
  // the fast lane: three splits then the gadget attachment
  CHECK(tags.size() == 4);
  CHECK(tags.back().kind == OpKind::O4);
  // replay
  DistanceArray cur = initial_arrays()[14];
  for (const auto& t : tags) {
    auto next = apply(cur, t);
    REQUIRE(next.has_value());
    cur = *next;
  }
  CHECK(cur.empty());

  SUBCASE("simple path enumeration terminates and stays simple") {
    auto paths = all_simple_paths(d, initial_arrays()[4], da("[33133323]"));
    CHECK(paths.size() == 1);
    for (auto& p : paths) CHECK(p.size() == 4);
  }
}
