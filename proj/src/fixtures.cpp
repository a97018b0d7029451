#include "fullerene/fixtures.hpp"

namespace fullerene {

namespace {

FullereneGraph build(int n, const int (*edges)[2], int m, const int (*rot)[3]) {
  FullereneGraph f;
  f.g = Graph::with_vertices(n);
  for (int e = 0; e < m; ++e) f.g.add_edge(edges[e][0], edges[e][1]);
  f.rot.assign(n, {});
  for (int v = 0; v < n; ++v)
    f.rot[v] = {rot[v][0], rot[v][1], rot[v][2]};
  return f;
}

const int f20_edges[][2] = {
    {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 0},   {1, 5},
    {5, 6},   {6, 7},   {7, 0},   {2, 8},   {8, 9},   {9, 5},
    {3, 10},  {10, 11}, {11, 8},  {4, 12},  {12, 13}, {13, 10},
    {7, 14},  {14, 12}, {6, 15},  {15, 16}, {16, 14}, {9, 17},
    {17, 15}, {11, 18}, {18, 17}, {13, 19}, {19, 18}, {16, 19}};
const int f20_rot[][3] = {
    {0, 8, 4},    {0, 1, 5},    {1, 2, 9},    {2, 3, 12},   {3, 4, 15},
    {5, 11, 6},   {6, 20, 7},   {7, 18, 8},   {9, 14, 10},  {10, 23, 11},
    {12, 17, 13}, {13, 25, 14}, {15, 19, 16}, {16, 27, 17}, {18, 22, 19},
    {20, 24, 21}, {21, 29, 22}, {23, 26, 24}, {25, 28, 26}, {27, 29, 28}};

const int f24_edges[][2] = {
    {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 0},   {1, 5},
    {5, 6},   {6, 7},   {7, 0},   {2, 8},   {8, 9},   {9, 5},
    {3, 10},  {10, 11}, {11, 8},  {4, 12},  {12, 13}, {13, 10},
    {7, 14},  {14, 15}, {15, 12}, {6, 16},  {16, 17}, {17, 14},
    {9, 18},  {18, 16}, {11, 19}, {19, 20}, {20, 18}, {13, 21},
    {21, 19}, {15, 22}, {22, 21}, {17, 23}, {23, 22}, {20, 23}};
const int f24_rot[][3] = {
    {0, 8, 4},    {0, 1, 5},    {1, 2, 9},    {2, 3, 12},   {3, 4, 15},
    {5, 11, 6},   {6, 21, 7},   {7, 18, 8},   {9, 14, 10},  {10, 24, 11},
    {12, 17, 13}, {13, 26, 14}, {15, 20, 16}, {16, 29, 17}, {18, 23, 19},
    {19, 31, 20}, {21, 25, 22}, {22, 33, 23}, {24, 28, 25}, {26, 30, 27},
    {27, 35, 28}, {29, 32, 30}, {31, 34, 32}, {33, 35, 34}};

const int f26_edges[][2] = {
    {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 0},   {1, 5},   {5, 6},
    {6, 7},   {7, 0},   {2, 8},   {8, 9},   {9, 5},   {3, 10},  {10, 11},
    {11, 8},  {4, 12},  {12, 13}, {13, 10}, {7, 14},  {14, 15}, {15, 12},
    {6, 16},  {16, 17}, {17, 14}, {9, 18},  {18, 19}, {19, 16}, {11, 20},
    {20, 18}, {13, 21}, {21, 22}, {22, 20}, {15, 23}, {23, 21}, {17, 24},
    {24, 23}, {19, 25}, {25, 24}, {22, 25}};
const int f26_rot[][3] = {
    {0, 8, 4},    {0, 1, 5},    {1, 2, 9},    {2, 3, 12},   {3, 4, 15},
    {5, 11, 6},   {6, 21, 7},   {7, 18, 8},   {9, 14, 10},  {10, 24, 11},
    {12, 17, 13}, {13, 27, 14}, {15, 20, 16}, {16, 29, 17}, {18, 23, 19},
    {19, 32, 20}, {21, 26, 22}, {22, 34, 23}, {24, 28, 25}, {25, 36, 26},
    {27, 31, 28}, {29, 33, 30}, {30, 38, 31}, {32, 35, 33}, {34, 37, 35},
    {36, 38, 37}};

}  // namespace

const FullereneGraph& f20() {
  static const FullereneGraph f = build(20, f20_edges, 30, f20_rot);
  return f;
}

const FullereneGraph& f24() {
  static const FullereneGraph f = build(24, f24_edges, 36, f24_rot);
  return f;
}

const FullereneGraph& f26() {
  static const FullereneGraph f = build(26, f26_edges, 39, f26_rot);
  return f;
}

const Graph& unique_matching_gadget() {
  static const Graph g = [] {
    Graph g = Graph::with_vertices(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 1) % 5);
    g.add_edge(0, 5);
    return g;
  }();
  return g;
}

EdgeSet f20_reference_antiforcing() { return {0, 1, 2, 20}; }
EdgeSet f24_reference_antiforcing() { return {0, 1, 2, 21}; }
EdgeSet f24_gadget_residual_antiforcing() { return {0, 1, 2, 8}; }
EdgeSet f26_reference_antiforcing() { return {0, 1, 2, 3, 7}; }

}  // namespace fullerene
