// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hkom/digraph.hpp"
#include "oracle.hpp"

using namespace hkom;

namespace {

// Cube vertices by bit pattern; v1 = 000 ... v8 = 111 in the order
// s, a=001, b=010, c=100, d=011, e=101, f=110, t.
const std::vector<int> kCubeBits{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};

UndirectedGraph cube_graph() {
  UndirectedGraph g{8, {}};
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (std::popcount(static_cast<unsigned>(kCubeBits[i] ^ kCubeBits[j])) == 1) g.edges.push_back({i, j});
  return g;
}

Digraph named(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return Digraph(labels);
}

Digraph left_cube() {
  Digraph d = named(8);
  auto value = [](int b) { return (b & 1) * 1 + ((b >> 1) & 1) * 2 + ((b >> 2) & 1) * 4; };
  for (auto [i, j] : cube_graph().edges) {
    if (value(kCubeBits[i]) < value(kCubeBits[j])) d.add_arc(i, j);
    else d.add_arc(j, i);
  }
  return d;
}

Digraph right_cube() {
  enum { s, a, b, c, dd, e, f, t };
  Digraph d = named(8);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{s, a}, {s, b}, {s, c}, {a, dd}, {a, e}, {dd, b},
                                                     {e, c}, {b, f}, {c, f}, {dd, t}, {e, t}, {f, t}})
    d.add_arc(u, v);
  return d;
}

std::vector<std::vector<int>> cube_faces() {
  std::vector<std::vector<int>> faces;
  for (int axis = 0; axis < 3; ++axis)
    for (int val = 0; val < 2; ++val) {
      std::vector<int> f;
      for (int i = 0; i < 8; ++i)
        if (((kCubeBits[i] >> axis) & 1) == val) f.push_back(i);
      faces.push_back(f);
    }
  return faces;
}

// Minimum number of internal vertices whose removal separates t from s.
int brute_min_cut(const Digraph& d, int s, int t) {
  const int n = d.vertex_count();
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (mask & ((1u << s) | (1u << t))) continue;
    int size = std::popcount(mask);
    if (size >= best) continue;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : d.out(u))
        if (!seen[v] && !(mask & (1u << v))) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    if (!seen[t]) best = size;
  }
  return best;
}

Digraph random_dag(std::mt19937& rng, int n, double p) {
  Digraph d(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) d.add_arc(i, j);
  return d;
}

}  // namespace

TEST_CASE("digraph construction rejects bad arcs") {
  Digraph d(3);
  d.add_arc(0, 1);
  CHECK_THROWS(d.add_arc(0, 1));
  CHECK_THROWS(d.add_arc(1, 0));
  CHECK_THROWS(d.add_arc(2, 2));
  CHECK_THROWS(d.add_edge(0, 1));
  d.add_edge(1, 2);
  CHECK(d.edges().size() == 1);
  CHECK(d.is_adjacent(2, 1));
}

TEST_CASE("source and sink") {
  Digraph one(2);
  one.add_arc(0, 1);
  auto st = unique_source_sink(one);
  CHECK(st.source == 0);
  CHECK(st.sink == 1);
  CHECK(one.with_arc_flipped(0, 1).has_arc(1, 0));
  // Antiparallel arcs are rejected, so the smallest cycle is a triangle.
  Digraph tri(3);
  tri.add_arc(0, 1);
  tri.add_arc(1, 2);
  tri.add_arc(2, 0);
  auto none = unique_source_sink(tri);
  CHECK_FALSE(none.source.has_value());
  CHECK_FALSE(none.sink.has_value());
  CHECK_FALSE(is_acyclic(tri));
  CHECK(find_directed_cycle(tri).size() == 3);
  const Digraph cube = right_cube();
  auto rc = unique_source_sink(cube);
  CHECK(cube.label(*rc.source) == "v1");
  CHECK(cube.label(*rc.sink) == "v8");
}

TEST_CASE("acyclicity") {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(0, 2);
  CHECK(is_acyclic(d));
  CHECK(find_directed_cycle(d).empty());
  CHECK(is_acyclic(left_cube()));
  CHECK(is_acyclic(right_cube()));
}

TEST_CASE("disjoint paths") {
  Digraph one(2);
  one.add_arc(0, 1);
  CHECK(max_disjoint_paths(one, 0, 1) == 1);
  CHECK(max_disjoint_paths(right_cube(), 0, 7) == 2);
  CHECK(max_disjoint_paths(left_cube(), 0, 7) == 3);
  Digraph gap(3);
  gap.add_arc(0, 1);
  CHECK(max_disjoint_paths(gap, 0, 2) == 0);
}

TEST_CASE("cube Holt-Klee") {
  auto left = holt_klee(left_cube(), 3);
  CHECK(left.holds);
  CHECK(left.disjoint_path_count == 3);
  auto right = holt_klee(right_cube(), 3);
  CHECK_FALSE(right.holds);
  CHECK(right.disjoint_path_count == 2);
  CHECK(right.source == 0);
  CHECK(right.sink == 7);
  // The right cube is still an acyclic USO: the failure is connectivity only.
  bool seen = false;
  const Digraph rc = right_cube();
  for_each_acyclic_uso(cube_graph(), cube_faces(), [&](const Digraph& d) {
    bool same = true;
    for (auto [u, v] : rc.arcs()) same = same && d.has_arc(u, v);
    seen = seen || same;
    return !seen;
  });
  CHECK(seen);
}

TEST_CASE("non-oriented edges break Holt-Klee") {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_edge(0, 2);
  auto r = holt_klee(d, 1);
  CHECK_FALSE(r.holds);
  CHECK(r.non_generic);
}

TEST_CASE("Menger duality on random DAGs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + trial % 8;
    Digraph d = random_dag(rng, n, 0.45);
    int s = 0, t = n - 1;
    int flow = max_disjoint_paths(d, s, t);
    CHECK(flow == oracle::disjoint_paths(d, s, t));
    if (!d.has_arc(s, t)) CHECK(flow == brute_min_cut(d, s, t));
    // Reversal swaps roles and keeps the count.
    Digraph r = d.reversed();
    CHECK(max_disjoint_paths(r, t, s) == flow);
    auto st = unique_source_sink(d);
    auto rst = unique_source_sink(r);
    CHECK(st.source == rst.sink);
    CHECK(st.sink == rst.source);
    CHECK(holt_klee(d, 0).holds == st.unique());
  }
}

TEST_CASE("acyclic USO enumeration") {
  // Brute-force count on the cube for comparison.
  auto g = cube_graph();
  auto faces = cube_faces();
  int expected = 0;
  for (unsigned k = 0; k < (1u << g.edges.size()); ++k) {
    Digraph d(8);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      auto [u, v] = g.edges[i];
      if (k & (1u << i)) d.add_arc(v, u);
      else d.add_arc(u, v);
    }
    if (!is_acyclic(d) || !unique_source_sink(d).unique()) continue;
    bool ok = true;
    for (const auto& f : faces) {
      std::vector<bool> keep(8, false);
      for (int v : f) keep[v] = true;
      ok = ok && unique_source_sink(d.induced(keep)).unique();
    }
    if (ok) ++expected;
  }
  int count = 0;
  int hk = 0;
  for_each_acyclic_uso(g, faces, [&](const Digraph& d) {
    ++count;
    auto st = unique_source_sink(d);
    if (holt_klee(d, 3).holds) ++hk;
    CHECK(st.unique());
    return true;
  });
  CHECK(count == expected);
  CHECK(count > 0);
  CHECK(hk < count);

  UndirectedGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::vector<std::vector<int>> tri{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  int k4count = 0;
  for_each_acyclic_uso(k4, tri, [&](const Digraph& d) {
    ++k4count;
    CHECK(holt_klee(d, 3).holds);
    return true;
  });
  CHECK(k4count == 24);

  UndirectedGraph square{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  for_each_acyclic_uso(square, {{0, 1, 2, 3}}, [&](const Digraph& d) {
    CHECK(is_acyclic(d));
    return true;
  });
}

TEST_CASE("polygon orientations satisfy d = 2") {
  for (int n = 3; n <= 7; ++n) {
    UndirectedGraph cyc{n, {}};
    for (int i = 0; i < n; ++i) cyc.edges.push_back({i, (i + 1) % n});
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for_each_acyclic_uso(cyc, {all}, [&](const Digraph& d) {
      CHECK(holt_klee(d, 2).holds);
      return true;
    });
  }
}

TEST_CASE("export") {
  auto j = to_json(right_cube());
  CHECK(j["vertices"].size() == 8);
  CHECK(j["arcs"].size() == 12);
  CHECK(j["edges"].empty());
  auto rep = to_json(holt_klee(right_cube(), 3), right_cube());
  CHECK(rep["holds"] == false);
  CHECK(rep["source"] == "v1");
  CHECK(to_dot(right_cube()).find("\"v1\" -> \"v2\"") != std::string::npos);
}
