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

#include <map>
#include <random>

#include "hkom/chirotope.hpp"
#include "hkom/minors.hpp"
#include "hkom/program.hpp"
#include "oracle.hpp"

using namespace hkom;

namespace {

OrientedMatroid realize(const std::vector<oracle::IVec>& v) {
  return oriented_matroid(chirotope_from_vectors(oracle::to_rational(v)));
}

OrientedMatroid ic842() {
  return oriented_matroid(read_chirotope_file(std::string(HKOM_DATA_DIR) + "/ic_8_4_2.txt"));
}

// Affine plane z > 0: element 1 is the line at infinity, then x >= 0,
// y >= 0, x + y <= 1.
std::vector<oracle::IVec> triangle(const oracle::IVec& objective) {
  return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 1}, objective};
}

// Checks every vertex lift and arc of G_pi against objective values
// computed from the realization.
void check_against_realization(const std::vector<oracle::IVec>& cfg, const ProgramGraph& pg, int r) {
  const int n = static_cast<int>(cfg.size());
  const int g = pg.g, f = pg.f;
  std::map<SignVector, oracle::IVec> rays;
  std::vector<int> sel;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(sel.size()) == r - 1) {
      std::vector<oracle::IVec> rows;
      for (int i : sel) rows.push_back(cfg[i]);
      oracle::IVec c = oracle::cross(rows, r);
      SignVector s = oracle::signs_at(cfg, c);
      if (s.is_zero()) return;
      if (s[g] == Sign::Minus) {
        for (auto& x : c) x = -x;
        s = -s;
      }
      if (s[g] == Sign::Plus) rays[s.masked(~bit(f))] = c;
      return;
    }
    for (int i = start; i < n; ++i) {
      if (i == f) continue;
      sel.push_back(i);
      self(self, i + 1);
      sel.pop_back();
    }
  };
  rec(rec, 0);
  auto dot = [](const oracle::IVec& a, const oracle::IVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  for (const auto& v : pg.vertices) {
    auto it = rays.find(v.masked(~bit(f)));
    REQUIRE(it != rays.end());
    CHECK(v[f] == sign_of(dot(cfg[f], it->second)));
  }
  for (const auto& l : pg.links) {
    const auto& xu = rays.at(pg.vertices[l.u].masked(~bit(f)));
    const auto& xv = rays.at(pg.vertices[l.v].masked(~bit(f)));
    // objective f/g compared by cross multiplication (both g-values > 0)
    std::int64_t diff = dot(cfg[f], xv) * dot(cfg[g], xu) - dot(cfg[f], xu) * dot(cfg[g], xv);
    CHECK(l.direction == static_cast<int>(sign_of(diff)));
  }
}

}  // namespace

TEST_CASE("program construction") {
  OrientedMatroid m = realize(triangle({1, 2, 0}));
  CHECK_THROWS_AS(Program(m, 0, 0), InvalidProgram);
  OrientedMatroid with_loop = covector_span({SignVector::parse("+-0"), SignVector::parse("-+0")});
  CHECK_THROWS_AS(Program(with_loop, 2, 0), InvalidProgram);
  // Rank-2 on 2 elements: both are coloops.
  OrientedMatroid coloops = realize({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(Program(coloops, 0, 1), InvalidProgram);
}

TEST_CASE("bounded triangle program") {
  OrientedMatroid m = realize(triangle({1, 2, 0}));
  Program pi(m, 0, 4);
  auto region = feasible_region(pi);
  CHECK(region.size() == 7);  // open triangle, 3 sides, 3 corners
  for (const auto& x : region) CHECK(x[0] == Sign::Plus);
  CHECK(is_bounded(pi));
  CHECK(is_generic_objective(pi));
  CHECK(is_proper_program(pi));
  auto hk = is_hk_program(pi);
  CHECK(hk.holds);
  CHECK(hk.required_d == 2);
  CHECK(is_euclidean_program(pi));
  ProgramGraph pg = program_graph(pi);
  Digraph plus = pg.feasible();
  CHECK(plus.vertex_count() == 3);
  CHECK(plus.arcs().size() == 3);
  check_against_realization(triangle({1, 2, 0}), pg, 3);
}

TEST_CASE("unbounded, degenerate and flat programs") {
  OrientedMatroid quadrant = realize({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 2, 0}});
  CHECK_FALSE(is_bounded(Program(quadrant, 0, 3)));
  CHECK_FALSE(is_proper_program(Program(quadrant, 0, 3)));

  // Objective x + y is constant on the side x + y = 1.
  OrientedMatroid level = realize(triangle({1, 1, 0}));
  Program flat_objective(level, 0, 4);
  CHECK_FALSE(is_generic_objective(flat_objective));
  CHECK_FALSE(is_proper_program(flat_objective));
  CHECK_THROWS_AS(is_hk_program(flat_objective), ImproperProgram);

  OrientedMatroid squeezed = realize({{0, 0, 1}, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {-1, -1, 1}, {1, 2, 0}});
  Program slit(squeezed, 0, 5);
  CHECK_FALSE(feasible_region(slit).empty());
  CHECK_FALSE(is_proper_program(slit));

  // Empty feasible graph is vacuously generic.
  OrientedMatroid empty = realize({{0, 0, 1}, {1, 0, 0}, {-1, 0, -1}, {0, 1, 0}, {1, 2, 0}});
  Program none(empty, 0, 4);
  CHECK(feasible_region(none).empty());
  CHECK(is_bounded(none));
  CHECK(is_generic_objective(none));
}

TEST_CASE("reversing f reverses every arc") {
  auto cfg = triangle({1, 2, 0});
  auto neg = cfg;
  for (auto& x : neg[4]) x = -x;
  ProgramGraph a = program_graph(Program(realize(cfg), 0, 4));
  ProgramGraph b = program_graph(Program(realize(neg), 0, 4));
  Digraph da = a.full(), db = b.full();
  REQUIRE(da.arcs().size() == db.arcs().size());
  for (auto [u, v] : da.arcs()) {
    SignVector su = a.vertices[u], sv = a.vertices[v];
    su.set(4, negate(su[4]));
    sv.set(4, negate(sv[4]));
    auto iu = db.find(su.to_string()), iv = db.find(sv.to_string());
    REQUIRE(iu);
    REQUIRE(iv);
    CHECK(db.has_arc(*iv, *iu));
  }
}

TEST_CASE("orientation matches realizations") {
  std::mt19937 rng(3);
  const std::vector<std::pair<int, int>> shapes{{5, 3}, {6, 3}, {6, 4}, {7, 4}};
  for (auto [n, r] : shapes) {
    for (int trial = 0; trial < 4; ++trial) {
      auto cfg = oracle::random_config(rng, n, r, trial % 2 ? 3 : 6);
      OrientedMatroid m = realize(cfg);
      for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f) {
          if (g == f || (m.loops() & bit(g)) || (m.coloops() & bit(f))) continue;
          ProgramGraph pg = program_graph(Program(m, g, f));
          check_against_realization(cfg, pg, r);
        }
    }
  }
}

TEST_CASE("representable matroids are HK and Euclidean") {
  std::mt19937 rng(5);
  const std::vector<std::pair<int, int>> shapes{{5, 3}, {6, 3}, {6, 4}, {7, 4}, {8, 4}};
  for (auto [n, r] : shapes) {
    for (int trial = 0; trial < 2; ++trial) {
      auto cfg = oracle::random_config(rng, n, r, 4);
      OrientedMatroid m = realize(cfg);
      auto hk = is_hk_matroid(m);
      CHECK(hk.holds);
      CHECK(is_euclidean_matroid(m).holds);
      for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f) {
          if (g == f || (m.loops() & bit(g)) || (m.coloops() & bit(f))) continue;
          ProgramReport rep = analyze_program(Program(m, g, f));
          CHECK_FALSE(rep.uso_anomaly);
          if (rep.proper) CHECK(rep.hk->holds);
        }
    }
  }
}

TEST_CASE("alternating matroid") {
  OrientedMatroid m = oriented_matroid(read_chirotope_file(std::string(HKOM_DATA_DIR) + "/alternating_8_4.txt"));
  CHECK(is_euclidean_matroid(m).holds);
  CHECK(is_hk_matroid(m, {1, true}).holds);
}

TEST_CASE("rank 2 and rank 3 are trivially fine") {
  OrientedMatroid r2 = oriented_matroid(Chirotope::parse("4 2 ++++++"));
  CHECK(is_euclidean_matroid(r2).holds);
  CHECK(is_hk_matroid(r2).holds);
  OrientedMatroid r3 = oriented_matroid(Chirotope::parse("6 3 " + std::string(20, '+')));
  CHECK(is_hk_matroid(r3).holds);
}

TEST_CASE("IC(8,4,2) programs") {
  OrientedMatroid m = ic842();
  auto eu = is_euclidean_matroid(m);
  CHECK_FALSE(eu.holds);
  REQUIRE(eu.witness);
  CHECK(eu.witness->cycle.size() >= 3);
  // Rerun with several workers: same witness.
  auto eu4 = is_euclidean_matroid(m, 4);
  CHECK(eu4.witness->g == eu.witness->g);
  CHECK(eu4.witness->f == eu.witness->f);
  for (int g = 0; g < 8; ++g)
    for (int f = 0; f < 8; ++f) {
      if (g == f) continue;
      ProgramReport rep = analyze_program(Program(m, g, f));
      CHECK_FALSE(rep.uso_anomaly);
      if (rep.proper) CHECK(rep.hk->holds);
    }
}

TEST_CASE("in-place reorientation matches explicit reorientation") {
  OrientedMatroid m = ic842().deleted(bit(7));
  for (int g = 0; g < 7; ++g)
    for (int f = 0; f < 7; ++f) {
      if (g == f) continue;
      Program pi(m, g, f);
      const ElementMask rest = m.ground() & ~bit(g) & ~bit(f);
      for (ElementMask r = 0;; r = (r - rest) & rest) {
        ProgramReport a = analyze_program(pi, r);
        OrientedMatroid mr = m.reoriented(r);
        ProgramReport b = analyze_program(Program(mr, g, f));
        CHECK(a.proper == b.proper);
        CHECK(a.bounded == b.bounded);
        CHECK(a.full_dimensional == b.full_dimensional);
        CHECK(a.generic == b.generic);
        if (a.proper && b.proper) {
          CHECK(a.hk->holds == b.hk->holds);
          CHECK(a.hk->disjoint_path_count == b.hk->disjoint_path_count);
        }
        if (r == rest) break;
      }
    }
}

TEST_CASE("minor enumeration") {
  OrientedMatroid m = ic842();
  auto minors = minors_with_rank_at_least(m, 4);
  CHECK(minors.front().spec.deleted == 0);
  CHECK(minors.front().spec.contracted == 0);
  CHECK(minors.size() == 163);
  for (const auto& mn : minors) CHECK(mn.matroid.rank() >= 4);
}
