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

#include <algorithm>
#include <random>

#include "hkom/chirotope.hpp"
#include "hkom/fixation.hpp"
#include "hkom/minors.hpp"
#include "oracle.hpp"

using namespace hkom;

namespace {

OrientedMatroid realize(const std::vector<oracle::IVec>& v) {
  return oriented_matroid(chirotope_from_vectors(oracle::to_rational(v)));
}

OrientedMatroid ic842() {
  return oriented_matroid(read_chirotope_file(std::string(HKOM_DATA_DIR) + "/ic_8_4_2.txt"));
}

std::vector<int> labels(const OrientedMatroid& m, const std::vector<int>& positions) {
  std::vector<int> out;
  for (int p : positions) out.push_back(m.labels()[p]);
  return out;
}

bool same_up_to_reversal(std::vector<int> a, const std::vector<int>& b) {
  if (a == b) return true;
  std::reverse(a.begin(), a.end());
  return a == b;
}

// Element 1 is the line 8x - 4y = z; 2, 3, 4 bound the triangle x, y >= 0,
// x + y <= z.
std::vector<oracle::IVec> triangle_fixture() { return {{8, -4, -1}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 1}}; }

std::vector<oracle::IVec> normals_fixture() { return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}; }

std::int64_t to_i64(const Rational& q) { return numerator(q).convert_to<std::int64_t>(); }

struct Dir {
  std::int64_t x, y;
};
std::int64_t cross2(Dir a, Dir b) { return a.x * b.y - a.y * b.x; }
bool upper(Dir a) { return a.y > 0 || (a.y == 0 && a.x > 0); }
bool angle_less(Dir a, Dir b) {
  if (upper(a) != upper(b)) return upper(a);
  return cross2(a, b) > 0;
}

// Line shelling order of the facets crossed by the circle of the coline T,
// starting from interior direction z and turning counterclockwise, computed
// in coordinates of the 2-dimensional null space of T.
std::vector<int> angular_order(const std::vector<oracle::IVec>& cfg, const std::vector<oracle::IVec>& basis,
                               const std::vector<int>& rest, Dir z) {
  auto dot = [](const oracle::IVec& a, const oracle::IVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  std::vector<std::pair<Dir, int>> zeros;
  for (int e : rest) {
    Dir w{dot(cfg[e], basis[1]), -dot(cfg[e], basis[0])};
    if (cross2(z, w) < 0) w = {-w.x, -w.y};
    zeros.push_back({w, e});
  }
  std::sort(zeros.begin(), zeros.end(), [&](const auto& a, const auto& b) { return cross2(a.first, b.first) > 0; });
  std::vector<int> out;
  for (const auto& [w, e] : zeros) out.push_back(e);
  return out;
}

}  // namespace

TEST_CASE("IC(8,4,2) with T = {1,8}") {
  OrientedMatroid m = ic842();
  ColineFixation omega(m, bit(0) | bit(7));
  CHECK(is_generic_coline(omega));
  CHECK(has_interior_point(omega));
  CHECK(is_proper_fixation(omega));
  auto cell = supercell(omega);
  CHECK(std::find(cell.begin(), cell.end(), omega.pattern()) != cell.end());
  ColineShelling sh = coline_shelling(omega);
  CHECK(same_up_to_reversal(labels(m, sh.order), {3, 2, 7, 6, 4, 5}));
  Digraph sg = shelling_digraph(omega);
  CHECK(is_acyclic(sg));
  auto hk = is_hkstar_fixation(omega);
  CHECK_FALSE(hk.holds);
  CHECK(hk.disjoint_path_count == 2);
  CHECK(hk.required_d == 3);
  CHECK(sg.label(*hk.source) == "3");
  CHECK(sg.label(*hk.sink) == "5");
  auto j = to_json(analyze_fixation(omega), omega);
  CHECK(j["hkstar"] == false);
  CHECK(j["source"] == 3);
  CHECK(j["sink"] == 5);
}

TEST_CASE("IC(8,4,2) is not HK*") {
  OrientedMatroid m = ic842();
  auto v = is_hkstar_matroid(m);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  const auto& w = *v.witness;
  // Re-verify the witness from scratch.
  OrientedMatroid minor = m.contracted(m.mask_of_labels(w.contracted));
  minor = minor.deleted(minor.mask_of_labels(w.deleted));
  ColineFixation omega(minor, minor.mask_of_labels(w.coline), minor.mask_of_labels(w.reorientation));
  CHECK(is_proper_fixation(omega));
  CHECK_FALSE(is_hkstar_fixation(omega).holds);
  auto v4 = is_hkstar_matroid(m, {4, false});
  CHECK(v4.witness->coline == w.coline);
  CHECK(v4.witness->reorientation == w.reorientation);
  CHECK_FALSE(is_hkstar_matroid(m, {1, true}).holds);
}

TEST_CASE("representable matroids are HK*") {
  OrientedMatroid alt = oriented_matroid(read_chirotope_file(std::string(HKOM_DATA_DIR) + "/alternating_8_4.txt"));
  CHECK(is_hkstar_matroid(alt).holds);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    auto cfg = oracle::random_config(rng, trial < 3 ? 7 : 8, 4, 4);
    CHECK(is_hkstar_matroid(realize(cfg)).holds);
  }
}

TEST_CASE("rank 3 is pruned") {
  OrientedMatroid m = oriented_matroid(Chirotope::parse("6 3 " + std::string(20, '+')));
  CHECK(is_hkstar_matroid(m).holds);
}

TEST_CASE("coline validation") {
  OrientedMatroid m = ic842();
  CHECK_THROWS_AS(ColineFixation(m, bit(0)), NotAColine);
  CHECK_THROWS_AS(ColineFixation(m, m.ground() & ~bit(0)), NotAColine);
  CHECK_THROWS(ColineFixation(m, bit(0) | bit(7), bit(0)));
}

TEST_CASE("normals fixture is generic but improper") {
  OrientedMatroid m = realize(normals_fixture());
  ColineFixation omega(m, bit(0));
  CHECK(is_generic_coline(omega));
  CHECK(has_interior_point(omega));
  CHECK_FALSE(is_facet(omega, 3));
  CHECK_FALSE(is_proper_fixation(omega));
  CHECK(same_up_to_reversal(labels(m, coline_shelling(omega).order), {2, 4, 3}));
  CHECK_THROWS_AS(shelling_digraph(omega), ImproperFixation);
  CHECK_THROWS_AS(is_hkstar_fixation(omega), ImproperFixation);
}

TEST_CASE("triangle fixture") {
  OrientedMatroid m = realize(triangle_fixture());
  ColineFixation omega(m, bit(0));
  CHECK(is_proper_fixation(omega));
  // open triangle, 3 sides, 3 corners, each split by the line where it crosses
  auto cell = supercell(omega);
  for (const auto& x : cell) CHECK((x.minus() & 0b1110) == 0);
  ColineShelling sh = coline_shelling(omega);
  CHECK(labels(m, sh.order) == std::vector<int>{3, 2, 4});
  CHECK(facet_adjacency(omega, 1, 2));
  CHECK(facet_adjacency(omega, 1, 3));
  CHECK(facet_adjacency(omega, 2, 3));
  Digraph sg = shelling_digraph(omega);
  CHECK(sg.arcs().size() == 3);
  CHECK(sg.has_arc(*sg.find("3"), *sg.find("2")));
  CHECK(sg.has_arc(*sg.find("3"), *sg.find("4")));
  CHECK(sg.has_arc(*sg.find("2"), *sg.find("4")));
  auto hk = is_hkstar_fixation(omega);
  CHECK(hk.holds);
  CHECK(hk.disjoint_path_count == 2);
}

TEST_CASE("non-generic coline") {
  // Element 4 is parallel to the coline {1}: T + {4} spans only a rank-1 flat.
  OrientedMatroid m = realize({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2}, {-1, -1, 1}});
  auto cl = colines(m);
  REQUIRE(std::find(cl.begin(), cl.end(), bit(0) | bit(3)) != cl.end());
  ColineFixation omega(m, bit(1));
  CHECK_FALSE(is_generic_coline(omega));
  CHECK_FALSE(is_proper_fixation(omega));
}

TEST_CASE("rank 2 with T empty") {
  OrientedMatroid m = realize({{1, 1}, {1, 2}, {1, 3}, {1, 5}});
  ColineFixation omega(m, 0, 0);
  CHECK(is_generic_coline(omega));
  for (ElementMask r = 0; r < 16; ++r) {
    ColineFixation w = omega.reoriented(r);
    if (!has_interior_point(w)) continue;
    // A planar cone has two facets, so four hyperplanes never give a proper fixation.
    CHECK_FALSE(is_proper_fixation(w));
    CHECK(coline_shelling(w).order.size() == 4);
  }
}

TEST_CASE("shelling order matches the angular order of a realization") {
  std::mt19937 rng(29);
  int compared = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int r = trial % 2 ? 4 : 3;
    const int n = r + 3 + trial % 3;
    auto cfg = oracle::random_config(rng, n, r, 4);
    OrientedMatroid m = realize(cfg);
    for (ElementMask t : colines(m)) {
      ColineFixation base(m, t);
      if (!is_generic_coline(base)) continue;
      hkom::RationalMatrix rows;
      for (int e : mask_elements(t)) rows.push_back(oracle::to_rational({cfg[e]})[0]);
      auto ns = null_space(rows, r);
      REQUIRE(ns.size() == 2);
      std::vector<oracle::IVec> basis(2);
      for (int k = 0; k < 2; ++k)
        for (const auto& q : ns[k]) basis[k].push_back(to_i64(q));
      std::vector<int> rest = mask_elements(m.ground() & ~t);
      // Interior directions: bisectors of consecutive zero directions.
      auto dot = [](const oracle::IVec& a, const oracle::IVec& b) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
      };
      std::vector<Dir> dirs;
      for (int e : rest) {
        Dir w{dot(cfg[e], basis[1]), -dot(cfg[e], basis[0])};
        dirs.push_back(w);
        dirs.push_back({-w.x, -w.y});
      }
      std::sort(dirs.begin(), dirs.end(), angle_less);
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        Dir a = dirs[i], b = dirs[(i + 1) % dirs.size()];
        Dir z{a.x * 1000 + b.x * 1000, a.y * 1000 + b.y * 1000};
        if (cross2(a, b) <= 0) continue;
        oracle::IVec point(r);
        for (int k = 0; k < r; ++k) point[k] = z.x * basis[0][k] + z.y * basis[1][k];
        SignVector s = oracle::signs_at(cfg, point);
        ColineFixation omega = base.reoriented(s.minus());
        REQUIRE(has_interior_point(omega));
        std::vector<int> expected = angular_order(cfg, basis, rest, z);
        CHECK(same_up_to_reversal(coline_shelling(omega).order, expected));
        if (is_proper_fixation(omega)) {
          FixationReport rep = analyze_fixation(omega);
          CHECK(rep.acyclic);
          CHECK(rep.uso);
          CHECK(rep.hk->holds);
        }
        ++compared;
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("moving the interior point along the coline rotates the order") {
  OrientedMatroid m = ic842();
  ColineFixation omega(m, bit(0) | bit(7));
  ColineShelling sh = coline_shelling(omega);
  const int s = static_cast<int>(sh.order.size());
  for (int k = 1; k < s; ++k) {
    ColineFixation moved = omega.reoriented(sh.witnesses[k].minus());
    REQUIRE(has_interior_point(moved));
    std::vector<int> rotated(sh.order.begin() + k, sh.order.end());
    rotated.insert(rotated.end(), sh.order.begin(), sh.order.begin() + k);
    CHECK(same_up_to_reversal(coline_shelling(moved).order, rotated));
  }
}
