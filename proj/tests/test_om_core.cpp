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
#include <set>

#include "hkom/chirotope.hpp"
#include "hkom/oriented_matroid.hpp"
#include "oracle.hpp"

using namespace hkom;

namespace {

Chirotope ic842() { return read_chirotope_file(std::string(HKOM_DATA_DIR) + "/ic_8_4_2.txt"); }

SignVector sv(const char* s) { return SignVector::parse(s); }

std::set<SignVector> as_set(const std::vector<SignVector>& v) { return {v.begin(), v.end()}; }

// Normals (0,0,1), (1,0,0), (0,1,0), (1,1,0).
Chirotope normals_fixture() {
  return chirotope_from_vectors({make_vector({0, 0, 1}), make_vector({1, 0, 0}), make_vector({0, 1, 0}),
                                 make_vector({1, 1, 0})});
}

}  // namespace

TEST_CASE("sign vector basics") {
  CHECK(compose(sv("+0-"), sv("0++")) == sv("++-"));
  CHECK(compose(sv("+-0"), sv("+-0")) == sv("+-0"));
  CHECK(compose(sv("000"), sv("-+0")) == sv("-+0"));
  CHECK(conforms(sv("0+0"), sv("++-")));
  CHECK_FALSE(conforms(sv("+0"), sv("-+")));
  CHECK(conforms(sv("000"), sv("-+-")));
  CHECK_THROWS_AS(compose(sv("+0"), sv("+00")), SizeMismatch);
  CHECK_THROWS_AS(conforms(sv("+0"), sv("+00")), SizeMismatch);
  CHECK(SignVector::parse("+−0") == sv("+-0"));
  CHECK_THROWS(SignVector::parse("+x"));
  SignVector x = sv("+-0+");
  CHECK(SignVector::from_key(4, x.key()) == x);
  CHECK(x.reoriented(0b0011) == sv("-+0+"));
  CHECK(x.canonical() == x);
  CHECK((-x).canonical() == x);
}

TEST_CASE("colex ranking") {
  for (int r = 1; r <= 4; ++r) {
    for (std::int64_t i = 0; i < binomial(8, r); ++i) {
      auto s = colex_unrank(i, r);
      CHECK(colex_rank(s) == i);
    }
  }
  CHECK(colex_unrank(0, 4) == std::vector<int>{0, 1, 2, 3});
  CHECK(colex_unrank(1, 4) == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("block chirotope parses") {
  Chirotope chi = ic842();
  CHECK(chi.size() == 8);
  CHECK(chi.rank() == 4);
  CHECK(chi.signs().size() == 70);
  CHECK(chi.basis_sign({1, 2, 3, 5}) == Sign::Plus);
  CHECK(chi.is_uniform());
  CHECK(Chirotope::parse(chi.to_line()) == chi);
}

TEST_CASE("single line chirotope parses") {
  Chirotope chi = Chirotope::parse("3 2 +++");
  CHECK(chi.size() == 3);
  CHECK(chi.rank() == 2);
  CHECK(chi.is_uniform());
  CHECK_NOTHROW(Chirotope::parse("4 2 ++0+++"));
}

TEST_CASE("chirotope parse errors") {
  CHECK_THROWS_AS(Chirotope::parse("3 2 ++"), ParseError);
  CHECK_THROWS_AS(Chirotope::parse("3 2 +x+"), ParseError);
  CHECK_THROWS_AS(Chirotope::parse("3 2 000"), ParseError);
  CHECK_THROWS_AS(Chirotope::parse("121\n223\n+++"), ParseError);  // column 2,2
  CHECK_THROWS_AS(Chirotope::parse("121\n334\n+++"), ParseError);  // not colex
}

TEST_CASE("chirotope from vectors") {
  CHECK(chirotope_from_vectors({make_vector({1, 1}), make_vector({1, 2}), make_vector({1, 3})}) ==
        Chirotope::parse("3 2 +++"));
  Chirotope rep = chirotope_from_vectors(
      {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({1, 0, 0}), make_vector({0, 0, 1})});
  CHECK(rep.basis_sign({1, 3, 4}) == Sign::Zero);
  CHECK(rep.basis_sign({1, 2, 4}) != Sign::Zero);
  CHECK(normals_fixture().basis_sign({2, 3, 4}) == Sign::Zero);
  CHECK_THROWS(chirotope_from_vectors({make_vector({1, 1}), make_vector({2, 2})}));
}

TEST_CASE("rank 2 on three elements") {
  Chirotope chi = Chirotope::parse("3 2 +++");
  auto cc = cocircuits(chi);
  CHECK(as_set(cc) == std::set<SignVector>{sv("0++"), sv("0--"), sv("-0+"), sv("+0-"), sv("--0"), sv("++0")});
  OrientedMatroid m = oriented_matroid(chi);
  CHECK(m.covectors().size() == 13);
  CHECK(m.topes().size() == 6);
  CHECK(m.rank() == 2);
  CHECK(m.is_uniform());
  CHECK(colines(m) == std::vector<ElementMask>{0});
  OrientedMatroid c = m.contracted(bit(0));
  CHECK(c.size() == 2);
  CHECK(c.rank() == 1);
}

TEST_CASE("single cocircuit pair") {
  OrientedMatroid m = covector_span({sv("+-0"), sv("-+0")});
  CHECK(as_set(m.covectors()) == std::set<SignVector>{sv("000"), sv("+-0"), sv("-+0")});
  CHECK(m.loops() == bit(2));
}

TEST_CASE("covector budget") {
  CHECK_THROWS_AS(oriented_matroid(ic842(), 100), CovectorBudgetExceeded);
}

TEST_CASE("IC(8,4,2) structure") {
  Chirotope chi = ic842();
  auto cc = cocircuits(chi);
  CHECK(cc.size() == 112);
  CHECK(validate_cocircuit_axioms(cc).ok);
  OrientedMatroid m = covector_span(cc);
  CHECK(m.rank() == 4);
  CHECK(m.topes().size() == 128);
  CHECK(m.is_uniform());
  CHECK(m.loops() == 0);
  CHECK(m.coloops() == 0);
  CHECK(lattice_height(m) == 4);
  auto cl = colines(m);
  CHECK(cl.size() == 28);
  CHECK(std::count(cl.begin(), cl.end(), bit(0) | bit(7)) == 1);
  CHECK(m.reoriented(bit(0)).topes().size() == 128);
  CHECK(m.reoriented(0) == m);
  CHECK(m.reoriented(m.ground()).reoriented(m.ground()) == m);
  CHECK(m.deleted(0) == m);
  OrientedMatroid d = m.deleted(bit(7));
  CHECK(d.size() == 7);
  CHECK(d.rank() == 4);
  CHECK(d.labels() == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(is_closed(d));
}

TEST_CASE("normals fixture flats") {
  OrientedMatroid m = oriented_matroid(normals_fixture());
  CHECK(m.rank() == 3);
  bool found = false;
  for (const auto& c : m.cocircuits())
    if (c.zeros() == (bit(1) | bit(2) | bit(3))) found = found || c.support() == bit(0);
  CHECK(found);
  CHECK(colines(m) == std::vector<ElementMask>{bit(0), bit(1), bit(2), bit(3)});
  CHECK_FALSE(m.is_uniform());
}

TEST_CASE("axiom violations are reported") {
  auto d = validate_cocircuit_axioms({sv("0++"), sv("-0+")});
  CHECK_FALSE(d.ok);
  CHECK(d.violation == "symmetry");
  auto inc = validate_cocircuit_axioms({sv("0++"), sv("0--"), sv("00+"), sv("00-")});
  CHECK_FALSE(inc.ok);
  CHECK(inc.violation == "incomparability");
}

TEST_CASE("mutation") {
  Chirotope chi = ic842();
  std::vector<int> b{0, 1, 2, 4};
  CHECK(chi.mutated(b).mutated(b) == chi);
  CHECK(chi.mutated(b).basis_sign({1, 2, 3, 5}) == Sign::Minus);
  Chirotope rep = normals_fixture();
  std::vector<int> zero{1, 2, 3};
  CHECK_THROWS(rep.mutated(zero));
  // Some single-basis flip of six points in convex position is not an
  // oriented matroid; the checker must say so rather than abort.
  Chirotope hexagon = Chirotope::parse("6 3 " + std::string(20, '+'));
  int failures = 0;
  for (std::int64_t i = 0; i < 20; ++i) {
    auto basis = colex_unrank(i, 3);
    if (!validate_cocircuit_axioms(cocircuits(hexagon.mutated(basis))).ok) ++failures;
  }
  CHECK(failures > 0);
  CHECK(failures < 20);
}

TEST_CASE("covectors agree with an integer realization") {
  std::mt19937 rng(7);
  const std::vector<std::pair<int, int>> shapes{{4, 2}, {5, 3}, {6, 3}, {6, 4}, {7, 3}};
  for (auto [n, r] : shapes) {
    for (int trial = 0; trial < 6; ++trial) {
      auto cfg = oracle::random_config(rng, n, r, trial < 3 ? 2 : 5);
      Chirotope chi = chirotope_from_vectors(oracle::to_rational(cfg));
      auto cc = cocircuits(chi);
      CHECK(validate_cocircuit_axioms(cc).ok);
      OrientedMatroid m = covector_span(cc);
      CHECK(as_set(m.covectors()) == oracle::covectors(cfg, r));
      CHECK(m.rank() == r);
      CHECK(lattice_height(m) == r);
      CHECK(is_closed(m));
      for (const auto& x : m.covectors()) {
        if (x.is_zero()) continue;
        bool minimal = true;
        for (const auto& y : m.covectors())
          if (!y.is_zero() && y != x && conforms_unchecked(y, x)) minimal = false;
        bool is_cocircuit = std::find(m.cocircuits().begin(), m.cocircuits().end(), x) != m.cocircuits().end();
        CHECK(minimal == is_cocircuit);
      }
    }
  }
}
