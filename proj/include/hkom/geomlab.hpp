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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hkom/chirotope.hpp"
#include "hkom/digraph.hpp"
#include "hkom/rational.hpp"

namespace hkom {

/// Degenerate input or a failed verification step; the message starts with
/// the stage name.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonGenericObjective : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Polytope {
  struct Facet {
    Hyperplane plane;           // normal . x <= offset on the polytope
    std::vector<int> vertices;  // incident vertices, ascending
  };

  int dimension = 0;
  std::vector<RationalVector> vertices;
  std::vector<Facet> facets;
  std::vector<std::pair<int, int>> edges;  // u < v

  UndirectedGraph graph() const;
  std::vector<std::vector<int>> facet_vertex_lists() const;
  std::vector<int> neighbors(int v) const;
  RationalVector centroid() const;
};

/// Brute-force hull of a full-dimensional point set. Points that are not
/// vertices are dropped; vertices keep their input order.
Polytope hull_facets(const std::vector<RationalVector>& points);

/// LP digraph with s, w and z the three lowest vertices.
struct MarkedLPDigraph {
  Polytope polytope;
  RationalVector objective;
  Digraph digraph;  // vertex i labelled i + 1
  int s = 0;
  int w = 0;
  int z = 0;

  int dimension() const { return polytope.dimension; }
};

/// Throws NonGenericObjective when two vertices tie, and GeometryError if the
/// digraph is not acyclic USO satisfying Holt-Klee.
MarkedLPDigraph lp_digraph(const Polytope& p, const RationalVector& c);

/// Reversing (s, w) breaks Holt-Klee. Throws GeometryError if the reversed
/// digraph is not acyclic USO.
bool is_sensitive(const MarkedLPDigraph& gamma);

/// Combinatorial variant on an acyclic USO digraph: returns an out-neighbour
/// w of the source whose only in-arc comes from the source and whose
/// reversal breaks holt_klee(., d).
std::optional<int> sensitive_partner(const Digraph& d, int dim);

/// Every listed face induces a subgraph with a unique source and sink.
bool faces_uso(const Digraph& d, const std::vector<std::vector<int>>& faces);

/// Acyclic USO orientations of the polytope graph (USO on every facet) that
/// admit a sensitive partner.
int count_sensitive_orientations(const Polytope& p);

/// Objectives tried in order: the seed (if any) and seed + k/64 * delta for
/// small lattice vectors delta, then integer vectors of max-norm 1, 2, ...,
/// `bound`, each followed by one fixed perturbation.
std::optional<MarkedLPDigraph> find_sensitive_objective(const Polytope& p, int bound = 6,
                                                        const RationalVector* seed = nullptr);

struct NamedPolytope {
  std::string name;
  Polytope polytope;
};

/// Rational realizations of the seven combinatorial types of 3-polytopes with
/// six vertices.
std::vector<NamedPolytope> six_vertex_catalog();
std::vector<NamedPolytope> small_polytopes();  // simplex, square pyramid, triangular bipyramid

/// Cut off simple vertex v by the plane through the midpoints u1, u2 of its
/// edges to v1, v2 and the third neighbour v3 (`v3` is an index into the
/// ascending neighbour list). Result vertices: the old ones without v, then
/// u1, u2.
Polytope truncate(const Polytope& p, int v, int v3 = 2);

struct TruncationCertificate {
  Polytope polytope;
  int v3 = 0;
  Digraph combinatorial;  // orientation found by the surgery search
  int s = 0;
  int w = 0;
  std::optional<MarkedLPDigraph> geometric;
  std::string warning;
};

/// Throws GeometryError when the surgery search finds nothing.
TruncationCertificate sensitive_after_truncation(const MarkedLPDigraph& gamma, int v);

/// Pyramid over gamma's polytope with apex above its centroid; the objective
/// gets a last component placing the apex strictly between w and z.
MarkedLPDigraph pyramid(const MarkedLPDigraph& gamma);

/// Polar of p about `center` (strictly interior): dual vertex i is the polar
/// of facet i.
Polytope polar_dual(const Polytope& p, const RationalVector& center);
Polytope polar_dual(const Polytope& p);

struct LineShelling {
  RationalVector point;
  RationalVector direction;
  std::vector<int> order;  // facet indices
  std::vector<Rational> parameters;  // aligned with order
};

/// Facets in the order the line point + t * direction meets their
/// hyperplanes, t increasing from 0 and wrapping through infinity.
LineShelling line_shelling(const Polytope& p, const RationalVector& point, const RationalVector& direction);

struct SimplexCut {
  RationalVector va;
  RationalVector vb;
  std::vector<RationalVector> base;  // d - 1 points spanning the (d-2)-simplex
  std::vector<Hyperplane> planes;    // d - 1 hyperplanes containing the line
};

/// Facets a and b must be the first two of the shelling and adjacent.
SimplexCut simplex_hyperplanes(const Polytope& p, const LineShelling& l, int a, int b);

struct NonHKStarCertificate {
  int r = 0;
  int n = 0;
  Chirotope chirotope;
  std::vector<int> coline;          // labels
  std::vector<int> mutated_basis;   // labels
  std::vector<RationalVector> polytope_vertices;
  RationalVector objective;
  std::vector<int> shelling_order_before;  // labels
  std::vector<int> shelling_order_after;
  HoltKleeReport report;
  std::vector<std::string> log;
};

/// Requires r >= 4 and n >= 2r (std::invalid_argument otherwise).
NonHKStarCertificate build_non_hkstar(int r, int n);

nlohmann::json to_json(const NonHKStarCertificate& c);
nlohmann::json to_json(const MarkedLPDigraph& gamma);

}  // namespace hkom
