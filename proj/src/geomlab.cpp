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

#include "hkom/geomlab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "hkom/fixation.hpp"
#include "hkom/oriented_matroid.hpp"

namespace hkom {

namespace {

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

int affine_rank(const std::vector<RationalVector>& pts) {
  if (pts.size() <= 1) return 0;
  RationalMatrix m;
  for (std::size_t i = 1; i < pts.size(); ++i) m.push_back(sub(pts[i], pts[0]));
  return matrix_rank(m);
}

RationalVector midpoint(const RationalVector& a, const RationalVector& b) { return scale(add(a, b), Rational(1, 2)); }

std::string key_of(const Hyperplane& h) { return to_string(h.normal) + "|" + to_string(h.offset); }

Digraph numbered_digraph(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return Digraph(labels);
}

bool same_up_to_reversal(std::vector<int> a, const std::vector<int>& b) {
  if (a == b) return true;
  std::reverse(a.begin(), a.end());
  return a == b;
}

}  // namespace

UndirectedGraph Polytope::graph() const { return {static_cast<int>(vertices.size()), edges}; }

std::vector<std::vector<int>> Polytope::facet_vertex_lists() const {
  std::vector<std::vector<int>> out;
  for (const auto& f : facets) out.push_back(f.vertices);
  return out;
}

std::vector<int> Polytope::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalVector Polytope::centroid() const {
  RationalVector c(dimension, Rational(0));
  for (const auto& v : vertices) c = add(c, v);
  return scale(c, Rational(1, static_cast<long>(vertices.size())));
}

Polytope hull_facets(const std::vector<RationalVector>& input) {
  std::vector<RationalVector> pts;
  for (const auto& p : input)
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  if (pts.empty()) throw GeometryError("hull_facets: no points");
  const int d = static_cast<int>(pts.front().size());
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != d) throw GeometryError("hull_facets: mixed dimensions");
  if (affine_rank(pts) != d) throw GeometryError("hull_facets: points do not span dimension " + std::to_string(d));

  const int n = static_cast<int>(pts.size());
  std::vector<Hyperplane> planes;
  std::set<std::string> seen;
  for_each_combination(n, d, [&](const std::vector<int>& idx) {
    std::vector<RationalVector> sub_pts;
    for (int i : idx) sub_pts.push_back(pts[i]);
    auto h = hyperplane_through(sub_pts);
    if (!h) return;
    int pos = 0, neg = 0;
    for (const auto& p : pts) {
      int s = sign_of(h->eval(p));
      pos += s > 0;
      neg += s < 0;
    }
    if (pos && neg) return;
    if (pos) {
      h->normal = scale(h->normal, Rational(-1));
      h->offset = -h->offset;
    }
    if (seen.insert(key_of(*h)).second) planes.push_back(*h);
  });

  Polytope p;
  p.dimension = d;
  std::vector<int> index(n, -1);
  for (int i = 0; i < n; ++i) {
    RationalMatrix normals;
    for (const auto& h : planes)
      if (h.eval(pts[i]) == 0) normals.push_back(h.normal);
    if (matrix_rank(normals) == d) {
      index[i] = static_cast<int>(p.vertices.size());
      p.vertices.push_back(pts[i]);
    }
  }
  for (const auto& h : planes) {
    Polytope::Facet f{h, {}};
    for (int i = 0; i < n; ++i)
      if (index[i] >= 0 && h.eval(pts[i]) == 0) f.vertices.push_back(index[i]);
    p.facets.push_back(std::move(f));
  }
  const int nv = static_cast<int>(p.vertices.size());
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      RationalMatrix normals;
      std::vector<const Polytope::Facet*> common;
      for (const auto& f : p.facets) {
        bool hu = std::binary_search(f.vertices.begin(), f.vertices.end(), u);
        bool hv = std::binary_search(f.vertices.begin(), f.vertices.end(), v);
        if (hu && hv) {
          common.push_back(&f);
          normals.push_back(f.plane.normal);
        }
      }
      if (matrix_rank(normals) != d - 1) continue;
      bool only_two = true;
      for (int x = 0; x < nv && only_two; ++x) {
        if (x == u || x == v) continue;
        bool on_all = true;
        for (const auto* f : common) on_all = on_all && std::binary_search(f->vertices.begin(), f->vertices.end(), x);
        if (on_all) only_two = false;
      }
      if (only_two) p.edges.push_back({u, v});
    }
  }
  return p;
}

MarkedLPDigraph lp_digraph(const Polytope& p, const RationalVector& c) {
  const int n = static_cast<int>(p.vertices.size());
  if (static_cast<int>(c.size()) != p.dimension) throw std::invalid_argument("lp_digraph: objective has wrong dimension");
  std::vector<Rational> val;
  for (const auto& v : p.vertices) val.push_back(dot(c, v));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return val[a] < val[b]; });
  for (int i = 0; i + 1 < n; ++i)
    if (val[order[i]] == val[order[i + 1]])
      throw NonGenericObjective("lp_digraph: vertices " + std::to_string(order[i] + 1) + " and " +
                                std::to_string(order[i + 1] + 1) + " tie");
  MarkedLPDigraph g{p, c, numbered_digraph(n), order[0], order[1], n > 2 ? order[2] : order[1]};
  for (auto [a, b] : p.edges) {
    if (val[a] < val[b])
      g.digraph.add_arc(a, b);
    else
      g.digraph.add_arc(b, a);
  }
  if (!is_acyclic(g.digraph) || !unique_source_sink(g.digraph).unique() || !holt_klee(g.digraph, p.dimension).holds)
    throw GeometryError("lp_digraph: LP digraph is not acyclic USO with the Holt-Klee property");
  if (!g.digraph.has_arc(g.s, g.w)) throw GeometryError("lp_digraph: lowest two vertices are not adjacent");
  return g;
}

bool is_sensitive(const MarkedLPDigraph& gamma) {
  Digraph flipped = gamma.digraph.with_arc_flipped(gamma.s, gamma.w);
  if (!is_acyclic(flipped) || !unique_source_sink(flipped).unique())
    throw GeometryError("is_sensitive: reversed digraph is not acyclic USO");
  return !holt_klee(flipped, gamma.dimension()).holds;
}

std::optional<int> sensitive_partner(const Digraph& d, int dim) {
  SourceSink ss = unique_source_sink(d);
  if (!ss.unique()) return std::nullopt;
  const int s = *ss.source;
  std::vector<int> outs = d.out(s);
  std::sort(outs.begin(), outs.end());
  for (int w : outs) {
    if (d.in(w).size() != 1) continue;
    if (!holt_klee(d.with_arc_flipped(s, w), dim).holds) return w;
  }
  return std::nullopt;
}

bool faces_uso(const Digraph& d, const std::vector<std::vector<int>>& faces) {
  for (const auto& f : faces) {
    std::vector<bool> keep(d.vertex_count(), false);
    for (int v : f) keep[v] = true;
    if (!unique_source_sink(d.induced(keep)).unique()) return false;
  }
  return true;
}

int count_sensitive_orientations(const Polytope& p) {
  int count = 0;
  for_each_acyclic_uso(p.graph(), p.facet_vertex_lists(), [&](const Digraph& d) {
    if (sensitive_partner(d, p.dimension)) ++count;
    return true;
  });
  return count;
}

std::optional<MarkedLPDigraph> find_sensitive_objective(const Polytope& p, int bound, const RationalVector* seed) {
  const int d = p.dimension;
  auto attempt = [&](const RationalVector& c) -> std::optional<MarkedLPDigraph> {
    try {
      MarkedLPDigraph g = lp_digraph(p, c);
      if (is_sensitive(g)) return g;
    } catch (const NonGenericObjective&) {
    }
    return std::nullopt;
  };
  // Integer vectors of max-norm exactly b, lexicographic.
  auto shell = [&](int b, const std::function<bool(const RationalVector&)>& fn) {
    std::vector<int> x(d, -b);
    while (true) {
      if (std::any_of(x.begin(), x.end(), [&](int v) { return std::abs(v) == b; })) {
        RationalVector c;
        for (int v : x) c.emplace_back(v);
        if (fn(c)) return true;
      }
      int i = d - 1;
      while (i >= 0 && x[i] == b) x[i--] = -b;
      if (i < 0) return false;
      ++x[i];
    }
  };
  std::optional<MarkedLPDigraph> found;
  if (seed) {
    if ((found = attempt(*seed))) return found;
    for (int k : {64, 16, 4}) {
      shell(1, [&](const RationalVector& delta) {
        found = attempt(add(*seed, scale(delta, Rational(1, k))));
        return found.has_value();
      });
      if (found) return found;
    }
  }
  RationalVector perturbation;
  for (int i = 0; i < d; ++i) perturbation.emplace_back(Rational(1, 8 * (1L << (2 * i))));
  for (int b = 1; b <= bound && !found; ++b) {
    shell(b, [&](const RationalVector& c) {
      found = attempt(c);
      if (!found) found = attempt(add(c, scale(perturbation, Rational(1, b))));
      return found.has_value();
    });
  }
  return found;
}

namespace {

std::vector<RationalVector> points(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

}  // namespace

std::vector<NamedPolytope> six_vertex_catalog() {
  std::vector<NamedPolytope> out;
  auto add_one = [&](const std::string& name, std::vector<RationalVector> pts) {
    out.push_back({name, hull_facets(pts)});
  };
  // f-vectors (6,9,5), (6,10,6) twice, (6,11,7) twice, (6,12,8) twice. The
  // coordinates of the five types with sensitive orientations were picked so
  // that find_sensitive_objective succeeds with bound 3.
  add_one("triangular prism", points({{2, 0, 0}, {-4, 4, 0}, {6, -2, 0}, {-1, -3, 1}, {-4, -1, 1}, {1, -4, 1}}));
  add_one("pentagonal pyramid", points({{0, 0, 0}, {2, 0, 0}, {3, 2, 0}, {1, 3, 0}, {-1, 2, 0}, {1, 1, 3}}));
  add_one("prism with a folded side", points({{0, 0, 2}, {0, 0, 1}, {1, 0, -1}, {3, 0, -2}, {0, 1, 0}, {0, 3, 2}}));
  add_one("capped square pyramid", points({{1, 3, 0}, {-1, -1, 0}, {0, -1, 0}, {2, 1, 0}, {-1, 3, 3}, {2, -1, 2}}));
  add_one("octahedron with a square", points({{1, 3, 0}, {-3, -2, 0}, {-2, -2, 0}, {1, 2, 0}, {0, -3, 1}, {1, 3, 2}}));
  add_one("octahedron", points({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  add_one("capped bipyramid", points({{2, 3, 3}, {0, 0, 3}, {-3, -3, 3}, {-2, -2, 2}, {-2, 3, -1}, {-3, 3, 0}}));
  return out;
}

std::vector<NamedPolytope> small_polytopes() {
  return {{"simplex", hull_facets(points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))},
          {"square pyramid", hull_facets(points({{1, 1, 0}, {1, -1, 0}, {-1, -1, 0}, {-1, 1, 0}, {0, 0, 1}}))},
          {"triangular bipyramid", hull_facets(points({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}}))}};
}

Polytope truncate(const Polytope& p, int v, int v3) {
  if (p.dimension != 3) throw GeometryError("truncate: dimension must be 3");
  std::vector<int> nb = p.neighbors(v);
  if (nb.size() != 3) throw GeometryError("truncate: vertex " + std::to_string(v + 1) + " is not simple");
  if (v3 < 0 || v3 > 2) throw std::invalid_argument("truncate: v3 selects one of three neighbours");
  const int x3 = nb[v3];
  nb.erase(nb.begin() + v3);
  RationalVector u1 = midpoint(p.vertices[v], p.vertices[nb[0]]);
  RationalVector u2 = midpoint(p.vertices[v], p.vertices[nb[1]]);
  auto h = hyperplane_through({u1, u2, p.vertices[x3]});
  if (!h) throw GeometryError("truncate: cut points are collinear");
  if (h->eval(p.vertices[v]) < 0) {
    h->normal = scale(h->normal, Rational(-1));
    h->offset = -h->offset;
  }
  std::vector<RationalVector> pts;
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) {
    if (i == v) continue;
    if (i != x3 && h->eval(p.vertices[i]) >= 0)
      throw GeometryError("truncate: cut plane does not separate vertex " + std::to_string(v + 1));
    pts.push_back(p.vertices[i]);
  }
  pts.push_back(u1);
  pts.push_back(u2);
  Polytope t = hull_facets(pts);
  if (t.vertices.size() != p.vertices.size() + 1) throw GeometryError("truncate: unexpected vertex count");
  return t;
}

TruncationCertificate sensitive_after_truncation(const MarkedLPDigraph& gamma, int v) {
  const Polytope& p = gamma.polytope;
  if (v == gamma.s || v == gamma.w) throw std::invalid_argument("sensitive_after_truncation: v must differ from s and w");
  const int n = static_cast<int>(p.vertices.size());
  auto map = [&](int i) { return i - (i > v ? 1 : 0); };
  std::optional<TruncationCertificate> first_combinatorial;
  std::string last_error = "no simple vertex";
  for (int v3 = 0; v3 < 3; ++v3) {
    Polytope t;
    try {
      t = truncate(p, v, v3);
    } catch (const GeometryError& e) {
      last_error = e.what();
      continue;
    }
    std::set<std::pair<int, int>> old_edges;
    for (auto [a, b] : gamma.digraph.arcs()) {
      if (a == v || b == v) continue;
      old_edges.insert({std::min(map(a), map(b)), std::max(map(a), map(b))});
    }
    std::vector<std::pair<int, int>> fresh;
    for (auto e : t.edges)
      if (!old_edges.count(e)) fresh.push_back(e);
    if (fresh.size() != 5 || old_edges.size() + 5 != t.edges.size())
      throw GeometryError("sensitive_after_truncation: truncation changed old edges");
    const int s = map(gamma.s), w = map(gamma.w);
    std::optional<Digraph> surgery;
    for (int mask = 0; mask < 32 && !surgery; ++mask) {
      Digraph d = numbered_digraph(n + 1);
      for (auto [a, b] : gamma.digraph.arcs())
        if (a != v && b != v) d.add_arc(map(a), map(b));
      for (int i = 0; i < 5; ++i) {
        auto [a, b] = fresh[i];
        if ((mask >> i) & 1)
          d.add_arc(b, a);
        else
          d.add_arc(a, b);
      }
      if (!is_acyclic(d)) continue;
      SourceSink ss = unique_source_sink(d);
      if (!ss.unique() || *ss.source != s || !faces_uso(d, t.facet_vertex_lists())) continue;
      if (d.in(w).size() != 1 || !d.has_arc(s, w)) continue;
      Digraph flipped = d.with_arc_flipped(s, w);
      if (!holt_klee(flipped, 3).holds) surgery = d;
    }
    if (!surgery) continue;
    TruncationCertificate cert{t, v3, *surgery, s, w, std::nullopt, ""};
    cert.geometric = find_sensitive_objective(t, 6, &gamma.objective);
    if (cert.geometric) return cert;
    if (!first_combinatorial) first_combinatorial = cert;
  }
  if (first_combinatorial) {
    first_combinatorial->warning = "geometric search exhausted its budget; combinatorial certificate only";
    return *first_combinatorial;
  }
  throw GeometryError("sensitive_after_truncation: surgery found no orientation (" + last_error + ")");
}

MarkedLPDigraph pyramid(const MarkedLPDigraph& gamma) {
  const Polytope& p = gamma.polytope;
  std::vector<RationalVector> pts;
  for (const auto& x : p.vertices) {
    RationalVector y = x;
    y.emplace_back(0);
    pts.push_back(y);
  }
  RationalVector apex = p.centroid();
  apex.emplace_back(1);
  pts.push_back(apex);
  Polytope q = hull_facets(pts);
  if (q.vertices.size() != pts.size()) throw GeometryError("pyramid: unexpected vertex count");
  const RationalVector& c = gamma.objective;
  const Rational cw = dot(c, p.vertices[gamma.w]);
  const Rational cz = dot(c, p.vertices[gamma.z]);
  RationalVector g = c;
  g.push_back((cw + cz) / 2 - dot(c, p.centroid()));
  MarkedLPDigraph out = lp_digraph(q, g);
  const int a = static_cast<int>(p.vertices.size());
  if (out.s != gamma.s || out.w != gamma.w || out.z != a)
    throw GeometryError("pyramid: apex is not placed between w and z");
  if (!is_sensitive(out)) throw GeometryError("pyramid: result is not sensitive");
  return out;
}

Polytope polar_dual(const Polytope& p, const RationalVector& center) {
  std::vector<RationalVector> pts;
  for (const auto& f : p.facets) {
    Rational slack = -f.plane.eval(center);
    if (slack <= 0) throw GeometryError("polar_dual: center is not interior");
    pts.push_back(scale(f.plane.normal, 1 / slack));
  }
  Polytope d = hull_facets(pts);
  if (d.vertices.size() != p.facets.size()) throw GeometryError("polar_dual: facet without dual vertex");
  if (d.facets.size() != p.vertices.size()) throw GeometryError("polar_dual: vertex without dual facet");
  return d;
}

Polytope polar_dual(const Polytope& p) { return polar_dual(p, p.centroid()); }

LineShelling line_shelling(const Polytope& p, const RationalVector& point, const RationalVector& direction) {
  LineShelling l{point, direction, {}, {}};
  std::vector<std::pair<Rational, int>> pos, neg;
  for (int i = 0; i < static_cast<int>(p.facets.size()); ++i) {
    const Hyperplane& h = p.facets[i].plane;
    Rational slack = -h.eval(point);
    if (slack <= 0) throw GeometryError("line_shelling: point is not interior");
    Rational rate = dot(h.normal, direction);
    if (rate == 0) throw GeometryError("line_shelling: line is parallel to facet " + std::to_string(i + 1));
    Rational t = slack / rate;
    (t > 0 ? pos : neg).push_back({t, i});
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  for (auto* part : {&pos, &neg}) {
    for (std::size_t k = 0; k < part->size(); ++k) {
      if (k && (*part)[k].first == (*part)[k - 1].first) throw GeometryError("line_shelling: line meets a ridge");
      l.order.push_back((*part)[k].second);
      l.parameters.push_back((*part)[k].first);
    }
  }
  return l;
}

SimplexCut simplex_hyperplanes(const Polytope& p, const LineShelling& l, int a, int b) {
  const int d = p.dimension;
  if (l.order.size() < 2 || l.order[0] != a || l.order[1] != b)
    throw GeometryError("simplex_hyperplanes: facets are not the first two of the shelling");
  SimplexCut cut;
  cut.va = add(l.point, scale(l.direction, l.parameters[0]));
  cut.vb = add(l.point, scale(l.direction, l.parameters[1]));
  std::vector<RationalVector> ridge;
  for (int v : p.facets[a].vertices)
    if (std::binary_search(p.facets[b].vertices.begin(), p.facets[b].vertices.end(), v)) ridge.push_back(p.vertices[v]);
  if (ridge.empty() || affine_rank(ridge) != d - 2)
    throw GeometryError("simplex_hyperplanes: facets " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                        " are not adjacent");
  // d - 1 affinely independent ridge vertices, chosen greedily.
  std::vector<RationalVector> corners;
  for (const auto& x : ridge) {
    corners.push_back(x);
    if (affine_rank(corners) != static_cast<int>(corners.size()) - 1) corners.pop_back();
    if (static_cast<int>(corners.size()) == d - 1) break;
  }
  RationalVector mid(d, Rational(0));
  for (const auto& x : ridge) mid = add(mid, x);
  mid = scale(mid, Rational(1, static_cast<long>(ridge.size())));
  for (int k = 1; k <= 8; ++k) {
    // Base points (k * mid + corner) / (k + 1) lie in the relative interior.
    cut.base.clear();
    cut.planes.clear();
    for (const auto& x : corners) cut.base.push_back(scale(add(scale(mid, Rational(k)), x), Rational(1, k + 1)));
    bool ok = true;
    for (int j = 0; j < d - 1 && ok; ++j) {
      std::vector<RationalVector> through{cut.va, cut.vb};
      for (int i = 0; i < d - 1; ++i)
        if (i != j) through.push_back(cut.base[i]);
      auto h = hyperplane_through(through);
      if (!h) ok = false;
      else cut.planes.push_back(*h);
    }
    if (!ok) continue;
    RationalMatrix normals;
    for (const auto& h : cut.planes) normals.push_back(h.normal);
    if (matrix_rank(normals) != d - 1) continue;
    std::vector<RationalVector> simplex{cut.va, cut.vb};
    simplex.insert(simplex.end(), cut.base.begin(), cut.base.end());
    if (affine_rank(simplex) != d) continue;
    for (int i = 0; i < static_cast<int>(p.facets.size()) && ok; ++i) {
      if (i == a || i == b) continue;
      for (const auto& x : simplex) ok = ok && p.facets[i].plane.eval(x) < 0;
    }
    if (ok) return cut;
  }
  throw GeometryError("simplex_hyperplanes: another facet hyperplane meets every candidate simplex");
}

namespace {

// A d-polytope with `vertices` vertices carrying a sensitive LP digraph.
MarkedLPDigraph sensitive_polytope(int d, int vertices, std::vector<std::string>& log) {
  std::optional<MarkedLPDigraph> gamma;
  for (const auto& np : six_vertex_catalog()) {
    gamma = find_sensitive_objective(np.polytope);
    if (gamma) {
      log.push_back("base: " + np.name + " with objective " + to_string(gamma->objective));
      break;
    }
  }
  if (!gamma) throw GeometryError("build_non_hkstar: no sensitive six-vertex polytope found");
  const int truncations = vertices - (d - 3) - 6;
  for (int k = 0; k < truncations; ++k) {
    std::optional<MarkedLPDigraph> next;
    for (int v = 0; v < static_cast<int>(gamma->polytope.vertices.size()) && !next; ++v) {
      if (v == gamma->s || v == gamma->w || gamma->polytope.neighbors(v).size() != 3) continue;
      try {
        TruncationCertificate cert = sensitive_after_truncation(*gamma, v);
        if (cert.geometric) {
          next = cert.geometric;
          log.push_back("truncated vertex " + std::to_string(v + 1) + ", objective " + to_string(next->objective));
        }
      } catch (const GeometryError& e) {
        log.push_back(std::string("truncation at ") + std::to_string(v + 1) + " failed: " + e.what());
      }
    }
    if (!next) throw GeometryError("build_non_hkstar: no truncation with a geometric certificate");
    gamma = next;
  }
  for (int k = 0; k < d - 3; ++k) {
    gamma = pyramid(*gamma);
    log.push_back("pyramid to dimension " + std::to_string(gamma->dimension()));
  }
  return *gamma;
}

}  // namespace

NonHKStarCertificate build_non_hkstar(int r, int n) {
  if (r < 4 || n < 2 * r) throw std::invalid_argument("build_non_hkstar: requires r >= 4 and n >= 2r");
  if (n > 30) throw std::invalid_argument("build_non_hkstar: n too large");
  const int d = r - 1;
  const int nq = n - r + 2;
  std::vector<std::string> log;
  MarkedLPDigraph gamma = sensitive_polytope(d, nq, log);
  const Polytope& q = gamma.polytope;
  const RationalVector& c = gamma.objective;
  if (static_cast<int>(q.vertices.size()) != nq || q.dimension != d)
    throw GeometryError("build_non_hkstar: sensitive polytope has the wrong size");

  // Interior point strictly above w in objective value and tied with no vertex.
  RationalVector center = q.centroid();
  int top = 0;
  for (int i = 0; i < nq; ++i)
    if (dot(c, q.vertices[i]) > dot(c, q.vertices[top])) top = i;
  auto tied = [&] {
    for (const auto& v : q.vertices)
      if (dot(c, v) == dot(c, center)) return true;
    return false;
  };
  while (dot(c, center) <= dot(c, q.vertices[gamma.w]) || tied()) center = midpoint(center, q.vertices[top]);

  Polytope p = polar_dual(q, center);
  // Facet of the dual for each vertex of q: {y : (x - center) . y <= 1}.
  std::vector<int> facet_of(nq, -1);
  for (int k = 0; k < nq; ++k) {
    RationalVector a = sub(q.vertices[k], center);
    for (int i = 0; i < static_cast<int>(p.facets.size()); ++i) {
      const Hyperplane& h = p.facets[i].plane;
      if (h.offset > 0 && scale(h.normal, 1 / h.offset) == a) facet_of[k] = i;
    }
    if (facet_of[k] < 0) throw GeometryError("polar_dual: no facet for vertex " + std::to_string(k + 1));
  }
  const RationalVector origin(d, Rational(0));
  LineShelling ls = line_shelling(p, origin, scale(c, Rational(-1)));
  std::vector<int> by_value(nq);
  std::iota(by_value.begin(), by_value.end(), 0);
  std::sort(by_value.begin(), by_value.end(),
            [&](int x, int y) { return dot(c, q.vertices[x]) < dot(c, q.vertices[y]); });
  for (int k = 0; k < nq; ++k)
    if (ls.order[k] != facet_of[by_value[k]])
      throw GeometryError("line_shelling: facet order differs from the objective order");
  SimplexCut cut = simplex_hyperplanes(p, ls, facet_of[gamma.s], facet_of[gamma.w]);
  log.push_back("line shelling verified; simplex cut with " + std::to_string(cut.planes.size()) + " planes");

  // Element k < nq is vertex k of q (its dual facet); then the cut planes.
  std::vector<RationalVector> vectors;
  for (int k = 0; k < nq; ++k) {
    RationalVector v = scale(sub(q.vertices[k], center), Rational(-1));
    v.emplace_back(1);
    vectors.push_back(v);
  }
  for (const auto& h : cut.planes) {
    RationalVector v = h.normal;
    v.push_back(-h.offset);
    vectors.push_back(v);
  }
  Chirotope chi = chirotope_from_vectors(vectors);
  ElementMask t = 0;
  for (int j = nq; j < n; ++j) t |= bit(j);
  OrientedMatroid before = oriented_matroid(chi);
  ColineFixation omega(before, t);
  if (!is_proper_fixation(omega)) throw GeometryError("coshell: fixation before mutation is not proper");
  std::vector<int> order_before;
  for (int e : coline_shelling(omega).order) order_before.push_back(e);
  std::vector<int> expected(by_value);
  if (!same_up_to_reversal(order_before, expected))
    throw GeometryError("coshell: coline shelling differs from the line shelling");
  if (!is_hkstar_fixation(omega).holds) throw GeometryError("coshell: fixation before mutation is not HK*");

  std::vector<int> basis{gamma.s, gamma.w};
  for (int j = nq; j < n; ++j) basis.push_back(j);
  std::sort(basis.begin(), basis.end());
  Chirotope mutated = chi.mutated(basis);
  auto cc = cocircuits(mutated);
  AxiomDiagnosis diag = validate_cocircuit_axioms(cc);
  if (!diag.ok) throw GeometryError("mutation: result violates the cocircuit axioms: " + diag.violation);
  OrientedMatroid after = covector_span(cc);
  if (after.size() != n || after.rank() != r) throw GeometryError("mutation: wrong size or rank");
  ColineFixation omega2(after, t);
  if (!is_proper_fixation(omega2)) throw GeometryError("coshell: fixation after mutation is not proper");
  std::vector<int> order_after = coline_shelling(omega2).order;
  std::vector<int> swapped(expected);
  std::swap(swapped[0], swapped[1]);
  if (!same_up_to_reversal(order_after, swapped))
    throw GeometryError("coshell: mutation changed more than the first two shelling positions");
  HoltKleeReport rep = is_hkstar_fixation(omega2);
  if (rep.holds) throw GeometryError("coshell: mutated fixation still satisfies Holt-Klee");
  log.push_back("mutated basis verified non-HK*");

  auto labels = [](std::vector<int> v) {
    for (int& x : v) ++x;
    return v;
  };
  std::vector<int> coline_labels;
  for (int j = nq; j < n; ++j) coline_labels.push_back(j + 1);
  return NonHKStarCertificate{r,
                              n,
                              mutated,
                              coline_labels,
                              labels(basis),
                              q.vertices,
                              c,
                              labels(order_before),
                              labels(order_after),
                              rep,
                              log};
}

nlohmann::json to_json(const NonHKStarCertificate& c) {
  auto vec = [](const RationalVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
  };
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : c.polytope_vertices) verts.push_back(vec(v));
  return {{"r", c.r},
          {"n", c.n},
          {"chirotope", c.chirotope.to_line()},
          {"coline", c.coline},
          {"mutated_basis", c.mutated_basis},
          {"polytope_vertices", verts},
          {"objective", vec(c.objective)},
          {"shelling_order_before", c.shelling_order_before},
          {"shelling_order_after", c.shelling_order_after},
          {"disjoint_path_count", c.report.disjoint_path_count},
          {"required_d", c.report.required_d},
          {"log", c.log}};
}

nlohmann::json to_json(const MarkedLPDigraph& gamma) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : gamma.polytope.vertices) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    verts.push_back(a);
  }
  nlohmann::json obj = nlohmann::json::array();
  for (const auto& x : gamma.objective) obj.push_back(to_string(x));
  return {{"dimension", gamma.dimension()},
          {"vertices", verts},
          {"objective", obj},
          {"s", gamma.s + 1},
          {"w", gamma.w + 1},
          {"digraph", to_json(gamma.digraph)},
          {"sensitive", is_sensitive(gamma)}};
}

}  // namespace hkom
