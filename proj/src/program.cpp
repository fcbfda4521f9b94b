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

#include "hkom/program.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_map>

#include "hkom/minors.hpp"
#include "hkom/parallel.hpp"

namespace hkom {

namespace {

// The 1-skeleton of M\f with lifted vertices, shared by every choice of g.
struct DeletionSkeleton {
  int f = 0;
  std::vector<SignVector> vertices;
  std::vector<SignVector> edges;
  std::vector<std::array<int, 2>> endpoints;
  std::vector<std::optional<SignVector>> lines;  // cocircuit of M vanishing on Z^0 and f
};

int lift_bits(Sign s) { return 1 << (static_cast<int>(s) + 1); }

Sign sign_from_bits(int bits) {
  switch (bits) {
    case 1:
      return Sign::Minus;
    case 2:
      return Sign::Zero;
    case 4:
      return Sign::Plus;
    default:
      throw InternalError("f-lift of a vertex is not unique");
  }
}

DeletionSkeleton make_skeleton(const OrientedMatroid& m, int f) {
  DeletionSkeleton sk;
  sk.f = f;
  const ElementMask keep = m.ground() & ~bit(f);
  std::unordered_map<std::uint64_t, int> lifts;
  std::vector<SignVector> projected;
  projected.reserve(m.covectors().size());
  for (const auto& x : m.covectors()) {
    SignVector p = x.masked(keep);
    lifts[p.key()] |= lift_bits(x[f]);
    projected.push_back(p);
  }
  OrientedMatroid mf(m.size(), std::move(projected), m.labels());
  for (const auto& c : mf.cocircuits()) {
    SignVector v = c;
    v.set(f, sign_from_bits(lifts.at(c.key())));
    sk.vertices.push_back(v);
  }
  for (const auto& z : mf.edge_covectors()) {
    std::array<int, 2> ends{-1, -1};
    int found = 0;
    for (std::size_t i = 0; i < mf.cocircuits().size(); ++i) {
      if (!conforms_unchecked(mf.cocircuits()[i], z)) continue;
      if (found == 2) throw InternalError("edge covector with more than two vertices");
      ends[found++] = static_cast<int>(i);
    }
    if (found != 2) throw InternalError("edge covector without two vertices");
    std::optional<SignVector> line;
    for (const auto& y : m.cocircuits()) {
      if ((y.support() & z.zeros()) == 0) {
        line = y;
        break;
      }
    }
    sk.edges.push_back(z);
    sk.endpoints.push_back(ends);
    sk.lines.push_back(line);
  }
  return sk;
}

// +1 when the objective increases from u to v, -1 when it decreases, 0 when
// it is constant along the edge.
int orient(const SignVector& u, const SignVector& v, const std::optional<SignVector>& line, int g,
           int f) {
  const Sign pu = u[f];
  const Sign pv = v[f];
  if (pu != pv) return static_cast<int>(pu) < static_cast<int>(pv) ? 1 : -1;
  if (pu == Sign::Zero) return 0;
  // Both endpoints strictly on one side of s_f. The cocircuit Y vanishing on
  // the edge's line and on f records on which side of u the line meets s_f;
  // normalise it to agree with u away from v.
  if (!line) throw InternalError("no cocircuit through the edge line and f");
  const SignVector& y = *line;
  const ElementMask away = u.support() & v.zeros() & ~bit(f) & y.support();
  if (away == 0) throw InternalError("edge endpoints are not separated by Y");
  const int e = std::countr_zero(away);
  const Sign eps = multiply(u[e], y[e]);
  const Sign s = multiply(multiply(eps, y[g]), pu);
  return static_cast<int>(s);
}

ProgramGraph graph_for(const DeletionSkeleton& sk, int g) {
  ProgramGraph pg;
  pg.g = g;
  pg.f = sk.f;
  std::vector<int> index(sk.vertices.size(), -1);
  for (std::size_t i = 0; i < sk.vertices.size(); ++i) {
    if (sk.vertices[i][g] != Sign::Plus) continue;
    index[i] = static_cast<int>(pg.vertices.size());
    pg.vertices.push_back(sk.vertices[i]);
  }
  for (std::size_t k = 0; k < sk.edges.size(); ++k) {
    const SignVector& z = sk.edges[k];
    if (z[g] != Sign::Plus) continue;
    const int a = index[sk.endpoints[k][0]];
    const int b = index[sk.endpoints[k][1]];
    if (a < 0 || b < 0) continue;
    ProgramLink link{a, b, z, orient(pg.vertices[a], pg.vertices[b], sk.lines[k], g, sk.f)};
    pg.links.push_back(link);
  }
  return pg;
}

struct RegionFacts {
  bool nonempty = false;
  bool full_dimensional = false;
  bool bounded = false;
};

bool in_region(const SignVector& x, int g, int f, ElementMask reorientation) {
  SignVector y = x.reoriented(reorientation);
  return y[g] == Sign::Plus && (y.minus() & ~bit(f)) == 0;
}

RegionFacts region_facts(const OrientedMatroid& m, int g, int f, ElementMask reorientation) {
  RegionFacts r;
  const ElementMask top = m.topes().empty() ? 0 : m.topes().front().support();
  bool recession = false;
  for (const auto& x : m.covectors()) {
    if (in_region(x, g, f, reorientation)) {
      r.nonempty = true;
      if (x.support() == top) r.full_dimensional = true;
    }
    if (!x.is_zero() && x[g] == Sign::Zero && (x.reoriented(reorientation).minus() & ~bit(f)) == 0)
      recession = true;
  }
  r.bounded = !r.nonempty || !recession;
  return r;
}

ProgramReport analyze(const OrientedMatroid& m, const ProgramGraph& pg, ElementMask reorientation,
                      bool with_euclidean) {
  ProgramReport rep;
  rep.g = pg.g;
  rep.f = pg.f;
  rep.reorientation = reorientation;
  RegionFacts facts = region_facts(m, pg.g, pg.f, reorientation);
  rep.nonempty = facts.nonempty;
  rep.full_dimensional = facts.full_dimensional;
  rep.bounded = facts.bounded;
  Digraph plus = pg.feasible(reorientation);
  rep.generic = plus.edges().empty();
  rep.proper = rep.bounded && rep.full_dimensional && rep.generic;
  if (rep.proper) {
    rep.hk = holt_klee(plus, m.rank() - 1);
    rep.uso_anomaly = !unique_source_sink(plus).unique();
  }
  if (with_euclidean) rep.euclidean = is_acyclic(pg.full());
  return rep;
}

// Reorientations R of E\{g,f} whose region P_pi contains a tope, ascending.
std::vector<ElementMask> region_reorientations(const OrientedMatroid& m, int g, int f) {
  std::set<ElementMask> out;
  for (const auto& t : m.topes())
    if (t[g] == Sign::Plus) out.insert(t.minus() & ~bit(f));
  return {out.begin(), out.end()};
}

std::string vertex_label(const SignVector& v) { return v.to_string(); }

}  // namespace

Program::Program(const OrientedMatroid& m, int g, int f) : m_(&m), g_(g), f_(f) {
  if (g < 0 || g >= m.size() || f < 0 || f >= m.size()) throw InvalidProgram("program element out of range");
  if (g == f) throw InvalidProgram("program needs g != f");
  if (m.loops() & bit(g)) throw InvalidProgram("g is a loop");
  if (m.coloops() & bit(f)) throw InvalidProgram("f is a coloop");
}

Digraph ProgramGraph::full() const {
  std::vector<std::string> labels;
  for (const auto& v : vertices) labels.push_back(vertex_label(v));
  Digraph d(labels);
  for (const auto& l : links) {
    if (l.direction > 0) d.add_arc(l.u, l.v);
    else if (l.direction < 0) d.add_arc(l.v, l.u);
    else d.add_edge(l.u, l.v);
  }
  return d;
}

bool ProgramGraph::is_feasible(const SignVector& x, ElementMask reorientation) const {
  return in_region(x, g, f, reorientation);
}

Digraph ProgramGraph::feasible(ElementMask reorientation) const {
  Digraph d;
  std::vector<int> index(vertices.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (is_feasible(vertices[i], reorientation)) index[i] = d.add_vertex(vertex_label(vertices[i]));
  for (const auto& l : links) {
    if (!is_feasible(l.covector, reorientation)) continue;
    const int a = index[l.u];
    const int b = index[l.v];
    if (a < 0 || b < 0) throw InternalError("feasible edge with an infeasible endpoint");
    if (l.direction > 0) d.add_arc(a, b);
    else if (l.direction < 0) d.add_arc(b, a);
    else d.add_edge(a, b);
  }
  return d;
}

std::vector<SignVector> feasible_region(const Program& pi) {
  std::vector<SignVector> out;
  for (const auto& x : pi.matroid().covectors())
    if (in_region(x, pi.g(), pi.f(), 0)) out.push_back(x);
  return out;
}

bool is_bounded(const Program& pi) { return region_facts(pi.matroid(), pi.g(), pi.f(), 0).bounded; }

ProgramGraph program_graph(const Program& pi) {
  return graph_for(make_skeleton(pi.matroid(), pi.f()), pi.g());
}

bool is_generic_objective(const Program& pi) { return program_graph(pi).feasible().edges().empty(); }

ProgramReport analyze_program(const Program& pi, ElementMask reorientation) {
  if (reorientation & (bit(pi.g()) | bit(pi.f())))
    throw InvalidProgram("reorientation must avoid g and f");
  return analyze(pi.matroid(), program_graph(pi), reorientation, true);
}

bool is_proper_program(const Program& pi) { return analyze(pi.matroid(), program_graph(pi), 0, false).proper; }

HoltKleeReport is_hk_program(const Program& pi) {
  ProgramReport r = analyze(pi.matroid(), program_graph(pi), 0, false);
  if (!r.proper) throw ImproperProgram("program is not proper");
  return *r.hk;
}

bool is_euclidean_program(const Program& pi) { return is_acyclic(program_graph(pi).full()); }

nlohmann::json to_json(const ProgramReport& r, const OrientedMatroid& m, const ProgramGraph& graph) {
  nlohmann::json j;
  j["g"] = m.labels()[r.g];
  j["f"] = m.labels()[r.f];
  j["proper"] = r.proper;
  j["bounded"] = r.bounded;
  j["full_dimensional"] = r.full_dimensional;
  j["generic"] = r.generic;
  if (r.hk) j["hk"] = to_json(*r.hk, graph.feasible(r.reorientation));
  else j["hk"] = nullptr;
  j["euclidean"] = r.euclidean;
  if (r.uso_anomaly) j["uso_anomaly"] = true;
  return j;
}

MatroidVerdict is_hk_matroid(const OrientedMatroid& m, const QuantifierOptions& options) {
  MatroidVerdict verdict;
  if (m.rank() <= 3) return verdict;
  std::vector<Minor> minors;
  if (options.identity_only) {
    m.warm_caches();
    minors.push_back({MinorSpec{}, m});
  } else {
    minors = minors_with_rank_at_least(m, 4);
  }
  struct Task {
    std::size_t minor;
    int f;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < minors.size(); ++i)
    for (int f = 0; f < minors[i].matroid.size(); ++f)
      if (!(minors[i].matroid.coloops() & bit(f))) tasks.push_back({i, f});

  std::vector<std::optional<ProgramWitness>> found(tasks.size());
  auto first = parallel_first_failure(tasks.size(), options.jobs, [&](std::size_t t) {
    const Minor& minor = minors[tasks[t].minor];
    const OrientedMatroid& n = minor.matroid;
    const int f = tasks[t].f;
    DeletionSkeleton sk = make_skeleton(n, f);
    for (int g = 0; g < n.size(); ++g) {
      if (g == f || (n.loops() & bit(g))) continue;
      ProgramGraph pg = graph_for(sk, g);
      std::vector<ElementMask> regions =
          options.identity_only ? std::vector<ElementMask>{0} : region_reorientations(n, g, f);
      for (ElementMask r : regions) {
        ProgramReport rep = analyze(n, pg, r, false);
        if (!rep.proper || rep.hk->holds) continue;
        ProgramWitness w;
        w.deleted = m.labels_of(minor.spec.deleted);
        w.contracted = m.labels_of(minor.spec.contracted);
        w.reorientation = n.labels_of(r);
        w.g = n.labels()[g];
        w.f = n.labels()[f];
        w.report = *rep.hk;
        found[t] = w;
        return true;
      }
    }
    return false;
  });
  if (first) {
    verdict.holds = false;
    verdict.witness = found[*first];
  }
  return verdict;
}

MatroidVerdict is_euclidean_matroid(const OrientedMatroid& m, int jobs) {
  MatroidVerdict verdict;
  m.warm_caches();
  std::vector<int> fs;
  for (int f = 0; f < m.size(); ++f)
    if (!(m.coloops() & bit(f))) fs.push_back(f);
  std::vector<std::optional<ProgramWitness>> found(fs.size());
  auto first = parallel_first_failure(fs.size(), jobs, [&](std::size_t t) {
    const int f = fs[t];
    DeletionSkeleton sk = make_skeleton(m, f);
    for (int g = 0; g < m.size(); ++g) {
      if (g == f || (m.loops() & bit(g))) continue;
      Digraph d = graph_for(sk, g).full();
      std::vector<int> cycle = find_directed_cycle(d);
      if (cycle.empty()) continue;
      ProgramWitness w;
      w.g = m.labels()[g];
      w.f = m.labels()[f];
      for (int v : cycle) w.cycle.push_back(d.label(v));
      found[t] = w;
      return true;
    }
    return false;
  });
  if (first) {
    verdict.holds = false;
    verdict.witness = found[*first];
  }
  return verdict;
}

nlohmann::json to_json(const MatroidVerdict& v) {
  nlohmann::json j;
  j["holds"] = v.holds;
  if (v.witness) {
    const auto& w = *v.witness;
    nlohmann::json wj;
    wj["deleted"] = w.deleted;
    wj["contracted"] = w.contracted;
    wj["reorientation"] = w.reorientation;
    wj["g"] = w.g;
    wj["f"] = w.f;
    if (!w.cycle.empty()) {
      wj["cycle"] = w.cycle;
    } else {
      wj["disjoint_path_count"] = w.report.disjoint_path_count;
      wj["required_d"] = w.report.required_d;
    }
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace hkom
