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

#include "hkom/fixation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "hkom/minors.hpp"
#include "hkom/parallel.hpp"

namespace hkom {

struct FixationIndex {
  // Highest covector rank per sign pattern on E\T.
  std::unordered_map<std::uint64_t, int> best_rank;
  bool generic = true;
  // No nonzero covector vanishes on all of E\T.
  bool pointed = true;
  // Cocircuit with zero set T + {f}, per f.
  std::vector<std::optional<SignVector>> hyperplane_cocircuit;
};

namespace {

std::shared_ptr<const FixationIndex> build_index(const OrientedMatroid& m, ElementMask t) {
  auto idx = std::make_shared<FixationIndex>();
  const auto& cov = m.covectors();
  const auto& ranks = m.covector_ranks();
  for (std::size_t i = 0; i < cov.size(); ++i) {
    auto [it, fresh] = idx->best_rank.try_emplace(cov[i].masked(~t).key(), ranks[i]);
    if (!fresh) it->second = std::max(it->second, ranks[i]);
  }
  idx->pointed = m.set_rank(m.ground() & ~t) == m.rank();
  idx->hyperplane_cocircuit.resize(m.size());
  for (int f : mask_elements(m.ground() & ~t)) {
    for (const auto& c : m.cocircuits()) {
      if (c.zeros() == (t | bit(f))) {
        idx->hyperplane_cocircuit[f] = c;
        break;
      }
    }
    if (!idx->hyperplane_cocircuit[f]) idx->generic = false;
  }
  return idx;
}

ElementMask outside(const ColineFixation& w) { return w.matroid().ground() & ~w.coline(); }

bool pattern_present(const ColineFixation& w, const SignVector& p) {
  return w.index().best_rank.count(p.key()) != 0;
}

std::string label_string(const OrientedMatroid& m, int e) { return std::to_string(m.labels()[e]); }

}  // namespace

ColineFixation::ColineFixation(const OrientedMatroid& m, ElementMask coline, ElementMask reorientation)
    : m_(&m), t_(coline), r_(reorientation) {
  auto cl = colines(m);
  if (std::find(cl.begin(), cl.end(), coline) == cl.end()) throw NotAColine("not a coline");
  if (reorientation & ~outside(*this)) throw std::invalid_argument("reorientation must avoid the coline");
  index_ = build_index(m, coline);
}

ColineFixation::ColineFixation(const OrientedMatroid& m, ElementMask t, ElementMask r,
                               std::shared_ptr<const FixationIndex> idx)
    : m_(&m), t_(t), r_(r), index_(std::move(idx)) {}

ColineFixation ColineFixation::reoriented(ElementMask reorientation) const {
  if (reorientation & t_) throw std::invalid_argument("reorientation must avoid the coline");
  return ColineFixation(*m_, t_, reorientation, index_);
}

SignVector ColineFixation::pattern() const {
  const ElementMask out = m_->ground() & ~t_;
  return SignVector(m_->size(), out & ~r_, out & r_);
}

std::vector<SignVector> supercell(const ColineFixation& omega) {
  std::vector<SignVector> out;
  const ElementMask o = outside(omega);
  for (const auto& x : omega.matroid().covectors())
    if ((x.reoriented(omega.reorientation()).minus() & o) == 0) out.push_back(x);
  return out;
}

bool is_generic_coline(const ColineFixation& omega) { return omega.index().generic; }

bool is_pointed(const ColineFixation& omega) { return omega.index().pointed; }

bool has_interior_point(const ColineFixation& omega) { return omega.matroid().contains(omega.pattern()); }

bool is_facet(const ColineFixation& omega, int f) {
  if (!(outside(omega) & bit(f))) throw std::invalid_argument("facet element lies in the coline");
  auto it = omega.index().best_rank.find(omega.pattern().masked(~bit(f)).key());
  return it != omega.index().best_rank.end() && it->second == omega.matroid().rank() - 1;
}

bool is_proper_fixation(const ColineFixation& omega) {
  if (!is_generic_coline(omega) || !is_pointed(omega) || !has_interior_point(omega)) return false;
  for (int f : mask_elements(outside(omega)))
    if (!is_facet(omega, f)) return false;
  return true;
}

ColineShelling coline_shelling(const ColineFixation& omega) {
  if (!is_generic_coline(omega)) throw ImproperFixation("coline is not generic");
  const OrientedMatroid& m = omega.matroid();
  const ElementMask o = outside(omega);
  std::vector<SignVector> v;
  std::vector<int> starts;
  for (int f : mask_elements(o)) {
    SignVector c = omega.index().hyperplane_cocircuit[f]->reoriented(omega.reorientation());
    if (c.minus() == 0 || c.plus() == 0) starts.push_back(f);
    v.push_back(c);
  }
  if (starts.size() != 2 && !(starts.size() == 1 && popcount(o) == 1))
    throw ShellingError("coline shelling has " + std::to_string(starts.size()) + " candidate ends");
  const int e1 = m.labels()[starts.front()] <= m.labels()[starts.back()] ? starts.front() : starts.back();
  for (auto& c : v) {
    if (c[e1] == Sign::Zero) {
      if (c.minus() != 0) c = -c;
    } else if (c[e1] == Sign::Plus) {
      c = -c;
    }
  }
  std::stable_sort(v.begin(), v.end(), [](const SignVector& a, const SignVector& b) {
    return popcount(a.minus()) < popcount(b.minus());
  });
  ColineShelling sh;
  ElementMask before = 0;
  for (const auto& c : v) {
    const ElementMask z = c.zeros() & o;
    if (popcount(z) != 1 || c.minus() != before)
      throw ShellingError("cocircuits do not form a staircase at " + c.to_string());
    const int e = std::countr_zero(z);
    sh.order.push_back(e);
    sh.witnesses.push_back(c);
    before |= bit(e);
  }
  return sh;
}

bool facet_adjacency(const ColineFixation& omega, int ei, int ej) {
  const ElementMask o = outside(omega);
  if (!(o & bit(ei)) || !(o & bit(ej)) || ei == ej) throw std::invalid_argument("bad facet pair");
  return pattern_present(omega, omega.pattern().masked(~(bit(ei) | bit(ej))));
}

Digraph shelling_digraph(const ColineFixation& omega) {
  if (!is_proper_fixation(omega)) throw ImproperFixation("coline fixation is not proper");
  ColineShelling sh = coline_shelling(omega);
  Digraph d;
  for (int e : sh.order) d.add_vertex(label_string(omega.matroid(), e));
  for (std::size_t i = 0; i < sh.order.size(); ++i)
    for (std::size_t j = i + 1; j < sh.order.size(); ++j)
      if (facet_adjacency(omega, sh.order[i], sh.order[j])) d.add_arc(static_cast<int>(i), static_cast<int>(j));
  return d;
}

HoltKleeReport is_hkstar_fixation(const ColineFixation& omega) {
  return holt_klee(shelling_digraph(omega), omega.matroid().rank() - 1);
}

FixationReport analyze_fixation(const ColineFixation& omega) {
  FixationReport r;
  r.generic = is_generic_coline(omega);
  r.pointed = is_pointed(omega);
  r.interior = has_interior_point(omega);
  r.facets = true;
  for (int f : mask_elements(outside(omega))) r.facets = r.facets && is_facet(omega, f);
  r.proper = r.generic && r.pointed && r.interior && r.facets;
  if (!r.proper) return r;
  ColineShelling sh = coline_shelling(omega);
  for (int e : sh.order) r.order.push_back(omega.matroid().labels()[e]);
  r.digraph = shelling_digraph(omega);
  r.hk = holt_klee(*r.digraph, omega.matroid().rank() - 1);
  r.acyclic = is_acyclic(*r.digraph);
  r.uso = unique_source_sink(*r.digraph).unique();
  return r;
}

nlohmann::json to_json(const FixationReport& r, const ColineFixation& omega) {
  const OrientedMatroid& m = omega.matroid();
  nlohmann::json j;
  j["T"] = m.labels_of(omega.coline());
  j["reorientation"] = m.labels_of(omega.reorientation());
  j["proper"] = r.proper;
  if (!r.proper) {
    j["generic"] = r.generic;
    j["pointed"] = r.pointed;
    j["interior_point"] = r.interior;
    j["all_facets"] = r.facets;
    return j;
  }
  j["shelling_order"] = r.order;
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [u, v] : r.digraph->arcs())
    arcs.push_back({std::stoi(r.digraph->label(u)), std::stoi(r.digraph->label(v))});
  j["arcs"] = arcs;
  auto lab = [&](const std::optional<int>& x) -> nlohmann::json {
    if (!x) return nullptr;
    return std::stoi(r.digraph->label(*x));
  };
  j["source"] = lab(r.hk->source);
  j["sink"] = lab(r.hk->sink);
  j["disjoint_path_count"] = r.hk->disjoint_path_count;
  j["required_d"] = r.hk->required_d;
  j["hkstar"] = r.hk->holds;
  return j;
}

FixationVerdict is_hkstar_matroid(const OrientedMatroid& m, const QuantifierOptions& options) {
  FixationVerdict verdict;
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
    ElementMask coline;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < minors.size(); ++i)
    for (ElementMask t : colines(minors[i].matroid)) tasks.push_back({i, t});

  std::vector<std::optional<FixationWitness>> found(tasks.size());
  auto first = parallel_first_failure(tasks.size(), options.jobs, [&](std::size_t k) {
    const Minor& minor = minors[tasks[k].minor];
    const OrientedMatroid& n = minor.matroid;
    const ElementMask t = tasks[k].coline;
    ColineFixation base(n, t);
    if (!is_generic_coline(base) || !is_pointed(base)) return false;
    std::set<ElementMask> regions;
    if (options.identity_only) {
      regions.insert(0);
    } else {
      for (const auto& z : n.covectors())
        if (!z.is_zero() && z.zeros() == t) regions.insert(z.minus());
    }
    for (ElementMask r : regions) {
      ColineFixation omega = base.reoriented(r);
      if (!is_proper_fixation(omega)) continue;
      FixationReport rep = analyze_fixation(omega);
      if (!rep.acyclic || !rep.uso)
        throw InternalError("shelling digraph is not an acyclic unique sink orientation");
      if (rep.hk->holds) continue;
      FixationWitness w;
      w.deleted = m.labels_of(minor.spec.deleted);
      w.contracted = m.labels_of(minor.spec.contracted);
      w.reorientation = n.labels_of(r);
      w.coline = n.labels_of(t);
      w.order = rep.order;
      w.report = *rep.hk;
      found[k] = w;
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

nlohmann::json to_json(const FixationVerdict& v) {
  nlohmann::json j;
  j["holds"] = v.holds;
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"deleted", w.deleted},
                    {"contracted", w.contracted},
                    {"reorientation", w.reorientation},
                    {"T", w.coline},
                    {"shelling_order", w.order},
                    {"disjoint_path_count", w.report.disjoint_path_count},
                    {"required_d", w.report.required_d}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace hkom
