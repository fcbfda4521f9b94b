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

#include "hkom/oriented_matroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace hkom {

namespace {

std::vector<SignVector> sorted_unique(std::vector<SignVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

OrientedMatroid::OrientedMatroid(int size, std::vector<SignVector> covectors, std::vector<int> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size < 0 || size > kMaxElements) throw std::invalid_argument("OrientedMatroid: bad size");
  if (labels_.empty()) {
    labels_.resize(size);
    std::iota(labels_.begin(), labels_.end(), 1);
  }
  if (static_cast<int>(labels_.size()) != size) throw std::invalid_argument("OrientedMatroid: label count");
  for (const auto& x : covectors)
    if (x.size() != size) throw SizeMismatch("OrientedMatroid: covector length mismatch");
  covectors.emplace_back(size);
  covectors_ = sorted_unique(std::move(covectors));
  index_.reserve(covectors_.size() * 2);
  for (const auto& x : covectors_) index_.insert(x.key());

  // Cocircuits are the nonzero covectors whose zero set is maximal.
  std::vector<ElementMask> zero_sets;
  for (const auto& x : covectors_)
    if (!x.is_zero()) zero_sets.push_back(x.zeros());
  std::sort(zero_sets.begin(), zero_sets.end());
  zero_sets.erase(std::unique(zero_sets.begin(), zero_sets.end()), zero_sets.end());
  for (ElementMask z : zero_sets) {
    bool maximal = true;
    for (ElementMask other : zero_sets) {
      if (other != z && (z & ~other) == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) hyperplanes_.push_back(z);
  }
  std::unordered_set<ElementMask> hyper(hyperplanes_.begin(), hyperplanes_.end());
  ElementMask max_support = 0;
  for (const auto& x : covectors_) {
    if (!x.is_zero() && hyper.count(x.zeros())) cocircuits_.push_back(x);
    max_support |= x.support();
  }
  for (const auto& x : covectors_)
    if (x.support() == max_support && !x.is_zero()) topes_.push_back(x);
  rank_ = set_rank(ground());
}

ElementMask OrientedMatroid::closure(ElementMask a) const {
  ElementMask cl = ground();
  for (ElementMask h : hyperplanes_)
    if ((a & ~h) == 0) cl &= h;
  return cl;
}

int OrientedMatroid::set_rank(ElementMask a) const {
  ElementMask independent = 0;
  ElementMask span = closure(0);
  int r = 0;
  for (int e : mask_elements(a & ground())) {
    if (span & bit(e)) continue;
    independent |= bit(e);
    span = closure(independent);
    ++r;
  }
  return r;
}

const std::vector<int>& OrientedMatroid::covector_ranks() const {
  if (!ranks_) {
    std::unordered_map<ElementMask, int> by_zeros;
    std::vector<int> ranks;
    ranks.reserve(covectors_.size());
    for (const auto& x : covectors_) {
      auto [it, fresh] = by_zeros.try_emplace(x.zeros(), 0);
      if (fresh) it->second = covector_rank(x);
      ranks.push_back(it->second);
    }
    ranks_ = std::move(ranks);
  }
  return *ranks_;
}

const std::vector<SignVector>& OrientedMatroid::edge_covectors() const {
  if (!edges_) {
    std::vector<SignVector> edges;
    if (rank_ >= 2) {
      const auto& ranks = covector_ranks();
      for (std::size_t i = 0; i < covectors_.size(); ++i) {
        const auto& x = covectors_[i];
        if (x.is_zero() || ranks[i] != 2) continue;
        int below = 0;
        for (const auto& c : cocircuits_)
          if (conforms_unchecked(c, x)) ++below;
        if (below == 2) edges.push_back(x);
      }
    }
    edges_ = std::move(edges);
  }
  return *edges_;
}

ElementMask OrientedMatroid::loops() const {
  ElementMask support = 0;
  for (const auto& x : covectors_) support |= x.support();
  return ground() & ~support;
}

ElementMask OrientedMatroid::coloops() const {
  ElementMask out = 0;
  for (const auto& c : cocircuits_)
    if (popcount(c.support()) == 1) out |= c.support();
  return out;
}

bool OrientedMatroid::is_uniform() const {
  for (const auto& c : cocircuits_)
    if (popcount(c.zeros()) != rank_ - 1) return false;
  return true;
}

void OrientedMatroid::check_subset(ElementMask m) const {
  if ((m & ~ground()) != 0) throw UnknownElement("element outside the ground set");
}

OrientedMatroid OrientedMatroid::reoriented(ElementMask r) const {
  check_subset(r);
  std::vector<SignVector> out;
  out.reserve(covectors_.size());
  for (const auto& x : covectors_) out.push_back(x.reoriented(r));
  return OrientedMatroid(size_, std::move(out), labels_);
}

OrientedMatroid OrientedMatroid::deleted(ElementMask a) const {
  check_subset(a);
  ElementMask keep = ground() & ~a;
  std::vector<SignVector> out;
  out.reserve(covectors_.size());
  for (const auto& x : covectors_) out.push_back(x.restricted(keep));
  std::vector<int> labels;
  for (int e : mask_elements(keep)) labels.push_back(labels_[e]);
  return OrientedMatroid(popcount(keep), std::move(out), std::move(labels));
}

OrientedMatroid OrientedMatroid::contracted(ElementMask b) const {
  check_subset(b);
  ElementMask keep = ground() & ~b;
  std::vector<SignVector> out;
  for (const auto& x : covectors_)
    if ((x.support() & b) == 0) out.push_back(x.restricted(keep));
  std::vector<int> labels;
  for (int e : mask_elements(keep)) labels.push_back(labels_[e]);
  return OrientedMatroid(popcount(keep), std::move(out), std::move(labels));
}

int OrientedMatroid::position_of(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownElement("unknown element " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

ElementMask OrientedMatroid::mask_of_labels(const std::vector<int>& one_based) const {
  ElementMask m = 0;
  for (int l : one_based) m |= bit(position_of(l));
  return m;
}

std::vector<int> OrientedMatroid::labels_of(ElementMask m) const {
  std::vector<int> out;
  for (int e : mask_elements(m & ground())) out.push_back(labels_[e]);
  return out;
}

std::vector<SignVector> cocircuits(const Chirotope& chi) {
  const int n = chi.size();
  const int r = chi.rank();
  std::vector<SignVector> out;
  std::vector<int> tuple(r);
  const std::int64_t count = binomial(n, r - 1);
  for (std::int64_t i = 0; i < count; ++i) {
    std::vector<int> s = colex_unrank(i, r - 1);
    ElementMask in_s = mask_of(s);
    std::copy(s.begin(), s.end(), tuple.begin());
    SignVector c(n);
    for (int f = 0; f < n; ++f) {
      if (in_s & bit(f)) continue;
      tuple[r - 1] = f;
      c.set(f, chi(tuple));
    }
    if (c.is_zero()) continue;
    out.push_back(c.canonical());
  }
  out = sorted_unique(std::move(out));
  std::vector<SignVector> both;
  both.reserve(out.size() * 2);
  for (const auto& c : out) {
    both.push_back(c);
    both.push_back(-c);
  }
  return sorted_unique(std::move(both));
}

AxiomDiagnosis validate_cocircuit_axioms(const std::vector<SignVector>& cocircuits) {
  AxiomDiagnosis d;
  if (cocircuits.empty()) return d;
  const int n = cocircuits.front().size();
  std::unordered_set<std::uint64_t> set;
  for (const auto& c : cocircuits) {
    if (c.size() != n) {
      return {false, "length", {c}, -1};
    }
    if (c.is_zero()) return {false, "nonzero", {c}, -1};
    set.insert(c.key());
  }
  for (const auto& c : cocircuits)
    if (!set.count((-c).key())) return {false, "symmetry", {c}, -1};
  for (const auto& x : cocircuits) {
    for (const auto& y : cocircuits) {
      if ((x.support() & ~y.support()) == 0 && !(x == y) && !(x == -y))
        return {false, "incomparability", {x, y}, -1};
    }
  }
  // Bucket by zero positions for the elimination search.
  std::vector<std::vector<SignVector>> zero_at(n);
  for (const auto& c : cocircuits)
    for (int e : mask_elements(c.zeros())) zero_at[e].push_back(c);
  for (const auto& x : cocircuits) {
    for (const auto& y : cocircuits) {
      if (x == -y) continue;
      ElementMask sep = x.plus() & y.minus();
      if (sep == 0) continue;
      ElementMask allowed_plus = x.plus() | y.plus();
      ElementMask allowed_minus = x.minus() | y.minus();
      for (int e : mask_elements(sep)) {
        bool found = false;
        for (const auto& z : zero_at[e]) {
          if ((z.plus() & ~allowed_plus) == 0 && (z.minus() & ~allowed_minus) == 0) {
            found = true;
            break;
          }
        }
        if (!found) return {false, "elimination", {x, y}, e};
      }
    }
  }
  return d;
}

OrientedMatroid covector_span(const std::vector<SignVector>& cocircuits, std::size_t budget,
                              std::vector<int> labels) {
  if (cocircuits.empty()) throw std::invalid_argument("covector_span: no cocircuits");
  const int n = cocircuits.front().size();
  std::unordered_set<std::uint64_t> seen;
  std::vector<SignVector> all;
  seen.insert(SignVector(n).key());
  all.emplace_back(n);
  std::vector<SignVector> frontier;
  for (const auto& c : cocircuits) {
    if (c.size() != n) throw SizeMismatch("covector_span: ragged cocircuits");
    if (seen.insert(c.key()).second) {
      all.push_back(c);
      frontier.push_back(c);
    }
  }
  while (!frontier.empty()) {
    std::vector<SignVector> next;
    for (const auto& x : frontier) {
      for (const auto& c : cocircuits) {
        SignVector y = compose_unchecked(x, c);
        if (y.support() == x.support()) continue;
        if (seen.insert(y.key()).second) {
          all.push_back(y);
          next.push_back(y);
          if (all.size() > budget)
            throw CovectorBudgetExceeded("covector_span: more than " + std::to_string(budget) +
                                         " covectors");
        }
      }
    }
    frontier = std::move(next);
  }
  return OrientedMatroid(n, std::move(all), std::move(labels));
}

OrientedMatroid oriented_matroid(const Chirotope& chi, std::size_t budget) {
  return covector_span(cocircuits(chi), budget);
}

std::vector<ElementMask> colines(const OrientedMatroid& m) {
  std::vector<ElementMask> out;
  for (const auto& z : m.edge_covectors()) out.push_back(z.zeros());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int lattice_height(const OrientedMatroid& m) {
  std::vector<SignVector> order = m.covectors();
  std::stable_sort(order.begin(), order.end(), [](const SignVector& a, const SignVector& b) {
    return popcount(a.support()) < popcount(b.support());
  });
  std::vector<int> height(order.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (popcount(order[j].support()) < popcount(order[i].support()) &&
          conforms_unchecked(order[j], order[i]))
        height[i] = std::max(height[i], height[j] + 1);
    }
    best = std::max(best, height[i]);
  }
  return best;
}

bool is_closed(const OrientedMatroid& m) {
  for (const auto& x : m.covectors()) {
    if (!m.contains(-x)) return false;
    for (const auto& y : m.covectors())
      if (!m.contains(compose_unchecked(x, y))) return false;
  }
  return true;
}

}  // namespace hkom
