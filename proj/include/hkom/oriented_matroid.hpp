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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hkom/chirotope.hpp"
#include "hkom/sign_vector.hpp"

namespace hkom {

class CovectorBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownElement : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr std::size_t kDefaultCovectorBudget = 4'000'000;

/// Oriented matroid given by its full covector set. Element positions are
/// 0..size()-1; `labels()` keeps the 1-based names of the elements in the
/// original ground set so minors can report witnesses in original terms.
class OrientedMatroid {
 public:
  /// Builds from an explicit covector set (the zero vector is added if
  /// missing). Cocircuits, topes, hyperplanes and rank are derived.
  OrientedMatroid(int size, std::vector<SignVector> covectors, std::vector<int> labels = {});

  int size() const { return size_; }
  int rank() const { return rank_; }
  const std::vector<int>& labels() const { return labels_; }
  ElementMask ground() const { return full_mask(size_); }

  /// Sorted by key; includes the zero vector.
  const std::vector<SignVector>& covectors() const { return covectors_; }
  const std::vector<SignVector>& cocircuits() const { return cocircuits_; }
  const std::vector<SignVector>& topes() const { return topes_; }
  /// Distinct zero sets of cocircuits.
  const std::vector<ElementMask>& hyperplanes() const { return hyperplanes_; }

  bool contains(const SignVector& x) const { return index_.count(x.key()) != 0; }

  /// Closure of an element set in the underlying matroid.
  ElementMask closure(ElementMask a) const;
  /// Rank of an element set in the underlying matroid.
  int set_rank(ElementMask a) const;
  /// Height of a covector in the covector lattice, r - rank(X^0).
  int covector_rank(const SignVector& x) const { return rank_ - set_rank(x.zeros()); }

  /// Covectors lying exactly two cocircuits above the bottom (1-cells).
  const std::vector<SignVector>& edge_covectors() const;
  /// covector_rank of every covector, aligned with covectors().
  const std::vector<int>& covector_ranks() const;
  /// Fills the lazy caches. Call before sharing across threads.
  void warm_caches() const {
    edge_covectors();
    covector_ranks();
  }

  ElementMask loops() const;
  ElementMask coloops() const;
  bool is_uniform() const;

  OrientedMatroid reoriented(ElementMask r) const;
  OrientedMatroid deleted(ElementMask a) const;
  OrientedMatroid contracted(ElementMask b) const;

  /// Position of a 1-based label, or throws UnknownElement.
  int position_of(int label) const;
  ElementMask mask_of_labels(const std::vector<int>& one_based) const;
  std::vector<int> labels_of(ElementMask m) const;

  friend bool operator==(const OrientedMatroid& a, const OrientedMatroid& b) {
    return a.size_ == b.size_ && a.covectors_ == b.covectors_;
  }

 private:
  void check_subset(ElementMask m) const;

  int size_;
  int rank_ = 0;
  std::vector<int> labels_;
  std::vector<SignVector> covectors_;
  std::vector<SignVector> cocircuits_;
  std::vector<SignVector> topes_;
  std::vector<ElementMask> hyperplanes_;
  std::unordered_set<std::uint64_t> index_;
  mutable std::optional<std::vector<SignVector>> edges_;
  mutable std::optional<std::vector<int>> ranks_;
};

/// Cocircuits of a chirotope via the (r-1)-subset sweep, closed under
/// negation and deduplicated.
std::vector<SignVector> cocircuits(const Chirotope& chi);

/// Result of checking the cocircuit axioms. `ok` is false when a violation
/// was found; `violation` names the axiom and `witnesses` holds the vectors.
struct AxiomDiagnosis {
  bool ok = true;
  std::string violation;
  std::vector<SignVector> witnesses;
  int element = -1;
};

/// Symmetry, support incomparability and weak elimination.
AxiomDiagnosis validate_cocircuit_axioms(const std::vector<SignVector>& cocircuits);

/// Closure of cocircuits and 0 under composition.
OrientedMatroid covector_span(const std::vector<SignVector>& cocircuits,
                              std::size_t budget = kDefaultCovectorBudget,
                              std::vector<int> labels = {});

/// Shorthand for covector_span(cocircuits(chi)).
OrientedMatroid oriented_matroid(const Chirotope& chi, std::size_t budget = kDefaultCovectorBudget);

/// Zero sets of edge covectors.
std::vector<ElementMask> colines(const OrientedMatroid& m);

/// Length of a longest chain 0 < ... < tope, computed directly on the
/// covector poset. Quadratic; intended for validation.
int lattice_height(const OrientedMatroid& m);

/// Composition and negation closure check over the full covector set.
bool is_closed(const OrientedMatroid& m);

}  // namespace hkom
