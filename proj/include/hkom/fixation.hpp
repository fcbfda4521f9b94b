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

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "hkom/digraph.hpp"
#include "hkom/oriented_matroid.hpp"
#include "hkom/program.hpp"

namespace hkom {

class NotAColine : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ImproperFixation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShellingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixationIndex;

/// Coline fixation (M, T), optionally viewed through a reorientation R of
/// E\T: the supercell is then {X : X_e in {0, -} for e in R, {0, +} for the
/// rest of E\T}. The matroid is borrowed.
class ColineFixation {
 public:
  /// Throws NotAColine unless T is the zero set of an edge covector.
  ColineFixation(const OrientedMatroid& m, ElementMask coline, ElementMask reorientation = 0);

  const OrientedMatroid& matroid() const { return *m_; }
  ElementMask coline() const { return t_; }
  ElementMask reorientation() const { return r_; }
  /// Same (M, T) with another reorientation; shares the index.
  ColineFixation reoriented(ElementMask reorientation) const;

  /// Target sign pattern on E\T (zero on T).
  SignVector pattern() const;
  const FixationIndex& index() const { return *index_; }

 private:
  ColineFixation(const OrientedMatroid& m, ElementMask t, ElementMask r, std::shared_ptr<const FixationIndex> idx);

  const OrientedMatroid* m_;
  ElementMask t_;
  ElementMask r_;
  std::shared_ptr<const FixationIndex> index_;
};

std::vector<SignVector> supercell(const ColineFixation& omega);
bool is_generic_coline(const ColineFixation& omega);
/// E\T has full rank, so the supercell is a pointed cone (dual to a
/// polytope of dimension r - 1) rather than a cell with lineality.
bool is_pointed(const ColineFixation& omega);
bool has_interior_point(const ColineFixation& omega);
/// P_omega(f) contains a covector of rank r-1.
bool is_facet(const ColineFixation& omega, int f);
bool is_proper_fixation(const ColineFixation& omega);

struct ColineShelling {
  std::vector<int> order;           // positions e_1..e_s
  std::vector<SignVector> witnesses;  // V^1..V^s in the reoriented view
};

/// Staircase order, starting from the smaller-labelled of its two possible
/// ends. Only genericity of T is needed. Throws ImproperFixation when T is
/// not generic and ShellingError when no staircase exists.
ColineShelling coline_shelling(const ColineFixation& omega);

/// A covector vanishes on e_i and e_j and agrees with the pattern on the rest
/// of E\T.
bool facet_adjacency(const ColineFixation& omega, int ei, int ej);

/// Vertices are element labels in shelling order; arcs go from earlier to
/// later adjacent facets. Throws ImproperFixation.
Digraph shelling_digraph(const ColineFixation& omega);

/// holt_klee(SG, r - 1). Throws ImproperFixation.
HoltKleeReport is_hkstar_fixation(const ColineFixation& omega);

struct FixationReport {
  bool generic = false;
  bool pointed = false;
  bool interior = false;
  bool facets = false;
  bool proper = false;
  std::vector<int> order;  // labels
  std::optional<Digraph> digraph;
  std::optional<HoltKleeReport> hk;
  bool acyclic = false;
  bool uso = false;
};

FixationReport analyze_fixation(const ColineFixation& omega);

/// {T, reorientation, proper, shelling_order, arcs, source, sink,
/// disjoint_path_count, required_d, hkstar}; elements by label.
nlohmann::json to_json(const FixationReport& r, const ColineFixation& omega);

struct FixationWitness {
  std::vector<int> deleted;
  std::vector<int> contracted;
  std::vector<int> reorientation;
  std::vector<int> coline;
  std::vector<int> order;
  HoltKleeReport report;
};

struct FixationVerdict {
  bool holds = true;
  std::optional<FixationWitness> witness;
};

/// Every proper coline fixation of every reorientation of every minor of
/// rank >= 4 is HK*.
FixationVerdict is_hkstar_matroid(const OrientedMatroid& m, const QuantifierOptions& options = {});

nlohmann::json to_json(const FixationVerdict& v);

}  // namespace hkom
