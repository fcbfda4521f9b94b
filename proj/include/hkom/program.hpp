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
#include <vector>

#include <nlohmann/json.hpp>

#include "hkom/digraph.hpp"
#include "hkom/oriented_matroid.hpp"

namespace hkom {

class InvalidProgram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ImproperProgram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Program (M, g, f) on element positions of M. g is the element at
/// infinity, f the objective. The matroid is borrowed and must outlive the
/// program.
class Program {
 public:
  /// Throws InvalidProgram if g == f, g is a loop or f is a coloop.
  Program(const OrientedMatroid& m, int g, int f);

  const OrientedMatroid& matroid() const { return *m_; }
  int g() const { return g_; }
  int f() const { return f_; }

 private:
  const OrientedMatroid* m_;
  int g_;
  int f_;
};

/// Cell of G_pi between vertices u and v; direction is +1 for u->v, -1 for
/// v->u and 0 when non-oriented.
struct ProgramLink {
  int u = 0;
  int v = 0;
  SignVector covector;
  int direction = 0;
};

/// OMP graph G_pi. Vertices are the cocircuits of M\f with g = +; their
/// f-entry holds the unique lift to a covector of M.
struct ProgramGraph {
  int g = 0;
  int f = 0;
  std::vector<SignVector> vertices;
  std::vector<ProgramLink> links;

  Digraph full() const;
  /// G_pi^+ of the program reoriented on `reorientation` (which must avoid
  /// g and f).
  Digraph feasible(ElementMask reorientation = 0) const;
  bool is_feasible(const SignVector& x, ElementMask reorientation = 0) const;
};

std::vector<SignVector> feasible_region(const Program& pi);
/// False iff P_pi is nonempty and a nonzero covector with X_g = 0 lies in
/// its closure.
bool is_bounded(const Program& pi);
ProgramGraph program_graph(const Program& pi);
bool is_generic_objective(const Program& pi);
bool is_proper_program(const Program& pi);
/// Throws ImproperProgram unless is_proper_program(pi).
HoltKleeReport is_hk_program(const Program& pi);
bool is_euclidean_program(const Program& pi);

struct ProgramReport {
  int g = 0;
  int f = 0;
  ElementMask reorientation = 0;
  bool nonempty = false;
  bool full_dimensional = false;
  bool bounded = false;
  bool generic = false;
  bool proper = false;
  std::optional<HoltKleeReport> hk;  // set when proper
  bool uso_anomaly = false;          // proper but G_pi^+ lacks a unique source or sink
  bool euclidean = false;
};

/// Report for the program reoriented on `reorientation` (must avoid g and
/// f), computed without rebuilding the matroid.
ProgramReport analyze_program(const Program& pi, ElementMask reorientation = 0);
/// {g, f, proper, bounded, generic, hk, euclidean}; elements by label.
nlohmann::json to_json(const ProgramReport& r, const OrientedMatroid& m, const ProgramGraph& graph);

struct QuantifierOptions {
  int jobs = 1;
  /// Only the matroid itself, unreoriented.
  bool identity_only = false;
};

/// Failing program found by a matroid-level search. Element lists are labels
/// of the input matroid.
struct ProgramWitness {
  std::vector<int> deleted;
  std::vector<int> contracted;
  std::vector<int> reorientation;
  int g = 0;
  int f = 0;
  HoltKleeReport report;
  std::vector<std::string> cycle;  // Euclidean failures only
};

struct MatroidVerdict {
  bool holds = true;
  std::optional<ProgramWitness> witness;
};

/// Every proper program over every minor of rank >= 4 and every
/// reorientation satisfies the Holt-Klee condition with d = rank - 1.
MatroidVerdict is_hk_matroid(const OrientedMatroid& m, const QuantifierOptions& options = {});
/// G_pi is acyclic for every ordered pair (g, f).
MatroidVerdict is_euclidean_matroid(const OrientedMatroid& m, int jobs = 1);

nlohmann::json to_json(const MatroidVerdict& v);

}  // namespace hkom
