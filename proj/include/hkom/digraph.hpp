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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace hkom {

/// Digraph on vertices 0..n-1 with display labels. Oriented arcs and
/// non-oriented edges are kept in separate lists; neither may repeat or form
/// a self-loop.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count);
  explicit Digraph(std::vector<std::string> labels);

  int add_vertex(std::string label);
  void add_arc(int from, int to);
  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Vertex with the given label, if any.
  std::optional<int> find(const std::string& label) const;

  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& out(int v) const { return out_.at(v); }
  const std::vector<int>& in(int v) const { return in_.at(v); }
  bool has_arc(int from, int to) const;
  bool is_adjacent(int u, int v) const;

  Digraph reversed() const;
  /// Copy with the single arc from->to replaced by to->from.
  Digraph with_arc_flipped(int from, int to) const;
  /// Induced subgraph on `keep` (vertex order preserved). `mapping` receives
  /// old -> new index (-1 when dropped) if non-null.
  Digraph induced(const std::vector<bool>& keep, std::vector<int>* mapping = nullptr) const;

 private:
  bool has_pair(int u, int v) const;

  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> unoriented_;
};

struct SourceSink {
  std::optional<int> source;
  std::optional<int> sink;
  bool unique() const { return source.has_value() && sink.has_value(); }
};

/// Unique vertex of in-degree 0 and unique vertex of out-degree 0 among
/// oriented arcs; absent when none or several.
SourceSink unique_source_sink(const Digraph& d);

/// True iff the oriented arcs contain no directed cycle.
bool is_acyclic(const Digraph& d);

/// A directed cycle as a vertex sequence, empty when acyclic.
std::vector<int> find_directed_cycle(const Digraph& d);

/// Maximum number of s->t dipaths pairwise sharing no internal vertex.
int max_disjoint_paths(const Digraph& d, int s, int t);

struct HoltKleeReport {
  bool holds = false;
  std::optional<int> source;
  std::optional<int> sink;
  int disjoint_path_count = 0;
  int required_d = 0;
  bool non_generic = false;
};

/// Unique source, unique sink, and at least `d` internally disjoint dipaths
/// between them. Fails outright when non-oriented edges are present.
HoltKleeReport holt_klee(const Digraph& g, int d);

nlohmann::json to_json(const HoltKleeReport& r, const Digraph& g);

struct UndirectedGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Calls `visit` for every orientation of `g` that is acyclic, has a unique
/// source and sink, and induces a unique source and sink on every listed
/// face (given as vertex sets). Orientation k orients edge i as listed when
/// bit i of k is 0 and reversed otherwise; visits are in increasing k.
/// Returning false from `visit` stops the enumeration.
void for_each_acyclic_uso(const UndirectedGraph& g, const std::vector<std::vector<int>>& faces,
                          const std::function<bool(const Digraph&)>& visit);

/// Graphviz rendering; non-oriented edges are drawn with dir=none.
std::string to_dot(const Digraph& d, const std::string& name = "G");
/// {"vertices": [...], "arcs": [[u,v],...], "edges": [[u,v],...]} by label.
nlohmann::json to_json(const Digraph& d);

}  // namespace hkom
