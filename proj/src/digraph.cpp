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

#include "hkom/digraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hkom {

Digraph::Digraph(int vertex_count) {
  for (int v = 0; v < vertex_count; ++v) add_vertex(std::to_string(v));
}

Digraph::Digraph(std::vector<std::string> labels) {
  for (auto& l : labels) add_vertex(std::move(l));
}

int Digraph::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  unoriented_.emplace_back();
  return vertex_count() - 1;
}

bool Digraph::has_pair(int u, int v) const {
  if (has_arc(u, v) || has_arc(v, u)) return true;
  const auto& w = unoriented_[u];
  return std::find(w.begin(), w.end(), v) != w.end();
}

void Digraph::add_arc(int from, int to) {
  if (from == to) throw std::invalid_argument("Digraph: self-loop");
  if (from < 0 || to < 0 || from >= vertex_count() || to >= vertex_count())
    throw std::out_of_range("Digraph: vertex out of range");
  if (has_pair(from, to)) throw std::invalid_argument("Digraph: duplicate arc");
  arcs_.emplace_back(from, to);
  out_[from].push_back(to);
  in_[to].push_back(from);
}

void Digraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("Digraph: self-loop");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("Digraph: vertex out of range");
  if (has_pair(u, v)) throw std::invalid_argument("Digraph: duplicate edge");
  edges_.emplace_back(u, v);
  unoriented_[u].push_back(v);
  unoriented_[v].push_back(u);
}

std::optional<int> Digraph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

bool Digraph::has_arc(int from, int to) const {
  const auto& o = out_.at(from);
  return std::find(o.begin(), o.end(), to) != o.end();
}

bool Digraph::is_adjacent(int u, int v) const { return has_pair(u, v); }

Digraph Digraph::reversed() const {
  Digraph r(labels_);
  for (const auto& [a, b] : arcs_) r.add_arc(b, a);
  for (const auto& [a, b] : edges_) r.add_edge(a, b);
  return r;
}

Digraph Digraph::with_arc_flipped(int from, int to) const {
  if (!has_arc(from, to)) throw std::invalid_argument("Digraph: no such arc to flip");
  Digraph r(labels_);
  for (const auto& [a, b] : arcs_) {
    if (a == from && b == to) {
      r.add_arc(to, from);
    } else {
      r.add_arc(a, b);
    }
  }
  for (const auto& [a, b] : edges_) r.add_edge(a, b);
  return r;
}

Digraph Digraph::induced(const std::vector<bool>& keep, std::vector<int>* mapping) const {
  std::vector<int> map(vertex_count(), -1);
  Digraph r;
  for (int v = 0; v < vertex_count(); ++v)
    if (keep.at(v)) map[v] = r.add_vertex(labels_[v]);
  for (const auto& [a, b] : arcs_)
    if (map[a] >= 0 && map[b] >= 0) r.add_arc(map[a], map[b]);
  for (const auto& [a, b] : edges_)
    if (map[a] >= 0 && map[b] >= 0) r.add_edge(map[a], map[b]);
  if (mapping) *mapping = std::move(map);
  return r;
}

SourceSink unique_source_sink(const Digraph& d) {
  SourceSink out;
  int sources = 0;
  int sinks = 0;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.in(v).empty()) {
      ++sources;
      out.source = v;
    }
    if (d.out(v).empty()) {
      ++sinks;
      out.sink = v;
    }
  }
  if (sources != 1) out.source.reset();
  if (sinks != 1) out.sink.reset();
  return out;
}

std::vector<int> find_directed_cycle(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> state(n, 0), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root]) continue;
    // Iterative DFS with explicit edge cursors.
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < d.out(v).size()) {
        int w = d.out(v)[i++];
        if (state[w] == 1) {
          std::vector<int> cycle{w};
          for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

bool is_acyclic(const Digraph& d) { return find_directed_cycle(d).empty(); }

namespace {

// Unit-capacity flow network with residual arcs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(n) {}
  void add(int u, int v, int cap) {
    adj_[u].push_back(static_cast<int>(to_.size()));
    to_.push_back(v);
    cap_.push_back(cap);
    adj_[v].push_back(static_cast<int>(to_.size()));
    to_.push_back(u);
    cap_.push_back(0);
  }
  int max_flow(int s, int t) {
    int flow = 0;
    const int n = static_cast<int>(adj_.size());
    while (true) {
      std::vector<int> via(n, -1);
      std::vector<bool> seen(n, false);
      std::deque<int> queue{s};
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        int u = queue.front();
        queue.pop_front();
        for (int id : adj_[u]) {
          int v = to_[id];
          if (cap_[id] > 0 && !seen[v]) {
            seen[v] = true;
            via[v] = id;
            queue.push_back(v);
          }
        }
      }
      if (!seen[t]) return flow;
      for (int v = t; v != s; v = to_[via[v] ^ 1]) {
        cap_[via[v]] -= 1;
        cap_[via[v] ^ 1] += 1;
      }
      ++flow;
    }
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

}  // namespace

int max_disjoint_paths(const Digraph& d, int s, int t) {
  const int n = d.vertex_count();
  if (s < 0 || t < 0 || s >= n || t >= n) throw std::out_of_range("max_disjoint_paths: vertex");
  if (s == t) throw std::invalid_argument("max_disjoint_paths: s == t");
  // Vertex v splits into in-node 2v and out-node 2v+1.
  const int big = n + 1;
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (const auto& [a, b] : d.arcs()) net.add(2 * a + 1, 2 * b, 1);
  return net.max_flow(2 * s + 1, 2 * t);
}

HoltKleeReport holt_klee(const Digraph& g, int d) {
  HoltKleeReport r;
  r.required_d = d;
  r.non_generic = !g.edges().empty();
  SourceSink ss = unique_source_sink(g);
  r.source = ss.source;
  r.sink = ss.sink;
  if (ss.unique() && *ss.source != *ss.sink)
    r.disjoint_path_count = max_disjoint_paths(g, *ss.source, *ss.sink);
  r.holds = !r.non_generic && ss.unique() && r.disjoint_path_count >= d;
  return r;
}

nlohmann::json to_json(const HoltKleeReport& r, const Digraph& g) {
  nlohmann::json j;
  j["holds"] = r.holds;
  j["source"] = r.source ? nlohmann::json(g.label(*r.source)) : nlohmann::json(nullptr);
  j["sink"] = r.sink ? nlohmann::json(g.label(*r.sink)) : nlohmann::json(nullptr);
  j["disjoint_path_count"] = r.disjoint_path_count;
  j["required_d"] = r.required_d;
  j["non_generic"] = r.non_generic;
  return j;
}

void for_each_acyclic_uso(const UndirectedGraph& g, const std::vector<std::vector<int>>& faces,
                          const std::function<bool(const Digraph&)>& visit) {
  const std::size_t m = g.edges.size();
  if (m >= 31) throw std::invalid_argument("for_each_acyclic_uso: too many edges for exhaustive search");
  // Per face, the indices of edges with both endpoints on it.
  std::vector<std::vector<std::size_t>> face_edges;
  for (const auto& f : faces) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < m; ++i) {
      auto [a, b] = g.edges[i];
      if (std::find(f.begin(), f.end(), a) != f.end() && std::find(f.begin(), f.end(), b) != f.end())
        ids.push_back(i);
    }
    face_edges.push_back(std::move(ids));
  }
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<int> indeg(g.vertex_count), outdeg(g.vertex_count);
  for (std::uint64_t k = 0; k < total; ++k) {
    auto head = [&](std::size_t i) { return (k >> i) & 1 ? g.edges[i].first : g.edges[i].second; };
    auto tail = [&](std::size_t i) { return (k >> i) & 1 ? g.edges[i].second : g.edges[i].first; };
    bool ok = true;
    for (std::size_t f = 0; f < faces.size() && ok; ++f) {
      int sources = 0, sinks = 0;
      for (int v : faces[f]) {
        int in = 0, out = 0;
        for (std::size_t i : face_edges[f]) {
          if (head(i) == v) ++in;
          if (tail(i) == v) ++out;
        }
        sources += in == 0;
        sinks += out == 0;
      }
      ok = sources == 1 && sinks == 1;
    }
    if (!ok) continue;
    std::fill(indeg.begin(), indeg.end(), 0);
    std::fill(outdeg.begin(), outdeg.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      ++indeg[head(i)];
      ++outdeg[tail(i)];
    }
    if (std::count(indeg.begin(), indeg.end(), 0) != 1 || std::count(outdeg.begin(), outdeg.end(), 0) != 1)
      continue;
    Digraph d(g.vertex_count);
    for (std::size_t i = 0; i < m; ++i) d.add_arc(tail(i), head(i));
    if (!is_acyclic(d)) continue;
    if (!visit(d)) return;
  }
}

std::string to_dot(const Digraph& d, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < d.vertex_count(); ++v) os << "  \"" << d.label(v) << "\";\n";
  for (const auto& [a, b] : d.arcs()) os << "  \"" << d.label(a) << "\" -> \"" << d.label(b) << "\";\n";
  for (const auto& [a, b] : d.edges())
    os << "  \"" << d.label(a) << "\" -> \"" << d.label(b) << "\" [dir=none];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const Digraph& d) {
  nlohmann::json j;
  j["vertices"] = d.labels();
  j["arcs"] = nlohmann::json::array();
  for (const auto& [a, b] : d.arcs()) j["arcs"].push_back({d.label(a), d.label(b)});
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : d.edges()) j["edges"].push_back({d.label(a), d.label(b)});
  return j;
}

}  // namespace hkom
