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

#include "hkom/classify.hpp"

#include <chrono>
#include <mutex>
#include <sstream>

#include "hkom/chirotope.hpp"
#include "hkom/fixation.hpp"
#include "hkom/parallel.hpp"
#include "hkom/program.hpp"

namespace hkom {

int simplicial_tope_count(const OrientedMatroid& m) {
  const auto& cov = m.covectors();
  const auto& ranks = m.covector_ranks();
  std::vector<const SignVector*> subtopes;
  for (std::size_t i = 0; i < cov.size(); ++i)
    if (ranks[i] == m.rank() - 1) subtopes.push_back(&cov[i]);
  int count = 0;
  for (const auto& w : m.topes()) {
    int facets = 0;
    for (const SignVector* y : subtopes)
      if (conforms_unchecked(*y, w)) ++facets;
    if (facets == m.rank()) ++count;
  }
  return count;
}

bool is_shannon(const OrientedMatroid& m) { return simplicial_tope_count(m) >= 2 * m.size(); }

ClassificationReport classify_one(const CatalogEntry& entry, Mode mode, int jobs) {
  ClassificationReport rep;
  rep.id = entry.id;
  const auto start = std::chrono::steady_clock::now();
  try {
    Chirotope chi = Chirotope::parse(entry.text);
    rep.n = chi.size();
    rep.r = chi.rank();
    rep.uniform = chi.is_uniform();
    auto cc = cocircuits(chi);
    AxiomDiagnosis diag = validate_cocircuit_axioms(cc);
    if (!diag.ok) throw ParseError("not an oriented matroid: " + diag.violation);
    OrientedMatroid m = covector_span(cc);
    m.warm_caches();
    QuantifierOptions q{jobs, mode == Mode::Quick};
    MatroidVerdict hk = is_hk_matroid(m, q);
    FixationVerdict hkstar = is_hkstar_matroid(m, q);
    MatroidVerdict euclid = is_euclidean_matroid(m, jobs);
    rep.hk = hk.holds;
    rep.hkstar = hkstar.holds;
    rep.euclidean = euclid.holds;
    rep.simplicial_tope_count = simplicial_tope_count(m);
    rep.shannon = rep.simplicial_tope_count >= 2 * rep.n;
    if (!hk.holds) rep.witnesses["hk"] = to_json(hk)["witness"];
    if (!hkstar.holds) rep.witnesses["hkstar"] = to_json(hkstar)["witness"];
    if (!euclid.holds) rep.witnesses["euclidean"] = to_json(euclid)["witness"];
  } catch (const std::exception& e) {
    rep.error = entry.id + ": " + e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::optional<CatalogEntry> parse_catalog_line(const std::string& line, std::size_t line_no, std::string* why) {
  std::istringstream in(line);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  auto fail = [&](const std::string& msg) -> std::optional<CatalogEntry> {
    if (why) *why = msg;
    return std::nullopt;
  };
  auto is_int = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  CatalogEntry e;
  e.line = line_no;
  std::size_t first = 0;
  if (tok.size() == 4) {
    e.id = tok[0];
    first = 1;
  } else if (tok.size() == 3) {
    e.id = "line" + std::to_string(line_no);
  } else {
    return fail("expected \"[tag ]n r signs\", got " + std::to_string(tok.size()) + " fields");
  }
  if (!is_int(tok[first]) || !is_int(tok[first + 1])) return fail("n and r must be integers");
  e.text = tok[first] + " " + tok[first + 1] + " " + tok[first + 2];
  try {
    Chirotope::parse(e.text);
  } catch (const std::exception& ex) {
    return fail(ex.what());
  }
  return e;
}

CatalogReader::CatalogReader(const std::string& path) : in_(path) {
  if (!in_) throw std::runtime_error("cannot open catalog " + path);
}

std::optional<CatalogEntry> CatalogReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::string why;
    if (auto e = parse_catalog_line(line, line_, &why)) return e;
    diagnostics_.push_back({line_, why});
  }
  return std::nullopt;
}

std::vector<CatalogEntry> ingest_catalog(const std::string& path, std::vector<CatalogDiagnostic>* diagnostics) {
  CatalogReader reader(path);
  std::vector<CatalogEntry> out;
  while (auto e = reader.next()) out.push_back(std::move(*e));
  if (diagnostics) *diagnostics = reader.diagnostics();
  return out;
}

Aggregate aggregate(const std::vector<ClassificationReport>& rows) {
  Aggregate a;
  for (const auto& r : rows) {
    ++a.total;
    if (r.error) {
      ++a.errors;
      continue;
    }
    a.uniform += r.uniform;
    a.non_hk += !r.hk;
    a.non_hkstar += !r.hkstar;
    a.non_euclidean += !r.euclidean;
    a.non_shannon += !r.shannon;
    if ((!r.shannon && r.hkstar) || (!r.hkstar && r.euclidean)) a.containments_hold = false;
  }
  return a;
}

nlohmann::json to_json(const ClassificationReport& r, bool timing) {
  nlohmann::json j = {{"id", r.id},
                      {"n", r.n},
                      {"r", r.r},
                      {"uniform", r.uniform},
                      {"hk", r.hk},
                      {"hkstar", r.hkstar},
                      {"euclidean", r.euclidean},
                      {"shannon", r.shannon},
                      {"simplicial_topes", r.simplicial_tope_count},
                      {"witnesses", r.witnesses}};
  if (r.error) j["error"] = *r.error;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

ClassificationReport report_from_json(const nlohmann::json& j) {
  ClassificationReport r;
  r.id = j.at("id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.r = j.at("r").get<int>();
  r.uniform = j.at("uniform").get<bool>();
  r.hk = j.at("hk").get<bool>();
  r.hkstar = j.at("hkstar").get<bool>();
  r.euclidean = j.at("euclidean").get<bool>();
  r.shannon = j.at("shannon").get<bool>();
  r.simplicial_tope_count = j.at("simplicial_topes").get<int>();
  r.witnesses = j.value("witnesses", nlohmann::json::object());
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  r.seconds = j.value("seconds", 0.0);
  return r;
}

nlohmann::json to_json(const Aggregate& a) {
  return {{"total", a.total},
          {"errors", a.errors},
          {"uniform", a.uniform},
          {"non_hk", a.non_hk},
          {"non_hkstar", a.non_hkstar},
          {"non_euclidean", a.non_euclidean},
          {"non_shannon", a.non_shannon},
          {"containments_hold", a.containments_hold}};
}

BatchResult batch_classify(const std::vector<CatalogEntry>& entries, const BatchOptions& options) {
  BatchResult result;
  std::vector<std::optional<ClassificationReport>> rows(entries.size());

  if (!options.checkpoint.empty()) {
    std::ifstream in(options.checkpoint);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      // A torn last line from an interrupted run is ignored.
      if (j.is_discarded() || !j.contains("index")) continue;
      const auto i = j["index"].get<std::size_t>();
      if (i < rows.size() && entries[i].id == j["row"].value("id", "") && !rows[i]) {
        rows[i] = report_from_json(j["row"]);
        ++result.resumed;
      }
    }
  }

  std::ofstream ckpt;
  if (!options.checkpoint.empty()) {
    ckpt.open(options.checkpoint, std::ios::app);
    if (!ckpt) throw std::runtime_error("cannot write checkpoint " + options.checkpoint);
  }
  std::mutex mu;
  std::size_t pending = 0;
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!rows[i]) todo.push_back(i);

  parallel_for(todo.size(), options.jobs, [&](std::size_t k) {
    const std::size_t i = todo[k];
    ClassificationReport rep = classify_one(entries[i], options.mode);
    std::lock_guard<std::mutex> lock(mu);
    if (ckpt.is_open()) {
      ckpt << nlohmann::json{{"index", i}, {"row", to_json(rep, true)}}.dump() << '\n';
      if (++pending >= options.checkpoint_every) {
        ckpt.flush();
        pending = 0;
      }
    }
    rows[i] = std::move(rep);
  });
  if (ckpt.is_open()) ckpt.flush();

  result.rows.reserve(rows.size());
  for (auto& r : rows) result.rows.push_back(std::move(*r));
  result.totals = aggregate(result.rows);
  return result;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* b(bool x) { return x ? "true" : "false"; }

}  // namespace

void write_csv(std::ostream& out, const std::vector<ClassificationReport>& rows) {
  out << "id,n,r,uniform,hk,hkstar,euclidean,shannon,simplicial_topes,witness\n";
  for (const auto& r : rows) {
    std::string witness = r.error ? "error: " + *r.error : (r.witnesses.empty() ? "" : r.witnesses.dump());
    out << csv_field(r.id) << ',' << r.n << ',' << r.r << ',' << b(r.uniform) << ',' << b(r.hk) << ','
        << b(r.hkstar) << ',' << b(r.euclidean) << ',' << b(r.shannon) << ',' << r.simplicial_tope_count << ','
        << csv_field(witness) << '\n';
  }
}

void write_json(std::ostream& out, const BatchResult& result, bool timing) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : result.rows) rows.push_back(to_json(r, timing));
  out << nlohmann::json{{"rows", rows}, {"aggregate", to_json(result.totals)}}.dump(2) << '\n';
}

}  // namespace hkom
