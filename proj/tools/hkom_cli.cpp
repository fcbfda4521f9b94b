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

// Command-line front end. Exit codes: 0 success, 1 property fails,
// 2 input error, 3 internal verification failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hkom/chirotope.hpp"
#include "hkom/classify.hpp"
#include "hkom/fixation.hpp"
#include "hkom/geomlab.hpp"
#include "hkom/program.hpp"

using namespace hkom;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFails = 1, kInput = 2, kInternal = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool plain = false;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(json j) const {
    if (timing) j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!plain) {
      std::cout << j.dump(2) << '\n';
      return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
};

OrientedMatroid load_matroid(const std::string& path) {
  if (!std::filesystem::exists(path)) throw InputError("no such file: " + path);
  Chirotope chi = [&] {
    try {
      return read_chirotope_file(path);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }();
  auto cc = cocircuits(chi);
  if (cc.empty()) throw InputError("chirotope has no bases");
  AxiomDiagnosis d = validate_cocircuit_axioms(cc);
  if (!d.ok) throw InputError("not an oriented matroid: " + d.violation);
  return covector_span(cc);
}

ElementMask mask_or_throw(const OrientedMatroid& m, const std::vector<int>& labels) {
  try {
    return m.mask_of_labels(labels);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

void write_dot(const std::string& path, const Digraph& d, const std::string& name) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << to_dot(d, name);
}

int cmd_validate(const std::string& file, const Output& out) {
  if (!std::filesystem::exists(file)) throw InputError("no such file: " + file);
  Chirotope chi = [&] {
    try {
      return read_chirotope_file(file);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }();
  auto cc = cocircuits(chi);
  if (cc.empty()) throw InputError("chirotope has no bases");
  AxiomDiagnosis d = validate_cocircuit_axioms(cc);
  json j{{"n", chi.size()}, {"r", chi.rank()}, {"uniform", chi.is_uniform()}, {"axioms", d.ok}};
  if (!d.ok) {
    j["violation"] = d.violation;
    out.emit(j);
    return kFails;
  }
  OrientedMatroid m = covector_span(cc);
  j["cocircuits"] = m.cocircuits().size();
  j["topes"] = m.topes().size();
  j["covectors"] = m.covectors().size();
  out.emit(j);
  return kOk;
}

int cmd_program(const std::string& file, int g, int f, const std::vector<int>& reorient, const std::string& dot,
                const Output& out) {
  OrientedMatroid m = load_matroid(file);
  int gp = 0, fp = 0;
  try {
    gp = m.position_of(g);
    fp = m.position_of(f);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  std::optional<Program> pi;
  try {
    pi.emplace(m, gp, fp);
  } catch (const InvalidProgram& e) {
    throw InputError(e.what());
  }
  const ElementMask r = mask_or_throw(m, reorient);
  if (r & (bit(gp) | bit(fp))) throw InputError("reorientation must avoid g and f");
  ProgramReport rep = analyze_program(*pi, r);
  ProgramGraph graph = program_graph(*pi);
  json j = to_json(rep, m, graph);
  j["reorientation"] = reorient;
  if (!rep.proper) {
    std::string reason = !rep.nonempty ? "feasible region is empty"
                         : !rep.full_dimensional ? "feasible region is not full-dimensional"
                         : !rep.bounded ? "program is unbounded"
                                        : "objective is not generic";
    j["reason"] = reason;
  }
  write_dot(dot, graph.feasible(r), "program");
  out.emit(j);
  if (rep.uso_anomaly) return kInternal;
  return rep.proper && rep.hk && rep.hk->holds ? kOk : kFails;
}

int cmd_shelling(const std::string& file, const std::vector<int>& coline, const std::vector<int>& reorient,
                 const std::string& dot, const Output& out) {
  OrientedMatroid m = load_matroid(file);
  const ElementMask t = mask_or_throw(m, coline);
  const ElementMask r = mask_or_throw(m, reorient);
  std::optional<ColineFixation> omega;
  try {
    omega.emplace(m, t, r);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  FixationReport rep = analyze_fixation(*omega);
  json j = to_json(rep, *omega);
  if (!rep.proper && rep.generic) {
    try {
      std::vector<int> order;
      for (int e : coline_shelling(*omega).order) order.push_back(m.labels()[e]);
      j["shelling_order"] = order;
    } catch (const ShellingError& e) {
      j["shelling_error"] = e.what();
    }
  }
  if (rep.digraph) write_dot(dot, *rep.digraph, "shelling");
  out.emit(j);
  if (rep.proper && (!rep.acyclic || !rep.uso)) return kInternal;
  return rep.proper && rep.hk->holds ? kOk : kFails;
}

std::string resolve_catalog(const std::string& path) {
  if (std::filesystem::exists(path)) return path;
  if (const char* dir = std::getenv("OM_CATALOG_DIR")) {
    auto p = std::filesystem::path(dir) / path;
    if (std::filesystem::exists(p)) return p.string();
  }
  throw InputError("no such catalog: " + path);
}

int cmd_classify(const std::string& catalog, const std::string& mode, int jobs, const std::string& out_file,
                 const std::string& checkpoint, const Output& out) {
  const std::string path = resolve_catalog(catalog);
  std::vector<CatalogDiagnostic> diag;
  auto entries = ingest_catalog(path, &diag);
  for (const auto& d : diag) std::cerr << path << ":" << d.line << ": " << d.message << '\n';
  BatchOptions opt;
  opt.mode = mode == "full" ? Mode::Full : Mode::Quick;
  opt.jobs = jobs;
  opt.checkpoint = checkpoint;
  BatchResult res = batch_classify(entries, opt);
  for (const auto& r : res.rows)
    if (r.error) std::cerr << *r.error << '\n';
  json summary = to_json(res.totals);
  summary["catalog"] = path;
  summary["mode"] = mode;
  summary["skipped_lines"] = diag.size();
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw InputError("cannot write " + out_file);
    if (std::filesystem::path(out_file).extension() == ".json")
      write_json(f, res, out.timing);
    else
      write_csv(f, res.rows);
    out.emit(summary);
  } else if (out.plain) {
    write_csv(std::cout, res.rows);
  } else {
    write_json(std::cout, res, out.timing);
  }
  return res.totals.errors || !diag.empty() ? kInput : kOk;
}

int cmd_construct(int r, int n, const std::string& out_file, const Output& out) {
  if (r < 4 || n < 2 * r) throw InputError("construct requires rank >= 4 and size >= 2 * rank");
  NonHKStarCertificate c = build_non_hkstar(r, n);
  json j = to_json(c);
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw InputError("cannot write " + out_file);
    f << j.dump(2) << '\n';
  }
  out.emit(j);
  return kOk;
}

int cmd_sensitive(int k, const Output& out) {
  if (k < 4) throw InputError("a 3-polytope has at least 4 vertices");
  json found = json::array();
  json searched = json::array();
  if (k <= 6) {
    auto list = k == 6 ? six_vertex_catalog() : small_polytopes();
    for (const auto& np : list) {
      if (static_cast<int>(np.polytope.vertices.size()) != k) continue;
      const int combinatorial = count_sensitive_orientations(np.polytope);
      auto g = find_sensitive_objective(np.polytope);
      searched.push_back({{"polytope", np.name}, {"sensitive_orientations", combinatorial}, {"found", g.has_value()}});
      if (g) found.push_back(json{{"polytope", np.name}, {"certificate", to_json(*g)}});
    }
  } else {
    std::optional<MarkedLPDigraph> g;
    for (const auto& np : six_vertex_catalog())
      if ((g = find_sensitive_objective(np.polytope))) break;
    for (int step = 6; step < k && g; ++step) {
      std::optional<MarkedLPDigraph> next;
      for (int v = 0; v < static_cast<int>(g->polytope.vertices.size()) && !next; ++v) {
        if (v == g->s || v == g->w || g->polytope.neighbors(v).size() != 3) continue;
        next = sensitive_after_truncation(*g, v).geometric;
      }
      g = next;
    }
    if (g) found.push_back(json{{"polytope", "truncated to " + std::to_string(k) + " vertices"},
                                {"certificate", to_json(*g)}});
  }
  json j{{"vertices", k}, {"searched", searched}, {"certificates", found}};
  if (found.empty())
    j["note"] = k < 6 ? "not found; exhaustive enumeration shows no sensitive orientation exists"
                      : "not found within the search budget";
  out.emit(j);
  return found.empty() ? kFails : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holt-Klee tools for oriented matroids"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--plain", out.plain, "Plain key: value output instead of JSON");
  app.add_flag("--timing", out.timing, "Include wall-clock seconds in the output");

  std::string file, dot, out_file, checkpoint, mode = "quick";
  int g = 0, f = 0, jobs = 1, rank = 0, size = 0, vertices = 0;
  std::vector<int> reorient, coline;

  auto* validate = app.add_subcommand("validate", "Parse a chirotope and check the axioms");
  validate->add_option("file", file, "Chirotope file")->required();

  auto* program = app.add_subcommand("program", "Analyse the program (M, g, f)");
  program->add_option("file", file, "Chirotope file")->required();
  program->add_option("--g", g, "Element at infinity (label)")->required();
  program->add_option("--f", f, "Objective element (label)")->required();
  program->add_option("--reorient", reorient, "Labels to reorient")->delimiter(',');
  program->add_option("--dot", dot, "Write the feasible digraph as DOT");

  auto* shelling = app.add_subcommand("shelling", "Coline shelling and HK* report");
  shelling->add_option("file", file, "Chirotope file")->required();
  shelling->add_option("--coline", coline, "Coline labels, comma separated")->delimiter(',');
  shelling->add_option("--reorient", reorient, "Labels to reorient")->delimiter(',');
  shelling->add_option("--dot", dot, "Write the shelling digraph as DOT");

  auto* classify = app.add_subcommand("classify", "Classify a catalog");
  classify->add_option("catalog", file, "Catalog file (relative paths also tried under OM_CATALOG_DIR)")->required();
  classify->add_option("--mode", mode, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  classify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--out", out_file, "Row output (.csv or .json)");
  classify->add_option("--checkpoint", checkpoint, "Checkpoint file for resumable runs");

  auto* construct = app.add_subcommand("construct", "Build non-HK* matroids or sensitive LP digraphs");
  construct->add_option("--rank", rank, "Rank r >= 4");
  construct->add_option("--size", size, "Ground set size n >= 2r");
  construct->add_option("--out", out_file, "Write the certificate JSON");
  auto* sensitive = construct->add_subcommand("sensitive", "Search sensitive LP digraphs on 3-polytopes");
  sensitive->add_option("--vertices", vertices, "Vertex count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*program) return cmd_program(file, g, f, reorient, dot, out);
    if (*shelling) return cmd_shelling(file, coline, reorient, dot, out);
    if (*classify) return cmd_classify(file, mode, jobs, out_file, checkpoint, out);
    if (*sensitive) return cmd_sensitive(vertices, out);
    if (*construct) {
      if (!rank || !size) throw InputError("construct needs --rank and --size, or the sensitive subcommand");
      return cmd_construct(rank, size, out_file, out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInput;
}
