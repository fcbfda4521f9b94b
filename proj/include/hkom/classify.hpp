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
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hkom/oriented_matroid.hpp"

namespace hkom {

/// Topes with exactly r facets (covectors of rank r - 1 below them).
int simplicial_tope_count(const OrientedMatroid& m);
bool is_shannon(const OrientedMatroid& m);

struct CatalogEntry {
  std::string id;
  std::size_t line = 0;
  std::string text;  // "n r signs"
};

enum class Mode { Quick, Full };

struct ClassificationReport {
  std::string id;
  int n = 0;
  int r = 0;
  bool uniform = false;
  bool hk = false;
  bool hkstar = false;
  bool euclidean = false;
  bool shannon = false;
  int simplicial_tope_count = 0;
  nlohmann::json witnesses = nlohmann::json::object();
  double seconds = 0;
  std::optional<std::string> error;
};

/// Quick mode restricts the HK, HK* and Euclidean tests to the matroid
/// itself without reorientation. Parse and axiom errors are reported in
/// `error`, prefixed with the entry id.
ClassificationReport classify_one(const CatalogEntry& entry, Mode mode, int jobs = 1);

struct CatalogDiagnostic {
  std::size_t line = 0;
  std::string message;
};

/// Streaming reader for lines "[tag ]n r signs". Blank lines and lines
/// starting with '#' are ignored; malformed lines are skipped and recorded.
/// Entries without a tag get id "line<k>".
class CatalogReader {
 public:
  explicit CatalogReader(const std::string& path);

  std::optional<CatalogEntry> next();
  const std::vector<CatalogDiagnostic>& diagnostics() const { return diagnostics_; }
  std::size_t skipped() const { return diagnostics_.size(); }

 private:
  std::ifstream in_;
  std::size_t line_ = 0;
  std::vector<CatalogDiagnostic> diagnostics_;
};

/// Splits one catalog line. Returns nullopt with `why` set when malformed.
std::optional<CatalogEntry> parse_catalog_line(const std::string& line, std::size_t line_no, std::string* why = nullptr);

std::vector<CatalogEntry> ingest_catalog(const std::string& path, std::vector<CatalogDiagnostic>* diagnostics = nullptr);

struct Aggregate {
  std::size_t total = 0;
  std::size_t errors = 0;
  std::size_t uniform = 0;
  std::size_t non_hk = 0;
  std::size_t non_hkstar = 0;
  std::size_t non_euclidean = 0;
  std::size_t non_shannon = 0;
  /// non-Shannon implies non-HK*, and non-HK* implies non-Euclidean, row by row.
  bool containments_hold = true;
};

Aggregate aggregate(const std::vector<ClassificationReport>& rows);

struct BatchOptions {
  Mode mode = Mode::Quick;
  int jobs = 1;
  /// JSON-lines file of finished rows; rows already present are not recomputed.
  std::string checkpoint;
  /// Rows buffered before the checkpoint file is flushed.
  std::size_t checkpoint_every = 16;
};

struct BatchResult {
  std::vector<ClassificationReport> rows;  // catalog order
  Aggregate totals;
  std::size_t resumed = 0;
};

BatchResult batch_classify(const std::vector<CatalogEntry>& entries, const BatchOptions& options);

nlohmann::json to_json(const ClassificationReport& r, bool timing = false);
ClassificationReport report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Aggregate& a);

/// Header id,n,r,uniform,hk,hkstar,euclidean,shannon,simplicial_topes,witness.
void write_csv(std::ostream& out, const std::vector<ClassificationReport>& rows);
void write_json(std::ostream& out, const BatchResult& result, bool timing = false);

}  // namespace hkom
