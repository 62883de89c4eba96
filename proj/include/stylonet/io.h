// Copyright 2026 The stylonet Authors
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

#ifndef STYLONET_IO_H_
#define STYLONET_IO_H_

// File formats: corpus manifest (CSV id,path,label), lemma lexicon (TSV),
// stop-word list, and the feature-matrix CSV shared by all families.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylonet/learn.h"
#include "stylonet/text.h"

namespace stylonet {

// Parses one CSV record (RFC 4180 quoting). Throws IoError on an
// unterminated quote.
std::vector<std::string> parse_csv_line(std::string_view line);
std::string csv_escape(std::string_view field);

// Shortest round-trip decimal form.
std::string format_double(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

struct ManifestEntry {
  std::string id;
  std::filesystem::path path;  // resolved against the manifest directory
  std::string label;
};

// An optional "id,path,label" header row is skipped. Throws IoError on an
// unreadable file or malformed row, ArgumentError on duplicate ids.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path,
                    const std::vector<ManifestEntry>& entries);

// surface<TAB>lemma per line. Duplicate surfaces keep the last entry and
// add a message to `warnings`.
LemmaLexicon read_lexicon(const std::filesystem::path& path,
                          std::vector<std::string>* warnings = nullptr);

// One lemma per line; blank lines and '#' comments ignored.
StopwordPolicy read_stopwords(const std::filesystem::path& path);

// Rows of documents, named columns, empty cells for missing values.
struct FeatureTable {
  std::vector<std::string> columns;  // feature columns (without id, label)
  std::vector<std::string> ids;
  std::vector<std::string> labels;
  std::vector<std::vector<std::optional<double>>> rows;
  std::string config_hash;  // from the "# config-hash:" line, if any
};

// Layout:
//   # config-hash: <hex>        (only when config_hash is non-empty)
//   id,label,<columns...>
//   <rows>
std::string format_feature_table(const FeatureTable& table);
FeatureTable parse_feature_table(std::string_view text, const std::string& origin);
FeatureTable read_feature_table(const std::filesystem::path& path);

// Columns ending in "_err" are error bars, not features, and are skipped.
// Columns with any missing value are dropped and listed in `dropped`.
// Classes are sorted by name.
LabeledDataset to_dataset(const FeatureTable& table,
                          std::vector<std::string>* dropped = nullptr);

}  // namespace stylonet

#endif  // STYLONET_IO_H_
