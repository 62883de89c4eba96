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

#include "stylonet/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "stylonet/error.h"

namespace stylonet {

namespace fs = std::filesystem;

std::vector<std::string> parse_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (quoted) throw IoError("unterminated quote in CSV line");
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error("format_double: conversion failed");
  return std::string(buf, end);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return ss.str();
}

void write_file(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

namespace {

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const fs::path& path) {
  const std::string text = read_file(path);
  const fs::path base = path.parent_path();
  std::vector<ManifestEntry> out;
  std::set<std::string> seen;
  const auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (trim(lines[n]).empty()) continue;
    std::vector<std::string> f;
    try {
      f = parse_csv_line(lines[n]);
    } catch (const IoError& e) {
      throw IoError(path.string() + ":" + std::to_string(n + 1) + ": " + e.what());
    }
    if (f.size() != 3) {
      throw IoError(path.string() + ":" + std::to_string(n + 1) +
                    ": expected 3 fields (id,path,label)");
    }
    for (auto& s : f) s = trim(s);
    if (out.empty() && seen.empty() && f[0] == "id" && f[1] == "path" &&
        f[2] == "label") {
      seen.insert("");  // header consumed
      continue;
    }
    if (f[0].empty() || f[1].empty() || f[2].empty()) {
      throw IoError(path.string() + ":" + std::to_string(n + 1) + ": empty field");
    }
    if (!seen.insert(f[0]).second) {
      throw ArgumentError(path.string() + ": duplicate document id '" + f[0] + "'");
    }
    fs::path p = f[1];
    if (p.is_relative()) p = base / p;
    out.push_back({f[0], p, f[2]});
  }
  return out;
}

void write_manifest(const fs::path& path, const std::vector<ManifestEntry>& entries) {
  std::string text = "id,path,label\n";
  for (const auto& e : entries) {
    text += csv_escape(e.id) + "," + csv_escape(e.path.generic_string()) + "," +
            csv_escape(e.label) + "\n";
  }
  write_file(path, text);
}

LemmaLexicon read_lexicon(const fs::path& path, std::vector<std::string>* warnings) {
  const std::string text = read_file(path);
  LemmaLexicon lex;
  const auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    if (trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw IoError(path.string() + ":" + std::to_string(n + 1) +
                    ": expected surface<TAB>lemma");
    }
    const std::string surface = trim(line.substr(0, tab));
    const std::string lemma = trim(line.substr(tab + 1));
    if (surface.empty() || lemma.empty()) {
      throw IoError(path.string() + ":" + std::to_string(n + 1) + ": empty field");
    }
    if (!lex.add(surface, lemma) && warnings != nullptr) {
      warnings->push_back(path.string() + ":" + std::to_string(n + 1) +
                          ": duplicate surface '" + surface + "', last entry wins");
    }
  }
  return lex;
}

StopwordPolicy read_stopwords(const fs::path& path) {
  const std::string text = read_file(path);
  StopwordPolicy policy;
  policy.mode = StopwordPolicy::Mode::kExplicitList;
  for (const std::string& line : lines_of(text)) {
    const std::string w = trim(line);
    if (w.empty() || w.front() == '#') continue;
    policy.words.insert(fold_case(w));
  }
  return policy;
}

std::string format_feature_table(const FeatureTable& table) {
  std::string out;
  if (!table.config_hash.empty()) out += "# config-hash: " + table.config_hash + "\n";
  out += "id,label";
  for (const auto& c : table.columns) out += "," + csv_escape(c);
  out += "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += csv_escape(table.ids[r]) + "," + csv_escape(table.labels[r]);
    for (const auto& v : table.rows[r]) {
      out += ",";
      if (v) out += format_double(*v);
    }
    out += "\n";
  }
  return out;
}

FeatureTable parse_feature_table(std::string_view text, const std::string& origin) {
  FeatureTable table;
  bool header = false;
  const auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    const std::string where = origin + ":" + std::to_string(n + 1);
    if (line.rfind("#", 0) == 0) {
      const std::string key = "# config-hash:";
      if (line.rfind(key, 0) == 0) table.config_hash = trim(line.substr(key.size()));
      continue;
    }
    if (trim(line).empty()) continue;
    auto fields = parse_csv_line(line);
    if (!header) {
      if (fields.size() < 2 || fields[0] != "id" || fields[1] != "label") {
        throw IoError(where + ": header must start with id,label");
      }
      table.columns.assign(fields.begin() + 2, fields.end());
      header = true;
      continue;
    }
    if (fields.size() != table.columns.size() + 2) {
      throw IoError(where + ": expected " + std::to_string(table.columns.size() + 2) +
                    " fields, found " + std::to_string(fields.size()));
    }
    table.ids.push_back(fields[0]);
    table.labels.push_back(fields[1]);
    std::vector<std::optional<double>> row;
    for (std::size_t c = 2; c < fields.size(); ++c) {
      const std::string& s = fields[c];
      if (s.empty()) {
        row.push_back(std::nullopt);
        continue;
      }
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw IoError(where + ": column '" + table.columns[c - 2] +
                      "' has non-numeric value '" + s + "'");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (!header) throw IoError(origin + ": missing header row");
  return table;
}

FeatureTable read_feature_table(const fs::path& path) {
  return parse_feature_table(read_file(path), path.string());
}

LabeledDataset to_dataset(const FeatureTable& table, std::vector<std::string>* dropped) {
  LabeledDataset data;
  std::set<std::string> classes(table.labels.begin(), table.labels.end());
  data.classes.assign(classes.begin(), classes.end());
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const std::string& name = table.columns[c];
    if (name.size() >= 4 && name.compare(name.size() - 4, 4, "_err") == 0) continue;
    const bool complete = std::all_of(table.rows.begin(), table.rows.end(),
                                      [&](const auto& row) { return row[c].has_value(); });
    if (!complete) {
      if (dropped != nullptr) dropped->push_back(name);
      continue;
    }
    keep.push_back(c);
    data.attributes.push_back(name);
  }
  std::vector<double> row(keep.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t k = 0; k < keep.size(); ++k) row[k] = *table.rows[r][keep[k]];
    const auto label = static_cast<std::size_t>(
        std::lower_bound(data.classes.begin(), data.classes.end(), table.labels[r]) -
        data.classes.begin());
    data.add(table.ids[r], label, row);
  }
  return data;
}

}  // namespace stylonet
