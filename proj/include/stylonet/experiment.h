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

#ifndef STYLONET_EXPERIMENT_H_
#define STYLONET_EXPERIMENT_H_

// File-mediated experiment driver: features are written to CSV, then read
// back for classification and fusion.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stylonet/synth.h"

namespace stylonet {

struct RunConfig {
  // features, metrics-dump
  std::filesystem::path manifest;
  std::filesystem::path lexicon;        // empty: identity lemmas
  std::string stopwords = "file";       // "file" or "corpus"
  std::filesystem::path stopword_list;  // empty: the shipped English list
  std::vector<unsigned> levels{1, 2, 3};
  std::size_t eta = 50;
  std::size_t shuffles = 30;
  std::size_t min_occurrences = 5;

  // classify
  std::filesystem::path features;  // directory written by `features`
  std::vector<std::string> pairs{"int", "stop", "bg"};  // each fused with net
  std::filesystem::path traditional;  // explicit CSV pair instead of a directory
  std::filesystem::path network;
  std::string classifier = "fknn";
  std::vector<std::size_t> k{5};
  std::size_t folds = 10;
  double lambda_step = 0.01;
  double theta_step = 0.01;

  // synth
  SynthOptions synth;

  std::uint64_t seed = 0;
  std::filesystem::path out;
  unsigned threads = 1;  // never affects outputs
};

// Each throws ArgumentError on an invalid configuration before touching
// any input.
void validate_features(const RunConfig& config);
void validate_classify(const RunConfig& config);
void validate_synth(const RunConfig& config);
void validate_metrics_dump(const RunConfig& config);

// Canonical JSON of the settings that determine a command's outputs (the
// output directory and thread count are excluded), and its FNV-1a hash as
// 16 hex digits.
std::string config_json(const RunConfig& config, const std::string& command);
std::string config_hash(const RunConfig& config, const std::string& command);

struct CommandReport {
  std::vector<std::filesystem::path> written;
  std::vector<std::string> warnings;
};

// net.csv, int.csv, stop.csv, bg.csv and features.json in config.out.
CommandReport cmd_features(const RunConfig& config);

// Per family pair and k: cross-validated memberships of both families,
// hybrid and tiebreaker sweeps, gain-curve CSVs and results.json.
CommandReport cmd_classify(const RunConfig& config);

// manifest.csv, texts/ and synth.json in config.out.
CommandReport cmd_synth(const RunConfig& config);

// Per document: edge list, node table and per-node metrics.
CommandReport cmd_metrics_dump(const RunConfig& config);

}  // namespace stylonet

#endif  // STYLONET_EXPERIMENT_H_
