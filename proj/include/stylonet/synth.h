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

#ifndef STYLONET_SYNTH_H_
#define STYLONET_SYNTH_H_

// Seeded generator of labelled toy corpora. Every class mixes function
// words and pseudo-word content, and differs from the others along four
// independent axes, one per feature family:
//   stop-word frequency profile, burstiness of a stop-word subset,
//   spelling of preferred content words, and how often a content word is
//   followed by one of its fixed successors.
// Each document draws its own noisy strengths; no single family separates
// the classes perfectly.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stylonet/io.h"

namespace stylonet {

struct SynthOptions {
  std::size_t classes = 2;
  std::size_t docs_per_class = 40;
  std::size_t tokens = 5000;
  std::uint64_t seed = 0;

  std::size_t vocabulary = 3000;     // content pseudo-words
  std::size_t successors = 4;        // fixed successor list per content word
  double stopword_share = 0.45;      // fraction of stop-word tokens

  // Class signal (mean strength) and per-document spread of each axis.
  double frequency_tilt = 0.16, frequency_spread = 0.08;
  double burst_strength = 0.75, burst_spread = 0.35;
  double spelling_tilt = 0.30, spelling_spread = 0.22;
  double chain_base = 0.15, chain_step = 0.20, chain_spread = 0.10;
};

struct SynthDocument {
  std::string id;
  std::string label;
  std::string text;
};

// Throws ArgumentError for fewer than two classes or an empty document.
std::vector<SynthDocument> synthesize_corpus(const SynthOptions& options);

// Writes texts/<id>.txt and manifest.csv under `dir`; returns the manifest
// entries.
std::vector<ManifestEntry> write_synthetic_corpus(
    const std::filesystem::path& dir, const std::vector<SynthDocument>& docs);

}  // namespace stylonet

#endif  // STYLONET_SYNTH_H_
