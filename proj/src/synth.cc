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

#include "stylonet/synth.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "stylonet/error.h"
#include "stylonet/random.h"
#include "stylonet/text.h"

namespace stylonet {

namespace {

constexpr const char* kOnsets[] = {"b", "d", "g", "k", "p", "t", "f", "l",
                                   "m", "n", "r", "s", "v", "z", "sh", "tr"};
constexpr const char kVowels[] = {'a', 'e', 'i', 'o', 'u'};
constexpr const char* kCodas[] = {"", "", "", "n", "r", "s", "l", "k"};

constexpr std::size_t kSegment = 250;  // tokens per burst on/off decision
constexpr double kBurstOnRate = 0.3;

struct ContentWord {
  std::string spelling;
  std::size_t group;  // class whose documents favour this spelling
};

std::vector<ContentWord> make_vocabulary(std::size_t size, std::size_t classes,
                                         const StopwordPolicy& stopwords, Rng& rng) {
  std::vector<ContentWord> words;
  std::set<std::string> seen;
  while (words.size() < size) {
    const std::size_t syllables = 2 + rng.uniform_index(2);
    std::string w;
    std::size_t first_vowel = 0;
    for (std::size_t s = 0; s < syllables; ++s) {
      const std::size_t v = rng.uniform_index(std::size(kVowels));
      if (s == 0) first_vowel = v;
      w += kOnsets[rng.uniform_index(std::size(kOnsets))];
      w += kVowels[v];
      w += kCodas[rng.uniform_index(std::size(kCodas))];
    }
    if (stopwords.contains(w) || !seen.insert(w).second) continue;
    words.push_back({std::move(w), first_vowel % classes});
  }
  return words;
}

class CumulativeSampler {
 public:
  void assign(const std::vector<double>& weights) {
    cumulative_.resize(weights.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) cumulative_[i] = acc += weights[i];
  }
  std::size_t draw(Rng& rng) const {
    const double u = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                                 cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

double noisy(double mean, double spread, Rng& rng) {
  return std::max(0.0, mean + spread * rng.normal());
}

}  // namespace

std::vector<SynthDocument> synthesize_corpus(const SynthOptions& o) {
  if (o.classes < 2) throw ArgumentError("synth: need at least 2 classes");
  if (o.docs_per_class == 0 || o.tokens == 0) {
    throw ArgumentError("synth: docs per class and tokens must be positive");
  }
  if (o.vocabulary < 2 || o.successors == 0) {
    throw ArgumentError("synth: vocabulary and successor list must be non-empty");
  }
  Rng world(derive_seed(o.seed, 0));
  const StopwordPolicy policy = default_english_stopwords();
  const std::vector<std::string> stopwords(policy.words.begin(), policy.words.end());
  const std::size_t ns = stopwords.size();

  // Shared Zipf ranks, then per-class frequency offsets.
  std::vector<std::size_t> stop_rank(ns);
  for (std::size_t i = 0; i < ns; ++i) stop_rank[i] = i;
  world.shuffle(std::span<std::size_t>(stop_rank));
  std::vector<double> stop_zipf(ns);
  for (std::size_t i = 0; i < ns; ++i) stop_zipf[i] = 1.0 / static_cast<double>(stop_rank[i] + 1);
  std::vector<std::vector<double>> stop_offset(o.classes, std::vector<double>(ns));
  for (auto& row : stop_offset) {
    for (double& z : row) z = world.normal();
  }
  // Mid-frequency stop words are bursty in exactly one class.
  std::vector<std::size_t> burst_group(ns, o.classes);
  for (std::size_t i = 0; i < ns; ++i) {
    if (stop_rank[i] >= 8 && stop_rank[i] < 48) burst_group[i] = stop_rank[i] % o.classes;
  }

  const std::vector<ContentWord> vocab = make_vocabulary(o.vocabulary, o.classes, policy, world);
  const std::size_t nv = vocab.size();
  std::vector<std::size_t> content_rank(nv);
  for (std::size_t i = 0; i < nv; ++i) content_rank[i] = i;
  world.shuffle(std::span<std::size_t>(content_rank));
  std::vector<double> content_zipf(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    content_zipf[i] = 1.0 / static_cast<double>(content_rank[i] + 1);
  }
  CumulativeSampler shared_content;
  shared_content.assign(content_zipf);
  std::vector<std::vector<std::size_t>> successors(nv);
  for (auto& list : successors) {
    for (std::size_t s = 0; s < o.successors; ++s) list.push_back(shared_content.draw(world));
  }

  std::vector<SynthDocument> docs;
  docs.reserve(o.classes * o.docs_per_class);
  for (std::size_t c = 0; c < o.classes; ++c) {
    for (std::size_t d = 0; d < o.docs_per_class; ++d) {
      const std::size_t index = c * o.docs_per_class + d;
      Rng rng(derive_seed(o.seed, 1 + index));
      const double freq = noisy(o.frequency_tilt, o.frequency_spread, rng);
      const double burst = std::min(0.95, noisy(o.burst_strength, o.burst_spread, rng));
      const double spell = noisy(o.spelling_tilt, o.spelling_spread, rng);
      const double chain =
          std::min(0.95, noisy(o.chain_base + o.chain_step * static_cast<double>(c),
                               o.chain_spread, rng));

      std::vector<double> base(ns);
      for (std::size_t i = 0; i < ns; ++i) {
        base[i] = stop_zipf[i] * std::exp(freq * stop_offset[c][i]);
      }
      std::vector<double> cw(nv);
      for (std::size_t i = 0; i < nv; ++i) {
        cw[i] = content_zipf[i] * (vocab[i].group == c ? std::exp(spell) : 1.0);
      }
      CumulativeSampler content;
      content.assign(cw);

      // Mean-preserving on/off modulation.
      const double on = 1.0 + burst * (1.0 - kBurstOnRate) / kBurstOnRate;
      const double off = 1.0 - burst;
      CumulativeSampler stop;
      std::vector<double> w(ns);
      std::string text;
      std::size_t previous = nv;
      for (std::size_t t = 0; t < o.tokens; ++t) {
        if (t % kSegment == 0) {
          for (std::size_t i = 0; i < ns; ++i) {
            w[i] = base[i];
            if (burst_group[i] == c) w[i] *= rng.uniform() < kBurstOnRate ? on : off;
          }
          stop.assign(w);
        }
        const std::string* word;
        if (rng.uniform() < o.stopword_share) {
          word = &stopwords[stop.draw(rng)];
        } else {
          std::size_t next;
          if (previous < nv && rng.uniform() < chain) {
            next = successors[previous][rng.uniform_index(o.successors)];
          } else {
            next = content.draw(rng);
          }
          previous = next;
          word = &vocab[next].spelling;
        }
        text += *word;
        text += (t + 1) % 16 == 0 ? '\n' : ' ';
      }
      SynthDocument doc;
      doc.label = "class" + std::to_string(c);
      char id[32];
      std::snprintf(id, sizeof id, "c%zu_d%03zu", c, d);
      doc.id = id;
      doc.text = std::move(text);
      docs.push_back(std::move(doc));
    }
  }
  return docs;
}

std::vector<ManifestEntry> write_synthetic_corpus(const std::filesystem::path& dir,
                                                  const std::vector<SynthDocument>& docs) {
  std::vector<ManifestEntry> entries;
  for (const SynthDocument& doc : docs) {
    const std::filesystem::path rel = std::filesystem::path("texts") / (doc.id + ".txt");
    write_file(dir / rel, doc.text);
    entries.push_back({doc.id, rel, doc.label});
  }
  write_manifest(dir / "manifest.csv", entries);
  return entries;
}

}  // namespace stylonet
