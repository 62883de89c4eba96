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

#ifndef STYLONET_STYLE_H_
#define STYLONET_STYLE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stylonet/text.h"

namespace stylonet {

enum class FeatureFamily { kNetwork, kIntermittency, kStopwordFrequency, kCharBigram };

// Column-name prefix of a family: "net_", "int_", "stop_", "bg_".
std::string_view family_prefix(FeatureFamily family);
// Short family name ("net", "int", "stop", "bg").
std::string_view family_name(FeatureFamily family);
FeatureFamily parse_family(std::string_view name);

// Named attributes of one document. Missing values are nullopt.
struct FeatureVector {
  FeatureFamily family = FeatureFamily::kNetwork;
  std::map<std::string, std::optional<double>> values;
};

// Recurrence times of one word: gaps between successive occurrences, then
// the wrap-around term T_f + T_l (first 1-based position plus the tokens
// after the last occurrence). The times sum to N_T.
struct RecurrenceSeries {
  std::string word;
  std::vector<std::size_t> times;
  std::size_t occurrences = 0;  // N_i
  std::size_t length = 0;       // N_T

  double mean() const;  // N_T / N_i
};

// Throws NotFoundError when `word` does not occur in `doc`.
RecurrenceSeries recurrence_times(const Document& doc, std::string_view word);

// Coefficient of variation of the recurrence times. nullopt when the word
// occurs fewer than max(2, min_occurrences) times.
std::optional<double> intermittency(const RecurrenceSeries& series,
                                    std::size_t min_occurrences = 2);

// occurrences / N_T for each stop word, over the stream before stop-word
// removal. One attribute per listed word, named prefix + word.
FeatureVector stopword_frequency_features(const Document& doc,
                                          const StopwordPolicy& policy);

// Intermittency of each stop word (same stream as the frequencies).
FeatureVector intermittency_features(const Document& doc,
                                     const StopwordPolicy& policy,
                                     std::size_t min_occurrences);

// Relative frequencies of within-token character bigrams of the
// case-folded text. Only observed bigrams are present.
FeatureVector char_bigram_features(std::string_view raw);

}  // namespace stylonet

#endif  // STYLONET_STYLE_H_
