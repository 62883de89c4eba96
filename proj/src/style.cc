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

#include "stylonet/style.h"

#include <cmath>
#include <unordered_map>

#include "stylonet/error.h"

namespace stylonet {

std::string_view family_prefix(FeatureFamily family) {
  switch (family) {
    case FeatureFamily::kNetwork:
      return "net_";
    case FeatureFamily::kIntermittency:
      return "int_";
    case FeatureFamily::kStopwordFrequency:
      return "stop_";
    case FeatureFamily::kCharBigram:
      return "bg_";
  }
  return "";
}

std::string_view family_name(FeatureFamily family) {
  std::string_view p = family_prefix(family);
  return p.substr(0, p.size() - 1);
}

FeatureFamily parse_family(std::string_view name) {
  for (FeatureFamily f :
       {FeatureFamily::kNetwork, FeatureFamily::kIntermittency,
        FeatureFamily::kStopwordFrequency, FeatureFamily::kCharBigram}) {
    if (name == family_name(f)) return f;
  }
  throw ArgumentError("unknown feature family '" + std::string(name) +
                      "' (expected net, int, stop or bg)");
}

double RecurrenceSeries::mean() const {
  return static_cast<double>(length) / static_cast<double>(occurrences);
}

RecurrenceSeries recurrence_times(const Document& doc, std::string_view word) {
  RecurrenceSeries series;
  series.word = std::string(word);
  series.length = doc.size();
  std::size_t first = 0, last = 0;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (doc.tokens[i].lemma != word) continue;
    if (series.occurrences == 0) {
      first = i;
    } else {
      series.times.push_back(i - last);
    }
    last = i;
    ++series.occurrences;
  }
  if (series.occurrences == 0) {
    throw NotFoundError("word '" + std::string(word) + "' does not occur in '" +
                        doc.id + "'");
  }
  // T_f = first + 1 (1-based), T_l = doc.size() - 1 - last.
  series.times.push_back((first + 1) + (doc.size() - 1 - last));
  return series;
}

std::optional<double> intermittency(const RecurrenceSeries& series,
                                    std::size_t min_occurrences) {
  if (series.occurrences < std::max<std::size_t>(2, min_occurrences)) {
    return std::nullopt;
  }
  const double n = static_cast<double>(series.times.size());
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t t : series.times) {
    const double v = static_cast<double>(t);
    s1 += v;
    s2 += v * v;
  }
  const double mean = s1 / n;
  const double ratio = (s2 / n) / (mean * mean) - 1.0;
  return std::sqrt(std::max(0.0, ratio));
}

FeatureVector stopword_frequency_features(const Document& doc,
                                          const StopwordPolicy& policy) {
  FeatureVector out;
  out.family = FeatureFamily::kStopwordFrequency;
  std::unordered_map<std::string_view, std::size_t> counts;
  for (const Token& t : doc.tokens) {
    if (policy.contains(t.lemma)) ++counts[t.lemma];
  }
  const std::string prefix(family_prefix(out.family));
  for (const std::string& w : policy.words) {
    const auto it = counts.find(w);
    const double c = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    out.values[prefix + w] =
        doc.size() == 0 ? 0.0 : c / static_cast<double>(doc.size());
  }
  return out;
}

FeatureVector intermittency_features(const Document& doc,
                                     const StopwordPolicy& policy,
                                     std::size_t min_occurrences) {
  FeatureVector out;
  out.family = FeatureFamily::kIntermittency;
  std::unordered_map<std::string_view, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (policy.contains(doc.tokens[i].lemma)) {
      positions[doc.tokens[i].lemma].push_back(i);
    }
  }
  const std::string prefix(family_prefix(out.family));
  for (const std::string& w : policy.words) {
    const auto it = positions.find(w);
    if (it == positions.end()) {
      out.values[prefix + w] = std::nullopt;
      continue;
    }
    const auto& pos = it->second;
    RecurrenceSeries series;
    series.word = w;
    series.length = doc.size();
    series.occurrences = pos.size();
    for (std::size_t k = 1; k < pos.size(); ++k) series.times.push_back(pos[k] - pos[k - 1]);
    series.times.push_back(pos.front() + 1 + (doc.size() - 1 - pos.back()));
    out.values[prefix + w] = intermittency(series, min_occurrences);
  }
  return out;
}

FeatureVector char_bigram_features(std::string_view raw) {
  FeatureVector out;
  out.family = FeatureFamily::kCharBigram;
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const Token& t : tokenize(raw, true)) {
    // Split into code points so multi-byte letters stay whole.
    std::vector<std::string_view> chars;
    const std::string& w = t.surface;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t len = 1;
      const unsigned char b = static_cast<unsigned char>(w[i]);
      if (b >= 0xF0) len = 4;
      else if (b >= 0xE0) len = 3;
      else if (b >= 0xC0) len = 2;
      chars.push_back(std::string_view(w).substr(i, len));
      i += len;
    }
    for (std::size_t i = 1; i < chars.size(); ++i) {
      ++counts[std::string(chars[i - 1]) + std::string(chars[i])];
      ++total;
    }
  }
  const std::string prefix(family_prefix(out.family));
  for (const auto& [bigram, c] : counts) {
    out.values[prefix + bigram] =
        static_cast<double>(c) / static_cast<double>(total);
  }
  return out;
}

}  // namespace stylonet
