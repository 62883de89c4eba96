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

#ifndef STYLONET_FEATURES_H_
#define STYLONET_FEATURES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stylonet/network.h"
#include "stylonet/style.h"
#include "stylonet/text.h"

namespace stylonet {

struct FeatureOptions {
  std::vector<unsigned> levels{1, 2, 3};  // accessibility steps h
  std::size_t eta = 50;                   // lemmas in the top-frequency mean
  std::size_t shuffles = 30;              // R
  std::uint64_t seed = 0;
  std::size_t min_occurrences = 5;        // intermittency soft threshold
};

// Network measurement names in column order (without family prefix):
// "<summary>_<metric>" for per-node metrics (summary in mean, topmean, std,
// skew) followed by the network-global values.
std::vector<std::string> network_measurement_names(const FeatureOptions& options);

// Values of network_measurement_names() on one network.
std::vector<std::optional<double>> network_measurements(const WordNetwork& net,
                                                        const FeatureOptions& options);

// One named measurement as a metric usable with baseline_ensemble.
// Throws ArgumentError for an unknown name.
NetworkMetric network_metric(const std::string& name, const FeatureOptions& options);

struct NetworkFeatureReport {
  FeatureVector features;  // raw, _norm and _norm_err per measurement
  std::vector<std::string> warnings;
};

// Network features of a document that has already had stop words removed.
// Each measurement X~ is reported raw and normalized against R shuffles
// of the same token stream (seeded per document from options.seed and the
// document id).
NetworkFeatureReport network_features(const Document& content,
                                      const FeatureOptions& options,
                                      unsigned threads = 1);

// FNV-1a, used for document seeds and configuration hashes.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace stylonet

#endif  // STYLONET_FEATURES_H_
