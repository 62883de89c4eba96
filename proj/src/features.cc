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

#include "stylonet/features.h"

#include <algorithm>

#include "stylonet/error.h"
#include "stylonet/metrics.h"
#include "stylonet/random.h"

namespace stylonet {

namespace {

constexpr const char* kSummaries[] = {"mean", "topmean", "std", "skew"};

std::vector<std::string> node_metric_names(const FeatureOptions& options) {
  std::vector<std::string> names = {"degree", "neighbor_degree", "neighbor_degree_dev"};
  for (unsigned h : options.levels) names.push_back("accessibility_h" + std::to_string(h));
  names.insert(names.end(), {"betweenness", "clustering", "path_length"});
  return names;
}

constexpr const char* kGlobals[] = {"global_assortativity", "global_clustering",
                                    "global_path_length"};

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::string> network_measurement_names(const FeatureOptions& options) {
  std::vector<std::string> names;
  for (const std::string& metric : node_metric_names(options)) {
    for (const char* summary : kSummaries) names.push_back(std::string(summary) + "_" + metric);
  }
  for (const char* g : kGlobals) names.emplace_back(g);
  return names;
}

std::vector<std::optional<double>> network_measurements(const WordNetwork& net,
                                                        const FeatureOptions& options) {
  const NodeMetricTable t = compute_node_metrics(net, options.levels);
  std::vector<std::vector<std::optional<double>>> per_node;
  const auto dense = [](const std::vector<double>& v) {
    return std::vector<std::optional<double>>(v.begin(), v.end());
  };
  per_node.push_back(dense(t.degrees.degree));
  per_node.push_back(t.degrees.neighbor_degree);
  per_node.push_back(t.degrees.neighbor_degree_dev);
  for (const auto& acc : t.accessibility) per_node.push_back(dense(acc));
  per_node.push_back(dense(t.betweenness));
  per_node.push_back(dense(t.clustering.local));
  per_node.push_back(t.paths.node);

  std::vector<std::optional<double>> out;
  for (const auto& values : per_node) {
    const MetricSummary s = summarize(values, net, options.eta);
    out.insert(out.end(), {s.mean, s.top_mean, s.stddev, s.skewness});
  }
  out.push_back(t.assortativity);
  out.push_back(t.clustering.global);
  out.push_back(t.paths.network);
  return out;
}

NetworkMetric network_metric(const std::string& name, const FeatureOptions& options) {
  const auto names = network_measurement_names(options);
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ArgumentError("unknown network measurement '" + name + "'");
  const auto index = static_cast<std::size_t>(it - names.begin());
  return [index, options](const WordNetwork& net) {
    return network_measurements(net, options)[index];
  };
}

NetworkFeatureReport network_features(const Document& content,
                                      const FeatureOptions& options, unsigned threads) {
  NetworkFeatureReport report;
  report.features.family = FeatureFamily::kNetwork;
  const WordNetwork net = build_adjacency_network(content);
  const auto names = network_measurement_names(options);
  const auto raw = network_measurements(net, options);
  const std::uint64_t seed = derive_seed(options.seed, fnv1a64(content.id));
  const auto baseline = baseline_ensemble(
      content, options.shuffles, seed,
      [&](const WordNetwork& shuffled) { return network_measurements(shuffled, options); },
      names.size(), threads);

  const std::string prefix(family_prefix(FeatureFamily::kNetwork));
  for (std::size_t m = 0; m < names.size(); ++m) {
    const std::string col = prefix + names[m];
    auto& values = report.features.values;
    values[col] = raw[m];
    values[col + "_norm"] = std::nullopt;
    values[col + "_norm_err"] = std::nullopt;
    if (!raw[m]) continue;
    if (!baseline[m]) {
      report.warnings.push_back(content.id + ": " + names[m] +
                                " undefined on more than half of the shuffles");
      continue;
    }
    if (baseline[m]->skipped > 0) {
      report.warnings.push_back(content.id + ": " + names[m] + " skipped on " +
                                std::to_string(baseline[m]->skipped) + " shuffles");
    }
    try {
      const NormalizedValue nv = normalize(*raw[m], *baseline[m], names[m]);
      values[col + "_norm"] = nv.value;
      values[col + "_norm_err"] = nv.error;
    } catch (const UndefinedMetricError& e) {
      report.warnings.push_back(content.id + ": " + e.what());
    }
  }
  return report;
}

}  // namespace stylonet
