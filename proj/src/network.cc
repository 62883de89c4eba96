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

#include "stylonet/network.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "stylonet/error.h"
#include "stylonet/parallel.h"
#include "stylonet/random.h"

namespace stylonet {

WordNetwork WordNetwork::from_edges(
    std::vector<std::string> lemmas, std::vector<std::size_t> counts,
    const std::vector<std::pair<NodeId, NodeId>>& edges) {
  if (lemmas.size() != counts.size()) {
    throw ArgumentError("WordNetwork: lemma and count lists differ in length");
  }
  const std::size_t n = lemmas.size();
  std::vector<std::vector<NodeId>> adj(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw ArgumentError("WordNetwork: node id out of range");
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  WordNetwork net;
  net.lemmas_ = std::move(lemmas);
  net.counts_ = std::move(counts);
  net.offsets_.assign(1, 0);
  std::size_t degree_sum = 0;
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    net.adjacency_.insert(net.adjacency_.end(), list.begin(), list.end());
    degree_sum += list.size();
    net.offsets_.push_back(net.adjacency_.size());
  }
  net.edge_count_ = degree_sum / 2;
  return net;
}

WordNetwork WordNetwork::from_edges(
    std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<std::string> names;
  const std::size_t width = n < 2 ? 1 : std::to_string(n - 1).size();
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = std::to_string(i);
    names.push_back(std::string(width - name.size(), '0') + name);
  }
  return from_edges(std::move(names), std::vector<std::size_t>(n, 1), edges);
}

bool WordNetwork::adjacent(NodeId i, NodeId j) const {
  const auto list = neighbors(i);
  return std::binary_search(list.begin(), list.end(), j);
}

std::optional<NodeId> WordNetwork::find(std::string_view lemma) const {
  const auto it = std::lower_bound(lemmas_.begin(), lemmas_.end(), lemma);
  if (it == lemmas_.end() || *it != lemma) return std::nullopt;
  return static_cast<NodeId>(it - lemmas_.begin());
}

std::vector<std::pair<NodeId, NodeId>> WordNetwork::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId i = 0; i < node_count(); ++i) {
    for (NodeId j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

WordNetwork build_adjacency_network(const Document& doc) {
  if (doc.size() < 2) {
    throw DegenerateInputError("document '" + doc.id +
                               "' has fewer than two tokens; no network");
  }
  std::map<std::string_view, std::size_t> counts;
  for (const Token& t : doc.tokens) ++counts[t.lemma];
  std::vector<std::string> lemmas;
  std::vector<std::size_t> freq;
  std::map<std::string_view, NodeId> ids;
  for (const auto& [lemma, c] : counts) {
    ids.emplace(lemma, static_cast<NodeId>(lemmas.size()));
    lemmas.emplace_back(lemma);
    freq.push_back(c);
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(doc.size());
  NodeId prev = ids.at(doc.tokens.front().lemma);
  for (std::size_t i = 1; i < doc.size(); ++i) {
    const NodeId cur = ids.at(doc.tokens[i].lemma);
    if (cur != prev) edges.emplace_back(prev, cur);
    prev = cur;
  }
  return WordNetwork::from_edges(std::move(lemmas), std::move(freq), edges);
}

void write_edge_list(const WordNetwork& net, std::ostream& out) {
  for (auto [i, j] : net.edges()) {
    out << net.lemma(i) << '\t' << net.lemma(j) << '\n';
  }
}

void write_node_table(const WordNetwork& net, std::ostream& out) {
  for (NodeId i = 0; i < net.node_count(); ++i) {
    out << net.lemma(i) << '\t' << net.count(i) << '\n';
  }
}

std::vector<std::optional<BaselineStats>> baseline_ensemble(
    const Document& doc, std::size_t realizations, std::uint64_t seed,
    const std::vector<NetworkMetric>& metrics, unsigned threads) {
  return baseline_ensemble(
      doc, realizations, seed,
      [&](const WordNetwork& net) {
        std::vector<std::optional<double>> v;
        v.reserve(metrics.size());
        for (const NetworkMetric& metric : metrics) v.push_back(metric(net));
        return v;
      },
      metrics.size(), threads);
}

std::vector<std::optional<BaselineStats>> baseline_ensemble(
    const Document& doc, std::size_t realizations, std::uint64_t seed,
    const NetworkMetricSet& metrics, std::size_t metric_count, unsigned threads) {
  if (realizations < 2) {
    throw ArgumentError("baseline_ensemble: need at least 2 realizations");
  }
  // values[r][m]
  std::vector<std::vector<std::optional<double>>> values(realizations);
  parallel_for(realizations, threads, [&](std::size_t r) {
    const Document shuffled = shuffle_tokens(doc, derive_seed(seed, r));
    values[r] = metrics(build_adjacency_network(shuffled));
    if (values[r].size() != metric_count) {
      throw ArgumentError("baseline_ensemble: metric set returned wrong count");
    }
  });

  std::vector<std::optional<BaselineStats>> out;
  out.reserve(metric_count);
  for (std::size_t m = 0; m < metric_count; ++m) {
    BaselineStats stats;
    stats.realizations = realizations;
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t r = 0; r < realizations; ++r) {
      if (values[r][m] && std::isfinite(*values[r][m])) {
        sum += *values[r][m];
        ++n;
      } else {
        ++stats.skipped;
      }
    }
    if (2 * stats.skipped > realizations || n == 0) {
      out.push_back(std::nullopt);
      continue;
    }
    stats.mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t r = 0; r < realizations; ++r) {
      if (values[r][m] && std::isfinite(*values[r][m])) {
        const double d = *values[r][m] - stats.mean;
        ss += d * d;
      }
    }
    stats.stddev = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    out.push_back(stats);
  }
  return out;
}

BaselineStats baseline_ensemble(const Document& doc, std::size_t realizations,
                                std::uint64_t seed, const NetworkMetric& metric,
                                const std::string& metric_name) {
  auto result = baseline_ensemble(doc, realizations, seed,
                                  std::vector<NetworkMetric>{metric});
  if (!result.front()) {
    throw UndefinedMetricError("baseline for '" + metric_name +
                               "': undefined on more than half of the shuffles");
  }
  return *result.front();
}

NormalizedValue normalize(double raw, const BaselineStats& stats,
                          const std::string& metric_name) {
  if (stats.mean == 0.0) {
    throw UndefinedMetricError("normalize '" + metric_name +
                               "': shuffled baseline mean is zero");
  }
  NormalizedValue out;
  out.value = raw / stats.mean;
  out.error = std::abs(stats.stddev / stats.mean * out.value);
  return out;
}

}  // namespace stylonet
