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

#ifndef STYLONET_NETWORK_H_
#define STYLONET_NETWORK_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stylonet/text.h"

namespace stylonet {

using NodeId = std::uint32_t;

// Undirected simple graph over the distinct lemmas of a document. Nodes are
// numbered in lexicographic lemma order; adjacency lists are sorted.
// Immutable after construction.
class WordNetwork {
 public:
  WordNetwork() = default;

  // From explicit parts; edges are deduplicated and self-loops dropped.
  // Mostly useful for tests and synthetic topologies.
  static WordNetwork from_edges(std::vector<std::string> lemmas,
                                std::vector<std::size_t> counts,
                                const std::vector<std::pair<NodeId, NodeId>>& edges);
  // Unlabelled graph with unit counts; node i is named i in decimal, zero
  // padded so that names sort in id order.
  static WordNetwork from_edges(std::size_t n,
                                const std::vector<std::pair<NodeId, NodeId>>& edges);

  std::size_t node_count() const { return lemmas_.size(); }   // N
  std::size_t edge_count() const { return edge_count_; }      // e
  std::size_t degree(NodeId i) const {
    return offsets_[i + 1] - offsets_[i];
  }
  std::span<const NodeId> neighbors(NodeId i) const {
    return {adjacency_.data() + offsets_[i], degree(i)};
  }
  bool adjacent(NodeId i, NodeId j) const;

  const std::string& lemma(NodeId i) const { return lemmas_[i]; }
  std::size_t count(NodeId i) const { return counts_[i]; }  // N_i
  const std::vector<std::string>& lemmas() const { return lemmas_; }
  const std::vector<std::size_t>& counts() const { return counts_; }
  std::optional<NodeId> find(std::string_view lemma) const;

  // Edge list with i < j, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  std::vector<std::string> lemmas_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::size_t edge_count_ = 0;
};

// One node per distinct lemma; an edge for every pair of consecutive tokens
// with different lemmas. Throws DegenerateInputError for fewer than two
// tokens.
WordNetwork build_adjacency_network(const Document& doc);

// Writes "lemma1<TAB>lemma2" lines and "lemma<TAB>count" lines.
void write_edge_list(const WordNetwork& net, std::ostream& out);
void write_node_table(const WordNetwork& net, std::ostream& out);

struct BaselineStats {
  double mean = 0.0;    // mu over the accepted realizations
  double stddev = 0.0;  // sample standard deviation (0 with one realization)
  std::size_t realizations = 0;  // R requested
  std::size_t skipped = 0;       // realizations where the metric was undefined
};

struct NormalizedValue {
  double value = 0.0;  // X = X~ / mu
  double error = 0.0;  // eps = (sigma / mu) X
};

// Any scalar computed from a network; nullopt when undefined on it.
using NetworkMetric = std::function<std::optional<double>(const WordNetwork&)>;

// Several scalars computed in one pass over a network.
using NetworkMetricSet =
    std::function<std::vector<std::optional<double>>(const WordNetwork&)>;

// Evaluates `metrics` on R frequency-preserving shuffles of `doc`
// (realization r uses derive_seed(seed, r)). Results are aggregated in
// realization order, so the outcome is independent of `threads`.
// A metric undefined on more than R/2 realizations yields nullopt for that
// metric. Throws ArgumentError when R < 2.
std::vector<std::optional<BaselineStats>> baseline_ensemble(
    const Document& doc, std::size_t realizations, std::uint64_t seed,
    const std::vector<NetworkMetric>& metrics, unsigned threads = 1);
std::vector<std::optional<BaselineStats>> baseline_ensemble(
    const Document& doc, std::size_t realizations, std::uint64_t seed,
    const NetworkMetricSet& metrics, std::size_t metric_count,
    unsigned threads = 1);

// Single-metric form; throws UndefinedMetricError naming `metric_name` when
// too many realizations are degenerate.
BaselineStats baseline_ensemble(const Document& doc, std::size_t realizations,
                                std::uint64_t seed, const NetworkMetric& metric,
                                const std::string& metric_name = "metric");

// Throws UndefinedMetricError naming `metric_name` when mu == 0.
NormalizedValue normalize(double raw, const BaselineStats& stats,
                          const std::string& metric_name = "metric");

}  // namespace stylonet

#endif  // STYLONET_NETWORK_H_
