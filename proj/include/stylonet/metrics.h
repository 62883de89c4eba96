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

#ifndef STYLONET_METRICS_H_
#define STYLONET_METRICS_H_

// Topological measurements of word networks: degree statistics,
// self-avoiding-walk accessibility, betweenness, assortativity, clustering
// and shortest-path lengths, plus their per-document summaries.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stylonet/network.h"

namespace stylonet {

struct DegreeStats {
  std::vector<double> degree;                            // k_i
  std::vector<std::optional<double>> neighbor_degree;    // k^(n)_i
  std::vector<std::optional<double>> neighbor_degree_dev;  // dk^(n)_i
};

DegreeStats degree_stats(const WordNetwork& net);

// Destination distribution of an h-step self-avoiding walk: at every step
// the walker picks uniformly among the neighbours it has not yet visited.
// Walks that get stuck before h steps carry no mass; the surviving mass is
// renormalized to 1. Exact (no sampling).
struct WalkDistribution {
  std::vector<std::pair<NodeId, double>> probability;  // sorted by node
  double surviving_mass = 0.0;  // before renormalization

  std::size_t support() const { return probability.size(); }
};

WalkDistribution saw_distribution(const WordNetwork& net, NodeId start,
                                  unsigned steps);

// Entropy (natural log) of a walk distribution; 0 for an empty one.
double diversity(const WalkDistribution& dist);

// exp(diversity). 0 when no walk of length h survives.
double accessibility(const WordNetwork& net, NodeId start, unsigned steps);

// B_i = N^-2 sum over ordered pairs (s, t), s != t, both != i, of the
// fraction of s-t geodesics with i as an interior node.
std::vector<double> betweenness(const WordNetwork& net);

// Degree assortativity over the edge set; nullopt when the denominator
// vanishes (all edge endpoints share one degree) or there are no edges.
std::optional<double> assortativity(const WordNetwork& net);

struct Clustering {
  std::vector<double> local;  // c_i, 0 when k_i < 2
  double global = 0.0;        // 3 * triangles / connected triples
};

Clustering clustering(const WordNetwork& net);

struct PathLengths {
  std::vector<std::optional<double>> node;  // mean distance to reachable nodes
  std::optional<double> network;            // mean over reachable ordered pairs
  double unreachable_fraction = 0.0;        // of the N(N-1) ordered pairs
};

PathLengths shortest_paths(const WordNetwork& net);

// Per-node measurements of one network.
struct NodeMetricTable {
  std::vector<unsigned> levels;  // accessibility steps h
  DegreeStats degrees;
  std::vector<std::vector<double>> accessibility;  // [level][node]
  std::vector<std::vector<double>> diversity;      // [level][node]
  std::vector<std::vector<std::size_t>> walk_level;      // n_h, walk support
  std::vector<std::vector<std::size_t>> distance_level;  // nodes at distance h
  std::vector<double> betweenness;
  Clustering clustering;
  PathLengths paths;
  std::optional<double> assortativity;
};

NodeMetricTable compute_node_metrics(const WordNetwork& net,
                                     const std::vector<unsigned>& levels);

struct MetricSummary {
  std::optional<double> mean;      // <X> over defined nodes
  std::optional<double> top_mean;  // <X>* over the eta most frequent lemmas
  std::optional<double> stddev;    // population
  std::optional<double> skewness;  // m3 / m2^(3/2), 0 when m2 == 0
  bool top_fallback = false;       // vocabulary smaller than eta
};

// Throws ArgumentError when eta == 0 or sizes differ.
MetricSummary summarize(const std::vector<std::optional<double>>& values,
                        const WordNetwork& net, std::size_t eta);
MetricSummary summarize(const std::vector<double>& values,
                        const WordNetwork& net, std::size_t eta);

// Indices of the eta most frequent nodes, ties broken by lemma.
std::vector<NodeId> most_frequent(const WordNetwork& net, std::size_t eta);

}  // namespace stylonet

#endif  // STYLONET_METRICS_H_
