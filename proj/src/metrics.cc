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

#include "stylonet/metrics.h"

#include <algorithm>
#include <cmath>

#include "stylonet/error.h"
#include "stylonet/simd.h"

namespace stylonet {

DegreeStats degree_stats(const WordNetwork& net) {
  const std::size_t n = net.node_count();
  if (n == 0) throw ArgumentError("degree_stats: empty network");
  DegreeStats out;
  out.degree.resize(n);
  out.neighbor_degree.resize(n);
  out.neighbor_degree_dev.resize(n);
  for (NodeId i = 0; i < n; ++i) out.degree[i] = static_cast<double>(net.degree(i));
  for (NodeId i = 0; i < n; ++i) {
    const auto nb = net.neighbors(i);
    if (nb.empty()) continue;
    const double k = static_cast<double>(nb.size());
    double s = 0.0;
    for (NodeId j : nb) s += out.degree[j];
    const double mean = s / k;
    double ss = 0.0;
    for (NodeId j : nb) {
      const double d = out.degree[j] - mean;
      ss += d * d;
    }
    out.neighbor_degree[i] = mean;
    out.neighbor_degree_dev[i] = std::sqrt(ss / k);
  }
  return out;
}

namespace {

// Scratch space for walk enumeration; one per thread of work.
class WalkEngine {
 public:
  explicit WalkEngine(const WordNetwork& net)
      : net_(net),
        p2_(net.node_count(), 0.0),
        w3_(net.node_count(), 0.0),
        out_(net.node_count(), 0.0),
        mark_(net.node_count(), 0),
        visited_(net.node_count(), 0) {}

  WalkDistribution run(NodeId start, unsigned steps) {
    if (steps == 0) throw ArgumentError("saw_distribution: steps must be >= 1");
    if (start >= net_.node_count()) {
      throw ArgumentError("saw_distribution: node out of range");
    }
    touched_.clear();
    switch (steps) {
      case 1:
        one_step(start);
        break;
      case 2:
        two_steps(start, out_);
        break;
      case 3:
        three_steps(start);
        break;
      default:
        visited_[start] = 1;
        dfs(start, steps, 1.0);
        visited_[start] = 0;
        break;
    }
    return collect();
  }

 private:
  void add(NodeId m, double p) {
    if (!mark_[m]) {
      mark_[m] = 1;
      touched_.push_back(m);
    }
    out_[m] += p;
  }

  void one_step(NodeId i) {
    const auto nb = net_.neighbors(i);
    for (NodeId j : nb) add(j, 1.0 / static_cast<double>(nb.size()));
  }

  // Mass reaching each node after two self-avoiding steps (unnormalized),
  // accumulated into `dest`; nodes recorded in touched_.
  void two_steps(NodeId i, std::vector<double>& dest) {
    const double ki = static_cast<double>(net_.degree(i));
    for (NodeId j : net_.neighbors(i)) {
      const std::size_t kj = net_.degree(j);
      if (kj < 2) continue;  // dead end after one step
      const double w = 1.0 / (ki * static_cast<double>(kj - 1));
      for (NodeId l : net_.neighbors(j)) {
        if (l == i) continue;
        if (!mark_[l]) {
          mark_[l] = 1;
          touched_.push_back(l);
        }
        dest[l] += w;
      }
    }
  }

  // Walk i -> j -> l -> m. From l the unvisited neighbours are
  // N(l) \ {i, j}; j is always adjacent to l, i only sometimes, so the
  // branching factor c(l) = k_l - 1 - a_il does not depend on j. Let
  // W(l) = P2(l) / c(l). Then
  //   P3(m) = sum_{l in N(m), l != i} [W(l) - [m in N(i)] w(m) / c(l)]
  // where w(m) = 1 / (k_i (k_m - 1)) is the mass of the prefix i -> m. The
  // subtraction removes the walk that would step back onto j = m; it is
  // done per term so a node reached only that way gets exactly zero.
  void three_steps(NodeId i) {
    two_steps(i, p2_);
    std::vector<NodeId> level2;
    level2.swap(touched_);
    for (NodeId l : level2) mark_[l] = 0;

    const double ki = static_cast<double>(net_.degree(i));
    for (NodeId j : net_.neighbors(i)) visited_[j] = 1;  // a_il lookup

    std::vector<NodeId> sources;
    for (NodeId l : level2) {
      const std::size_t kl = net_.degree(l);
      const std::size_t c = kl - 1 - (visited_[l] ? 1 : 0);
      if (c > 0 && p2_[l] > 0.0) {
        w3_[l] = p2_[l] / static_cast<double>(c);
        sources.push_back(l);
      }
    }
    std::vector<NodeId> candidates;
    for (NodeId l : sources) {
      for (NodeId m : net_.neighbors(l)) {
        if (m != i && !mark_[m]) {
          mark_[m] = 1;
          candidates.push_back(m);
        }
      }
    }
    for (NodeId m : candidates) mark_[m] = 0;
    for (NodeId m : candidates) {
      const bool first_level = visited_[m] != 0;
      const double wm =
          first_level ? 1.0 / (ki * static_cast<double>(net_.degree(m) - 1)) : 0.0;
      double p = 0.0;
      for (NodeId l : net_.neighbors(m)) {
        if (l == i || w3_[l] == 0.0) continue;
        double term = w3_[l];
        if (first_level) {
          const std::size_t c = net_.degree(l) - 1 - (visited_[l] ? 1 : 0);
          term -= wm / static_cast<double>(c);
        }
        p += term;
      }
      if (p > 0.0) add(m, p);
    }

    for (NodeId j : net_.neighbors(i)) visited_[j] = 0;
    for (NodeId l : level2) {
      p2_[l] = 0.0;
      w3_[l] = 0.0;
    }
  }

  void dfs(NodeId at, unsigned remaining, double mass) {
    if (remaining == 0) {
      add(at, mass);
      return;
    }
    std::size_t open = 0;
    for (NodeId j : net_.neighbors(at)) open += visited_[j] ? 0 : 1;
    if (open == 0) return;
    const double share = mass / static_cast<double>(open);
    for (NodeId j : net_.neighbors(at)) {
      if (visited_[j]) continue;
      visited_[j] = 1;
      dfs(j, remaining - 1, share);
      visited_[j] = 0;
    }
  }

  WalkDistribution collect() {
    const std::size_t n = net_.node_count();
    if (touched_.size() * 8 > n) {
      touched_.clear();
      for (NodeId m = 0; m < n; ++m) {
        if (mark_[m]) touched_.push_back(m);
      }
    } else {
      std::sort(touched_.begin(), touched_.end());
    }
    WalkDistribution dist;
    double total = 0.0;
    for (NodeId m : touched_) total += out_[m];
    dist.surviving_mass = total;
    dist.probability.reserve(touched_.size());
    for (NodeId m : touched_) {
      if (out_[m] > 0.0) dist.probability.emplace_back(m, out_[m] / total);
      out_[m] = 0.0;
      mark_[m] = 0;
    }
    touched_.clear();
    return dist;
  }

  const WordNetwork& net_;
  std::vector<double> p2_;
  std::vector<double> w3_;
  std::vector<double> out_;
  std::vector<char> mark_;
  std::vector<char> visited_;
  std::vector<NodeId> touched_;
};

struct BfsResult {
  std::vector<std::vector<std::size_t>> level_size;  // [source][distance]
  std::vector<double> betweenness;
  std::vector<std::size_t> reach_count;  // reachable nodes != s
  std::vector<double> distance_sum;
};

// Brandes accumulation from every source. Each source contributes the
// dependencies of all targets t != s, so the totals run over ordered pairs.
BfsResult all_sources_bfs(const WordNetwork& net, unsigned max_level = 0) {
  const std::size_t n = net.node_count();
  BfsResult out;
  out.level_size.assign(n, std::vector<std::size_t>(max_level + 1, 0));
  out.betweenness.assign(n, 0.0);
  out.reach_count.assign(n, 0);
  out.distance_sum.assign(n, 0.0);

  std::vector<long> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<NodeId> queue(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const NodeId v = queue[head++];
      order.push_back(v);
      for (NodeId w : net.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue[tail++] = w;
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (NodeId v : order) {
      if (dist[v] <= static_cast<long>(max_level)) ++out.level_size[s][dist[v]];
      if (v == s) continue;
      ++out.reach_count[s];
      out.distance_sum[s] += static_cast<double>(dist[v]);
    }
    for (NodeId v : order) delta[v] = 0.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : net.neighbors(w)) {
        if (dist[v] == dist[w] - 1) {
          delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
      }
      if (w != s) out.betweenness[w] += delta[w];
    }
  }
  const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  for (double& b : out.betweenness) b *= scale;
  return out;
}

PathLengths paths_from(const BfsResult& bfs, std::size_t n) {
  PathLengths out;
  out.node.resize(n);
  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (bfs.reach_count[i] > 0) {
      out.node[i] = bfs.distance_sum[i] / static_cast<double>(bfs.reach_count[i]);
    }
    total += bfs.distance_sum[i];
    pairs += bfs.reach_count[i];
  }
  if (pairs > 0) out.network = total / static_cast<double>(pairs);
  const std::size_t all = n * (n - 1);
  out.unreachable_fraction =
      all == 0 ? 0.0 : static_cast<double>(all - pairs) / static_cast<double>(all);
  return out;
}

}  // namespace

WalkDistribution saw_distribution(const WordNetwork& net, NodeId start,
                                  unsigned steps) {
  WalkEngine engine(net);
  return engine.run(start, steps);
}

double diversity(const WalkDistribution& dist) {
  double h = 0.0;
  for (const auto& [node, p] : dist.probability) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double accessibility(const WordNetwork& net, NodeId start, unsigned steps) {
  const WalkDistribution dist = saw_distribution(net, start, steps);
  if (dist.probability.empty()) return 0.0;
  return std::exp(diversity(dist));
}

std::vector<double> betweenness(const WordNetwork& net) {
  return all_sources_bfs(net).betweenness;
}

std::optional<double> assortativity(const WordNetwork& net) {
  const auto edges = net.edges();
  if (edges.empty()) return std::nullopt;
  // Integer sums keep the degenerate-denominator test exact. With
  // S1 = sum k_i k_j, S2 = sum (k_i + k_j), S3 = sum (k_i^2 + k_j^2):
  //   r = (4e S1 - S2^2) / (2e S3 - S2^2).
  __int128 s1 = 0, s2 = 0, s3 = 0;
  for (auto [i, j] : edges) {
    const __int128 ki = static_cast<__int128>(net.degree(i));
    const __int128 kj = static_cast<__int128>(net.degree(j));
    s1 += ki * kj;
    s2 += ki + kj;
    s3 += ki * ki + kj * kj;
  }
  const __int128 e = static_cast<__int128>(edges.size());
  const __int128 num = 4 * e * s1 - s2 * s2;
  const __int128 den = 2 * e * s3 - s2 * s2;
  if (den == 0) return std::nullopt;
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

Clustering clustering(const WordNetwork& net) {
  const std::size_t n = net.node_count();
  Clustering out;
  out.local.assign(n, 0.0);
  std::vector<char> mark(n, 0);
  double closed = 0.0;   // 3 x triangles
  double triples = 0.0;  // connected triples
  for (NodeId i = 0; i < n; ++i) {
    const auto nb = net.neighbors(i);
    const std::size_t k = nb.size();
    if (k < 2) continue;
    for (NodeId j : nb) mark[j] = 1;
    std::size_t links = 0;
    for (NodeId j : nb) {
      for (NodeId l : net.neighbors(j)) {
        if (l > j && mark[l]) ++links;
      }
    }
    for (NodeId j : nb) mark[j] = 0;
    const double possible = static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
    out.local[i] = static_cast<double>(links) / possible;
    closed += static_cast<double>(links);
    triples += possible;
  }
  out.global = triples > 0.0 ? closed / triples : 0.0;
  return out;
}

PathLengths shortest_paths(const WordNetwork& net) {
  return paths_from(all_sources_bfs(net), net.node_count());
}

NodeMetricTable compute_node_metrics(const WordNetwork& net,
                                     const std::vector<unsigned>& levels) {
  const std::size_t n = net.node_count();
  NodeMetricTable table;
  table.levels = levels;
  table.degrees = degree_stats(net);

  const unsigned max_level =
      levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
  const BfsResult bfs = all_sources_bfs(net, max_level);

  WalkEngine engine(net);
  for (unsigned h : levels) {
    std::vector<double> acc(n), div(n);
    std::vector<std::size_t> walk(n), dist_level(n);
    for (NodeId i = 0; i < n; ++i) {
      const WalkDistribution d = engine.run(i, h);
      div[i] = diversity(d);
      acc[i] = d.probability.empty() ? 0.0 : std::exp(div[i]);
      walk[i] = d.support();
      dist_level[i] = bfs.level_size[i][h];
    }
    table.accessibility.push_back(std::move(acc));
    table.diversity.push_back(std::move(div));
    table.walk_level.push_back(std::move(walk));
    table.distance_level.push_back(std::move(dist_level));
  }

  table.betweenness = bfs.betweenness;
  table.paths = paths_from(bfs, n);
  table.clustering = clustering(net);
  table.assortativity = assortativity(net);
  return table;
}

std::vector<NodeId> most_frequent(const WordNetwork& net, std::size_t eta) {
  std::vector<NodeId> ids(net.node_count());
  for (NodeId i = 0; i < ids.size(); ++i) ids[i] = i;
  // Node ids follow lemma order, so the id breaks frequency ties.
  std::sort(ids.begin(), ids.end(), [&](NodeId a, NodeId b) {
    if (net.count(a) != net.count(b)) return net.count(a) > net.count(b);
    return a < b;
  });
  if (ids.size() > eta) ids.resize(eta);
  return ids;
}

MetricSummary summarize(const std::vector<std::optional<double>>& values,
                        const WordNetwork& net, std::size_t eta) {
  if (eta == 0) throw ArgumentError("summarize: eta must be >= 1");
  if (values.size() != net.node_count()) {
    throw ArgumentError("summarize: value count differs from node count");
  }
  MetricSummary out;
  std::vector<double> defined;
  defined.reserve(values.size());
  for (const auto& v : values) {
    if (v) defined.push_back(*v);
  }
  if (!defined.empty()) {
    const double n = static_cast<double>(defined.size());
    const double mean = simd::sum(defined) / n;
    double m2 = 0.0, m3 = 0.0;
    for (double v : defined) {
      const double d = v - mean;
      m2 += d * d;
      m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    out.mean = mean;
    out.stddev = std::sqrt(m2);
    out.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
  }

  out.top_fallback = net.node_count() < eta;
  double top = 0.0;
  std::size_t top_n = 0;
  for (NodeId i : most_frequent(net, eta)) {
    if (values[i]) {
      top += *values[i];
      ++top_n;
    }
  }
  if (top_n > 0) out.top_mean = top / static_cast<double>(top_n);
  return out;
}

MetricSummary summarize(const std::vector<double>& values,
                        const WordNetwork& net, std::size_t eta) {
  return summarize(std::vector<std::optional<double>>(values.begin(), values.end()),
                   net, eta);
}

}  // namespace stylonet
