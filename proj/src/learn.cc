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

#include "stylonet/learn.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "stylonet/error.h"
#include "stylonet/random.h"
#include "stylonet/simd.h"

namespace stylonet {

namespace {

constexpr double kDistanceFloor = 1e-9;  // xi in the kNN weights

}  // namespace

void LabeledDataset::add(std::string id, std::size_t label,
                         std::span<const double> row) {
  if (row.size() != dims()) {
    throw ArgumentError("LabeledDataset::add: row has " + std::to_string(row.size()) +
                        " values, schema has " + std::to_string(dims()));
  }
  if (label >= classes.size()) throw ArgumentError("LabeledDataset::add: bad label");
  ids.push_back(std::move(id));
  labels.push_back(label);
  values.insert(values.end(), row.begin(), row.end());
}

LabeledDataset LabeledDataset::subset(std::span<const std::size_t> rows) const {
  LabeledDataset out;
  out.attributes = attributes;
  out.classes = classes;
  out.values.reserve(rows.size() * dims());
  for (std::size_t r : rows) out.add(ids[r], labels[r], row(r));
  return out;
}

std::size_t LabeledDataset::attribute_index(const std::string& name) const {
  const auto it = std::find(attributes.begin(), attributes.end(), name);
  if (it == attributes.end()) throw ArgumentError("unknown attribute '" + name + "'");
  return static_cast<std::size_t>(it - attributes.begin());
}

std::size_t argmax(std::span<const double> row) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < row.size(); ++j) {
    if (row[j] > row[best]) best = j;
  }
  return best;
}

StandardizedPair standardize(const LabeledDataset& train, const LabeledDataset& test) {
  if (train.attributes != test.attributes) {
    throw ArgumentError("standardize: train and test schemas differ");
  }
  const std::size_t d = train.dims();
  std::vector<std::size_t> keep;
  std::vector<double> mean, scale;
  StandardizedPair out;
  for (std::size_t a = 0; a < d; ++a) {
    bool constant = true;
    double s = 0.0;
    for (std::size_t i = 0; i < train.size(); ++i) {
      s += train.at(i, a);
      if (train.at(i, a) != train.at(0, a)) constant = false;
    }
    if (constant) {
      out.dropped.push_back(train.attributes[a]);
      continue;
    }
    const double m = s / static_cast<double>(train.size());
    double ss = 0.0;
    for (std::size_t i = 0; i < train.size(); ++i) {
      const double dv = train.at(i, a) - m;
      ss += dv * dv;
    }
    keep.push_back(a);
    mean.push_back(m);
    scale.push_back(std::sqrt(ss / static_cast<double>(train.size())));
  }
  const auto transform = [&](const LabeledDataset& in) {
    LabeledDataset t;
    t.classes = in.classes;
    for (std::size_t a : keep) t.attributes.push_back(in.attributes[a]);
    std::vector<double> row(keep.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      for (std::size_t c = 0; c < keep.size(); ++c) {
        row[c] = (in.at(i, keep[c]) - mean[c]) / scale[c];
      }
      t.add(in.ids[i], in.labels[i], row);
    }
    return t;
  };
  out.train = transform(train);
  out.test = transform(test);
  return out;
}

MembershipMatrix fuzzy_knn_memberships(const LabeledDataset& train,
                                       const LabeledDataset& test, std::size_t k) {
  if (train.size() == 0) throw ArgumentError("fuzzy kNN: empty training set");
  if (k == 0 || k > train.size()) {
    throw ArgumentError("fuzzy kNN: k must be in [1, " +
                        std::to_string(train.size()) + "]");
  }
  if (train.dims() != test.dims()) throw ArgumentError("fuzzy kNN: schema mismatch");
  MembershipMatrix out(test.size(), train.classes.size());
  std::vector<std::pair<double, std::size_t>> dist(train.size());
  for (std::size_t i = 0; i < test.size(); ++i) {
    for (std::size_t n = 0; n < train.size(); ++n) {
      dist[n] = {simd::squared_distance(test.row(i), train.row(n)), n};
    }
    std::partial_sort(dist.begin(), dist.begin() + static_cast<long>(k), dist.end());
    double total = 0.0;
    auto row = out.row(i);
    for (std::size_t r = 0; r < k; ++r) {
      const double w = 1.0 / (dist[r].first + kDistanceFloor);
      row[train.labels[dist[r].second]] += w;
      total += w;
    }
    for (double& m : row) m /= total;
  }
  return out;
}

MembershipMatrix nearest_centroid_memberships(const LabeledDataset& train,
                                              const LabeledDataset& test) {
  const std::size_t c = train.classes.size();
  const std::size_t d = train.dims();
  if (train.dims() != test.dims()) throw ArgumentError("nearest centroid: schema mismatch");
  std::vector<double> centroids(c * d, 0.0);
  std::vector<std::size_t> counts(c, 0);
  for (std::size_t n = 0; n < train.size(); ++n) {
    const std::size_t y = train.labels[n];
    simd::axpy(1.0, train.row(n), std::span<double>(centroids.data() + y * d, d));
    ++counts[y];
  }
  for (std::size_t y = 0; y < c; ++y) {
    if (counts[y] == 0) {
      throw ArgumentError("nearest centroid: class '" + train.classes[y] +
                          "' has no training instance");
    }
    for (std::size_t a = 0; a < d; ++a) centroids[y * d + a] /= static_cast<double>(counts[y]);
  }
  MembershipMatrix out(test.size(), c);
  std::vector<double> dist(c);
  for (std::size_t i = 0; i < test.size(); ++i) {
    for (std::size_t y = 0; y < c; ++y) {
      dist[y] = std::sqrt(simd::squared_distance(
          test.row(i), std::span<const double>(centroids.data() + y * d, d)));
    }
    const double nearest = *std::min_element(dist.begin(), dist.end());
    double total = 0.0;
    auto row = out.row(i);
    for (std::size_t y = 0; y < c; ++y) {
      row[y] = std::exp(-(dist[y] - nearest));
      total += row[y];
    }
    for (double& m : row) m /= total;
  }
  return out;
}

std::unique_ptr<MembershipClassifier> make_classifier(const std::string& name,
                                                      std::size_t k) {
  if (name == "fknn") return std::make_unique<FuzzyKnnClassifier>(k);
  if (name == "centroid") return std::make_unique<NearestCentroidClassifier>();
  throw ArgumentError("unknown classifier '" + name + "' (expected fknn or centroid)");
}

double class_entropy(std::span<const std::size_t> labels, std::size_t classes) {
  if (labels.empty()) return 0.0;
  std::vector<std::size_t> counts(classes, 0);
  for (std::size_t y : labels) ++counts[y];
  double h = 0.0;
  const double n = static_cast<double>(labels.size());
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

double info_gain(const LabeledDataset& data, const std::string& attribute,
                 std::size_t bins) {
  if (bins < 2) throw ArgumentError("info_gain: bins must be >= 2");
  const std::size_t a = data.attribute_index(attribute);
  if (data.size() == 0) return 0.0;
  double lo = data.at(0, a), hi = lo;
  for (std::size_t i = 1; i < data.size(); ++i) {
    lo = std::min(lo, data.at(i, a));
    hi = std::max(hi, data.at(i, a));
  }
  if (lo == hi) return 0.0;
  std::vector<std::vector<std::size_t>> groups(bins);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double pos = (data.at(i, a) - lo) / (hi - lo) * static_cast<double>(bins);
    const std::size_t b = std::min(bins - 1, static_cast<std::size_t>(pos));
    groups[b].push_back(data.labels[i]);
  }
  const double n = static_cast<double>(data.size());
  double conditional = 0.0;
  for (const auto& g : groups) {
    conditional += static_cast<double>(g.size()) / n *
                   class_entropy(g, data.classes.size());
  }
  return std::max(0.0, class_entropy(data.labels, data.classes.size()) - conditional);
}

std::vector<std::pair<std::string, double>> info_gain_ranking(
    const LabeledDataset& data, std::size_t bins) {
  std::vector<std::pair<std::string, double>> out;
  for (const std::string& name : data.attributes) {
    out.emplace_back(name, info_gain(data, name, bins));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  return out;
}

FoldPlan make_fold_plan(const LabeledDataset& data, std::size_t folds,
                        std::uint64_t seed) {
  if (folds < 2) throw ArgumentError("fold count must be >= 2");
  FoldPlan plan;
  plan.folds = folds;
  plan.seed = seed;
  plan.assignment.assign(data.size(), 0);
  std::size_t offset = 0;
  for (std::size_t y = 0; y < data.classes.size(); ++y) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data.labels[i] == y) members.push_back(i);
    }
    if (!members.empty() && members.size() < folds) {
      plan.warnings.push_back("class '" + data.classes[y] + "' has " +
                              std::to_string(members.size()) + " instances for " +
                              std::to_string(folds) + " folds; some folds lack it");
    }
    Rng rng(derive_seed(seed, y));
    rng.shuffle(std::span<std::size_t>(members));
    for (std::size_t r = 0; r < members.size(); ++r) {
      plan.assignment[members[r]] = (offset + r) % folds;
    }
    offset += members.size();
  }
  return plan;
}

double accuracy(std::span<const std::size_t> predictions,
                std::span<const std::size_t> labels) {
  if (labels.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) hits += predictions[i] == labels[i];
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

double accuracy(const MembershipMatrix& m, std::span<const std::size_t> labels) {
  std::vector<std::size_t> pred(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) pred[i] = argmax(m.row(i));
  return accuracy(pred, labels);
}

CvResult cross_validate(const LabeledDataset& data,
                        const MembershipClassifier& classifier,
                        const FoldPlan& plan) {
  std::set<std::size_t> present(data.labels.begin(), data.labels.end());
  if (data.classes.size() < 2 || present.size() < 2) {
    throw ArgumentError("cross-validation needs at least two classes");
  }
  if (plan.assignment.size() != data.size()) {
    throw ArgumentError("fold plan does not match the dataset size");
  }
  CvResult out;
  out.memberships = MembershipMatrix(data.size(), data.classes.size());
  out.predictions.assign(data.size(), 0);
  std::set<std::string> dropped;
  for (std::size_t f = 0; f < plan.folds; ++f) {
    std::vector<std::size_t> train_rows, test_rows;
    for (std::size_t i = 0; i < data.size(); ++i) {
      (plan.assignment[i] == f ? test_rows : train_rows).push_back(i);
    }
    if (test_rows.empty()) continue;
    StandardizedPair pair = standardize(data.subset(train_rows), data.subset(test_rows));
    dropped.insert(pair.dropped.begin(), pair.dropped.end());
    const MembershipMatrix m = classifier.predict(pair.train, pair.test);
    std::size_t hits = 0;
    for (std::size_t r = 0; r < test_rows.size(); ++r) {
      const std::size_t i = test_rows[r];
      std::copy(m.row(r).begin(), m.row(r).end(), out.memberships.row(i).begin());
      out.predictions[i] = argmax(m.row(r));
      hits += out.predictions[i] == data.labels[i];
    }
    out.fold_accuracy.push_back(static_cast<double>(hits) /
                                static_cast<double>(test_rows.size()));
  }
  out.accuracy = accuracy(out.predictions, data.labels);
  out.dropped.assign(dropped.begin(), dropped.end());
  return out;
}

}  // namespace stylonet
