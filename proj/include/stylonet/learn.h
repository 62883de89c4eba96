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

#ifndef STYLONET_LEARN_H_
#define STYLONET_LEARN_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stylonet {

// Instances with a shared attribute schema. Values are row-major.
struct LabeledDataset {
  std::vector<std::string> attributes;
  std::vector<std::string> classes;  // class names; labels index into this
  std::vector<std::string> ids;
  std::vector<std::size_t> labels;
  std::vector<double> values;

  std::size_t size() const { return labels.size(); }
  std::size_t dims() const { return attributes.size(); }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * dims(), dims()};
  }
  double at(std::size_t i, std::size_t a) const { return values[i * dims() + a]; }

  void add(std::string id, std::size_t label, std::span<const double> row);
  LabeledDataset subset(std::span<const std::size_t> rows) const;
  // Throws ArgumentError for an unknown attribute.
  std::size_t attribute_index(const std::string& name) const;
};

// Per-instance, per-class strengths; every row sums to 1.
class MembershipMatrix {
 public:
  MembershipMatrix() = default;
  MembershipMatrix(std::size_t rows, std::size_t classes)
      : rows_(rows), classes_(classes), data_(rows * classes, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t classes() const { return classes_; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * classes_, classes_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * classes_, classes_};
  }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * classes_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * classes_ + j]; }
  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  bool operator==(const MembershipMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t classes_ = 0;
  std::vector<double> data_;
};

// Index of the largest entry; the lowest index wins ties.
std::size_t argmax(std::span<const double> row);

struct StandardizedPair {
  LabeledDataset train;
  LabeledDataset test;
  std::vector<std::string> dropped;  // zero-variance attributes in train
};

// Shifts and scales every attribute by the training mean and population
// standard deviation; attributes constant in `train` are dropped from both.
StandardizedPair standardize(const LabeledDataset& train, const LabeledDataset& test);

// Distance-weighted k nearest neighbours, w = 1 / (d^2 + 1e-9); distance
// ties go to the lower training index. Expects standardized inputs.
MembershipMatrix fuzzy_knn_memberships(const LabeledDataset& train,
                                       const LabeledDataset& test, std::size_t k);

// Softmax of minus the Euclidean distance to each class centroid.
MembershipMatrix nearest_centroid_memberships(const LabeledDataset& train,
                                              const LabeledDataset& test);

class MembershipClassifier {
 public:
  virtual ~MembershipClassifier() = default;
  virtual std::string name() const = 0;
  virtual MembershipMatrix predict(const LabeledDataset& train,
                                   const LabeledDataset& test) const = 0;
};

class FuzzyKnnClassifier : public MembershipClassifier {
 public:
  explicit FuzzyKnnClassifier(std::size_t k) : k_(k) {}
  std::string name() const override { return "fknn"; }
  MembershipMatrix predict(const LabeledDataset& train,
                           const LabeledDataset& test) const override {
    return fuzzy_knn_memberships(train, test, k_);
  }

 private:
  std::size_t k_;
};

class NearestCentroidClassifier : public MembershipClassifier {
 public:
  std::string name() const override { return "centroid"; }
  MembershipMatrix predict(const LabeledDataset& train,
                           const LabeledDataset& test) const override {
    return nearest_centroid_memberships(train, test);
  }
};

// "fknn" or "centroid".
std::unique_ptr<MembershipClassifier> make_classifier(const std::string& name,
                                                      std::size_t k);

// Shannon entropy (bits) of the class distribution of `labels`.
double class_entropy(std::span<const std::size_t> labels, std::size_t classes);

// Information gain (bits) of one attribute, discretized into `bins`
// equal-width bins over its observed range. Throws ArgumentError when
// bins < 2 or the attribute is unknown.
double info_gain(const LabeledDataset& data, const std::string& attribute,
                 std::size_t bins = 10);

// All attributes by decreasing gain (ties by name).
std::vector<std::pair<std::string, double>> info_gain_ranking(
    const LabeledDataset& data, std::size_t bins = 10);

struct FoldPlan {
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  std::vector<std::size_t> assignment;  // fold of each instance
  std::vector<std::string> warnings;
};

// Stratified assignment: per-class counts differ by at most one between
// folds. Throws ArgumentError when folds < 2.
FoldPlan make_fold_plan(const LabeledDataset& data, std::size_t folds,
                        std::uint64_t seed);

struct CvResult {
  MembershipMatrix memberships;  // row i belongs to instance i
  std::vector<std::size_t> predictions;
  std::vector<double> fold_accuracy;
  double accuracy = 0.0;  // pooled over all instances
  std::vector<std::string> dropped;  // attributes dropped in some fold
};

// Trains on the complement of each fold (standardized with that training
// part) and predicts the fold. Throws ArgumentError for fewer than two
// classes or a plan that does not match the data.
CvResult cross_validate(const LabeledDataset& data,
                        const MembershipClassifier& classifier,
                        const FoldPlan& plan);

// Fraction of rows whose argmax equals the label.
double accuracy(const MembershipMatrix& m, std::span<const std::size_t> labels);
double accuracy(std::span<const std::size_t> predictions,
                std::span<const std::size_t> labels);

}  // namespace stylonet

#endif  // STYLONET_LEARN_H_
