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

#include "stylonet/fusion.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "stylonet/error.h"
#include "stylonet/random.h"

namespace stylonet {
namespace {

MembershipMatrix matrix(const std::vector<std::vector<double>>& rows) {
  MembershipMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

MembershipMatrix random_memberships(std::size_t n, std::size_t c, Rng& rng) {
  MembershipMatrix m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < c; ++j) s += m(i, j) = rng.uniform();
    for (std::size_t j = 0; j < c; ++j) m(i, j) /= s;
  }
  return m;
}

std::vector<std::size_t> argmaxes(const MembershipMatrix& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    out.push_back(static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin()));
  }
  return out;
}

TEST(Hybrid, Endpoints) {
  const auto t = matrix({{0.7, 0.3}, {0.2, 0.8}});
  const auto r = matrix({{0.1, 0.9}, {0.6, 0.4}});
  EXPECT_EQ(hybrid_decide(hybrid_combine(r, t, 0.0)), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(hybrid_decide(hybrid_combine(r, t, 1.0)), (std::vector<std::size_t>{1, 0}));
  const auto mid = hybrid_combine(r, t, 0.5);
  EXPECT_DOUBLE_EQ(mid(0, 0), 0.4);
  EXPECT_DOUBLE_EQ(mid(0, 1), 0.6);
  EXPECT_EQ(hybrid_decide(mid)[0], 1u);
}

TEST(Hybrid, ExactTieGoesToFirstClass) {
  EXPECT_EQ(hybrid_decide(matrix({{0.5, 0.5}}))[0], 0u);
  EXPECT_EQ(hybrid_decide(matrix({{0.7, 0.3}}))[0], 0u);
}

TEST(Hybrid, WeightOutsideRangeThrows) {
  const auto t = matrix({{0.7, 0.3}});
  EXPECT_THROW(hybrid_combine(t, t, -0.1), ArgumentError);
  EXPECT_THROW(hybrid_combine(t, t, 1.5), ArgumentError);
  EXPECT_THROW(hybrid_combine(t, matrix({{1.0, 0.0, 0.0}}), 0.5), ArgumentError);
}

TEST(Hybrid, TopologyVersusSharedWords) {
  // Traditional evidence favours c2, topology favours c1.
  const auto t = matrix({{0.3, 0.7}});
  const auto r = matrix({{0.9, 0.1}});
  EXPECT_EQ(hybrid_decide(hybrid_combine(r, t, 0.15))[0], 1u);
  EXPECT_EQ(hybrid_decide(hybrid_combine(r, t, 0.85))[0], 0u);
}

TEST(Hybrid, AffineInWeight) {
  Rng rng(5);
  const auto t = random_memberships(200, 6, rng);
  const auto r = random_memberships(200, 6, rng);
  for (int trial = 0; trial < 20; ++trial) {
    const double l1 = rng.uniform(), l2 = rng.uniform(), s = rng.uniform();
    const auto a = hybrid_combine(r, t, l1), b = hybrid_combine(r, t, l2);
    const auto c = hybrid_combine(r, t, s * l1 + (1 - s) * l2);
    for (std::size_t i = 0; i < a.data().size(); ++i) {
      EXPECT_NEAR(s * a.data()[i] + (1 - s) * b.data()[i], c.data()[i], 1e-12);
      const double l = s * l1 + (1 - s) * l2;
      EXPECT_NEAR(c.data()[i], l * r.data()[i] + (1 - l) * t.data()[i], 1e-12);
    }
  }
}

TEST(Tiebreaker, Examples) {
  const auto t = matrix({{0.50, 0.45, 0.05}});
  const auto r = matrix({{0.2, 0.7, 0.1}});
  EXPECT_EQ(tiebreaker_decide(t, r, 0.1)[0], 1u);
  EXPECT_EQ(tiebreaker_decide(t, r, 0.01)[0], 0u);
  EXPECT_EQ(tiebreaker_decide(t, r, 0.0)[0], 0u);
}

TEST(Tiebreaker, RestrictedToTopTwo) {
  // The network prefers C, which is outside the traditional top two.
  const auto t = matrix({{0.40, 0.35, 0.25}});
  const auto r = matrix({{0.1, 0.3, 0.6}});
  EXPECT_EQ(tiebreaker_decide(t, r, 0.5)[0], 1u);
}

TEST(Tiebreaker, NetworkTieKeepsLowerIndex) {
  const auto t = matrix({{0.45, 0.55}});
  const auto r = matrix({{0.5, 0.5}});
  EXPECT_EQ(tiebreaker_decide(t, r, 0.5)[0], 0u);
}

TEST(Tiebreaker, InvalidArguments) {
  const auto one = matrix({{1.0}});
  EXPECT_THROW(tiebreaker_decide(one, one, 0.1), ArgumentError);
  const auto t = matrix({{0.6, 0.4}});
  EXPECT_THROW(tiebreaker_decide(t, t, -0.1), ArgumentError);
  EXPECT_THROW(tiebreaker_decide(t, matrix({{0.6, 0.4}, {0.6, 0.4}}), 0.1), ArgumentError);
}

TEST(Fusion, EndpointIdentitiesOnRandomMatrices) {
  Rng rng(21);
  const auto t = random_memberships(1000, 8, rng);
  const auto r = random_memberships(1000, 8, rng);
  EXPECT_EQ(hybrid_decide(hybrid_combine(r, t, 0.0)), argmaxes(t));
  EXPECT_EQ(hybrid_decide(hybrid_combine(r, t, 1.0)), argmaxes(r));
  EXPECT_EQ(tiebreaker_decide(t, r, 0.0), argmaxes(t));
}

TEST(Grid, Points) {
  const auto g = parameter_grid(0.25);
  EXPECT_EQ(g, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(parameter_grid(0.01).size(), 101u);
  EXPECT_EQ(parameter_grid(0.01).back(), 1.0);
  EXPECT_EQ(parameter_grid(0.3), (std::vector<double>{0.0, 0.3, 0.6, 0.8999999999999999, 1.0}));
  EXPECT_EQ(parameter_grid(1.0), (std::vector<double>{0.0, 1.0}));
  EXPECT_THROW(parameter_grid(0.0), ArgumentError);
  EXPECT_THROW(parameter_grid(1.5), ArgumentError);
}

TEST(Sweep, IdenticalMembershipsGiveFlatCurve) {
  Rng rng(8);
  FusionRun run{random_memberships(50, 3, rng), {}, {}};
  run.network = run.traditional;
  for (int i = 0; i < 50; ++i) run.labels.push_back(rng.uniform_index(3));
  for (FusionRule rule : {FusionRule::kHybrid, FusionRule::kTiebreaker}) {
    const GainReport rep = sweep(rule, std::span<const FusionRun>(&run, 1), {0.05, 0.05});
    ASSERT_FALSE(rep.gain_ratio.empty());
    for (double g : rep.gain_ratio) EXPECT_DOUBLE_EQ(g, 1.0);
    EXPECT_EQ(rep.best_parameter, 0.0);
  }
}

TEST(Sweep, ComplementaryClassifiersGainInTheInterior) {
  // Each classifier is right on 70 of 100 instances, and the misses are
  // disjoint; correct answers are confident, wrong ones are not.
  FusionRun run{MembershipMatrix(100, 2), MembershipMatrix(100, 2), {}};
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t y = i % 2;
    run.labels.push_back(y);
    const bool t_ok = i >= 30, r_ok = i < 30 || i >= 60;
    run.traditional(i, y) = t_ok ? 0.9 : 0.45;
    run.traditional(i, 1 - y) = 1 - run.traditional(i, y);
    run.network(i, y) = r_ok ? 0.9 : 0.45;
    run.network(i, 1 - y) = 1 - run.network(i, y);
  }
  const GainReport rep = sweep(FusionRule::kHybrid, std::span<const FusionRun>(&run, 1), {});
  EXPECT_DOUBLE_EQ(rep.gamma_traditional, 0.7);
  EXPECT_DOUBLE_EQ(rep.gamma_network, 0.7);
  ASSERT_TRUE(rep.best_gain.has_value());
  EXPECT_GT(*rep.best_gain, 1.0);
  EXPECT_GT(*rep.best_parameter, 0.0);
  EXPECT_LT(*rep.best_parameter, 1.0);
  // Brute force over the same grid.
  double best = 0;
  for (double l : parameter_grid(0.01)) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < 100; ++i) {
      const double a = l * run.network(i, 0) + (1 - l) * run.traditional(i, 0);
      const double b = l * run.network(i, 1) + (1 - l) * run.traditional(i, 1);
      hits += (b > a ? 1u : 0u) == run.labels[i];
    }
    best = std::max(best, hits / 100.0);
  }
  EXPECT_DOUBLE_EQ(rep.best_gamma, best);
  EXPECT_DOUBLE_EQ(*rep.best_gain, best / 0.7);
}

TEST(Sweep, GainNeverBelowOne) {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t c = 2 + rng.uniform_index(5);
    std::vector<FusionRun> runs(1 + rng.uniform_index(4));
    for (auto& run : runs) {
      const std::size_t n = 5 + rng.uniform_index(40);
      run.traditional = random_memberships(n, c, rng);
      run.network = random_memberships(n, c, rng);
      for (std::size_t i = 0; i < n; ++i) run.labels.push_back(rng.uniform_index(c));
    }
    for (FusionRule rule : {FusionRule::kHybrid, FusionRule::kTiebreaker}) {
      const GainReport rep = sweep(rule, runs, {0.02, 0.02});
      if (rep.best_gain) {
        EXPECT_GE(*rep.best_gain, 1.0);
      }
    }
  }
}

TEST(Sweep, ZeroTraditionalAccuracyLeavesGainUndefined) {
  FusionRun run{matrix({{0.9, 0.1}}), matrix({{0.1, 0.9}}), {1}};
  const GainReport rep = sweep(FusionRule::kHybrid, std::span<const FusionRun>(&run, 1), {0.5, 0.5});
  EXPECT_EQ(rep.gamma_traditional, 0.0);
  EXPECT_EQ(rep.gamma_network, 1.0);
  EXPECT_FALSE(rep.best_gain.has_value());
  EXPECT_TRUE(rep.gain_ratio.empty());
  EXPECT_EQ(rep.gamma_fused, (std::vector<double>{0.0, 0.0, 1.0}));
}

TEST(Sweep, MisalignedLabelsThrow) {
  FusionRun run{matrix({{0.9, 0.1}}), matrix({{0.1, 0.9}}), {1, 0}};
  EXPECT_THROW(sweep(FusionRule::kHybrid, std::span<const FusionRun>(&run, 1), {}), ArgumentError);
}

}  // namespace
}  // namespace stylonet
