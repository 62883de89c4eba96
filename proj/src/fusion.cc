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

#include <cmath>

#include "stylonet/error.h"
#include "stylonet/simd.h"

namespace stylonet {

namespace {

void check_aligned(const MembershipMatrix& a, const MembershipMatrix& b) {
  if (a.rows() != b.rows() || a.classes() != b.classes()) {
    throw ArgumentError("membership matrices differ in shape (" +
                        std::to_string(a.rows()) + "x" + std::to_string(a.classes()) +
                        " vs " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.classes()) + ")");
  }
}

}  // namespace

MembershipMatrix hybrid_combine(const MembershipMatrix& network,
                                const MembershipMatrix& traditional,
                                double lambda) {
  check_aligned(network, traditional);
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ArgumentError("hybrid weight must lie in [0, 1]");
  }
  MembershipMatrix out(network.rows(), network.classes());
  simd::blend(network.data(), traditional.data(), lambda, out.data());
  return out;
}

std::vector<std::size_t> hybrid_decide(const MembershipMatrix& combined) {
  std::vector<std::size_t> out(combined.rows());
  for (std::size_t i = 0; i < combined.rows(); ++i) out[i] = argmax(combined.row(i));
  return out;
}

std::vector<std::size_t> tiebreaker_decide(const MembershipMatrix& traditional,
                                           const MembershipMatrix& network,
                                           double theta) {
  check_aligned(traditional, network);
  if (traditional.classes() < 2) {
    throw ArgumentError("tiebreaker needs at least two classes");
  }
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw ArgumentError("tiebreaker threshold must be a finite value >= 0");
  }
  std::vector<std::size_t> out(traditional.rows());
  for (std::size_t i = 0; i < traditional.rows(); ++i) {
    const auto t = traditional.row(i);
    // Top two by m_T, lower index first among equals.
    std::size_t first = 0, second = 1;
    if (t[1] > t[0]) std::swap(first, second);
    for (std::size_t j = 2; j < t.size(); ++j) {
      if (t[j] > t[first]) {
        second = first;
        first = j;
      } else if (t[j] > t[second]) {
        second = j;
      }
    }
    if (t[first] - t[second] >= theta) {
      out[i] = first;
    } else {
      const double rf = network(i, first);
      const double rs = network(i, second);
      if (rs > rf || (rs == rf && second < first)) {
        out[i] = second;
      } else {
        out[i] = first;
      }
    }
  }
  return out;
}

std::vector<double> parameter_grid(double step) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw ArgumentError("grid step must lie in (0, 1]");
  }
  const auto n = static_cast<std::size_t>(std::ceil(1.0 / step - 1e-9));
  std::vector<double> grid;
  for (std::size_t i = 0; i < n; ++i) grid.push_back(static_cast<double>(i) * step);
  grid.push_back(1.0);
  return grid;
}

GainReport sweep(FusionRule rule, std::span<const FusionRun> runs,
                 const FusionConfig& config) {
  GainReport report;
  report.rule = rule;
  report.grid = parameter_grid(rule == FusionRule::kHybrid ? config.lambda_step
                                                           : config.theta_step);
  std::size_t total = 0, hits_t = 0, hits_r = 0;
  for (const FusionRun& run : runs) {
    check_aligned(run.traditional, run.network);
    if (run.labels.size() != run.traditional.rows()) {
      throw ArgumentError("fusion run: label count differs from membership rows");
    }
    total += run.labels.size();
    for (std::size_t i = 0; i < run.labels.size(); ++i) {
      hits_t += argmax(run.traditional.row(i)) == run.labels[i];
      hits_r += argmax(run.network.row(i)) == run.labels[i];
    }
  }
  const double n = static_cast<double>(total);
  report.gamma_traditional = total ? static_cast<double>(hits_t) / n : 0.0;
  report.gamma_network = total ? static_cast<double>(hits_r) / n : 0.0;

  for (double x : report.grid) {
    std::size_t hits = 0;
    for (const FusionRun& run : runs) {
      const std::vector<std::size_t> decided =
          rule == FusionRule::kHybrid
              ? hybrid_decide(hybrid_combine(run.network, run.traditional, x))
              : tiebreaker_decide(run.traditional, run.network, x);
      for (std::size_t i = 0; i < decided.size(); ++i) hits += decided[i] == run.labels[i];
    }
    report.gamma_fused.push_back(total ? static_cast<double>(hits) / n : 0.0);
  }

  // Max with the smallest parameter on ties; independent of evaluation order.
  std::size_t best = 0;
  for (std::size_t g = 1; g < report.grid.size(); ++g) {
    if (report.gamma_fused[g] > report.gamma_fused[best]) best = g;
  }
  report.best_gamma = report.gamma_fused[best];
  report.best_parameter = report.grid[best];
  if (report.gamma_traditional > 0.0) {
    for (double gamma : report.gamma_fused) {
      report.gain_ratio.push_back(gamma / report.gamma_traditional);
      report.gain_diff.push_back((gamma - report.gamma_traditional) /
                                 report.gamma_traditional);
    }
    report.best_gain = report.gain_ratio[best];
  }
  return report;
}

}  // namespace stylonet
