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

#ifndef STYLONET_FUSION_H_
#define STYLONET_FUSION_H_

// Fusion of a traditional (T) and a network (R) classifier: the hybrid rule
// decides on lambda * m_R + (1 - lambda) * m_T; the tiebreaker rule keeps
// the traditional decision unless its top-two margin falls below theta.

#include <optional>
#include <span>
#include <vector>

#include "stylonet/learn.h"

namespace stylonet {

MembershipMatrix hybrid_combine(const MembershipMatrix& network,
                                const MembershipMatrix& traditional,
                                double lambda);

std::vector<std::size_t> hybrid_decide(const MembershipMatrix& combined);

// Throws ArgumentError for fewer than two classes, misaligned matrices or
// a negative theta.
std::vector<std::size_t> tiebreaker_decide(const MembershipMatrix& traditional,
                                           const MembershipMatrix& network,
                                           double theta);

enum class FusionRule { kHybrid, kTiebreaker };

struct FusionConfig {
  double lambda_step = 0.01;
  double theta_step = 0.01;
};

// Grid points i * step over [0, 1], always ending exactly at 1.
std::vector<double> parameter_grid(double step);

// Memberships of one evaluation batch (e.g. one CV fold) from both
// classifiers, row-aligned with the true labels.
struct FusionRun {
  MembershipMatrix traditional;
  MembershipMatrix network;
  std::vector<std::size_t> labels;
};

struct GainReport {
  FusionRule rule = FusionRule::kHybrid;
  double gamma_traditional = 0.0;  // Gamma_T
  double gamma_network = 0.0;      // Gamma_R
  std::vector<double> grid;
  std::vector<double> gamma_fused;  // Gamma_H(x)
  // Gamma_H / Gamma_T and (Gamma_H - Gamma_T) / Gamma_T; empty when
  // Gamma_T == 0.
  std::vector<double> gain_ratio;
  std::vector<double> gain_diff;
  std::optional<double> best_gain;  // max ratio
  std::optional<double> best_parameter;  // smallest argmax
  double best_gamma = 0.0;
};

// Fuses every run at every grid point and scores accuracy pooled over runs.
GainReport sweep(FusionRule rule, std::span<const FusionRun> runs,
                 const FusionConfig& config);

}  // namespace stylonet

#endif  // STYLONET_FUSION_H_
