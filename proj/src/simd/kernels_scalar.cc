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

#include "stylonet/simd.h"

namespace stylonet::simd::scalar {

// Four independent lanes, reduced as (l0 + l1) + (l2 + l3), then the tail.
// This mirrors the AVX2 register layout exactly.

double squared_distance(const double* a, const double* b, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) {
      const double d = a[i + l] - b[i + l];
      lane[l] = lane[l] + d * d;
    }
  }
  double acc = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    acc = acc + d * d;
  }
  return acc;
}

void blend(const double* a, const double* b, double w, double* out,
           std::size_t n) {
  const double v = 1.0 - w;
  for (std::size_t i = 0; i < n; ++i) out[i] = w * a[i] + v * b[i];
}

double sum(const double* x, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) lane[l] = lane[l] + x[i + l];
  }
  double acc = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) acc = acc + x[i];
  return acc;
}

void axpy(double w, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + w * x[i];
}

}  // namespace stylonet::simd::scalar
