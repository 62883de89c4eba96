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

#ifndef STYLONET_SIMD_H_
#define STYLONET_SIMD_H_

// Arithmetic kernels behind the classifiers and the fusion rules.
//
// Every kernel has a scalar reference and, on x86-64, an AVX2 variant picked
// at runtime. The scalar reference accumulates in the same four-lane order
// as the vector code, so both produce bit-identical results; the tests hold
// them to exact equality. Set STYLONET_SIMD=scalar to force the reference.

#include <cstddef>
#include <span>
#include <string_view>

namespace stylonet::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// ISA selected for this process (CPU support and STYLONET_SIMD).
Isa active_isa();

// True when `isa` can run on this machine.
bool isa_available(Isa isa);

// sum_i (a[i] - b[i])^2. Sizes must match.
double squared_distance(std::span<const double> a, std::span<const double> b);

// out[i] = w * a[i] + (1 - w) * b[i].
void blend(std::span<const double> a, std::span<const double> b, double w,
           std::span<double> out);

// sum_i x[i]
double sum(std::span<const double> x);

// y[i] += w * x[i]
void axpy(double w, std::span<const double> x, std::span<double> y);

// Same kernels pinned to one ISA; used by the equivalence tests.
double squared_distance(Isa isa, std::span<const double> a,
                        std::span<const double> b);
void blend(Isa isa, std::span<const double> a, std::span<const double> b,
           double w, std::span<double> out);
double sum(Isa isa, std::span<const double> x);
void axpy(Isa isa, double w, std::span<const double> x, std::span<double> y);

namespace scalar {
double squared_distance(const double* a, const double* b, std::size_t n);
void blend(const double* a, const double* b, double w, double* out,
           std::size_t n);
double sum(const double* x, std::size_t n);
void axpy(double w, const double* x, double* y, std::size_t n);
}  // namespace scalar

namespace avx2 {
double squared_distance(const double* a, const double* b, std::size_t n);
void blend(const double* a, const double* b, double w, double* out,
           std::size_t n);
double sum(const double* x, std::size_t n);
void axpy(double w, const double* x, double* y, std::size_t n);
}  // namespace avx2

}  // namespace stylonet::simd

#endif  // STYLONET_SIMD_H_
