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

#include <cstdlib>
#include <string>

#include "stylonet/error.h"
#include "stylonet/simd.h"

namespace stylonet::simd {

namespace {

Isa detect() {
  const char* forced = std::getenv("STYLONET_SIMD");
  if (forced != nullptr && std::string(forced) == "scalar") return Isa::kScalar;
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  return Isa::kScalar;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw ArgumentError("simd: operand size mismatch");
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(STYLONET_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

double squared_distance(Isa isa, std::span<const double> a,
                        std::span<const double> b) {
  check_sizes(a.size(), b.size());
#if defined(STYLONET_HAVE_AVX2)
  if (isa == Isa::kAvx2) return avx2::squared_distance(a.data(), b.data(), a.size());
#endif
  (void)isa;
  return scalar::squared_distance(a.data(), b.data(), a.size());
}

void blend(Isa isa, std::span<const double> a, std::span<const double> b,
           double w, std::span<double> out) {
  check_sizes(a.size(), b.size());
  check_sizes(a.size(), out.size());
#if defined(STYLONET_HAVE_AVX2)
  if (isa == Isa::kAvx2) return avx2::blend(a.data(), b.data(), w, out.data(), a.size());
#endif
  (void)isa;
  scalar::blend(a.data(), b.data(), w, out.data(), a.size());
}

double sum(Isa isa, std::span<const double> x) {
#if defined(STYLONET_HAVE_AVX2)
  if (isa == Isa::kAvx2) return avx2::sum(x.data(), x.size());
#endif
  (void)isa;
  return scalar::sum(x.data(), x.size());
}

void axpy(Isa isa, double w, std::span<const double> x, std::span<double> y) {
  check_sizes(x.size(), y.size());
#if defined(STYLONET_HAVE_AVX2)
  if (isa == Isa::kAvx2) return avx2::axpy(w, x.data(), y.data(), x.size());
#endif
  (void)isa;
  scalar::axpy(w, x.data(), y.data(), x.size());
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  return squared_distance(active_isa(), a, b);
}

void blend(std::span<const double> a, std::span<const double> b, double w,
           std::span<double> out) {
  blend(active_isa(), a, b, w, out);
}

double sum(std::span<const double> x) { return sum(active_isa(), x); }

void axpy(double w, std::span<const double> x, std::span<double> y) {
  axpy(active_isa(), w, x, y);
}

}  // namespace stylonet::simd
