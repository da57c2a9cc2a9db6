// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The hyperetf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Compiled with -mavx2 -mfma. Nothing here may run before dispatch has
// confirmed CPU support.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "hyperetf/kernels.hpp"

namespace hyperetf::kernels::avx2 {
namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// Two complex values per register: [re0, im0, re1, im1].
cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = as_doubles(x);
  const double* yd = as_doubles(y);
  __m256d direct = _mm256_setzero_pd();  // xr*yr, xi*yi
  __m256d cross = _mm256_setzero_pd();   // xr*yi, xi*yr
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * k);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * k);
    direct = _mm256_fmadd_pd(xv, yv, direct);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  alignas(32) double d[4];
  alignas(32) double c[4];
  _mm256_store_pd(d, direct);
  _mm256_store_pd(c, cross);
  double re = d[0] + d[1] + d[2] + d[3];
  double im = (c[0] - c[1]) + (c[2] - c[3]);
  for (; k < n; ++k) {
    re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
  }
  return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * k);
    const __m256d swapped = _mm256_mul_pd(ai, _mm256_permute_pd(xv, 0b0101));
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, swapped);
    _mm256_storeu_pd(yd + 2 * k, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * k), prod));
  }
  for (; k < n; ++k) y[k] += alpha * x[k];
}

double max_abs_diff(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = as_doubles(x);
  const double* yd = as_doubles(y);
  __m256d best = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(xd + 2 * k), _mm256_loadu_pd(yd + 2 * k));
    const __m256d sq = _mm256_mul_pd(diff, diff);
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double b[4];
  _mm256_store_pd(b, best);
  double m = std::sqrt(std::max(b[0], b[2]));
  for (; k < n; ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{"avx2", dotc, axpy, max_abs_diff};
  return t;
}

}  // namespace hyperetf::kernels::avx2
