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

#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "hyperetf/kernels.hpp"

namespace hyperetf::kernels {

#if defined(HYPERETF_HAVE_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif

const KernelTable* avx2_table() {
#if defined(HYPERETF_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? &avx2::table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_table() {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    if (const char* env = std::getenv("HYPERETF_KERNELS"); env && std::string_view(env) == "scalar") {
      return scalar_table();
    }
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b, const KernelTable& k) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int l = 0; l < a.cols(); ++l) {
      const cplx alpha = a(i, l);
      if (alpha == cplx{}) continue;
      k.axpy(alpha, b.row(l), c.row(i), static_cast<std::size_t>(b.cols()));
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

ComplexMatrix gram(const ComplexMatrix& a, const KernelTable& k) {
  // Columns of a as contiguous rows; dotc conjugates its first argument.
  ComplexMatrix cols(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) cols(j, i) = a(i, j);
  const int n = a.cols();
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const cplx v = k.dotc(cols.row(i), cols.row(j), static_cast<std::size_t>(a.rows()));
      g(i, j) = v;
      g(j, i) = std::conj(v);
    }
  }
  return g;
}

ComplexMatrix frame_operator(const ComplexMatrix& a, const KernelTable& k) {
  const int m = a.rows();
  ComplexMatrix f(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      // F(i,j) = sum_k a(i,k) conj(a(j,k))
      const cplx v = k.dotc(a.row(j), a.row(i), static_cast<std::size_t>(a.cols()));
      f(i, j) = v;
      f(j, i) = std::conj(v);
    }
  }
  return f;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b, const KernelTable& k) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shapes differ");
  return k.max_abs_diff(a.data().data(), b.data().data(), a.data().size());
}

}  // namespace hyperetf::kernels
