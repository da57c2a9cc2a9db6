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

// Dense complex double kernels for the float certification path.
//
// Every kernel has a scalar reference implementation; an AVX2/FMA variant is
// compiled in on x86-64 and selected at runtime when the CPU supports it.
// Setting HYPERETF_KERNELS=scalar in the environment pins the reference path.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hyperetf::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  const char* name;
  /// sum_k conj(x[k]) * y[k]
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
  /// y[k] += alpha * x[k]
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  /// max_k |x[k] - y[k]|
  double (*max_abs_diff)(const cplx* x, const cplx* y, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant is not built or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table();
/// Table picked once per process.
const KernelTable& active_table();

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  cplx& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  cplx* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
  const cplx* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }
  const std::vector<cplx>& data() const noexcept { return data_; }
  std::vector<cplx>& data() noexcept { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b, const KernelTable& k = active_table());
ComplexMatrix adjoint(const ComplexMatrix& a);
/// A^* A
ComplexMatrix gram(const ComplexMatrix& a, const KernelTable& k = active_table());
/// A A^*
ComplexMatrix frame_operator(const ComplexMatrix& a, const KernelTable& k = active_table());
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b, const KernelTable& k = active_table());

}  // namespace hyperetf::kernels
