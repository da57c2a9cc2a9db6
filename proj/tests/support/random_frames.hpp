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

// Random float frames for the tight-frame characterization suites.

#pragma once

#include <Eigen/Dense>

#include <random>

#include "hyperetf/kernels.hpp"

namespace hyperetf::testsupport {

inline Eigen::MatrixXcd random_unitary(int n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

inline kernels::ComplexMatrix from_eigen(const Eigen::MatrixXcd& a) {
  kernels::ComplexMatrix out(static_cast<int>(a.rows()), static_cast<int>(a.cols()));
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

struct RandomFrame {
  kernels::ComplexMatrix phi;
  /// Built as sqrt(a) times a partial isometry, hence tight for its span.
  bool tight = false;
};

/// Even trials are tight rank-k frames; odd trials are Gaussian, rank-deficient when k < min(m, n).
inline RandomFrame random_frame(int trial, std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 7);
  std::uniform_real_distribution<double> scale(0.5, 4.0);
  std::normal_distribution<double> g;
  const int m = dim(rng);
  const int k = std::uniform_int_distribution<int>(1, m)(rng);
  const int n = k + std::uniform_int_distribution<int>(0, 6)(rng);
  const bool tight = trial % 2 == 0;
  Eigen::MatrixXcd phi;
  if (tight) {
    const Eigen::MatrixXcd q = random_unitary(m, rng).leftCols(k);
    const Eigen::MatrixXcd v = random_unitary(n, rng).topRows(k);
    phi = std::sqrt(scale(rng)) * q * v;
  } else {
    phi.resize(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) phi(i, j) = {g(rng), g(rng)};
    if (k < m && k < n) phi = phi.leftCols(k) * phi.topRows(k).leftCols(n).eval();
  }
  return {from_eigen(phi), tight};
}

}  // namespace hyperetf::testsupport
