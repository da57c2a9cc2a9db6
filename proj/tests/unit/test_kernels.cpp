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

#include <gtest/gtest.h>

#include <random>

#include "hyperetf/kernels.hpp"

namespace {

using namespace hyperetf::kernels;

std::vector<cplx> random_vec(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

ComplexMatrix random_matrix(std::mt19937& rng, int r, int c) {
  ComplexMatrix m(r, c);
  m.data() = random_vec(rng, static_cast<std::size_t>(r) * c);
  return m;
}

TEST(Kernels, ScalarDotcIsConjugateLinear) {
  const cplx x[2] = {{1, 2}, {0, -1}};
  const cplx y[2] = {{3, 0}, {2, 2}};
  // conj(1+2i)*3 + conj(-i)*(2+2i) = 3-6i + (-2+2i)
  EXPECT_EQ(scalar_table().dotc(x, y, 2), cplx(1, -4));
}

TEST(Kernels, ActiveTableIsKnown) {
  const std::string name = active_table().name;
  EXPECT_TRUE(name == "scalar" || name == "avx2");
}

class SimdEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    simd_ = avx2_table();
    if (simd_ == nullptr) GTEST_SKIP() << "no AVX2+FMA on this host";
  }
  const KernelTable* simd_ = nullptr;
};

TEST_F(SimdEquivalence, Dotc) {
  std::mt19937 rng(1);
  for (std::size_t n : {0, 1, 2, 3, 7, 8, 31, 64, 101, 1000}) {
    const auto x = random_vec(rng, n);
    const auto y = random_vec(rng, n);
    const cplx a = scalar_table().dotc(x.data(), y.data(), n);
    const cplx b = simd_->dotc(x.data(), y.data(), n);
    EXPECT_LT(std::abs(a - b), 1e-12 * (1.0 + static_cast<double>(n))) << n;
  }
}

TEST_F(SimdEquivalence, Axpy) {
  std::mt19937 rng(2);
  for (std::size_t n : {0, 1, 2, 5, 16, 33, 257}) {
    const auto x = random_vec(rng, n);
    auto y1 = random_vec(rng, n);
    auto y2 = y1;
    const cplx alpha{0.7, -1.3};
    scalar_table().axpy(alpha, x.data(), y1.data(), n);
    simd_->axpy(alpha, x.data(), y2.data(), n);
    for (std::size_t k = 0; k < n; ++k) EXPECT_LT(std::abs(y1[k] - y2[k]), 1e-13);
  }
}

TEST_F(SimdEquivalence, MaxAbsDiff) {
  std::mt19937 rng(3);
  for (std::size_t n : {0, 1, 2, 9, 64, 77}) {
    const auto x = random_vec(rng, n);
    const auto y = random_vec(rng, n);
    EXPECT_DOUBLE_EQ(scalar_table().max_abs_diff(x.data(), y.data(), n),
                     simd_->max_abs_diff(x.data(), y.data(), n));
  }
}

TEST_F(SimdEquivalence, GramAndFrameOperator) {
  std::mt19937 rng(4);
  for (auto [r, c] : {std::pair{6, 16}, std::pair{20, 76}, std::pair{3, 5}}) {
    const ComplexMatrix a = random_matrix(rng, r, c);
    EXPECT_LT(max_abs_diff(gram(a, scalar_table()), gram(a, *simd_)), 1e-11);
    EXPECT_LT(max_abs_diff(frame_operator(a, scalar_table()), frame_operator(a, *simd_)), 1e-11);
    const ComplexMatrix b = random_matrix(rng, c, 4);
    EXPECT_LT(max_abs_diff(multiply(a, b, scalar_table()), multiply(a, b, *simd_)), 1e-11);
  }
}

TEST(Kernels, GramMatchesNaiveOracle) {
  std::mt19937 rng(9);
  const ComplexMatrix a = random_matrix(rng, 5, 7);
  const ComplexMatrix g = gram(a);
  const ComplexMatrix f = frame_operator(a);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      cplx v{};
      for (int k = 0; k < 5; ++k) v += std::conj(a(k, i)) * a(k, j);
      EXPECT_LT(std::abs(g(i, j) - v), 1e-12);
    }
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      cplx v{};
      for (int k = 0; k < 7; ++k) v += a(i, k) * std::conj(a(j, k));
      EXPECT_LT(std::abs(f(i, j) - v), 1e-12);
    }
  }
  EXPECT_LT(max_abs_diff(multiply(adjoint(a), a), g), 1e-12);
}

}  // namespace
