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

#include <complex>
#include <random>

#include "hyperetf/cyclo.hpp"
#include "hyperetf/error.hpp"

namespace {

using namespace hyperetf;
using cyclo::CycloMatrix;
using cyclo::CycloNum;
using cyclo::Rational;

CycloNum random_num(std::mt19937& rng, int n, int terms = 4) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> expo(0, n - 1);
  CycloNum z(n);
  for (int t = 0; t < terms; ++t) {
    z += CycloNum::root_of_unity(n, expo(rng)) * cyclo::make_rational(coef(rng), den(rng));
  }
  return z;
}

TEST(Cyclo, KnownCyclotomicPolynomials) {
  EXPECT_EQ(cyclo::cyclotomic_poly(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclo::cyclotomic_poly(2), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(cyclo::cyclotomic_poly(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclo::cyclotomic_poly(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclo::cyclotomic_poly(10), (std::vector<std::int64_t>{1, -1, 1, -1, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto p = cyclo::cyclotomic_poly(105);
  EXPECT_EQ(p.size(), 49U);
  EXPECT_EQ(p[7], -2);
  EXPECT_EQ(p[41], -2);
}

TEST(Cyclo, PolynomialVanishesAtPrimitiveRoot) {
  for (int n : {1, 2, 3, 5, 6, 9, 10, 12, 15, 30, 105}) {
    const auto p = cyclo::cyclotomic_poly(n);
    std::complex<double> v{};
    const auto z = std::polar(1.0, 2.0 * M_PI / n);
    for (std::size_t k = p.size(); k-- > 0;) v = v * z + static_cast<double>(p[k]);
    EXPECT_LT(std::abs(v), 1e-9) << n;
  }
}

TEST(Cyclo, EulerPhi) {
  EXPECT_EQ(cyclo::euler_phi(1), 1);
  EXPECT_EQ(cyclo::euler_phi(6), 2);
  EXPECT_EQ(cyclo::euler_phi(10), 4);
  EXPECT_EQ(cyclo::euler_phi(12), 4);
  EXPECT_EQ(cyclo::euler_phi(4096), 2048);
}

TEST(Cyclo, RingOperationsAgreeWithComplexOracle) {
  std::mt19937 rng(7);
  for (int n : {1, 2, 3, 4, 6, 8, 10, 12, 15, 20, 30}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycloNum a = random_num(rng, n);
      const CycloNum b = random_num(rng, n);
      const auto ca = a.to_complex();
      const auto cb = b.to_complex();
      EXPECT_LT(std::abs((a + b).to_complex() - (ca + cb)), 1e-9);
      EXPECT_LT(std::abs((a - b).to_complex() - (ca - cb)), 1e-9);
      EXPECT_LT(std::abs((a * b).to_complex() - ca * cb), 1e-9);
      EXPECT_LT(std::abs(a.conj().to_complex() - std::conj(ca)), 1e-9);
      EXPECT_LT(std::abs(a.modulus_squared().to_complex() - std::norm(ca)), 1e-9);
    }
  }
}

TEST(Cyclo, ModulusSquaredIsRealAndNonnegative) {
  std::mt19937 rng(11);
  for (int n : {3, 5, 6, 10, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycloNum a = random_num(rng, n);
      const CycloNum m = a.modulus_squared();
      EXPECT_TRUE(m.conj() == m);
      EXPECT_GE(m.to_complex().real(), -1e-12);
    }
  }
}

TEST(Cyclo, InverseIsExact) {
  std::mt19937 rng(3);
  for (int n : {2, 3, 5, 6, 10, 12, 20}) {
    for (int trial = 0; trial < 15; ++trial) {
      const CycloNum a = random_num(rng, n, 3);
      if (a.is_zero()) continue;
      EXPECT_TRUE(a * a.inverse() == CycloNum(Rational(1), n));
    }
  }
  try {
    (void)CycloNum(6).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(Cyclo, RootsOfUnity) {
  for (int n : {1, 2, 3, 6, 10, 12}) {
    const CycloNum w = CycloNum::root_of_unity(n, 1);
    CycloNum p(Rational(1), n);
    CycloNum sum(n);
    for (int k = 0; k < n; ++k) {
      EXPECT_TRUE(p == CycloNum::root_of_unity(n, k));
      sum += p;
      p *= w;
    }
    EXPECT_TRUE(p == CycloNum(Rational(1), n));
    if (n > 1) EXPECT_TRUE(sum.is_zero());
    EXPECT_TRUE(CycloNum::root_of_unity(n, -1) == w.conj());
  }
}

TEST(Cyclo, IsRational) {
  // zeta_6 + zeta_6^5 = 1
  const CycloNum s = CycloNum::root_of_unity(6, 1) + CycloNum::root_of_unity(6, 5);
  ASSERT_TRUE(s.is_rational().has_value());
  EXPECT_EQ(*s.is_rational(), Rational(1));
  EXPECT_FALSE(CycloNum::root_of_unity(6, 1).is_rational().has_value());
  EXPECT_EQ(*CycloNum::root_of_unity(2, 1).is_rational(), Rational(-1));
}

TEST(Cyclo, LiftAndConductorRules) {
  const CycloNum w3 = CycloNum::root_of_unity(3, 1);
  const CycloNum w6sq = CycloNum::root_of_unity(6, 2);
  EXPECT_TRUE(w3.lift(6) == w6sq);
  EXPECT_TRUE(cyclo::same_value(w3, w6sq));
  EXPECT_FALSE(w3 == w6sq);
  EXPECT_TRUE((w3 + w6sq).conductor() == 6);
  try {
    (void)(CycloNum::root_of_unity(4, 1) + CycloNum::root_of_unity(6, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConductorMismatch);
  }
  EXPECT_THROW((void)w3.lift(10), Error);
  try {
    (void)CycloNum(5000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConductorRange);
  }
}

TEST(Cyclo, FromPowerSumReduces) {
  std::vector<Rational> c(25);
  c[12] = 1;  // zeta_12^12 = 1
  c[18] = 2;  // zeta_12^6 = -1
  const CycloNum z = CycloNum::from_power_sum(12, c);
  EXPECT_EQ(*z.is_rational(), Rational(-1));
}

TEST(CycloMatrix, ProductAdjointAgainstComplexOracle) {
  std::mt19937 rng(5);
  const int n = 10;
  CycloMatrix a(4, 5, n);
  CycloMatrix b(5, 3, n);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j)
      if ((i + j) % 3 != 0) a.set(i, j, random_num(rng, n, 2));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 3; ++j) b.set(i, j, random_num(rng, n, 2));
  const CycloMatrix c = a * b;
  const auto ca = a.to_complex();
  const auto cb = b.to_complex();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::complex<double> v{};
      for (int l = 0; l < 5; ++l) v += ca(i, l) * cb(l, j);
      EXPECT_LT(std::abs(c(i, j).to_complex() - v), 1e-9);
    }
  }
  const CycloMatrix g = a.adjoint() * a;
  EXPECT_TRUE(g == g.adjoint());
  EXPECT_TRUE(a.adjoint().adjoint() == a);
}

CycloMatrix random_integral(std::mt19937& rng, int rows, int cols, int conductor, long scale, double density) {
  std::uniform_int_distribution<long> coef(-scale, scale);
  std::bernoulli_distribution keep(density);
  CycloMatrix a(rows, cols, conductor);
  const int phi = cyclo::euler_phi(conductor);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (!keep(rng)) continue;
      std::vector<Rational> c(static_cast<std::size_t>(phi));
      for (auto& x : c) x = Rational(coef(rng));
      a.set(i, j, CycloNum::from_coeffs(conductor, c));
    }
  return a;
}

CycloMatrix naive_product(const CycloMatrix& a, const CycloMatrix& b) {
  CycloMatrix c(a.rows(), b.cols(), a.conductor());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      CycloNum s(a.conductor());
      for (int l = 0; l < a.cols(); ++l) s += a(i, l) * b(l, j);
      c.set(i, j, s);
    }
  return c;
}

TEST(CycloMatrix, IntegralProductMatchesEntrywise) {
  std::mt19937 rng(17);
  for (int conductor : {1, 4, 6, 10, 12, 15, 30}) {
    for (long scale : {1L, 7L, 1L << 19, 1L << 30}) {
      const CycloMatrix a = random_integral(rng, 5, 7, conductor, scale, 0.7);
      const CycloMatrix b = random_integral(rng, 7, 4, conductor, scale, 0.7);
      EXPECT_EQ(a * b, naive_product(a, b)) << conductor << " " << scale;
    }
  }
}

TEST(CycloMatrix, EqualityLiftsAcrossConductors) {
  CycloMatrix a(2, 2, 3);
  a.set(0, 1, CycloNum::root_of_unity(3, 1));
  CycloMatrix b = a.lift(6);
  EXPECT_TRUE(a == b);
  b.set(1, 1, Rational(1));
  EXPECT_FALSE(a == b);
  EXPECT_EQ(a.column_support(1), (std::vector<int>{0}));
}

}  // namespace
