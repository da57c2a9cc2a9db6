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

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycloNum stores phi(N) rational coordinates in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the N-th cyclotomic polynomial.
// Binary operations on numbers of different conductors lift to the larger one
// when one conductor divides the other, and throw ConductorMismatch otherwise.

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperetf/kernels.hpp"

namespace hyperetf::cyclo {

using Rational = mpq_class;

inline constexpr int kMaxConductor = 4096;

/// Canonical n/d; the two-argument mpq_class constructor does not reduce.
inline Rational make_rational(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

int euler_phi(int n);
/// Coefficients of Phi_n, lowest degree first.
std::vector<std::int64_t> cyclotomic_poly(int n);

class CycloNum {
 public:
  /// Zero in Q(zeta_1) = Q.
  CycloNum();
  explicit CycloNum(int conductor);
  CycloNum(const Rational& value, int conductor = 1);

  static CycloNum root_of_unity(int conductor, std::int64_t k);
  /// sum_k c[k] zeta_N^k for any length of c.
  static CycloNum from_power_sum(int conductor, std::span<const Rational> c);
  /// Coordinates must already be in the reduced basis (length phi(N)).
  static CycloNum from_coeffs(int conductor, std::vector<Rational> coeffs);

  int conductor() const noexcept { return n_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  std::optional<Rational> is_rational() const;
  CycloNum lift(int conductor) const;
  CycloNum conj() const;
  CycloNum modulus_squared() const;
  CycloNum inverse() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& r);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
  friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }
  CycloNum operator-() const;

  /// Strict: equal conductors and equal coordinates.
  friend bool operator==(const CycloNum& a, const CycloNum& b);

 private:
  int n_;
  std::vector<Rational> c_;
};

/// Smallest of the two conductors that the other divides.
int common_conductor(int a, int b);
/// Equality after lifting both to lcm(a, b).
bool same_value(const CycloNum& a, const CycloNum& b);

inline CycloNum add(const CycloNum& a, const CycloNum& b) { return a + b; }
inline CycloNum mul(const CycloNum& a, const CycloNum& b) { return a * b; }
inline CycloNum neg(const CycloNum& a) { return -a; }
inline CycloNum conj(const CycloNum& a) { return a.conj(); }
inline CycloNum modulus_squared(const CycloNum& a) { return a.modulus_squared(); }
inline std::optional<Rational> is_rational(const CycloNum& a) { return a.is_rational(); }
inline std::complex<double> to_complex_float(const CycloNum& a) { return a.to_complex(); }

/// Dense row-major matrix over Q(zeta_N); every entry carries the matrix conductor.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(int rows, int cols, int conductor);

  static CycloMatrix identity(int n, int conductor);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int conductor() const noexcept { return conductor_; }

  const CycloNum& operator()(int i, int j) const { return data_[index(i, j)]; }
  /// Lifts value to the matrix conductor.
  void set(int i, int j, const CycloNum& value);
  void set(int i, int j, const Rational& value);

  CycloMatrix adjoint() const;
  CycloMatrix transpose() const;
  CycloMatrix lift(int conductor) const;
  kernels::ComplexMatrix to_complex() const;
  std::vector<int> column_support(int j) const;
  std::vector<int> row_support(int i) const;
  bool is_rational() const;

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloNum& s, const CycloMatrix& a);
  friend CycloMatrix operator*(const Rational& s, const CycloMatrix& a);
  /// Same shape and same_value entrywise.
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

  int rows_ = 0;
  int cols_ = 0;
  int conductor_ = 1;
  std::vector<CycloNum> data_;
};

}  // namespace hyperetf::cyclo
