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

#include "hyperetf/seeds.hpp"

#include <bit>

#include "hyperetf/error.hpp"
#include "hyperetf/golden.hpp"

namespace hyperetf::seeds {
namespace {

using cyclo::CycloNum;
using cyclo::Rational;

bool unimodular(const CycloNum& z) {
  const auto m = z.modulus_squared().is_rational();
  return m && *m == 1;
}

// <a_i, a_j> over columns, conjugate-linear in the first slot.
CycloNum column_inner(const CycloMatrix& a, int i, int j) {
  CycloNum s(a.conductor());
  for (int k = 0; k < a.rows(); ++k) s += a(k, i).conj() * a(k, j);
  return s;
}

bool columns_unimodular_and_pairwise_unit(const CycloMatrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!unimodular(a(i, j))) return false;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (!unimodular(column_inner(a, i, j))) return false;
  return true;
}

CycloMatrix drop_first_row(const CycloMatrix& h) {
  CycloMatrix s(h.rows() - 1, h.cols(), h.conductor());
  for (int i = 1; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j) s.set(i - 1, j, h(i, j));
  return s;
}

}  // namespace

CycloMatrix sylvester_hadamard(int e) {
  if (e < 0 || e > 12) throw Error(ErrorCode::kUnsupportedOrder, "Sylvester exponent out of range");
  const int n = 1 << e;
  CycloMatrix h(n, n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.set(i, j, Rational(std::popcount(static_cast<unsigned>(i & j)) % 2 == 0 ? 1 : -1));
  return h;
}

CycloMatrix dft_hadamard(int n) {
  if (n < 1) throw Error(ErrorCode::kUnsupportedOrder, "DFT size must be positive");
  CycloMatrix h(n, n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) h.set(j, k, CycloNum::root_of_unity(n, static_cast<std::int64_t>(j) * k % n));
  return h;
}

CycloMatrix reverse_rows(const CycloMatrix& m) {
  CycloMatrix r(m.rows(), m.cols(), m.conductor());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(m.rows() - 1 - i, j, m(i, j));
  return r;
}

CycloMatrix unimodular_simplex(int q, SimplexSource source) {
  if (q < 1) throw Error(ErrorCode::kUnsupportedOrder, "simplex needs q >= 1");
  switch (source) {
    case SimplexSource::kDft:
      return drop_first_row(dft_hadamard(q + 2));
    case SimplexSource::kSylvester:
    case SimplexSource::kSylvesterReversed: {
      if (!std::has_single_bit(static_cast<unsigned>(q + 2))) {
        throw Error(ErrorCode::kUnsupportedOrder, "real simplex needs q+2 a power of two, got q = " + std::to_string(q));
      }
      CycloMatrix s = drop_first_row(sylvester_hadamard(std::countr_zero(static_cast<unsigned>(q + 2))));
      return source == SimplexSource::kSylvester ? s : reverse_rows(s);
    }
    case SimplexSource::kZeta6:
      if (q != 4) throw Error(ErrorCode::kUnsupportedOrder, "the zeta_6 simplex is 5x6 (q = 4)");
      return golden::zeta6_simplex_5x6();
  }
  throw Error(ErrorCode::kUnsupportedOrder, "unknown simplex source");
}

CycloMatrix unimodular_cosimplex(int q) {
  if (q < 2 || !std::has_single_bit(static_cast<unsigned>(q))) {
    throw Error(ErrorCode::kUnsupportedOrder, "cosimplex needs q = 2^e with e >= 1, got q = " + std::to_string(q));
  }
  const CycloMatrix h = sylvester_hadamard(std::countr_zero(static_cast<unsigned>(q)));
  CycloMatrix c(q + 1, q, 2);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) c.set(i, j, h(i, j));
  for (int j = 0; j < q; ++j) c.set(q, j, -h(q - 1, j));
  return c;
}

bool verify_simplex(const CycloMatrix& s) {
  if (s.rows() < 1 || s.cols() != s.rows() + 1) return false;
  return columns_unimodular_and_pairwise_unit(s);
}

bool verify_cosimplex(const CycloMatrix& c) {
  if (c.rows() < 3 || c.cols() != c.rows() - 1) return false;
  const int r = c.rows();
  for (int j = 0; j < c.cols(); ++j)
    if (!(c(r - 2, j) + c(r - 1, j)).is_zero()) return false;
  return columns_unimodular_and_pairwise_unit(c);
}

}  // namespace hyperetf::seeds
