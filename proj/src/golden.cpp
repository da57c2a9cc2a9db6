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

#include "hyperetf/golden.hpp"

#include "hyperetf/error.hpp"

namespace hyperetf::golden {

using cyclo::CycloMatrix;
using cyclo::CycloNum;
using cyclo::Rational;
using designs::IncidenceMatrix;

CycloMatrix sign_matrix(const std::vector<std::string>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
  CycloMatrix out(m, n, 2);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorCode::kParse, "ragged sign matrix");
    for (int j = 0; j < n; ++j) {
      switch (rows[i][j]) {
        case '+': out.set(i, j, Rational(1)); break;
        case '-': out.set(i, j, Rational(-1)); break;
        case '0': break;
        default: throw Error(ErrorCode::kParse, "sign matrix entry must be +, - or 0");
      }
    }
  }
  return out;
}

IncidenceMatrix affine_plane_6x4() {
  return IncidenceMatrix::from_rows({"1100", "0011", "1010", "0101", "1001", "0110"});
}

IncidenceMatrix projective_plane_7x7() {
  return IncidenceMatrix::from_rows(
      {"1100100", "0011100", "1010010", "0101010", "1001001", "0110001", "0000111"});
}

IncidenceMatrix hyperoval_dual_7x7() {
  return IncidenceMatrix::from_rows(
      {"1001100", "1010010", "1100001", "0111000", "0100110", "0010101", "0001011"});
}

IncidenceMatrix hyperoval_affine_6x4() {
  return IncidenceMatrix::from_rows({"1100", "1010", "1001", "0110", "0101", "0011"});
}

IncidenceMatrix q4_affine_20x16() {
  const std::vector<std::vector<int>> one_based = {
      {1, 2, 12, 15}, {3, 4, 11, 16}, {5, 6, 13, 14}, {1, 3, 10, 14}, {2, 5, 8, 16},
      {4, 6, 9, 15},  {1, 6, 7, 16},  {2, 3, 9, 13},  {4, 5, 10, 12}, {1, 4, 8, 13},
      {2, 6, 10, 11}, {3, 5, 7, 15},  {1, 5, 9, 11},  {2, 4, 7, 14},  {3, 6, 8, 12},
      {7, 8, 9, 10},  {7, 11, 12, 13}, {8, 11, 14, 15}, {9, 12, 14, 16}, {10, 13, 15, 16}};
  std::vector<std::vector<int>> rows;
  for (const auto& r : one_based) {
    std::vector<int> z;
    for (int j : r) z.push_back(j - 1);
    rows.push_back(z);
  }
  return IncidenceMatrix::from_supports(16, rows);
}

AffineRelabeling q4_printed_relabeling() {
  return {{6, 8, 18, 15, 16, 12, 9, 4, 11, 17, 20, 7, 10, 19, 13}, {3, 13, 1, 5, 4, 6}};
}

CycloMatrix simplex_3x4() { return sign_matrix({"+-+-", "++--", "+--+"}); }

CycloMatrix cosimplex_3x2() { return sign_matrix({"++", "+-", "-+"}); }

CycloMatrix zeta6_simplex_5x6() {
  const int w[5][6] = {
      {0, 2, 4, 0, 2, 4}, {0, 4, 2, 0, 4, 2}, {0, 0, 0, 3, 3, 3}, {0, 2, 4, 3, 5, 1}, {0, 4, 2, 3, 1, 5}};
  CycloMatrix s(5, 6, 6);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 6; ++j) s.set(i, j, CycloNum::root_of_unity(6, w[i][j]));
  return s;
}

CycloMatrix real_cosimplex_5x4() { return sign_matrix({"++++", "+-+-", "++--", "+--+", "-++-"}); }

CycloMatrix steiner_6x16() {
  return sign_matrix({"+-+-+-+-00000000", "00000000+-+-+-+-", "++--0000++--0000", "0000++--0000++--",
                      "+--+00000000+--+", "0000+--++--+0000"});
}

CycloMatrix flat_6x10() {
  return sign_matrix({"++++++++++", "++++------", "+---+++---", "-+--+--++-", "--+--+-+-+", "---+--+-++"});
}

CycloMatrix hyperoval_frame_6x10() {
  return sign_matrix({"+--+++0000", "++--00++00", "+-+-0000++", "0000+-+-00", "0000-+00+-", "000000-+-+"});
}

CycloMatrix class_permuted_6x10() {
  return sign_matrix({"000000-+-+", "+--+++0000", "0000-+00+-", "++--00++00", "0000+-+-00", "+-+-0000++"});
}

std::vector<int> class_row_order() { return {5, 0, 4, 1, 3, 2}; }

CycloMatrix rotated_flat_6x10() {
  return sign_matrix({"+--+++-+-+", "-++----+-+", "++---++++-", "--++-+--+-", "+-+-+-+-++", "-+-++-+---"});
}

CycloMatrix q4_frame_20x76() {
  // Column j of the affine plane carries a simplex copy for j < 6 and a
  // cosimplex copy otherwise; the i-th support row receives row i of the seed.
  const IncidenceMatrix z = q4_affine_20x16();
  const CycloMatrix s = zeta6_simplex_5x6();
  const CycloMatrix c = real_cosimplex_5x4();
  CycloMatrix phi(20, 76, 6);
  int col = 0;
  for (int j = 0; j < 16; ++j) {
    const CycloMatrix& seed = j < 6 ? s : c;
    const std::vector<int> support = z.col_support(j);
    for (int l = 0; l < seed.cols(); ++l, ++col)
      for (int i = 0; i < 5; ++i) phi.set(support[i], col, seed(i, l));
  }
  return phi;
}

CycloMatrix extended_6x16() {
  const CycloMatrix phi = flat_6x10();
  CycloMatrix psi(6, 16, 2);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 10; ++j) psi.set(i, j, phi(i, j));
    for (int j = 0; j < 6; ++j) psi.set(i, 10 + j, i == j ? cyclo::make_rational(7, 3) : cyclo::make_rational(1, 3));
  }
  return psi;
}

std::vector<std::string> paired_set_d() { return {"0000", "0010", "1000", "1001", "1100", "1111"}; }

std::vector<std::string> paired_set_d_prime() {
  return {"0000", "0001", "0010", "0100", "1000", "1001", "1011", "1100", "1110", "1111"};
}

}  // namespace hyperetf::golden
