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

// Hadamard matrices and the unimodular simplices and cosimplices cut from them.

#pragma once

#include "hyperetf/cyclo.hpp"

namespace hyperetf::seeds {

using cyclo::CycloMatrix;

/// 2^e x 2^e, Kronecker power of [[1, 1], [1, -1]]; conductor 2.
CycloMatrix sylvester_hadamard(int e);
/// (j, k) -> zeta_N^{jk}; conductor N.
CycloMatrix dft_hadamard(int n);

enum class SimplexSource {
  /// DFT of size q+2 without its first row. Valid for every q.
  kDft,
  /// Sylvester Hadamard of size q+2 without its first row; q+2 a power of two.
  kSylvester,
  /// kSylvester with its rows in reverse order (q = 2 only).
  kSylvesterReversed,
  /// The shipped 5x6 simplex over zeta_6 (q = 4 only).
  kZeta6,
};

/// (q+1) x (q+2) unimodular simplex.
CycloMatrix unimodular_simplex(int q, SimplexSource source = SimplexSource::kDft);
/// (q+1) x q: Sylvester H_q with the negation of its last row appended.
CycloMatrix unimodular_cosimplex(int q);

bool verify_simplex(const CycloMatrix& s);
bool verify_cosimplex(const CycloMatrix& c);

/// Rows of m in reverse order.
CycloMatrix reverse_rows(const CycloMatrix& m);

}  // namespace hyperetf::seeds
