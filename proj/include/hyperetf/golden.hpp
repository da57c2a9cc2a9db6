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

// Matrices printed in the source literature, transcribed verbatim. These are
// test fixtures and CLI reproduction targets; no construction code uses them
// except where a command explicitly asks for a printed matrix.

#pragma once

#include <string>
#include <vector>

#include "hyperetf/cyclo.hpp"
#include "hyperetf/designs.hpp"

namespace hyperetf::golden {

/// '+' -> 1, '-' -> -1, '0' -> 0; conductor 2.
cyclo::CycloMatrix sign_matrix(const std::vector<std::string>& rows);

designs::IncidenceMatrix affine_plane_6x4();
designs::IncidenceMatrix projective_plane_7x7();
/// Dual plane in block form and the affine plane cut from it.
designs::IncidenceMatrix hyperoval_dual_7x7();
designs::IncidenceMatrix hyperoval_affine_6x4();
/// 20x16 affine plane read off the support pattern of the q = 4 frame.
designs::IncidenceMatrix q4_affine_20x16();

/// q4_affine_20x16 is the canonical q = 4 affine plane with its first 15 rows
/// taken in this vertex order and its first 6 columns in this block order
/// (indices into the Singer plane of order 4).
struct AffineRelabeling {
  std::vector<int> vertices;
  std::vector<int> exterior_blocks;
};
AffineRelabeling q4_printed_relabeling();

/// Rows 2..4 of the canonical 4x4 Hadamard.
cyclo::CycloMatrix simplex_3x4();
cyclo::CycloMatrix cosimplex_3x2();
/// Rows a..e over w = zeta_6.
cyclo::CycloMatrix zeta6_simplex_5x6();
/// Rows f..j.
cyclo::CycloMatrix real_cosimplex_5x4();

cyclo::CycloMatrix steiner_6x16();
cyclo::CycloMatrix flat_6x10();
cyclo::CycloMatrix hyperoval_frame_6x10();
cyclo::CycloMatrix rotated_flat_6x10();
/// Rows permuted into parallel classes, before the Hadamard rotation.
cyclo::CycloMatrix class_permuted_6x10();
/// Source row of each row of the permuted matrix (0-based).
std::vector<int> class_row_order();
cyclo::CycloMatrix q4_frame_20x76();
/// [Phi | 2I + J/3] for Phi = flat_6x10().
cyclo::CycloMatrix extended_6x16();

/// Paired difference sets in Z_2^4, bit strings with the first factor leftmost.
std::vector<std::string> paired_set_d();
std::vector<std::string> paired_set_d_prime();

}  // namespace hyperetf::golden
