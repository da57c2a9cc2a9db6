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

// Incidence structures: BIBD checks, Singer planes, hyperovals and the block
// decompositions of planes that contain them.
//
// Rows are blocks and columns are vertices throughout.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperetf/gf.hpp"

namespace hyperetf::designs {

class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(int b, int v);

  /// Rows given as '0'/'1' strings of equal length.
  static IncidenceMatrix from_rows(const std::vector<std::string>& rows);
  /// Row i has ones at supports[i].
  static IncidenceMatrix from_supports(int v, const std::vector<std::vector<int>>& supports);

  int b() const noexcept { return b_; }
  int v() const noexcept { return v_; }

  bool operator()(int i, int j) const {
    return (words_[word(i, j)] >> (static_cast<unsigned>(j) & 63U)) & 1U;
  }
  void set(int i, int j, bool value);

  int row_sum(int i) const;
  int col_sum(int j) const;
  /// |supp(row i) ∩ supp(row k)|
  int row_overlap(int i, int k) const;
  std::vector<int> row_support(int i) const;
  std::vector<int> col_support(int j) const;
  std::string row_string(int i) const;

  IncidenceMatrix transpose() const;
  /// result(i, j) = (*this)(rows[i], cols[j])
  IncidenceMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;

  friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) = default;

 private:
  std::size_t word(int i, int j) const {
    return static_cast<std::size_t>(i) * words_per_row_ + (static_cast<unsigned>(j) >> 6U);
  }

  int b_ = 0;
  int v_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BibdParams {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int r = 0;
  int b = 0;
  friend bool operator==(const BibdParams&, const BibdParams&) = default;
};

/// Throws NotBibd naming the first violated condition. A single-vertex design
/// reports lambda = 1; lambda = 0 is rejected.
BibdParams verify_bibd(const IncidenceMatrix& x);

inline IncidenceMatrix dual(const IncidenceMatrix& x) { return x.transpose(); }

struct ProjectivePlane {
  IncidenceMatrix x;
  gf::FieldPtr field;
  int q = 0;
  int e = 0;
  /// Singer difference set in Z_{q^2+q+1}, ascending.
  std::vector<int> difference_set;
};

/// Circulant plane of order q = 2^e; block i = {i + s : s in D}.
ProjectivePlane singer_projective_plane(int e);
/// Same, over a caller-supplied GF(2^{3e}).
ProjectivePlane singer_projective_plane(gf::FieldPtr field);

/// Vertex indices (logs mod q^2+q+1) of t + t^2 a + a^2, a and 1; ascending.
std::vector<int> canonical_hyperoval(const ProjectivePlane& plane);

bool is_hyperoval(const IncidenceMatrix& plane, const std::vector<int>& s);

enum class DecompositionShape { kProjectivePrimal, kProjectiveDual, kAffineDual };

/// Block form [[A, B], [0, C]] reached by row_perm/col_perm.
struct HyperovalDecomposition {
  /// new row i is source row row_perm[i]
  std::vector<int> row_perm;
  std::vector<int> col_perm;
  int split_row = 0;
  int split_col = 0;
  DecompositionShape shape = DecompositionShape::kProjectivePrimal;
};

struct PrimalDecomposition {
  IncidenceMatrix x;
  HyperovalDecomposition layout;
};

/// Hyperoval vertices first, secant blocks first, both stable.
PrimalDecomposition hyperoval_decomposition(const IncidenceMatrix& plane, const std::vector<int>& s);

/// Undoes the permutations of a decomposition; exact inverse of the layout.
IncidenceMatrix restore(const IncidenceMatrix& m, const HyperovalDecomposition& layout);

struct DualDecomposition {
  IncidenceMatrix y;
  IncidenceMatrix z;
  HyperovalDecomposition y_layout;
  HyperovalDecomposition z_layout;
  /// Row of y that was removed to form z.
  int removed_row = 0;
};

/// Dual plane Y and affine plane Z. Y keeps exterior blocks in source order,
/// orders secant blocks by their hyperoval pair, places non-hyperoval vertices
/// sorted by row pattern, then hyperoval vertices ascending. removed_row
/// defaults to the first hyperoval row of Y.
DualDecomposition dual_decomposition(const IncidenceMatrix& plane, const std::vector<int>& s,
                                     std::optional<int> removed_row = std::nullopt);

enum class ClassOrder {
  /// Seeds scanned top to bottom.
  kAscending,
  /// Seeds are the bottom q+1 rows, last row first.
  kBottomRepresentatives,
};

struct ParallelClasses {
  /// Each class lists its representative first, then the other blocks ascending.
  std::vector<std::vector<int>> classes;
  bool representative_first = true;
};

ParallelClasses parallel_classes(const IncidenceMatrix& z, ClassOrder order = ClassOrder::kAscending);

/// One 0/1 row per line; blank lines and lines starting with '#' are skipped.
IncidenceMatrix read_ascii(const std::string& text);
std::string write_ascii(const IncidenceMatrix& x);
/// {"b": ..., "v": ..., "rows": ["0110...", ...]}
IncidenceMatrix read_json(const std::string& text);
std::string write_json(const IncidenceMatrix& x);

}  // namespace hyperetf::designs
