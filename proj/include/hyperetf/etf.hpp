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

// Frame assembly from block designs and unimodular seeds.

#pragma once

#include <optional>
#include <vector>

#include "hyperetf/cyclo.hpp"
#include "hyperetf/designs.hpp"
#include "hyperetf/frame.hpp"
#include "hyperetf/seeds.hpp"
#include "hyperetf/surd.hpp"

namespace hyperetf::etf {

using cyclo::CycloMatrix;
using cyclo::Rational;
using designs::IncidenceMatrix;

/// Maps the i-th standard basis vector of F^source_dim to the one at support[i].
struct Embedding {
  int target_dim = 0;
  int source_dim = 0;
  std::vector<int> support;

  CycloMatrix matrix() const;
  /// E s for every column s of seed.
  CycloMatrix apply(const CycloMatrix& seed) const;
};

/// One embedding per column; throws NonconstantColumnSum.
std::vector<Embedding> embeddings_from(const IncidenceMatrix& x);

/// [E_1 S ... E_v S] for a BIBD(v, k, 1); throws NotBibd and SizeMismatch.
FrameMatrix steiner_etf(const IncidenceMatrix& x, const CycloMatrix& s);

/// Simplex copies on the first simplex_blocks columns of x, cosimplex copies on the rest.
CycloMatrix assemble(const IncidenceMatrix& x, int simplex_blocks, const CycloMatrix& s, const CycloMatrix& c);

enum class Variant { kAffine, kProjective };

struct HyperovalOptions {
  std::optional<seeds::SimplexSource> simplex;
  std::optional<int> removed_row;
  /// q = 4 affine only: relabel to the printed vertex and block order.
  bool printed_layout = false;
};

struct HyperovalFrame {
  FrameMatrix frame;
  /// Affine plane Z or projective plane Y the embeddings come from.
  IncidenceMatrix design;
  designs::DualDecomposition decomposition;
  int simplex_blocks = 0;
};

/// q = 2^e, e in {1, 2, 3}; throws UnsupportedOrder.
HyperovalFrame hyperoval_construction(int q, Variant variant, const HyperovalOptions& options = {});
FrameMatrix hyperoval_etf(int q, Variant variant, const HyperovalOptions& options = {});

/// Same construction for a user-supplied projective plane of even order and a hyperoval in it.
HyperovalFrame hyperoval_construction(const IncidenceMatrix& plane, const std::vector<int>& hyperoval,
                                      Variant variant, const HyperovalOptions& options = {});

/// Default simplex source for order q.
seeds::SimplexSource default_simplex_source(int q);

/// Z with its non-hyperoval rows and exterior columns reordered to the given source indices.
IncidenceMatrix relabel_affine(const designs::DualDecomposition& dd, const std::vector<int>& vertices,
                               const std::vector<int>& exterior_blocks);

/// (I (x) H) P phi with P listing rows class by class. Throws NotAffineForm and BadHadamard.
FrameMatrix flatten(const FrameMatrix& phi, const IncidenceMatrix& z, const designs::ParallelClasses& classes,
                    const CycloMatrix& h);

enum class Branch { kPlus, kMinus };

struct ExtensionScalars {
  Surd f;
  Surd g;
  double f_float = 0.0;
  double g_float = 0.0;
  Branch branch = Branch::kPlus;
  /// mn / d
  Rational a;
};

/// Throws ConditionViolated unless 1/d = 1/m + 1/n - 1/(m+n-1).
ExtensionScalars extension_scalars(long m, long n, long d, Branch branch = Branch::kPlus);

struct ExtendedFrame {
  /// Exact when phi is exact and f, g are rational.
  FrameMatrix psi;
  ExtensionScalars scalars;
  int span_dim = 0;
  /// Frame operator of psi equals (m + n) I within tolerance.
  bool frame_operator_check = false;
  double frame_operator_error = 0.0;
};

/// [phi | f phi phi* + g I]; throws PreconditionViolated.
ExtendedFrame extend(const FrameMatrix& phi, Branch branch = Branch::kPlus);

struct FlatParams {
  long q = 0;
  long m = 0;
  long n = 0;
};

/// Even q with m = q(q+1) <= max_m whose two integrality quantities are odd integers.
std::vector<FlatParams> admissible_flat_params(long max_m);

struct BlockTightness {
  long k0 = 0;
  long v0 = 0;
  long b0 = 0;
  Rational first_eigenvalue;
  Rational second_eigenvalue;
  bool tight = false;
};

/// Eigenvalues k(r+1-(k+1)/r) and (k+1)(r-1); tight iff they agree.
BlockTightness block_form_eigenvalues(long k, long r);
/// Checks the block form and evaluates the formulas; throws NotDecomposedForm.
BlockTightness general_block_tightness(const IncidenceMatrix& x);

}  // namespace hyperetf::etf
