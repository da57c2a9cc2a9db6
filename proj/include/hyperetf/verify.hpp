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

// Exact and float certification of tight and equiangular frames.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperetf/cyclo.hpp"
#include "hyperetf/frame.hpp"
#include "hyperetf/kernels.hpp"

namespace hyperetf::verify {

using cyclo::CycloMatrix;
using cyclo::CycloNum;
using cyclo::Rational;

inline constexpr double kFloatTolerance = 1e-9;
inline constexpr double kRankTolerance = 1e-8;
/// Largest conductor for which rank is computed exactly.
inline constexpr int kExactRankMaxConductor = 24;

struct Witness {
  std::string check;
  int i = -1;
  int j = -1;
};

struct EtfCertificate {
  int m = 0;
  int n = 0;
  bool exact = true;
  double tolerance = 0.0;

  bool equal_norm = false;
  std::optional<Rational> common_norm_sq;
  double common_norm_sq_float = 0.0;

  bool equiangular = false;
  /// Normalized coherence |<phi_i, phi_j>|^2 / r^2.
  std::optional<Rational> coherence_sq;
  /// Raw |<phi_i, phi_j>|^2.
  std::optional<Rational> inner_sq;
  double coherence_sq_float = 0.0;

  /// Absent when n = 1.
  std::optional<Rational> welch_bound_sq;
  double welch_bound_sq_float = 0.0;

  bool tight_for_span = false;
  std::optional<Rational> tight_constant;
  double tight_constant_float = 0.0;

  int span_dim = 0;
  std::string span;
  bool span_matches = false;

  /// Equiangular, tight and at the Welch bound, for the span of the columns.
  bool etf_for_span = false;
  /// etf_for_span and the span agrees with the declared spec.
  bool is_etf = false;

  std::vector<Witness> witnesses;
};

CycloMatrix gram(const CycloMatrix& phi);
CycloMatrix frame_operator(const CycloMatrix& phi);

struct TightVerdict {
  bool tight = false;
  /// Candidate tight constant tr(F^2)/tr(F).
  CycloNum a;
  std::optional<Witness> witness;
};

/// Decides Phi Phi* Phi = a Phi exactly.
TightVerdict check_tight_for_span(const CycloMatrix& phi);

/// Decides Phi Phi* = a Pi for the projection Pi of spec; throws SpecMismatch.
bool check_projection_span(const CycloMatrix& phi, const SpanSpec& spec);

/// (n - d) / (d (n - 1)); throws DegenerateN when n = 1.
Rational welch_bound_sq(long n, long d);

EtfCertificate certify(const FrameMatrix& frame);
EtfCertificate certify_exact(const CycloMatrix& phi, const SpanSpec& spec);
EtfCertificate certify_float(const kernels::ComplexMatrix& phi, const SpanSpec& spec,
                             double tolerance = kFloatTolerance);

/// Fraction-free elimination over Q(zeta_N) for N <= 24, singular values otherwise.
int exact_rank(const CycloMatrix& phi);
int float_rank(const kernels::ComplexMatrix& phi, double tolerance = kRankTolerance);

struct RankResult {
  int rank = 0;
  std::vector<int> pivot_columns;
};
/// Exact elimination at any conductor.
RankResult eliminate(const CycloMatrix& phi);

struct Es2Result {
  Rational value;
  Rational lower_bound;
  bool optimal = false;
};
/// Throws NotPlusMinusOne and NotZeroSum.
Es2Result e_s2(const CycloMatrix& phi);

bool gerzon_check(long n, long d);

struct Lemma1Verdicts {
  /// a-tight frame for the span of the columns.
  bool tight_for_span = false;
  /// Phi Phi* Phi = a Phi.
  bool synthesis = false;
  /// (Phi Phi*)^2 = a Phi Phi*.
  bool frame_operator_sq = false;
  /// (Phi* Phi)^2 = a Phi* Phi.
  bool gram_sq = false;
  std::complex<double> a;
};

Lemma1Verdicts lemma1_exact(const CycloMatrix& phi);
Lemma1Verdicts lemma1_float(const kernels::ComplexMatrix& phi, double tolerance = kFloatTolerance);

}  // namespace hyperetf::verify
