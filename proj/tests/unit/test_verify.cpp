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

#include "../support/random_frames.hpp"

#include <random>

#include "hyperetf/error.hpp"
#include "hyperetf/golden.hpp"
#include "hyperetf/seeds.hpp"
#include "hyperetf/verify.hpp"

namespace {

using hyperetf::Error;
using hyperetf::ErrorCode;
using hyperetf::SpanSpec;
using hyperetf::cyclo::CycloMatrix;
using hyperetf::cyclo::CycloNum;
using hyperetf::cyclo::make_rational;
using hyperetf::cyclo::Rational;
using hyperetf::kernels::ComplexMatrix;
namespace golden = hyperetf::golden;
namespace verify = hyperetf::verify;

CycloMatrix column(std::initializer_list<long> v) {
  CycloMatrix m(static_cast<int>(v.size()), 1, 1);
  int i = 0;
  for (long x : v) m.set(i++, 0, Rational(x));
  return m;
}

TEST(VerifyGram, SimplexHasUnitModulusOffDiagonal) {
  const CycloMatrix g = verify::gram(golden::simplex_3x4());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto m = g(i, j).modulus_squared().is_rational();
      ASSERT_TRUE(m);
      EXPECT_EQ(*m, i == j ? 9 : 1);
    }
}

TEST(VerifyGram, SingleUnitColumn) {
  const CycloMatrix g = verify::gram(column({0, 1, 0}));
  ASSERT_EQ(g.rows(), 1);
  EXPECT_EQ(g(0, 0).is_rational(), Rational(1));
}

TEST(VerifyTight, SteinerConstant) {
  const auto v = verify::check_tight_for_span(golden::steiner_6x16());
  EXPECT_TRUE(v.tight);
  EXPECT_EQ(v.a.is_rational(), Rational(8));
}

TEST(VerifyTight, HyperovalFrameConstant) {
  const auto v = verify::check_tight_for_span(golden::hyperoval_frame_6x10());
  EXPECT_TRUE(v.tight);
  EXPECT_EQ(v.a.is_rational(), Rational(6));
}

TEST(VerifyTight, SingleVectorIsTightWithItsNorm) {
  const auto v = verify::check_tight_for_span(column({2, -1, 0, 3}));
  EXPECT_TRUE(v.tight);
  EXPECT_EQ(v.a.is_rational(), Rational(14));
}

TEST(VerifyTight, NonTightCarriesWitness) {
  CycloMatrix m(2, 2, 1);
  m.set(0, 0, Rational(1));
  m.set(1, 1, Rational(2));
  const auto v = verify::check_tight_for_span(m);
  EXPECT_FALSE(v.tight);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->i, 0);
  EXPECT_EQ(v.witness->j, 0);
}

TEST(VerifyProjection, ZeroSumSpans) {
  EXPECT_TRUE(verify::check_projection_span(golden::hyperoval_frame_6x10(), SpanSpec::zero_sum_tail(6, 3)));
  EXPECT_FALSE(verify::check_projection_span(golden::hyperoval_frame_6x10(), SpanSpec::zero_sum_all(6)));
  EXPECT_TRUE(verify::check_projection_span(golden::rotated_flat_6x10(), SpanSpec::zero_sum_all(6)));
  EXPECT_TRUE(verify::check_projection_span(golden::flat_6x10(), SpanSpec::zero_sum_all(6)));
}

TEST(VerifyProjection, BadTailIsSpecMismatch) {
  try {
    verify::check_projection_span(golden::flat_6x10(), SpanSpec::zero_sum_tail(6, 9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpecMismatch);
  }
}

TEST(VerifyWelch, PrintedValues) {
  EXPECT_EQ(verify::welch_bound_sq(16, 6), make_rational(1, 9));
  EXPECT_EQ(verify::welch_bound_sq(10, 5), make_rational(1, 9));
  EXPECT_EQ(verify::welch_bound_sq(76, 19), make_rational(1, 25));
  EXPECT_EQ(verify::welch_bound_sq(4, 4), Rational(0));
}

TEST(VerifyWelch, DegenerateN) {
  try {
    verify::welch_bound_sq(1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateN);
  }
}

TEST(VerifyRank, Examples) {
  EXPECT_EQ(verify::exact_rank(golden::flat_6x10()), 5);
  EXPECT_EQ(verify::exact_rank(CycloMatrix::identity(4, 1)), 4);
  EXPECT_EQ(verify::exact_rank(golden::steiner_6x16()), 6);
  EXPECT_EQ(verify::exact_rank(golden::q4_frame_20x76()), 19);
  EXPECT_EQ(verify::exact_rank(CycloMatrix(3, 5, 7)), 0);
}

TEST(VerifyRank, EliminationAgreesWithFloatOnRandomMatrices) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-2, 2);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = dim(rng);
    const int cols = dim(rng);
    const int rank_cap = dim(rng);
    CycloMatrix a(rows, rank_cap, 4);
    CycloMatrix b(rank_cap, cols, 4);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < rank_cap; ++k)
        a.set(i, k, CycloNum::root_of_unity(4, pick(rng)) * Rational(pick(rng)));
    for (int k = 0; k < rank_cap; ++k)
      for (int j = 0; j < cols; ++j) b.set(k, j, CycloNum(Rational(pick(rng)), 4));
    const CycloMatrix m = a * b;
    EXPECT_EQ(verify::eliminate(m).rank, verify::float_rank(m.to_complex())) << trial;
    EXPECT_EQ(verify::exact_rank(m), verify::float_rank(m.to_complex())) << trial;
  }
}

TEST(VerifyCertify, Steiner) {
  const auto c = verify::certify_exact(golden::steiner_6x16(), SpanSpec::full(6));
  EXPECT_TRUE(c.is_etf);
  EXPECT_EQ(c.n, 16);
  EXPECT_EQ(c.span_dim, 6);
  EXPECT_EQ(c.coherence_sq, make_rational(1, 9));
  EXPECT_EQ(c.common_norm_sq, Rational(3));
  EXPECT_EQ(c.tight_constant, Rational(8));
  EXPECT_TRUE(c.witnesses.empty());
}

TEST(VerifyCertify, PrintedQ4Frame) {
  const auto c = verify::certify_exact(golden::q4_frame_20x76(), SpanSpec::zero_sum_tail(20, 5));
  EXPECT_TRUE(c.is_etf);
  EXPECT_EQ(c.n, 76);
  EXPECT_EQ(c.span_dim, 19);
  EXPECT_EQ(c.common_norm_sq, Rational(5));
  EXPECT_EQ(c.coherence_sq, make_rational(1, 25));
  EXPECT_EQ(c.welch_bound_sq, make_rational(1, 25));
  EXPECT_EQ(c.inner_sq, Rational(1));
}

TEST(VerifyCertify, SpanMismatchIsNotEtf) {
  const auto c = verify::certify_exact(golden::hyperoval_frame_6x10(), SpanSpec::zero_sum_all(6));
  EXPECT_TRUE(c.etf_for_span);
  EXPECT_FALSE(c.span_matches);
  EXPECT_FALSE(c.is_etf);
}

TEST(VerifyCertify, FlatFrames) {
  for (const auto& phi : {golden::flat_6x10(), golden::rotated_flat_6x10(), golden::class_permuted_6x10()}) {
    const auto c = verify::certify_exact(phi, SpanSpec::zero_sum_all(6));
    EXPECT_TRUE(c.etf_for_span);
    EXPECT_EQ(c.span_dim, 5);
    EXPECT_EQ(c.coherence_sq, make_rational(1, 9));
  }
}

TEST(VerifyCertify, ExtendedFrame) {
  const auto c = verify::certify_exact(golden::extended_6x16(), SpanSpec::full(6));
  EXPECT_TRUE(c.is_etf);
}

TEST(VerifyCertify, RandomGaussianIsNotEquiangular) {
  std::mt19937 rng(11);
  std::normal_distribution<double> g;
  ComplexMatrix m(6, 10);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 10; ++j) m(i, j) = {g(rng), g(rng)};
  const auto c = verify::certify_float(m, SpanSpec::full(6));
  EXPECT_FALSE(c.equiangular);
  EXPECT_FALSE(c.is_etf);
  ASSERT_FALSE(c.witnesses.empty());
}

TEST(VerifyCertify, Invariants) {
  for (const auto& [phi, spec] : std::vector<std::pair<CycloMatrix, SpanSpec>>{
           {golden::steiner_6x16(), SpanSpec::full(6)},
           {golden::hyperoval_frame_6x10(), SpanSpec::zero_sum_tail(6, 3)},
           {golden::rotated_flat_6x10(), SpanSpec::zero_sum_all(6)},
           {golden::extended_6x16(), SpanSpec::full(6)}}) {
    const auto c = verify::certify_exact(phi, spec);
    ASSERT_TRUE(c.is_etf);
    const Rational r = *c.common_norm_sq;
    EXPECT_EQ(*c.tight_constant * c.span_dim, r * c.n);
    EXPECT_EQ(*c.coherence_sq / *c.welch_bound_sq, Rational(1));
    EXPECT_EQ(*c.inner_sq, r * r * *c.welch_bound_sq);
    EXPECT_TRUE(verify::gerzon_check(c.n, c.span_dim) || !phi.is_rational());
  }
}

TEST(VerifyCertify, FloatAgreesWithExact) {
  for (const auto& [phi, spec] : std::vector<std::pair<CycloMatrix, SpanSpec>>{
           {golden::steiner_6x16(), SpanSpec::full(6)},
           {golden::hyperoval_frame_6x10(), SpanSpec::zero_sum_tail(6, 3)},
           {golden::hyperoval_frame_6x10(), SpanSpec::zero_sum_all(6)},
           {golden::q4_frame_20x76(), SpanSpec::zero_sum_tail(20, 5)},
           {golden::simplex_3x4(), SpanSpec::full(3)},
           {golden::cosimplex_3x2(), SpanSpec::full(3)}}) {
    const auto e = verify::certify_exact(phi, spec);
    const auto f = verify::certify_float(phi.to_complex(), spec);
    EXPECT_EQ(e.is_etf, f.is_etf);
    EXPECT_EQ(e.etf_for_span, f.etf_for_span);
    EXPECT_EQ(e.tight_for_span, f.tight_for_span);
    EXPECT_EQ(e.equiangular, f.equiangular);
    EXPECT_EQ(e.span_dim, f.span_dim);
    EXPECT_NEAR(e.tight_constant_float, f.tight_constant_float, 1e-9);
  }
}

TEST(VerifyEs2, Examples) {
  const auto flat = verify::e_s2(golden::flat_6x10());
  EXPECT_EQ(flat.value, Rational(4));
  EXPECT_EQ(flat.lower_bound, Rational(4));
  EXPECT_TRUE(flat.optimal);
  EXPECT_TRUE(verify::e_s2(golden::rotated_flat_6x10()).optimal);

  CycloMatrix repeated = golden::flat_6x10();
  for (int i = 0; i < 6; ++i) repeated.set(i, 1, repeated(i, 0));
  const auto r = verify::e_s2(repeated);
  EXPECT_FALSE(r.optimal);
  EXPECT_GT(r.value, r.lower_bound);
}

TEST(VerifyEs2, Rejections) {
  try {
    verify::e_s2(golden::hyperoval_frame_6x10());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPlusMinusOne);
  }
  try {
    verify::e_s2(golden::sign_matrix({"++", "+-", "++"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotZeroSum);
  }
}

TEST(VerifyGerzon, Examples) {
  EXPECT_TRUE(verify::gerzon_check(76, 19));
  EXPECT_TRUE(verify::gerzon_check(16, 6));
  EXPECT_TRUE(verify::gerzon_check(21, 6));
  EXPECT_FALSE(verify::gerzon_check(22, 6));
}

TEST(Lemma1, VerdictsAgreeOnRandomFrames) {
  std::mt19937 rng(2026);
  int tight_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [phi, tight] = hyperetf::testsupport::random_frame(trial, rng);
    const auto v = verify::lemma1_float(phi);
    EXPECT_EQ(v.synthesis, v.frame_operator_sq) << trial;
    EXPECT_EQ(v.synthesis, v.gram_sq) << trial;
    EXPECT_EQ(v.synthesis, v.tight_for_span) << trial;
    if (tight) {
      EXPECT_TRUE(v.synthesis) << trial;
      ++tight_count;
    }
  }
  EXPECT_EQ(tight_count, 500);
}

TEST(Lemma1, ExactVerdictsAgreeWithFloat) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(-1, 1);
  std::uniform_int_distribution<int> dim(1, 5);
  std::vector<CycloMatrix> frames = {golden::steiner_6x16(), golden::hyperoval_frame_6x10(),
                                     golden::zeta6_simplex_5x6(), golden::real_cosimplex_5x4()};
  for (int trial = 0; trial < 40; ++trial) {
    const int m = dim(rng);
    const int n = dim(rng);
    CycloMatrix a(m, n, 4);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a.set(i, j, CycloNum::root_of_unity(4, pick(rng)) * Rational(pick(rng)));
    frames.push_back(a);
  }
  const CycloMatrix dft = hyperetf::seeds::dft_hadamard(8);
  for (int m = 1; m <= 8; ++m) {
    CycloMatrix rows(m, 8, 8);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < 8; ++j) rows.set(i, j, dft(i, j));
    frames.push_back(rows);
  }
  for (std::size_t t = 0; t < frames.size(); ++t) {
    const auto e = verify::lemma1_exact(frames[t]);
    const auto f = verify::lemma1_float(frames[t].to_complex());
    EXPECT_EQ(e.synthesis, e.frame_operator_sq) << t;
    EXPECT_EQ(e.synthesis, e.gram_sq) << t;
    EXPECT_EQ(e.synthesis, e.tight_for_span) << t;
    EXPECT_EQ(e.synthesis, f.synthesis) << t;
    EXPECT_EQ(e.tight_for_span, f.tight_for_span) << t;
    if (t < 3 || t >= 44) EXPECT_TRUE(e.synthesis) << t;
    if (t == 3) EXPECT_FALSE(e.synthesis);
  }
}

}  // namespace
