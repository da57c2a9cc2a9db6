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

#include "hyperetf/designs.hpp"
#include "hyperetf/error.hpp"
#include "hyperetf/generate.hpp"
#include "hyperetf/golden.hpp"
#include "hyperetf/verify.hpp"

namespace {

using namespace hyperetf;
using cyclo::CycloMatrix;
using cyclo::Rational;
using generate::Kind;

FrameMatrix build(int q, Kind kind, etf::Branch branch = etf::Branch::kPlus, bool printed = false) {
  generate::Options o;
  o.q = q;
  o.kind = kind;
  o.branch = branch;
  o.printed_layout = printed;
  return generate::build(o);
}

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(OrderInfo, Values) {
  const auto a = generate::order_info(2);
  EXPECT_EQ(a.d, 5);
  EXPECT_EQ(a.n, 10);
  EXPECT_EQ(a.m, 6);
  EXPECT_EQ(a.welch_bound_sq, cyclo::make_rational(1, 9));
  const auto b = generate::order_info(4);
  EXPECT_EQ(b.d, 19);
  EXPECT_EQ(b.n, 76);
  EXPECT_EQ(b.welch_bound_sq, cyclo::make_rational(1, 25));
  const auto c = generate::order_info(8);
  EXPECT_EQ(c.d, 71);
  EXPECT_EQ(c.n, 568);
  EXPECT_EQ(c.m, 72);
  EXPECT_EQ(c.welch_bound_sq, cyclo::make_rational(1, 81));
  for (int q : {0, 1, 3, 6, 16}) expect_code(ErrorCode::kUnsupportedOrder, [q] { generate::order_info(q); });
}

TEST(OrderInfo, WelchBoundIsOneOverQPlusOne) {
  for (int q : {2, 4, 8}) {
    const auto info = generate::order_info(q);
    EXPECT_EQ(info.welch_bound_sq, cyclo::make_rational(1, (q + 1) * (q + 1)));
    EXPECT_EQ(info.welch_bound_sq, verify::welch_bound_sq(info.n, info.d));
  }
}

TEST(SqrtString, Forms) {
  EXPECT_EQ(generate::sqrt_string(cyclo::make_rational(1, 25)), "1/5");
  EXPECT_EQ(generate::sqrt_string(cyclo::make_rational(1, 900)), "1/30");
  EXPECT_EQ(generate::sqrt_string(Rational(0)), "0");
  EXPECT_EQ(generate::sqrt_string(cyclo::make_rational(1, 2)), "1/2*sqrt(2)");
  EXPECT_EQ(generate::sqrt_string(Rational(12)), "2*sqrt(3)");
}

TEST(Build, Q2MatchesShippedFrames) {
  EXPECT_EQ(build(2, Kind::kAffine).exact(), golden::hyperoval_frame_6x10());
  EXPECT_EQ(build(2, Kind::kSteiner).exact(), golden::steiner_6x16());
  EXPECT_EQ(build(2, Kind::kFlat).exact(), golden::rotated_flat_6x10());
  EXPECT_EQ(build(2, Kind::kExtended).exact(), golden::extended_6x16());
}

TEST(Build, Q2MinusBranch) {
  const FrameMatrix f = build(2, Kind::kExtended, etf::Branch::kMinus);
  const CycloMatrix& psi = f.exact();
  EXPECT_EQ(psi.cols(), 16);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(psi(i, 10 + j).is_rational(), Rational(i == j ? -1 : 1));
  EXPECT_TRUE(verify::certify(f).is_etf);
}

TEST(Build, Q4PrintedLayout) {
  EXPECT_EQ(build(4, Kind::kAffine, etf::Branch::kPlus, true).exact(), golden::q4_frame_20x76());
}

TEST(Build, AllVariantsCertify) {
  for (int q : {2, 4}) {
    for (Kind k : {Kind::kAffine, Kind::kProjective, Kind::kSteiner, Kind::kFlat, Kind::kExtended}) {
      const FrameMatrix f = build(q, k);
      const auto c = verify::certify(f);
      EXPECT_TRUE(c.is_etf) << q << " " << generate::kind_name(k);
      EXPECT_EQ(f.meta().q, q);
      EXPECT_EQ(f.meta().variant, generate::kind_name(k));
      EXPECT_EQ(*c.welch_bound_sq, verify::welch_bound_sq(c.n, c.span_dim));
    }
  }
}

TEST(Build, Shapes) {
  struct Row {
    int q;
    Kind k;
    int m, n, d;
  };
  for (const Row& r : std::vector<Row>{{4, Kind::kAffine, 20, 76, 19},
                                       {4, Kind::kProjective, 21, 96, 20},
                                       {4, Kind::kSteiner, 20, 96, 20},
                                       {4, Kind::kFlat, 20, 76, 19},
                                       {4, Kind::kExtended, 20, 96, 20}}) {
    const FrameMatrix f = build(r.q, r.k);
    EXPECT_EQ(f.rows(), r.m);
    EXPECT_EQ(f.cols(), r.n);
    EXPECT_EQ(verify::certify(f).span_dim, r.d) << generate::kind_name(r.k);
  }
}

TEST(Build, Rejections) {
  expect_code(ErrorCode::kUnsupportedOrder, [] { build(3, Kind::kAffine); });
  expect_code(ErrorCode::kPreconditionViolated, [] { build(2, Kind::kAffine, etf::Branch::kPlus, true); });
  expect_code(ErrorCode::kPreconditionViolated, [] { build(4, Kind::kSteiner, etf::Branch::kPlus, true); });
  expect_code(ErrorCode::kParse, [] { generate::parse_kind("hexagonal"); });
  expect_code(ErrorCode::kParse, [] { generate::parse_branch("up"); });
  for (Kind k : {Kind::kAffine, Kind::kProjective, Kind::kSteiner, Kind::kFlat, Kind::kExtended})
    EXPECT_EQ(generate::parse_kind(generate::kind_name(k)), k);
}

TEST(Build, UserPlane) {
  for (int e : {1, 2}) {
    const auto plane = designs::singer_projective_plane(e);
    generate::Options o;
    o.plane = plane.x;
    for (Kind k : {Kind::kAffine, Kind::kProjective, Kind::kFlat}) {
      o.kind = k;
      const FrameMatrix f = generate::build(o);
      EXPECT_EQ(f.meta().q, plane.q);
      EXPECT_TRUE(verify::certify(f).is_etf) << e << " " << generate::kind_name(k);
    }
    o.kind = Kind::kAffine;
    o.hyperoval = designs::canonical_hyperoval(plane);
    EXPECT_EQ(generate::build(o).exact(), build(plane.q, Kind::kAffine).exact());
  }
  generate::Options bad;
  bad.plane = designs::IncidenceMatrix::from_rows({"110", "011", "101"});
  expect_code(ErrorCode::kNotBibd, [&] { generate::build(bad); });
}

TEST(FindHyperoval, SingerPlanes) {
  for (int e : {1, 2, 3}) {
    const auto plane = designs::singer_projective_plane(e);
    const auto s = generate::find_hyperoval(plane.x);
    EXPECT_EQ(static_cast<int>(s.size()), plane.q + 2);
    EXPECT_TRUE(designs::is_hyperoval(plane.x, s));
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  }
}

}  // namespace
