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

#include <random>

#include "hyperetf/error.hpp"
#include "hyperetf/etf.hpp"
#include "hyperetf/frame_io.hpp"
#include "hyperetf/golden.hpp"
#include "hyperetf/verify.hpp"

namespace {

using namespace hyperetf;
using cyclo::CycloMatrix;
using cyclo::CycloNum;
using cyclo::Rational;

void expect_parse_error(const std::string& text) {
  try {
    io::read_frame(text);
    FAIL() << "accepted: " << text.substr(0, 80);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse) << e.what();
  }
}

std::vector<FrameMatrix> shipped_frames() {
  return {
      FrameMatrix(golden::steiner_6x16(), SpanSpec::full(6), {2, "steiner", "shipped"}),
      FrameMatrix(golden::hyperoval_frame_6x10(), SpanSpec::zero_sum_tail(6, 3), {2, "affine", "shipped"}),
      FrameMatrix(golden::rotated_flat_6x10(), SpanSpec::zero_sum_all(6), {2, "flat", "shipped"}),
      FrameMatrix(golden::extended_6x16(), SpanSpec::full(6), {2, "extended", "shipped"}),
      FrameMatrix(golden::q4_frame_20x76(), SpanSpec::zero_sum_tail(20, 5), {4, "affine", "shipped"}),
  };
}

TEST(FrameIo, ExactJsonRoundTripIsLossless) {
  for (const auto& f : shipped_frames()) {
    const auto cert = verify::certify(f);
    const std::string text = io::write_json(f, cert);
    const FrameMatrix g = io::read_json(text);
    ASSERT_TRUE(g.is_exact());
    EXPECT_EQ(g.exact(), f.exact());
    EXPECT_EQ(g.conductor(), f.conductor());
    EXPECT_EQ(g.span().to_string(), f.span().to_string());
    EXPECT_EQ(g.meta().q, f.meta().q);
    EXPECT_EQ(g.meta().variant, f.meta().variant);
    EXPECT_EQ(g.meta().provenance, f.meta().provenance);
    EXPECT_EQ(io::certificate_json(verify::certify(g)), io::certificate_json(cert));
    EXPECT_EQ(io::write_json(g, cert), text);
  }
}

TEST(FrameIo, RandomCyclotomicRoundTrip) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 999);
  for (int conductor : {1, 3, 8, 12, 20}) {
    const int phi = cyclo::euler_phi(conductor);
    CycloMatrix a(3, 4, conductor);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) {
        std::vector<Rational> c(static_cast<std::size_t>(phi));
        for (auto& x : c) x = cyclo::make_rational(num(rng), den(rng));
        a.set(i, j, CycloNum::from_coeffs(conductor, c));
      }
    // Numerators beyond 64 bits travel as decimal strings.
    Rational big;
    big.get_num() = mpz_class("123456789012345678901234567890");
    big.get_den() = 7;
    big.canonicalize();
    a.set(0, 0, CycloNum(big, conductor));
    const FrameMatrix f(a, SpanSpec::full(3));
    EXPECT_EQ(io::read_json(io::write_json(f)).exact(), a);
  }
}

TEST(FrameIo, ExplicitProjectionSpanRoundTrip) {
  const SpanSpec s = SpanSpec::zero_sum_tail(6, 3);
  const FrameMatrix f(golden::hyperoval_frame_6x10(), SpanSpec::explicit_projection(s.projection_matrix(6), 5));
  const FrameMatrix g = io::read_json(io::write_json(f));
  EXPECT_EQ(g.span().to_string(), "explicit-projection");
  EXPECT_EQ(g.span().nominal_dim, 5);
  EXPECT_EQ(*g.span().projection, s.projection_matrix(6));
  EXPECT_TRUE(verify::certify(g).is_etf);
}

TEST(FrameIo, FloatJsonRoundTripIsBitExact) {
  const auto e = etf::extend(FrameMatrix(golden::flat_6x10(), SpanSpec::zero_sum_all(6)), etf::Branch::kPlus);
  kernels::ComplexMatrix a = golden::q4_frame_20x76().to_complex();
  const FrameMatrix f(a, SpanSpec::zero_sum_tail(20, 5), {4, "affine", "float copy"});
  const FrameMatrix g = io::read_json(io::write_json(f));
  ASSERT_FALSE(g.is_exact());
  EXPECT_EQ(g.to_complex().data(), a.data());
  EXPECT_TRUE(verify::certify(g).is_etf);
  EXPECT_TRUE(e.psi.is_exact());
}

TEST(FrameIo, CsvReimportCertifiesInFloatMode) {
  for (const auto& f : shipped_frames()) {
    const FrameMatrix g = io::read_frame(io::write_csv(f));
    ASSERT_FALSE(g.is_exact());
    EXPECT_EQ(g.span().to_string(), f.span().to_string());
    EXPECT_EQ(g.meta().q, f.meta().q);
    const auto c = verify::certify_float(g.to_complex(), g.span(), 1e-9);
    EXPECT_TRUE(c.is_etf);
    EXPECT_LT(kernels::max_abs_diff(g.to_complex(), f.to_complex()), 1e-14);
  }
}

TEST(FrameIo, CsvEntryForms) {
  const FrameMatrix g = io::read_csv("1,-1i, 2.5-0.5i ,1e-3+2E-2i\n-3i,0,1e+2-1e-2i,+1-1i\n");
  const kernels::ComplexMatrix a = g.to_complex();
  EXPECT_EQ(a(0, 0), std::complex<double>(1, 0));
  EXPECT_EQ(a(0, 1), std::complex<double>(0, -1));
  EXPECT_EQ(a(0, 2), std::complex<double>(2.5, -0.5));
  EXPECT_EQ(a(0, 3), std::complex<double>(1e-3, 2e-2));
  EXPECT_EQ(a(1, 0), std::complex<double>(0, -3));
  EXPECT_EQ(a(1, 2), std::complex<double>(100, -0.01));
  EXPECT_EQ(a(1, 3), std::complex<double>(1, -1));
  EXPECT_EQ(g.span().to_string(), "full");
}

TEST(FrameIo, MalformedInputIsParseError) {
  const std::string good = io::write_json(shipped_frames()[1]);
  expect_parse_error(good.substr(0, good.size() / 2));
  expect_parse_error("{}");
  expect_parse_error(R"({"format_tag":"etf-frame/2","representation":"float","m":1,"n":1,"entries":[[1,0]]})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"float","m":1,"n":2,"entries":[[1,0]]})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"float","m":1,"n":1,"entries":[[1]]})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"cyclotomic","conductor":4,"m":1,"n":1,"entries":[[[1,1]]]})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"cyclotomic","conductor":1,"m":1,"n":1,"entries":[[[1,0]]]})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"cyclotomic","conductor":0,"m":1,"n":1,"entries":[[[1,1]]]})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"cyclotomic","conductor":1,"m":1,"n":1,"entries":[[["x",1]]]})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"exotic","m":1,"n":1,"entries":[]})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"float","m":0,"n":1,"entries":[]})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"float","m":1,"n":1,"entries":[[1,0]],"metadata":{"span":"zero-sum-tail:9"}})");
  expect_parse_error(R"({"format_tag":"etf-frame/1","representation":"float","m":1,"n":1,"entries":[[1,0]],"metadata":{"span":"sideways"}})");
  expect_parse_error("1,2\n3\n");
  expect_parse_error("1,2x\n");
  expect_parse_error("1,,2\n");
  expect_parse_error("");
  expect_parse_error("nan,1\n");
  expect_parse_error("# etf-frame/1 span=zero-sum-tail:7\n1,1\n");
}

TEST(FrameIo, MissingFileIsParseError) {
  try {
    io::read_file("/nonexistent/frame.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

}  // namespace
