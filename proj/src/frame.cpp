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

#include "hyperetf/frame.hpp"

#include <charconv>

#include "hyperetf/error.hpp"

namespace hyperetf {

std::string SpanSpec::to_string() const {
  switch (kind) {
    case Kind::kFull: return "full";
    case Kind::kZeroSumTail: return "zero-sum-tail:" + std::to_string(tail);
    case Kind::kZeroSumAll: return "zero-sum-all";
    case Kind::kExplicitProjection: return "explicit-projection";
  }
  return "full";
}

SpanSpec SpanSpec::parse(const std::string& text, int m) {
  if (text == "full") return full(m);
  if (text == "zero-sum-all") return zero_sum_all(m);
  constexpr std::string_view prefix = "zero-sum-tail:";
  if (text.starts_with(prefix)) {
    int t = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, t);
    if (ec != std::errc{} || ptr != last || t < 1 || t > m) {
      throw Error(ErrorCode::kParse, "bad tail length in span '" + text + "'");
    }
    return zero_sum_tail(m, t);
  }
  throw Error(ErrorCode::kParse, "unknown span '" + text + "'");
}

cyclo::CycloMatrix SpanSpec::projection_matrix(int m) const {
  using cyclo::Rational;
  switch (kind) {
    case Kind::kFull:
      return cyclo::CycloMatrix::identity(m, 1);
    case Kind::kZeroSumTail:
    case Kind::kZeroSumAll: {
      const int t = kind == Kind::kZeroSumAll ? m : tail;
      if (t < 1 || t > m) throw Error(ErrorCode::kSpecMismatch, "tail length outside [1, m]");
      cyclo::CycloMatrix p = cyclo::CycloMatrix::identity(m, 1);
      const Rational share = cyclo::make_rational(1, t);
      for (int i = m - t; i < m; ++i)
        for (int j = m - t; j < m; ++j) p.set(i, j, (i == j ? Rational(1) : Rational(0)) - share);
      return p;
    }
    case Kind::kExplicitProjection:
      if (!projection || projection->rows() != m || projection->cols() != m) {
        throw Error(ErrorCode::kSpecMismatch, "explicit projection missing or wrong size");
      }
      return *projection;
  }
  throw Error(ErrorCode::kSpecMismatch, "unknown span kind");
}

int FrameMatrix::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, entries_);
}

int FrameMatrix::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, entries_);
}

int FrameMatrix::conductor() const { return is_exact() ? std::get<cyclo::CycloMatrix>(entries_).conductor() : 0; }

const cyclo::CycloMatrix& FrameMatrix::exact() const {
  if (!is_exact()) throw Error(ErrorCode::kPreconditionViolated, "frame is in float mode");
  return std::get<cyclo::CycloMatrix>(entries_);
}

kernels::ComplexMatrix FrameMatrix::to_complex() const {
  if (is_exact()) return std::get<cyclo::CycloMatrix>(entries_).to_complex();
  return std::get<kernels::ComplexMatrix>(entries_);
}

}  // namespace hyperetf
