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

// Frame synthesis matrices (vectors as columns) with the subspace they are
// claimed to span.

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hyperetf/cyclo.hpp"
#include "hyperetf/kernels.hpp"

namespace hyperetf {

struct SpanSpec {
  enum class Kind { kFull, kZeroSumTail, kZeroSumAll, kExplicitProjection };

  Kind kind = Kind::kFull;
  /// Trailing coordinates that must sum to zero (kZeroSumTail).
  int tail = 0;
  int nominal_dim = 0;
  /// kExplicitProjection only.
  std::optional<cyclo::CycloMatrix> projection;

  static SpanSpec full(int m) { return {Kind::kFull, 0, m, std::nullopt}; }
  static SpanSpec zero_sum_tail(int m, int t) { return {Kind::kZeroSumTail, t, m - 1, std::nullopt}; }
  static SpanSpec zero_sum_all(int m) { return {Kind::kZeroSumAll, m, m - 1, std::nullopt}; }
  static SpanSpec explicit_projection(cyclo::CycloMatrix p, int d) {
    return {Kind::kExplicitProjection, 0, d, std::move(p)};
  }

  /// "full", "zero-sum-tail:t", "zero-sum-all" or "explicit-projection".
  std::string to_string() const;
  /// Inverse of to_string for the first three kinds; throws Parse.
  static SpanSpec parse(const std::string& text, int m);

  /// Orthogonal projection onto the spec's subspace of F^m, exact.
  cyclo::CycloMatrix projection_matrix(int m) const;
};

struct FrameMetadata {
  int q = 0;
  std::string variant;
  std::string provenance;
};

class FrameMatrix {
 public:
  FrameMatrix() = default;
  FrameMatrix(cyclo::CycloMatrix entries, SpanSpec span, FrameMetadata meta = {})
      : entries_(std::move(entries)), span_(std::move(span)), meta_(std::move(meta)) {}
  FrameMatrix(kernels::ComplexMatrix entries, SpanSpec span, FrameMetadata meta = {})
      : entries_(std::move(entries)), span_(std::move(span)), meta_(std::move(meta)) {}

  bool is_exact() const noexcept { return std::holds_alternative<cyclo::CycloMatrix>(entries_); }
  int rows() const;
  int cols() const;
  /// Exact conductor; 0 in float mode.
  int conductor() const;

  /// Throws PreconditionViolated in float mode.
  const cyclo::CycloMatrix& exact() const;
  kernels::ComplexMatrix to_complex() const;

  const SpanSpec& span() const noexcept { return span_; }
  SpanSpec& span() noexcept { return span_; }
  const FrameMetadata& meta() const noexcept { return meta_; }
  FrameMetadata& meta() noexcept { return meta_; }

 private:
  std::variant<cyclo::CycloMatrix, kernels::ComplexMatrix> entries_;
  SpanSpec span_;
  FrameMetadata meta_;
};

}  // namespace hyperetf
