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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperetf/cyclo.hpp"
#include "hyperetf/designs.hpp"
#include "hyperetf/etf.hpp"
#include "hyperetf/frame.hpp"

namespace hyperetf::generate {

enum class Kind { kAffine, kProjective, kSteiner, kFlat, kExtended };

/// "affine", "projective", "steiner", "flat" or "extended"; throws Parse.
Kind parse_kind(const std::string& text);
std::string kind_name(Kind kind);
/// "plus" or "minus"; throws Parse.
etf::Branch parse_branch(const std::string& text);

struct Options {
  int q = 2;
  Kind kind = Kind::kAffine;
  etf::Branch branch = etf::Branch::kPlus;
  /// q = 4 affine and flat only.
  bool printed_layout = false;
  /// User-supplied projective plane (blocks x vertices); q is then read from its size.
  std::optional<designs::IncidenceMatrix> plane;
  /// Hyperoval in the user plane; searched for when absent.
  std::optional<std::vector<int>> hyperoval;
};

/// Builds the requested frame with its declared span and metadata.
FrameMatrix build(const Options& options);

/// First hyperoval in lexicographic order; throws NotHyperoval when there is none.
std::vector<int> find_hyperoval(const designs::IncidenceMatrix& plane);

struct OrderInfo {
  int q = 0;
  int d = 0;
  int n = 0;
  int m = 0;
  /// (n - d) / (d (n - 1))
  cyclo::Rational welch_bound_sq;
};

/// d = q^2 + q - 1, n = q d, m = d + 1 for q in {2, 4, 8}; throws UnsupportedOrder.
OrderInfo order_info(int q);

/// sqrt(r) as an exact decimal-free string, e.g. "1/5" or "1/3*sqrt(2)".
std::string sqrt_string(const cyclo::Rational& r);

}  // namespace hyperetf::generate
