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

// Finite abelian groups, characters, difference sets and harmonic frames.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperetf/cyclo.hpp"
#include "hyperetf/frame.hpp"

namespace hyperetf::groups {

/// Z_{f_0} x ... x Z_{f_{r-1}}; elements are mixed-radix integers, first factor most significant.
class AbelianGroup {
 public:
  /// Throws PreconditionViolated on a factor < 2 or an order above 4096.
  explicit AbelianGroup(std::vector<int> factors);
  /// "2,2,2,2"
  static AbelianGroup parse(const std::string& text);

  const std::vector<int>& factors() const noexcept { return factors_; }
  int order() const noexcept { return order_; }
  int exponent() const noexcept { return exponent_; }

  std::vector<int> digits(int g) const;
  int encode(const std::vector<int>& digits) const;
  int add(int g, int h) const;
  int neg(int g) const;
  int sub(int g, int h) const { return add(g, neg(h)); }

  /// One character per digit when every factor is at most 10, else comma-separated in parentheses.
  std::string format(int g) const;
  /// Inverse of format; throws Parse.
  int parse_element(const std::string& text) const;
  std::string to_string() const;

 private:
  std::vector<int> factors_;
  int order_ = 1;
  int exponent_ = 1;
};

/// Entry (g, chi) = prod_i zeta_{f_i}^{g_i chi_i}, conductor = exponent.
cyclo::CycloMatrix character_table(const AbelianGroup& g);

/// Common number of representations d - e of every nonzero element, or nothing.
std::optional<int> is_difference_set(const AbelianGroup& g, const std::vector<int>& d);

/// Rows d of the character table; throws NotDifferenceSet.
FrameMatrix harmonic_etf(const AbelianGroup& g, const std::vector<int>& d);

/// Smallest sorted translate d + h.
std::vector<int> canonical_translate(const AbelianGroup& g, std::vector<int> d);

struct PairedSet {
  std::vector<int> d;
  std::vector<int> d_prime;
  int rank = 0;
};

struct SearchOptions {
  /// Report every pair instead of one per pair of translation classes.
  bool all = false;
};

/// Largest group order searched exhaustively.
inline constexpr int kMaxSearchOrder = 16;

/// Pairs of difference sets whose m x n character submatrix has equiangular rows and
/// columns forming ETFs for their spans, with the rank obeying the extension condition.
/// Throws TooLarge above order 16.
std::vector<PairedSet> paired_search(const AbelianGroup& g, int m, int n, const SearchOptions& options = {});

/// Submatrix of the character table: rows d, characters d_prime.
cyclo::CycloMatrix paired_matrix(const AbelianGroup& g, const std::vector<int>& d, const std::vector<int>& d_prime);

/// (n-d)/(d(n-1)) / n^2 == (m-d)/(d(m-1)) / m^2.
bool extension_condition(long m, long n, long d);

}  // namespace hyperetf::groups
