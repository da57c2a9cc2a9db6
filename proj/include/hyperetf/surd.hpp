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

// Exact real numbers of the form sum_i c_i sqrt(t_i), c_i rational, t_i squarefree.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "hyperetf/cyclo.hpp"

namespace hyperetf {

class Surd {
 public:
  using Rational = cyclo::Rational;

  Surd() = default;
  Surd(const Rational& r);
  Surd(long n) : Surd(Rational(n)) {}

  /// c sqrt(t) for t >= 0.
  static Surd sqrt(long t, const Rational& c = Rational(1));

  /// Squarefree radicand -> coefficient, nonzero coefficients only.
  const std::map<long, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<Rational> is_rational() const;
  double to_double() const;
  std::string to_string() const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  Surd operator-() const;
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(long t, const Rational& c);

  std::map<long, Rational> terms_;
};

/// Largest s with s^2 | n, n >= 1.
long square_part(long n);

}  // namespace hyperetf
