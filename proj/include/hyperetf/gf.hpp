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

// Characteristic-2 finite fields GF(2^k) in polynomial basis.
//
// Elements are k-bit masks over the basis 1, a, a^2, ..., a^(k-1) where a is a
// root of the defining primitive polynomial. Addition is XOR; multiplication
// goes through discrete-log tables built once per field and validated against
// the multiplicative order of a.

#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace hyperetf::gf {

class FieldSpec {
 public:
  /// Builds GF(2^degree) from a primitive polynomial given as a bitmask
  /// (bit i = coefficient of x^i, so x^6+x+1 is 0x43). Throws RejectDegree or
  /// RejectNotPrimitive.
  static std::shared_ptr<const FieldSpec> make(int degree, std::uint32_t primitive_poly);

  int degree() const noexcept { return degree_; }
  std::uint32_t primitive_poly() const noexcept { return poly_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << degree_; }
  std::uint32_t group_order() const noexcept { return size() - 1; }

  /// Discrete log base a; `bits` must be nonzero.
  std::uint32_t log(std::uint32_t bits) const;
  /// a^i, i taken modulo 2^k - 1.
  std::uint32_t antilog(std::uint64_t i) const noexcept { return antilog_[i % group_order()]; }

  bool operator==(const FieldSpec& other) const noexcept {
    return degree_ == other.degree_ && poly_ == other.poly_;
  }

 private:
  FieldSpec(int degree, std::uint32_t poly) : degree_(degree), poly_(poly) {}

  int degree_;
  std::uint32_t poly_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

class FieldElement {
 public:
  FieldElement(FieldPtr spec, std::uint32_t bits);

  static FieldElement zero(FieldPtr spec) { return {std::move(spec), 0}; }
  static FieldElement one(FieldPtr spec) { return {std::move(spec), 1}; }
  /// The generator a^i.
  static FieldElement alpha_pow(FieldPtr spec, std::uint64_t i);

  std::uint32_t bits() const noexcept { return bits_; }
  const FieldPtr& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  std::uint32_t log() const { return spec_->log(bits_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.bits_ == b.bits_ && *a.spec_ == *b.spec_;
  }

  FieldElement pow(std::int64_t e) const;

 private:
  FieldPtr spec_;
  std::uint32_t bits_;
};

inline FieldPtr make_field(int degree, std::uint32_t primitive_poly) { return FieldSpec::make(degree, primitive_poly); }

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }

/// beta + beta^q + ... + beta^(q^(k/s - 1)) with q = 2^subfield_degree.
/// Throws BadDegreeDivision unless subfield_degree divides the field degree.
FieldElement subfield_trace(const FieldElement& beta, int subfield_degree);

/// Parses "0x43", "43" or "0b1000011" style bitmasks.
std::uint32_t parse_poly(std::string_view text);

/// Shipped primitive polynomials for degrees 3, 6 and 9 (q = 2, 4, 8 planes),
/// validated on construction.
FieldPtr default_field(int degree);

}  // namespace hyperetf::gf
