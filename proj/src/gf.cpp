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

#include "hyperetf/gf.hpp"

#include <bit>
#include <charconv>
#include <map>
#include <mutex>
#include <string>

#include "hyperetf/error.hpp"

namespace hyperetf::gf {

std::shared_ptr<const FieldSpec> FieldSpec::make(int degree, std::uint32_t primitive_poly) {
  if (degree < 1 || degree > 24) {
    throw Error(ErrorCode::kRejectDegree, "degree " + std::to_string(degree) + " outside [1, 24]");
  }
  if (std::bit_width(primitive_poly) != static_cast<unsigned>(degree) + 1) {
    throw Error(ErrorCode::kRejectDegree, "polynomial degree does not equal " + std::to_string(degree));
  }
  std::shared_ptr<FieldSpec> spec(new FieldSpec(degree, primitive_poly));
  const std::uint32_t size = spec->size();
  const std::uint32_t order = size - 1;
  spec->log_.assign(size, 0);
  spec->antilog_.assign(order, 0);
  std::vector<bool> seen(size, false);

  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    if (x == 0 || seen[x]) {
      throw Error(ErrorCode::kRejectNotPrimitive,
                  "root has multiplicative order " + std::to_string(i) + " < " + std::to_string(order));
    }
    seen[x] = true;
    spec->antilog_[i] = x;
    spec->log_[x] = i;
    x <<= 1;
    if (x & size) x ^= primitive_poly;
  }
  if (x != 1) {
    throw Error(ErrorCode::kRejectNotPrimitive, "a^(2^k - 1) != 1");
  }
  return spec;
}

std::uint32_t FieldSpec::log(std::uint32_t bits) const {
  if (bits == 0 || bits >= size()) {
    throw std::domain_error("log of zero or out-of-range element");
  }
  return log_[bits];
}

FieldElement::FieldElement(FieldPtr spec, std::uint32_t bits) : spec_(std::move(spec)), bits_(bits) {
  if (bits_ >= spec_->size()) throw std::out_of_range("field element has too many bits");
}

FieldElement FieldElement::alpha_pow(FieldPtr spec, std::uint64_t i) {
  const std::uint32_t bits = spec->antilog(i);
  return {std::move(spec), bits};
}

static void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.spec() != b.spec() && !(*a.spec() == *b.spec())) {
    throw Error(ErrorCode::kMixedFields, "operands belong to different fields");
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.spec_, a.bits_ ^ b.bits_};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.bits_ == 0 || b.bits_ == 0) return {a.spec_, 0};
  const std::uint64_t e = std::uint64_t{a.spec_->log(a.bits_)} + b.spec_->log(b.bits_);
  return {a.spec_, a.spec_->antilog(e)};
}

FieldElement FieldElement::pow(std::int64_t e) const {
  if (bits_ == 0) {
    if (e < 0) throw std::domain_error("zero has no inverse");
    return {spec_, e == 0 ? 1u : 0u};
  }
  const std::int64_t order = spec_->group_order();
  std::int64_t r = (static_cast<std::int64_t>(spec_->log(bits_)) * (e % order)) % order;
  if (r < 0) r += order;
  return {spec_, spec_->antilog(static_cast<std::uint64_t>(r))};
}

FieldElement subfield_trace(const FieldElement& beta, int subfield_degree) {
  const int degree = beta.spec()->degree();
  if (subfield_degree < 1 || degree % subfield_degree != 0) {
    throw Error(ErrorCode::kBadDegreeDivision,
                std::to_string(subfield_degree) + " does not divide " + std::to_string(degree));
  }
  const std::int64_t q = std::int64_t{1} << subfield_degree;
  FieldElement sum = FieldElement::zero(beta.spec());
  FieldElement term = beta;
  for (int i = 0; i < degree / subfield_degree; ++i) {
    sum = sum + term;
    term = term.pow(q);
  }
  return sum;
}

std::uint32_t parse_poly(std::string_view text) {
  int base = 16;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    text.remove_prefix(2);
  } else if (text.starts_with("0b") || text.starts_with("0B")) {
    text.remove_prefix(2);
    base = 2;
  }
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kParse, "bad polynomial bitmask '" + std::string(text) + "'");
  }
  return value;
}

FieldPtr default_field(int degree) {
  static std::mutex mutex;
  static std::map<int, FieldPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(degree); it != cache.end()) return it->second;
  std::uint32_t poly = 0;
  switch (degree) {
    case 3: poly = 0xB; break;     // x^3 + x + 1
    case 6: poly = 0x43; break;    // x^6 + x + 1
    case 9: poly = 0x211; break;   // x^9 + x^4 + 1
    default:
      throw Error(ErrorCode::kUnsupportedOrder, "no shipped primitive polynomial of degree " + std::to_string(degree));
  }
  auto field = FieldSpec::make(degree, poly);
  cache.emplace(degree, field);
  return field;
}

}  // namespace hyperetf::gf
