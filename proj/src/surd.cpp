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

#include "hyperetf/surd.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "hyperetf/error.hpp"

namespace hyperetf {

long square_part(long n) {
  long s = 1;
  for (long p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      s *= p;
    }
    if (n % p == 0) n /= p;
  }
  return s;
}

Surd::Surd(const Rational& r) { add_term(1, r); }

Surd Surd::sqrt(long t, const Rational& c) {
  if (t < 0) throw Error(ErrorCode::kPreconditionViolated, "square root of a negative integer");
  Surd out;
  if (t == 0) return out;
  const long s = square_part(t);
  out.add_term(t / (s * s), c * s);
  return out;
}

void Surd::add_term(long t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Surd::Rational> Surd::is_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  return std::nullopt;
}

double Surd::to_double() const {
  double v = 0.0;
  for (const auto& [t, c] : terms_) v += c.get_d() * std::sqrt(static_cast<double>(t));
  return v;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (t == 1) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "sqrt(" << t << ")";
    }
  }
  return os.str();
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Surd out;
  for (const auto& [s, a] : terms_)
    for (const auto& [t, b] : o.terms_) {
      const long g = std::gcd(s, t);
      out.add_term((s / g) * (t / g), a * b * g);
    }
  *this = std::move(out);
  return *this;
}

Surd Surd::operator-() const {
  Surd out;
  for (const auto& [t, c] : terms_) out.add_term(t, -c);
  return out;
}

}  // namespace hyperetf
