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

#include "hyperetf/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hyperetf/error.hpp"
#include "hyperetf/verify.hpp"

namespace hyperetf::groups {
namespace {

using cyclo::CycloMatrix;
using cyclo::CycloNum;
using cyclo::Rational;
/// Loose float screen; survivors are decided exactly.
constexpr double kPrefilterTolerance = 1e-6;

/// Every k-subset of {0..v-1} in lexicographic order.
template <typename F>
void for_each_subset(int v, int k, F&& f) {
  if (k < 0 || k > v) return;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[i] == v - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::vector<std::vector<int>> difference_sets(const AbelianGroup& g, int k, bool canonical) {
  std::vector<std::vector<int>> out;
  for_each_subset(g.order(), k, [&](const std::vector<int>& s) {
    if (canonical && canonical_translate(g, s) != s) return;
    if (is_difference_set(g, s)) out.push_back(s);
  });
  return out;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  long order = 1;
  for (int f : factors_) {
    if (f < 2) throw Error(ErrorCode::kPreconditionViolated, "group factors must be at least 2");
    order *= f;
    if (order > cyclo::kMaxConductor) throw Error(ErrorCode::kPreconditionViolated, "group order above 4096");
    exponent_ = std::lcm(exponent_, f);
  }
  order_ = static_cast<int>(order);
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
  std::vector<int> factors;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int f = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      factors.push_back(f);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad group factor '" + item + "'");
    }
  }
  if (factors.empty()) throw Error(ErrorCode::kParse, "empty group description");
  return AbelianGroup(std::move(factors));
}

std::vector<int> AbelianGroup::digits(int g) const {
  std::vector<int> d(factors_.size());
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    d[i] = g % factors_[i];
    g /= factors_[i];
  }
  return d;
}

int AbelianGroup::encode(const std::vector<int>& digits) const {
  int g = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) g = g * factors_[i] + digits[i];
  return g;
}

int AbelianGroup::add(int g, int h) const {
  std::vector<int> a = digits(g);
  const std::vector<int> b = digits(h);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % factors_[i];
  return encode(a);
}

int AbelianGroup::neg(int g) const {
  std::vector<int> a = digits(g);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (factors_[i] - a[i]) % factors_[i];
  return encode(a);
}

std::string AbelianGroup::format(int g) const {
  const std::vector<int> d = digits(g);
  const bool compact = std::all_of(factors_.begin(), factors_.end(), [](int f) { return f <= 10; });
  std::string out = compact ? "" : "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (compact) {
      out += static_cast<char>('0' + d[i]);
    } else {
      if (i) out += ",";
      out += std::to_string(d[i]);
    }
  }
  return compact ? out : out + ")";
}

int AbelianGroup::parse_element(const std::string& text) const {
  std::vector<int> d;
  const bool compact = std::all_of(factors_.begin(), factors_.end(), [](int f) { return f <= 10; });
  if (compact) {
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(ErrorCode::kParse, "bad element '" + text + "'");
      d.push_back(c - '0');
    }
  } else {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        d.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse, "bad element '" + text + "'");
      }
    }
  }
  if (d.size() != factors_.size()) throw Error(ErrorCode::kParse, "element '" + text + "' has the wrong length");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0 || d[i] >= factors_[i]) throw Error(ErrorCode::kParse, "element '" + text + "' out of range");
  }
  return encode(d);
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? "x" : "") + std::string("Z") + std::to_string(factors_[i]);
  return out;
}

CycloMatrix character_table(const AbelianGroup& g) {
  const int v = g.order();
  const int e = g.exponent();
  CycloMatrix h(v, v, e);
  std::vector<std::vector<int>> digits(v);
  for (int x = 0; x < v; ++x) digits[x] = g.digits(x);
  for (int x = 0; x < v; ++x)
    for (int chi = 0; chi < v; ++chi) {
      long k = 0;
      for (std::size_t i = 0; i < g.factors().size(); ++i) {
        k += static_cast<long>(e / g.factors()[i]) * digits[x][i] * digits[chi][i];
      }
      h.set(x, chi, CycloNum::root_of_unity(e, k % e));
    }
  return h;
}

std::optional<int> is_difference_set(const AbelianGroup& g, const std::vector<int>& d) {
  if (d.empty()) return std::nullopt;
  std::vector<int> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  if (sorted.front() < 0 || sorted.back() >= g.order()) return std::nullopt;
  std::vector<int> count(g.order(), 0);
  for (int a : d)
    for (int b : d) ++count[g.sub(a, b)];
  if (g.order() == 1) return static_cast<int>(d.size());
  for (int x = 2; x < g.order(); ++x) {
    if (count[x] != count[1]) return std::nullopt;
  }
  return count[1];
}

FrameMatrix harmonic_etf(const AbelianGroup& g, const std::vector<int>& d) {
  if (!is_difference_set(g, d)) throw Error(ErrorCode::kNotDifferenceSet, "rows are not a difference set");
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return FrameMatrix(paired_matrix(g, d, all), SpanSpec::full(static_cast<int>(d.size())),
                     {0, g.to_string(), "harmonic"});
}

std::vector<int> canonical_translate(const AbelianGroup& g, std::vector<int> d) {
  std::sort(d.begin(), d.end());
  std::vector<int> best = d;
  for (int h = 1; h < g.order(); ++h) {
    std::vector<int> t(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) t[i] = g.add(d[i], h);
    std::sort(t.begin(), t.end());
    if (t < best) best = std::move(t);
  }
  return best;
}

CycloMatrix paired_matrix(const AbelianGroup& g, const std::vector<int>& d, const std::vector<int>& d_prime) {
  const int e = g.exponent();
  CycloMatrix out(static_cast<int>(d.size()), static_cast<int>(d_prime.size()), e);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::vector<int> x = g.digits(d[i]);
    for (std::size_t j = 0; j < d_prime.size(); ++j) {
      const std::vector<int> chi = g.digits(d_prime[j]);
      long k = 0;
      for (std::size_t f = 0; f < x.size(); ++f) k += static_cast<long>(e / g.factors()[f]) * x[f] * chi[f];
      out.set(static_cast<int>(i), static_cast<int>(j), CycloNum::root_of_unity(e, k % e));
    }
  }
  return out;
}

bool extension_condition(long m, long n, long d) {
  if (m < 2 || n < 2 || d < 1 || d > std::min(m, n)) return false;
  const Rational lhs = cyclo::make_rational(n - d, d * (n - 1)) / (Rational(n) * n);
  const Rational rhs = cyclo::make_rational(m - d, d * (m - 1)) / (Rational(m) * m);
  // Both sides vanish when m = n = d; the scalar form excludes that case.
  const Rational inv = Rational(1) / Rational(m) + Rational(1) / Rational(n) - Rational(1) / Rational(m + n - 1);
  return lhs == rhs && inv == Rational(1) / Rational(d);
}

std::vector<PairedSet> paired_search(const AbelianGroup& g, int m, int n, const SearchOptions& options) {
  if (g.order() > kMaxSearchOrder) {
    throw Error(ErrorCode::kTooLarge, "exhaustive search limited to order " + std::to_string(kMaxSearchOrder));
  }
  std::vector<PairedSet> out;
  if (m < 2 || n < 2 || m > g.order() || n > g.order()) return out;
  const auto rows = difference_sets(g, m, !options.all);
  const auto cols = difference_sets(g, n, !options.all);
  if (rows.empty() || cols.empty()) return out;

  const kernels::ComplexMatrix table = character_table(g).to_complex();
  kernels::ComplexMatrix sub(m, n);
  for (const auto& d : rows)
    for (const auto& dp : cols) {
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) sub(i, j) = table(d[i], dp[j]);
      if (!extension_condition(m, n, verify::float_rank(sub))) continue;
      if (!verify::certify_float(sub, SpanSpec::full(m), kPrefilterTolerance).etf_for_span) continue;
      if (!verify::certify_float(kernels::adjoint(sub), SpanSpec::full(n), kPrefilterTolerance).etf_for_span) continue;

      const CycloMatrix phi = paired_matrix(g, d, dp);
      const auto c = verify::certify_exact(phi, SpanSpec::full(m));
      const auto r = verify::certify_exact(phi.adjoint(), SpanSpec::full(n));
      if (!c.etf_for_span || !r.etf_for_span) continue;
      if (!extension_condition(m, n, c.span_dim)) continue;
      out.push_back({d, dp, c.span_dim});
    }
  return out;
}

}  // namespace hyperetf::groups
