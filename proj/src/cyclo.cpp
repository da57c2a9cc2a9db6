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

#include "hyperetf/cyclo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <utility>

#include "hyperetf/error.hpp"

namespace hyperetf::cyclo {
namespace {

void check_conductor(int n) {
  if (n < 1 || n > kMaxConductor) {
    throw Error(ErrorCode::kConductorRange, "conductor " + std::to_string(n) + " outside [1, " +
                                                std::to_string(kMaxConductor) + "]");
  }
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::kConductorRange, "coefficient overflow");
  return static_cast<std::int64_t>(v);
}

using SparseRow = std::vector<std::pair<int, std::int64_t>>;

struct Context {
  int n = 0;
  int phi = 0;
  // powers[k] = x^k mod Phi_n, k < max(n, 2 phi - 1)
  std::vector<SparseRow> powers;
};

std::unique_ptr<Context> build_context(int n) {
  auto ctx = std::make_unique<Context>();
  ctx->n = n;
  const std::vector<std::int64_t> poly = cyclotomic_poly(n);
  const int phi = static_cast<int>(poly.size()) - 1;
  ctx->phi = phi;
  const int table = std::max(n, 2 * phi - 1);
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  ctx->powers.reserve(table);
  for (int k = 0; k < table; ++k) {
    SparseRow row;
    for (int i = 0; i < phi; ++i)
      if (cur[i] != 0) row.emplace_back(i, cur[i]);
    ctx->powers.push_back(std::move(row));
    // multiply by x, then eliminate x^phi with the monic Phi_n
    const std::int64_t top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) cur[i] = checked(static_cast<__int128>(cur[i]) - static_cast<__int128>(top) * poly[i]);
    }
  }
  return ctx;
}

const Context& context(int n) {
  check_conductor(n);
  static std::mutex mu;
  static std::array<std::unique_ptr<Context>, kMaxConductor + 1> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) slot = build_context(n);
  return *slot;
}

bool is_zero_q(const Rational& r) { return sgn(r) == 0; }

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && is_zero_q(p.back())) p.pop_back();
}

int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den) {
  QPoly quot(std::max(0, qdeg(num) - qdeg(den) + 1));
  const Rational lead = den.back();
  while (!num.empty() && qdeg(num) >= qdeg(den)) {
    const int shift = qdeg(num) - qdeg(den);
    const Rational f = num.back() / lead;
    quot[shift] = f;
    for (int i = 0; i <= qdeg(den); ++i) num[i + shift] -= f * den[i];
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return {std::move(quot), std::move(num)};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero_q(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> cyclotomic_poly(int n) {
  check_conductor(n);
  if (n == 1) return {-1, 1};
  // Phi_n = prod_{d | n} (1 - x^d)^{mu(n/d)} for n > 1, as a truncated series.
  const int phi = euler_phi(n);
  std::vector<std::int64_t> c(phi + 1, 0);
  c[0] = 1;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || d > phi) continue;
    const int mu = mobius(n / d);
    if (mu == 1) {
      for (int i = phi; i >= d; --i) c[i] = checked(static_cast<__int128>(c[i]) - c[i - d]);
    } else if (mu == -1) {
      for (int i = d; i <= phi; ++i) c[i] = checked(static_cast<__int128>(c[i]) + c[i - d]);
    }
  }
  return c;
}

CycloNum::CycloNum() : n_(1), c_(1) {}

CycloNum::CycloNum(int conductor) : n_(conductor), c_(context(conductor).phi) {}

CycloNum::CycloNum(const Rational& value, int conductor) : CycloNum(conductor) { c_[0] = value; }

CycloNum CycloNum::root_of_unity(int conductor, std::int64_t k) {
  const Context& ctx = context(conductor);
  CycloNum z(conductor);
  const auto e = static_cast<std::size_t>(((k % conductor) + conductor) % conductor);
  for (const auto& [i, co] : ctx.powers[e]) z.c_[i] = co;
  return z;
}

CycloNum CycloNum::from_power_sum(int conductor, std::span<const Rational> c) {
  const Context& ctx = context(conductor);
  CycloNum z(conductor);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (is_zero_q(c[k])) continue;
    for (const auto& [i, co] : ctx.powers[k % static_cast<std::size_t>(conductor)]) z.c_[i] += c[k] * co;
  }
  return z;
}

CycloNum CycloNum::from_coeffs(int conductor, std::vector<Rational> coeffs) {
  CycloNum z(conductor);
  if (coeffs.size() != z.c_.size()) {
    throw Error(ErrorCode::kSizeMismatch, "expected " + std::to_string(z.c_.size()) + " coordinates");
  }
  z.c_ = std::move(coeffs);
  return z;
}

bool CycloNum::is_zero() const {
  for (const auto& v : c_)
    if (!is_zero_q(v)) return false;
  return true;
}

std::optional<Rational> CycloNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!is_zero_q(c_[i])) return std::nullopt;
  return c_[0];
}

CycloNum CycloNum::lift(int conductor) const {
  if (conductor == n_) return *this;
  if (conductor % n_ != 0) {
    throw Error(ErrorCode::kConductorMismatch,
                "cannot lift conductor " + std::to_string(n_) + " to " + std::to_string(conductor));
  }
  const Context& ctx = context(conductor);
  const int step = conductor / n_;
  CycloNum z(conductor);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (is_zero_q(c_[k])) continue;
    for (const auto& [i, co] : ctx.powers[k * step]) z.c_[i] += c_[k] * co;
  }
  return z;
}

CycloNum CycloNum::conj() const {
  const Context& ctx = context(n_);
  CycloNum z(n_);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (is_zero_q(c_[k])) continue;
    const std::size_t e = (static_cast<std::size_t>(n_) - k) % static_cast<std::size_t>(n_);
    for (const auto& [i, co] : ctx.powers[e]) z.c_[i] += c_[k] * co;
  }
  return z;
}

CycloNum CycloNum::modulus_squared() const { return *this * conj(); }

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (auto r = is_rational()) return CycloNum(Rational(1) / *r, n_);
  const std::vector<std::int64_t> poly = cyclotomic_poly(n_);
  QPoly r0(poly.begin(), poly.end());
  QPoly r1 = c_;
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (qdeg(r1) > 0) {
    auto [q, rem] = divmod(r0, r1);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational c = r1.at(0);
  for (auto& v : s1) v /= c;
  return from_power_sum(n_, s1);
}

std::complex<double> CycloNum::to_complex() const {
  std::complex<double> z{};
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (is_zero_q(c_[k])) continue;
    z += c_[k].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n_);
  }
  return z;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (is_zero_q(c_[k])) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].get_str();
    if (k == 1) os << "*z";
    if (k > 1) os << "*z^" << k;
  }
  if (first) os << "0";
  if (n_ > 2) os << " [z=e(1/" << n_ << ")]";
  return os.str();
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  const int n = common_conductor(n_, o.n_);
  if (n != n_) *this = lift(n);
  if (o.n_ != n) return *this += o.lift(n);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  const int n = common_conductor(n_, o.n_);
  if (n != n_) *this = lift(n);
  if (o.n_ != n) return *this -= o.lift(n);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  const int n = common_conductor(n_, o.n_);
  if (n != n_) *this = lift(n);
  if (o.n_ != n) return *this *= o.lift(n);
  const Context& ctx = context(n);
  const int phi = ctx.phi;
  if (phi == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(static_cast<std::size_t>(2 * phi - 1));
  for (int i = 0; i < phi; ++i) {
    if (is_zero_q(c_[i])) continue;
    for (int j = 0; j < phi; ++j) {
      if (is_zero_q(o.c_[j])) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  for (int k = 2 * phi - 2; k >= phi; --k) {
    if (is_zero_q(prod[k])) continue;
    for (const auto& [i, co] : ctx.powers[k]) prod[i] += prod[k] * co;
  }
  prod.resize(phi);
  c_ = std::move(prod);
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
  for (auto& v : c_) v *= r;
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum z = *this;
  for (auto& v : z.c_) v = -v;
  return z;
}

bool operator==(const CycloNum& a, const CycloNum& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

int common_conductor(int a, int b) {
  if (b % a == 0) return b;
  if (a % b == 0) return a;
  throw Error(ErrorCode::kConductorMismatch,
              "conductors " + std::to_string(a) + " and " + std::to_string(b) + " are not nested");
}

bool same_value(const CycloNum& a, const CycloNum& b) {
  const int l = std::lcm(a.conductor(), b.conductor());
  return a.lift(l) == b.lift(l);
}

// ---------------------------------------------------------------------------

CycloMatrix::CycloMatrix(int rows, int cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      data_(static_cast<std::size_t>(rows) * cols, CycloNum(conductor)) {}

CycloMatrix CycloMatrix::identity(int n, int conductor) {
  CycloMatrix m(n, n, conductor);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

void CycloMatrix::set(int i, int j, const CycloNum& value) { data_[index(i, j)] = value.lift(conductor_); }

void CycloMatrix::set(int i, int j, const Rational& value) { data_[index(i, j)] = CycloNum(value, conductor_); }

CycloMatrix CycloMatrix::adjoint() const {
  CycloMatrix t(cols_, rows_, conductor_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.data_[t.index(j, i)] = data_[index(i, j)].conj();
  return t;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix t(cols_, rows_, conductor_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.data_[t.index(j, i)] = data_[index(i, j)];
  return t;
}

CycloMatrix CycloMatrix::lift(int conductor) const {
  if (conductor == conductor_) return *this;
  CycloMatrix m(rows_, cols_, conductor);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].lift(conductor);
  return m;
}

kernels::ComplexMatrix CycloMatrix::to_complex() const {
  kernels::ComplexMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = data_[index(i, j)].to_complex();
  return m;
}

std::vector<int> CycloMatrix::column_support(int j) const {
  std::vector<int> s;
  for (int i = 0; i < rows_; ++i)
    if (!data_[index(i, j)].is_zero()) s.push_back(i);
  return s;
}

std::vector<int> CycloMatrix::row_support(int i) const {
  std::vector<int> s;
  for (int j = 0; j < cols_; ++j)
    if (!data_[index(i, j)].is_zero()) s.push_back(j);
  return s;
}

bool CycloMatrix::is_rational() const {
  for (const auto& v : data_)
    if (!v.is_rational()) return false;
  return true;
}

namespace {

// Integral coefficients of a as flat (entry, coordinate) arrays; nullopt when
// some coefficient is not an integer of magnitude below 2^20.
std::optional<std::vector<std::int64_t>> small_integral(const CycloMatrix& a, int phi, std::int64_t& max_abs) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 20;
  std::vector<std::int64_t> out(static_cast<std::size_t>(a.rows()) * a.cols() * phi);
  max_abs = 0;
  std::size_t k = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (const auto& v : a(i, j).coeffs()) {
        if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
        const std::int64_t x = v.get_num().get_si();
        if (x >= kLimit || x <= -kLimit) return std::nullopt;
        max_abs = std::max(max_abs, x < 0 ? -x : x);
        out[k++] = x;
      }
  return out;
}

// Product over machine integers when no intermediate value can exceed 2^62.
std::optional<CycloMatrix> integral_product(const CycloMatrix& a, const CycloMatrix& b, int n) {
  const Context& ctx = context(n);
  const int phi = ctx.phi;
  std::int64_t ma = 0, mb = 0;
  const auto av = small_integral(a, phi, ma);
  if (!av) return std::nullopt;
  const auto bv = small_integral(b, phi, mb);
  if (!bv) return std::nullopt;
  std::int64_t reduce = 1;
  for (int k = phi; k <= 2 * phi - 2; ++k)
    for (const auto& [i, co] : ctx.powers[k]) reduce = std::max(reduce, co < 0 ? -co : co);
  const __int128 bound = static_cast<__int128>(ma) * mb * phi * std::max(a.cols(), 1) * (1 + (phi - 1) * reduce) * phi;
  if (bound >= (static_cast<__int128>(1) << 62)) return std::nullopt;

  const int inner = a.cols();
  std::vector<std::vector<int>> nz(static_cast<std::size_t>(inner));
  for (int l = 0; l < inner; ++l) nz[l] = b.row_support(l);
  const auto at = [phi](const std::vector<std::int64_t>& v, int cols, int i, int j) {
    return v.data() + (static_cast<std::size_t>(i) * cols + j) * phi;
  };
  CycloMatrix c(a.rows(), b.cols(), n);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(b.cols()) * (2 * phi - 1));
  for (int i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int l = 0; l < inner; ++l) {
      const std::int64_t* x = at(*av, inner, i, l);
      if (std::all_of(x, x + phi, [](std::int64_t t) { return t == 0; })) continue;
      for (int j : nz[l]) {
        const std::int64_t* y = at(*bv, b.cols(), l, j);
        std::int64_t* out = acc.data() + static_cast<std::size_t>(j) * (2 * phi - 1);
        for (int s = 0; s < phi; ++s) {
          if (x[s] == 0) continue;
          for (int t = 0; t < phi; ++t) out[s + t] += x[s] * y[t];
        }
      }
    }
    for (int j = 0; j < b.cols(); ++j) {
      std::int64_t* prod = acc.data() + static_cast<std::size_t>(j) * (2 * phi - 1);
      for (int k = 2 * phi - 2; k >= phi; --k) {
        if (prod[k] == 0) continue;
        for (const auto& [s, co] : ctx.powers[k]) prod[s] += prod[k] * co;
      }
      if (std::all_of(prod, prod + phi, [](std::int64_t t) { return t == 0; })) continue;
      std::vector<Rational> coeffs(static_cast<std::size_t>(phi));
      for (int s = 0; s < phi; ++s) coeffs[s] = Rational(static_cast<long>(prod[s]));
      c.set(i, j, CycloNum::from_coeffs(n, std::move(coeffs)));
    }
  }
  return c;
}

}  // namespace

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kSizeMismatch, "matrix product: inner dimensions differ");
  const int n = common_conductor(a.conductor_, b.conductor_);
  if (a.conductor_ != n) return a.lift(n) * b;
  if (b.conductor_ != n) return a * b.lift(n);
  if (auto fast = integral_product(a, b, n)) return std::move(*fast);
  std::vector<std::vector<int>> nz(static_cast<std::size_t>(b.rows_));
  for (int l = 0; l < b.rows_; ++l) nz[l] = b.row_support(l);
  CycloMatrix c(a.rows_, b.cols_, n);
  for (int i = 0; i < a.rows_; ++i) {
    for (int l = 0; l < a.cols_; ++l) {
      const CycloNum& x = a(i, l);
      if (x.is_zero()) continue;
      for (int j : nz[l]) c.data_[c.index(i, j)] += x * b(l, j);
    }
  }
  return c;
}

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::kSizeMismatch, "matrix sum: shapes differ");
  const int n = common_conductor(a.conductor_, b.conductor_);
  CycloMatrix c = a.lift(n);
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::kSizeMismatch, "matrix difference: shapes differ");
  const int n = common_conductor(a.conductor_, b.conductor_);
  CycloMatrix c = a.lift(n);
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

CycloMatrix operator*(const CycloNum& s, const CycloMatrix& a) {
  const int n = common_conductor(s.conductor(), a.conductor_);
  CycloMatrix c = a.lift(n);
  for (auto& v : c.data_)
    if (!v.is_zero()) v *= s;
  return c;
}

CycloMatrix operator*(const Rational& s, const CycloMatrix& a) {
  CycloMatrix c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.conductor_ == b.conductor_) return a.data_ == b.data_;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!same_value(a.data_[k], b.data_[k])) return false;
  return true;
}

}  // namespace hyperetf::cyclo
