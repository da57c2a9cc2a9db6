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

#include "hyperetf/verify.hpp"

#include <utility>

#include "hyperetf/error.hpp"

namespace hyperetf::verify {
namespace {

CycloNum trace(const CycloMatrix& a) {
  CycloNum t(a.conductor());
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// tr(A^2) for Hermitian A.
CycloNum trace_sq(const CycloMatrix& a) {
  CycloNum t(a.conductor());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) t += a(i, j) * a(j, i);
    }
  return t;
}

CycloNum tight_candidate(const CycloMatrix& hermitian) {
  const CycloNum tr = trace(hermitian);
  if (tr.is_zero()) return CycloNum(hermitian.conductor());
  return trace_sq(hermitian) * tr.inverse();
}

/// First row-major (i, j) with lhs(i, j) != rhs(i, j).
std::optional<Witness> first_difference(const CycloMatrix& lhs, const CycloMatrix& rhs, const std::string& check) {
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j) {
      if (!cyclo::same_value(lhs(i, j), rhs(i, j))) return Witness{check, i, j};
    }
  return std::nullopt;
}

/// Decides H^2 = a H for the smaller Hermitian product.
TightVerdict tight_from(const CycloMatrix& h) {
  TightVerdict v;
  v.a = tight_candidate(h);
  v.witness = first_difference(h * h, v.a * h, "tight_for_span");
  v.tight = !v.witness;
  return v;
}

const CycloMatrix& smaller(const CycloMatrix& f, const CycloMatrix& g) { return f.rows() <= g.rows() ? f : g; }

int rank_of_hermitian(const CycloMatrix& h) {
  if (h.conductor() <= kExactRankMaxConductor) return eliminate(h).rank;
  return float_rank(h.to_complex());
}

}  // namespace

CycloMatrix gram(const CycloMatrix& phi) { return phi.adjoint() * phi; }

CycloMatrix frame_operator(const CycloMatrix& phi) { return phi * phi.adjoint(); }

TightVerdict check_tight_for_span(const CycloMatrix& phi) {
  if (phi.rows() <= phi.cols()) return tight_from(frame_operator(phi));
  return tight_from(gram(phi));
}

bool check_projection_span(const CycloMatrix& phi, const SpanSpec& spec) {
  const CycloMatrix pi = spec.projection_matrix(phi.rows());
  const CycloMatrix f = frame_operator(phi);
  const CycloNum a = tight_candidate(f);
  return f == a * pi;
}

Rational welch_bound_sq(long n, long d) {
  if (n == 1) throw Error(ErrorCode::kDegenerateN, "Welch bound undefined for n = 1");
  if (d < 1 || d > n) throw Error(ErrorCode::kPreconditionViolated, "Welch bound needs 1 <= d <= n");
  return cyclo::make_rational(n - d, d * (n - 1));
}

RankResult eliminate(const CycloMatrix& phi) {
  const int rows = phi.rows();
  const int cols = phi.cols();
  std::vector<std::vector<CycloNum>> m(rows, std::vector<CycloNum>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = phi(i, j);

  RankResult out;
  CycloNum prev_inv(Rational(1), phi.conductor());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const CycloNum pivot = m[r][c];
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) {
        for (int j = c + 1; j < cols; ++j) {
          if (!m[i][j].is_zero()) m[i][j] = pivot * m[i][j] * prev_inv;
        }
        continue;
      }
      const CycloNum lead = m[i][c];
      for (int j = c + 1; j < cols; ++j) {
        CycloNum next = pivot * m[i][j];
        if (!m[r][j].is_zero()) next -= lead * m[r][j];
        m[i][j] = next.is_zero() ? next : next * prev_inv;
      }
      m[i][c] = CycloNum(phi.conductor());
    }
    prev_inv = pivot.inverse();
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

int exact_rank(const CycloMatrix& phi) {
  if (phi.conductor() > kExactRankMaxConductor) return float_rank(phi.to_complex());
  if (phi.rows() == phi.cols()) return eliminate(phi).rank;
  return eliminate(phi.rows() < phi.cols() ? frame_operator(phi) : gram(phi)).rank;
}

EtfCertificate certify(const FrameMatrix& frame) {
  if (frame.is_exact()) return certify_exact(frame.exact(), frame.span());
  return certify_float(frame.to_complex(), frame.span());
}

EtfCertificate certify_exact(const CycloMatrix& phi, const SpanSpec& spec) {
  EtfCertificate c;
  c.m = phi.rows();
  c.n = phi.cols();
  c.exact = true;
  c.span = spec.to_string();
  if (c.n == 0 || c.m == 0) {
    c.witnesses.push_back({"empty", -1, -1});
    return c;
  }

  const CycloMatrix g = gram(phi);
  const CycloMatrix f = frame_operator(phi);

  c.equal_norm = true;
  for (int i = 1; i < c.n && c.equal_norm; ++i) {
    if (!cyclo::same_value(g(i, i), g(0, 0))) {
      c.equal_norm = false;
      c.witnesses.push_back({"equal_norm", 0, i});
    }
  }
  if (c.equal_norm) {
    c.common_norm_sq = g(0, 0).is_rational();
    c.common_norm_sq_float = g(0, 0).to_complex().real();
  }

  c.equiangular = true;
  if (c.n > 1) {
    const CycloNum ref = g(0, 1).modulus_squared();
    for (int i = 0; i < c.n && c.equiangular; ++i)
      for (int j = i + 1; j < c.n; ++j) {
        if (!cyclo::same_value(g(i, j).modulus_squared(), ref)) {
          c.equiangular = false;
          c.witnesses.push_back({"equiangular", i, j});
          break;
        }
      }
    if (c.equiangular) {
      c.inner_sq = ref.is_rational();
      if (c.inner_sq && c.common_norm_sq && *c.common_norm_sq != 0) {
        c.coherence_sq = *c.inner_sq / (*c.common_norm_sq * *c.common_norm_sq);
        c.coherence_sq_float = c.coherence_sq->get_d();
      }
    }
  }

  const TightVerdict tight = tight_from(smaller(f, g));
  c.tight_for_span = tight.tight;
  if (tight.witness) c.witnesses.push_back(*tight.witness);
  c.tight_constant = tight.a.is_rational();
  c.tight_constant_float = tight.a.to_complex().real();

  c.span_dim = rank_of_hermitian(smaller(f, g));

  if (c.n > 1) {
    c.welch_bound_sq = welch_bound_sq(c.n, c.span_dim);
    c.welch_bound_sq_float = c.welch_bound_sq->get_d();
  }

  const bool at_welch = c.n == 1 || (c.coherence_sq && c.welch_bound_sq && *c.coherence_sq == *c.welch_bound_sq);
  if (c.equiangular && !at_welch) c.witnesses.push_back({"welch_equality", -1, -1});
  c.etf_for_span = c.equal_norm && c.equiangular && c.tight_for_span && at_welch && c.span_dim > 0;

  try {
    c.span_matches = c.span_dim == spec.nominal_dim && f == tight.a * spec.projection_matrix(c.m);
  } catch (const Error&) {
    c.span_matches = false;
  }
  if (!c.span_matches) c.witnesses.push_back({"span", -1, -1});
  c.is_etf = c.etf_for_span && c.span_matches;
  return c;
}

Es2Result e_s2(const CycloMatrix& phi) {
  const int m = phi.rows();
  const int n = phi.cols();
  if (n < 2) throw Error(ErrorCode::kDegenerateN, "E(s^2) needs at least two columns");
  if (m < 2) throw Error(ErrorCode::kPreconditionViolated, "E(s^2) needs at least two rows");
  std::vector<int> v(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const auto q = phi(i, j).is_rational();
      if (!q || (*q != 1 && *q != -1)) {
        throw Error(ErrorCode::kNotPlusMinusOne, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not +-1");
      }
      v[static_cast<std::size_t>(i) * n + j] = *q == 1 ? 1 : -1;
    }
  for (int j = 0; j < n; ++j) {
    long s = 0;
    for (int i = 0; i < m; ++i) s += v[static_cast<std::size_t>(i) * n + j];
    if (s != 0) throw Error(ErrorCode::kNotZeroSum, "column " + std::to_string(j) + " does not sum to zero");
  }
  long long total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      long long dot = 0;
      for (int i = 0; i < m; ++i) dot += v[static_cast<std::size_t>(i) * n + a] * v[static_cast<std::size_t>(i) * n + b];
      total += 2 * dot * dot;
    }
  Es2Result r;
  r.value = cyclo::make_rational(static_cast<long>(total), static_cast<long>(n) * (n - 1));
  r.lower_bound = cyclo::make_rational(static_cast<long>(m) * m * (n - m + 1), static_cast<long>(m - 1) * (n - 1));
  r.optimal = r.value == r.lower_bound;
  return r;
}

bool gerzon_check(long n, long d) { return 2 * n <= d * (d + 1); }

Lemma1Verdicts lemma1_exact(const CycloMatrix& phi) {
  const CycloMatrix f = frame_operator(phi);
  const CycloMatrix g = gram(phi);
  const CycloNum a = tight_candidate(f);
  Lemma1Verdicts v;
  v.a = a.to_complex();
  v.synthesis = f * phi == a * phi;
  v.frame_operator_sq = f * f == a * f;
  v.gram_sq = g * g == a * g;
  const RankResult basis = eliminate(phi);
  CycloMatrix b(phi.rows(), basis.rank, phi.conductor());
  for (int k = 0; k < basis.rank; ++k)
    for (int i = 0; i < phi.rows(); ++i) b.set(i, k, phi(i, basis.pivot_columns[k]));
  const CycloMatrix bstar = b.adjoint();
  v.tight_for_span = bstar * f * b == a * (bstar * b);
  return v;
}

}  // namespace hyperetf::verify
