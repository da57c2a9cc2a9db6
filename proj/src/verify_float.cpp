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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "hyperetf/error.hpp"
#include "hyperetf/verify.hpp"

namespace hyperetf::verify {
namespace {

using kernels::ComplexMatrix;
using kernels::cplx;
using EigenMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMat to_eigen(const ComplexMatrix& a) {
  return Eigen::Map<const EigenMat>(a.data().data(), a.rows(), a.cols());
}

double max_abs(const ComplexMatrix& a) {
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) best = std::max(best, std::abs(a(i, j)));
  return best;
}

ComplexMatrix scaled(const ComplexMatrix& a, cplx s) {
  ComplexMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

cplx tight_candidate(const ComplexMatrix& h) {
  cplx tr = 0.0;
  cplx tr2 = 0.0;
  for (int i = 0; i < h.rows(); ++i) {
    tr += h(i, i);
    for (int j = 0; j < h.cols(); ++j) tr2 += h(i, j) * h(j, i);
  }
  return std::abs(tr) == 0.0 ? cplx(0.0) : tr2 / tr;
}

/// lhs = a rhs up to tolerance relative to |a| max|rhs|.
bool close_scaled(const ComplexMatrix& lhs, const ComplexMatrix& rhs, cplx a, double tol) {
  const double scale = std::max(1.0, std::abs(a) * max_abs(rhs));
  return kernels::max_abs_diff(lhs, scaled(rhs, a)) <= tol * scale;
}

std::optional<Witness> first_far(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double limit,
                                 const std::string& check) {
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j) {
      if (std::abs(lhs(i, j) - rhs(i, j)) > limit) return Witness{check, i, j};
    }
  return std::nullopt;
}

}  // namespace

int float_rank(const ComplexMatrix& phi, double tolerance) {
  if (phi.rows() == 0 || phi.cols() == 0) return 0;
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(phi));
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) r += s(k) > tolerance * s(0) ? 1 : 0;
  return r;
}

EtfCertificate certify_float(const ComplexMatrix& phi, const SpanSpec& spec, double tolerance) {
  EtfCertificate c;
  c.m = phi.rows();
  c.n = phi.cols();
  c.exact = false;
  c.tolerance = tolerance;
  c.span = spec.to_string();
  if (c.n == 0 || c.m == 0) {
    c.witnesses.push_back({"empty", -1, -1});
    return c;
  }

  const ComplexMatrix g = kernels::gram(phi);
  const ComplexMatrix f = kernels::frame_operator(phi);

  double norm_scale = 0.0;
  for (int i = 0; i < c.n; ++i) norm_scale = std::max(norm_scale, std::abs(g(i, i)));
  const double r = g(0, 0).real();
  c.equal_norm = true;
  for (int i = 1; i < c.n; ++i) {
    if (std::abs(g(i, i) - g(0, 0)) > tolerance * std::max(1.0, norm_scale)) {
      c.equal_norm = false;
      c.witnesses.push_back({"equal_norm", 0, i});
      break;
    }
  }
  if (c.equal_norm) c.common_norm_sq_float = r;

  c.equiangular = true;
  double ref = 0.0;
  if (c.n > 1) {
    ref = std::norm(g(0, 1));
    const double limit = tolerance * std::max(1.0, norm_scale * norm_scale);
    for (int i = 0; i < c.n && c.equiangular; ++i)
      for (int j = i + 1; j < c.n; ++j) {
        if (std::abs(std::norm(g(i, j)) - ref) > limit) {
          c.equiangular = false;
          c.witnesses.push_back({"equiangular", i, j});
          break;
        }
      }
    if (c.equiangular && r != 0.0) c.coherence_sq_float = ref / (r * r);
  }

  const ComplexMatrix& h = f.rows() <= g.rows() ? f : g;
  const cplx a = tight_candidate(h);
  const ComplexMatrix h2 = kernels::multiply(h, h);
  const double tight_limit = tolerance * std::max(1.0, std::abs(a) * max_abs(h));
  if (auto w = first_far(h2, scaled(h, a), tight_limit, "tight_for_span")) {
    c.witnesses.push_back(*w);
  } else {
    c.tight_for_span = true;
  }
  c.tight_constant_float = a.real();

  c.span_dim = float_rank(phi);
  if (c.n > 1) {
    c.welch_bound_sq = welch_bound_sq(c.n, c.span_dim);
    c.welch_bound_sq_float = c.welch_bound_sq->get_d();
  }
  const bool at_welch = c.n == 1 || std::abs(c.coherence_sq_float - c.welch_bound_sq_float) <= tolerance;
  if (c.equiangular && !at_welch) c.witnesses.push_back({"welch_equality", -1, -1});
  c.etf_for_span = c.equal_norm && c.equiangular && c.tight_for_span && at_welch && c.span_dim > 0;

  try {
    c.span_matches = c.span_dim == spec.nominal_dim &&
                     close_scaled(f, spec.projection_matrix(c.m).to_complex(), a, tolerance);
  } catch (const Error&) {
    c.span_matches = false;
  }
  if (!c.span_matches) c.witnesses.push_back({"span", -1, -1});
  c.is_etf = c.etf_for_span && c.span_matches;
  return c;
}

Lemma1Verdicts lemma1_float(const ComplexMatrix& phi, double tolerance) {
  const ComplexMatrix f = kernels::frame_operator(phi);
  const ComplexMatrix g = kernels::gram(phi);
  const cplx a = tight_candidate(f);
  Lemma1Verdicts v;
  v.a = a;
  v.synthesis = close_scaled(kernels::multiply(f, phi), phi, a, tolerance);
  v.frame_operator_sq = close_scaled(kernels::multiply(f, f), f, a, tolerance);
  v.gram_sq = close_scaled(kernels::multiply(g, g), g, a, tolerance);

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(to_eigen(f), Eigen::EigenvaluesOnly);
  const auto& lambda = eig.eigenvalues();
  const double top = lambda.size() > 0 ? std::max(std::abs(lambda(0)), std::abs(lambda(lambda.size() - 1))) : 0.0;
  v.tight_for_span = true;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    if (std::abs(lambda(k)) <= kRankTolerance * top) continue;
    if (std::abs(lambda(k) - a.real()) > tolerance * std::max(1.0, top)) v.tight_for_span = false;
  }
  return v;
}

}  // namespace hyperetf::verify
