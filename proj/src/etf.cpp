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

#include "hyperetf/etf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hyperetf/error.hpp"
#include "hyperetf/golden.hpp"
#include "hyperetf/kernels.hpp"
#include "hyperetf/verify.hpp"

namespace hyperetf::etf {
namespace {

using cyclo::CycloNum;

int order_of_plane(const IncidenceMatrix& plane) {
  for (int q = 2; q * q + q + 1 <= plane.v(); ++q) {
    if (q * q + q + 1 == plane.v()) return q;
  }
  throw Error(ErrorCode::kNotBibd, "plane size is not q^2 + q + 1");
}

bool is_one(const CycloNum& z) {
  const auto r = z.is_rational();
  return r && *r == 1;
}

}  // namespace

CycloMatrix Embedding::matrix() const {
  CycloMatrix e(target_dim, source_dim, 1);
  for (int i = 0; i < source_dim; ++i) e.set(support[i], i, Rational(1));
  return e;
}

CycloMatrix Embedding::apply(const CycloMatrix& seed) const {
  if (seed.rows() != source_dim) {
    throw Error(ErrorCode::kSizeMismatch, "seed has " + std::to_string(seed.rows()) + " rows, embedding expects " +
                                              std::to_string(source_dim));
  }
  CycloMatrix out(target_dim, seed.cols(), seed.conductor());
  for (int i = 0; i < source_dim; ++i)
    for (int l = 0; l < seed.cols(); ++l) out.set(support[i], l, seed(i, l));
  return out;
}

std::vector<Embedding> embeddings_from(const IncidenceMatrix& x) {
  std::vector<Embedding> out;
  out.reserve(x.v());
  for (int j = 0; j < x.v(); ++j) {
    Embedding e{x.b(), x.col_sum(j), x.col_support(j)};
    if (!out.empty() && e.source_dim != out.front().source_dim) {
      throw Error(ErrorCode::kNonconstantColumnSum, "column " + std::to_string(j) + " has sum " +
                                                        std::to_string(e.source_dim) + ", column 0 has " +
                                                        std::to_string(out.front().source_dim));
    }
    out.push_back(std::move(e));
  }
  return out;
}

CycloMatrix assemble(const IncidenceMatrix& x, int simplex_blocks, const CycloMatrix& s, const CycloMatrix& c) {
  const std::vector<Embedding> emb = embeddings_from(x);
  const int n = simplex_blocks * s.cols() + (x.v() - simplex_blocks) * c.cols();
  const int conductor = std::lcm(s.conductor(), c.conductor());
  CycloMatrix phi(x.b(), n, conductor);
  int col = 0;
  for (int j = 0; j < x.v(); ++j) {
    const CycloMatrix& seed = j < simplex_blocks ? s : c;
    if (seed.rows() != emb[j].source_dim) {
      throw Error(ErrorCode::kSizeMismatch, "seed rows do not match column sum " + std::to_string(emb[j].source_dim));
    }
    for (int l = 0; l < seed.cols(); ++l, ++col)
      for (int i = 0; i < seed.rows(); ++i) phi.set(emb[j].support[i], col, seed(i, l));
  }
  return phi;
}

FrameMatrix steiner_etf(const IncidenceMatrix& x, const CycloMatrix& s) {
  const designs::BibdParams p = designs::verify_bibd(x);
  if (p.lambda != 1) throw Error(ErrorCode::kNotBibd, "Steiner frames need lambda = 1");
  if (p.v == 1 && p.b > 1) throw Error(ErrorCode::kNotBibd, "single-vertex design with repeated blocks");
  if (s.rows() != p.r || s.cols() != p.r + 1) {
    throw Error(ErrorCode::kSizeMismatch, "simplex must be " + std::to_string(p.r) + " x " + std::to_string(p.r + 1));
  }
  return FrameMatrix(assemble(x, x.v(), s, s), SpanSpec::full(x.b()), {0, "steiner", "steiner"});
}

seeds::SimplexSource default_simplex_source(int q) {
  return q == 2 ? seeds::SimplexSource::kSylvesterReversed : seeds::SimplexSource::kDft;
}

IncidenceMatrix relabel_affine(const designs::DualDecomposition& dd, const std::vector<int>& vertices,
                               const std::vector<int>& exterior_blocks) {
  const auto reorder = [](const std::vector<int>& perm, const std::vector<int>& wanted, int limit) {
    std::vector<int> idx(perm.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (static_cast<int>(wanted.size()) > limit) {
      throw Error(ErrorCode::kPreconditionViolated, "relabeling longer than the block it reorders");
    }
    for (std::size_t i = 0; i < wanted.size(); ++i) {
      const auto it = std::find(perm.begin(), perm.begin() + limit, wanted[i]);
      if (it == perm.begin() + limit) {
        throw Error(ErrorCode::kPreconditionViolated, "relabeling names index " + std::to_string(wanted[i]) +
                                                          " outside the block it reorders");
      }
      idx[i] = static_cast<int>(it - perm.begin());
    }
    if (std::set<int>(idx.begin(), idx.end()).size() != idx.size()) {
      throw Error(ErrorCode::kPreconditionViolated, "relabeling repeats an index");
    }
    return idx;
  };
  const auto& layout = dd.z_layout;
  return dd.z.select(reorder(layout.row_perm, vertices, layout.split_row),
                     reorder(layout.col_perm, exterior_blocks, layout.split_col));
}

HyperovalFrame hyperoval_construction(const IncidenceMatrix& plane, const std::vector<int>& hyperoval,
                                      Variant variant, const HyperovalOptions& options) {
  const int q = order_of_plane(plane);
  HyperovalFrame out;
  out.decomposition = designs::dual_decomposition(plane, hyperoval, options.removed_row);
  out.simplex_blocks = q * (q - 1) / 2;
  seeds::SimplexSource source = options.simplex.value_or(default_simplex_source(q));
  if (variant == Variant::kAffine) {
    out.design = out.decomposition.z;
    if (options.printed_layout) {
      if (q != 4) throw Error(ErrorCode::kPreconditionViolated, "printed layout exists for q = 4 only");
      const golden::AffineRelabeling r = golden::q4_printed_relabeling();
      out.design = relabel_affine(out.decomposition, r.vertices, r.exterior_blocks);
      if (!options.simplex) source = seeds::SimplexSource::kZeta6;
    }
  } else {
    if (options.printed_layout) throw Error(ErrorCode::kPreconditionViolated, "printed layout is affine only");
    out.design = out.decomposition.y;
  }
  const CycloMatrix s = seeds::unimodular_simplex(q, source);
  const CycloMatrix c = seeds::unimodular_cosimplex(q);
  const CycloMatrix phi = assemble(out.design, out.simplex_blocks, s, c);
  const int tail = variant == Variant::kAffine ? q + 1 : q + 2;
  out.frame = FrameMatrix(phi, SpanSpec::zero_sum_tail(phi.rows(), tail),
                          {q, variant == Variant::kAffine ? "affine" : "projective", "hyperoval"});
  return out;
}

HyperovalFrame hyperoval_construction(int q, Variant variant, const HyperovalOptions& options) {
  int e = 0;
  switch (q) {
    case 2: e = 1; break;
    case 4: e = 2; break;
    case 8: e = 3; break;
    default: throw Error(ErrorCode::kUnsupportedOrder, "q must be 2, 4 or 8, got " + std::to_string(q));
  }
  const designs::ProjectivePlane plane = designs::singer_projective_plane(e);
  return hyperoval_construction(plane.x, designs::canonical_hyperoval(plane), variant, options);
}

FrameMatrix hyperoval_etf(int q, Variant variant, const HyperovalOptions& options) {
  return hyperoval_construction(q, variant, options).frame;
}

FrameMatrix flatten(const FrameMatrix& frame, const IncidenceMatrix& z, const designs::ParallelClasses& classes,
                    const CycloMatrix& h) {
  const int q = h.rows();
  if (q < 2 || h.cols() != q) throw Error(ErrorCode::kBadHadamard, "Hadamard must be square of size >= 2");
  for (int a = 0; a < q; ++a) {
    if (!is_one(h(a, 0))) throw Error(ErrorCode::kBadHadamard, "first column is not all ones");
  }
  if (!(h * h.adjoint() == Rational(q) * CycloMatrix::identity(q, 1))) {
    throw Error(ErrorCode::kBadHadamard, "H H* != q I");
  }
  const CycloMatrix& phi = frame.exact();
  const int m = q * (q + 1);
  if (z.b() != m || z.v() != q * q || phi.rows() != m) {
    throw Error(ErrorCode::kNotAffineForm, "sizes do not match an affine plane of order " + std::to_string(q));
  }

  const int simplex_blocks = q * (q - 1) / 2;
  int col = 0;
  for (int j = 0; j < z.v(); ++j) {
    const std::vector<int> support = z.col_support(j);
    const int width = j < simplex_blocks ? q + 2 : q;
    for (int l = 0; l < width; ++l, ++col) {
      if (col >= phi.cols() || phi.column_support(col) != support) {
        throw Error(ErrorCode::kNotAffineForm, "column " + std::to_string(col) + " is not an embedded seed");
      }
    }
  }
  if (col != phi.cols()) throw Error(ErrorCode::kNotAffineForm, "column count does not match the affine plane");

  std::vector<int> order;
  std::set<int> representatives;
  if (static_cast<int>(classes.classes.size()) != q + 1) {
    throw Error(ErrorCode::kNotAffineForm, "expected q + 1 parallel classes");
  }
  for (const auto& cls : classes.classes) {
    if (static_cast<int>(cls.size()) != q) throw Error(ErrorCode::kNotAffineForm, "parallel class of wrong size");
    representatives.insert(cls.front());
    order.insert(order.end(), cls.begin(), cls.end());
  }
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  if (sorted != all) throw Error(ErrorCode::kNotAffineForm, "classes do not partition the blocks");
  if (*representatives.begin() != m - q - 1) {
    throw Error(ErrorCode::kNotAffineForm, "class representatives must be the last q + 1 blocks");
  }

  const int conductor = std::lcm(phi.conductor(), h.conductor());
  CycloMatrix out(m, phi.cols(), conductor);
  for (int c = 0; c <= q; ++c)
    for (int a = 0; a < q; ++a)
      for (int k = 0; k < phi.cols(); ++k) {
        CycloNum acc(conductor);
        for (int b = 0; b < q; ++b) {
          const CycloNum& x = phi(order[c * q + b], k);
          if (!x.is_zero()) acc += h(a, b).lift(conductor) * x.lift(conductor);
        }
        out.set(c * q + a, k, acc);
      }
  FrameMetadata meta = frame.meta();
  meta.variant = "flat";
  meta.provenance = "flatten";
  return FrameMatrix(out, SpanSpec::zero_sum_all(m), meta);
}

ExtensionScalars extension_scalars(long m, long n, long d, Branch branch) {
  if (m < 1 || n < 1 || d < 1) throw Error(ErrorCode::kConditionViolated, "sizes must be positive");
  const Rational lhs = cyclo::make_rational(1, d);
  const Rational rhs = cyclo::make_rational(1, m) + cyclo::make_rational(1, n) - cyclo::make_rational(1, m + n - 1);
  if (lhs != rhs) {
    throw Error(ErrorCode::kConditionViolated, "1/d != 1/m + 1/n - 1/(m+n-1) for (m, n, d) = (" + std::to_string(m) +
                                                   ", " + std::to_string(n) + ", " + std::to_string(d) + ")");
  }
  const long a_ = m + n - 1;
  const long b_ = m + n;
  const long c_ = m * n;
  const long denom = a_ * b_ - c_;
  const Surd first = Surd::sqrt(b_, Rational(a_));
  const Surd second = Surd::sqrt(c_ * a_);
  const Surd num = branch == Branch::kPlus ? first - second : first + second;

  ExtensionScalars s;
  s.branch = branch;
  s.f = num * Surd(cyclo::make_rational(-1, denom));
  s.g = Surd::sqrt(b_);
  s.a = cyclo::make_rational(m * n, d);
  const Surd a(s.a);
  if (!(a * s.f * s.f + Surd(2) * s.f * s.g + Surd(1)).is_zero()) {
    throw Error(ErrorCode::kConditionViolated, "a f^2 + 2 f g + 1 != 0");
  }
  const Surd afg = a * s.f + s.g;
  if (!(afg * afg == Surd(cyclo::make_rational(m * n, m + n - 1)))) {
    throw Error(ErrorCode::kConditionViolated, "(a f + g)^2 != mn / (m + n - 1)");
  }
  s.f_float = s.f.to_double();
  s.g_float = s.g.to_double();
  return s;
}

ExtendedFrame extend(const FrameMatrix& frame, Branch branch) {
  const int m = frame.rows();
  const int n = frame.cols();
  if (m == n) throw Error(ErrorCode::kPreconditionViolated, "input is square");

  verify::EtfCertificate cols;
  verify::EtfCertificate rows;
  if (frame.is_exact()) {
    const CycloMatrix& phi = frame.exact();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        const auto r = phi(i, j).modulus_squared().is_rational();
        if (!r || *r != 1) {
          throw Error(ErrorCode::kPreconditionViolated,
                      "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not unimodular");
        }
      }
    cols = verify::certify_exact(phi, SpanSpec::full(m));
    rows = verify::certify_exact(phi.adjoint(), SpanSpec::full(n));
  } else {
    const kernels::ComplexMatrix phi = frame.to_complex();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        if (std::abs(std::abs(phi(i, j)) - 1.0) > verify::kFloatTolerance) {
          throw Error(ErrorCode::kPreconditionViolated,
                      "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not unimodular");
        }
      }
    cols = verify::certify_float(phi, SpanSpec::full(m));
    rows = verify::certify_float(kernels::adjoint(phi), SpanSpec::full(n));
  }
  if (!cols.etf_for_span) throw Error(ErrorCode::kPreconditionViolated, "columns are not an ETF for their span");
  if (!rows.etf_for_span) throw Error(ErrorCode::kPreconditionViolated, "rows are not an ETF for their span");

  ExtendedFrame out;
  out.span_dim = cols.span_dim;
  try {
    out.scalars = extension_scalars(m, n, out.span_dim, branch);
  } catch (const Error& e) {
    throw Error(ErrorCode::kPreconditionViolated, e.what());
  }

  const auto f = out.scalars.f.is_rational();
  const auto g = out.scalars.g.is_rational();
  FrameMetadata meta = frame.meta();
  meta.variant = "extended";
  meta.provenance = "extend";
  if (frame.is_exact() && f && g) {
    const CycloMatrix& phi = frame.exact();
    const CycloMatrix block = *f * verify::frame_operator(phi) + *g * CycloMatrix::identity(m, 1);
    CycloMatrix psi(m, m + n, phi.conductor());
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) psi.set(i, j, phi(i, j));
      for (int j = 0; j < m; ++j) psi.set(i, n + j, block(i, j));
    }
    out.psi = FrameMatrix(psi, SpanSpec::full(m), meta);
  } else {
    const kernels::ComplexMatrix phi = frame.to_complex();
    const kernels::ComplexMatrix fop =
        frame.is_exact() ? verify::frame_operator(frame.exact()).to_complex() : kernels::frame_operator(phi);
    kernels::ComplexMatrix psi(m, m + n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) psi(i, j) = phi(i, j);
      for (int j = 0; j < m; ++j) psi(i, n + j) = out.scalars.f_float * fop(i, j) + (i == j ? out.scalars.g_float : 0.0);
    }
    out.psi = FrameMatrix(psi, SpanSpec::full(m), meta);
  }

  const kernels::ComplexMatrix psi_c = out.psi.to_complex();
  kernels::ComplexMatrix target = kernels::ComplexMatrix::identity(m);
  for (int i = 0; i < m; ++i) target(i, i) *= static_cast<double>(m + n);
  out.frame_operator_error = kernels::max_abs_diff(kernels::frame_operator(psi_c), target);
  out.frame_operator_check = out.frame_operator_error <= verify::kFloatTolerance * (m + n);
  return out;
}

std::vector<FlatParams> admissible_flat_params(long max_m) {
  if (max_m < 6) throw Error(ErrorCode::kPreconditionViolated, "max_m must be at least 6");
  const auto odd_root = [](const Rational& x) -> bool {
    if (x.get_den() != 1 || x < 0) return false;
    const mpz_class r = sqrt(x.get_num());
    return r * r == x.get_num() && mpz_odd_p(r.get_mpz_t());
  };
  std::vector<FlatParams> out;
  for (long q = 2; q * (q + 1) <= max_m; ++q) {
    const long m = q * (q + 1);
    const long d = m - 1;
    const long n = q * (q * q + q - 1);
    const Rational first = cyclo::make_rational(d * (n - 1), n - d);
    const Rational second = cyclo::make_rational((n - d) * (n - 1), d);
    if (q % 2 == 0 && odd_root(first) && odd_root(second)) out.push_back({q, m, n});
  }
  return out;
}

BlockTightness block_form_eigenvalues(long k, long r) {
  if (k < 1 || r < 1) throw Error(ErrorCode::kPreconditionViolated, "k and r must be positive");
  BlockTightness t;
  t.first_eigenvalue = Rational(k * (r + 1)) - cyclo::make_rational(k * (k + 1), r);
  t.second_eigenvalue = Rational((k + 1) * (r - 1));
  t.tight = t.first_eigenvalue == t.second_eigenvalue;
  return t;
}

BlockTightness general_block_tightness(const IncidenceMatrix& x) {
  designs::BibdParams p;
  try {
    p = designs::verify_bibd(x);
  } catch (const Error& e) {
    throw Error(ErrorCode::kNotDecomposedForm, std::string("not a BIBD: ") + e.what());
  }
  if (p.lambda != 1) throw Error(ErrorCode::kNotDecomposedForm, "lambda must be 1");
  const long k = p.k;
  const long r = p.r;
  const long num = 2 * r * k - k * (k + 1);
  if (num <= 0 || num % (2 * r) != 0) throw Error(ErrorCode::kNotDecomposedForm, "k0 is not a positive integer");
  BlockTightness t = block_form_eigenvalues(k, r);
  t.k0 = num / (2 * r);
  t.v0 = r * (t.k0 - 1) + 1;
  t.b0 = k + 1;
  if (t.v0 > p.v || t.b0 > p.b) throw Error(ErrorCode::kNotDecomposedForm, "blocks larger than the design");

  const int split_row = p.b - static_cast<int>(t.b0);
  const int split_col = static_cast<int>(t.v0);
  std::vector<int> top(split_row), bottom(t.b0), left(split_col), right(p.v - split_col);
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.begin(), bottom.end(), split_row);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), split_col);

  for (int i : bottom)
    for (int j : left) {
      if (x(i, j)) throw Error(ErrorCode::kNotDecomposedForm, "lower-left block is not zero");
    }
  const auto check = [&](const IncidenceMatrix& block, long v, long kk, const char* what) {
    designs::BibdParams q;
    try {
      q = designs::verify_bibd(block);
    } catch (const Error& e) {
      throw Error(ErrorCode::kNotDecomposedForm, std::string(what) + ": " + e.what());
    }
    if (q.v != v || q.k != kk || q.lambda != 1) {
      throw Error(ErrorCode::kNotDecomposedForm, std::string(what) + " has the wrong parameters");
    }
  };
  check(x.select(top, left), t.v0, t.k0, "upper-left block");
  check(x.select(bottom, right).transpose(), t.b0, 2, "transposed lower-right block");
  return t;
}

}  // namespace hyperetf::etf
