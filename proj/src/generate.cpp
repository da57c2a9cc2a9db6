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

#include "hyperetf/generate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hyperetf/error.hpp"
#include "hyperetf/golden.hpp"
#include "hyperetf/seeds.hpp"
#include "hyperetf/surd.hpp"

namespace hyperetf::generate {
namespace {

using cyclo::CycloMatrix;
using cyclo::Rational;
using designs::IncidenceMatrix;

int log2_exact(int q) {
  int e = 0;
  while ((1 << e) < q) ++e;
  if ((1 << e) != q) throw Error(ErrorCode::kUnsupportedOrder, "q must be a power of two, got " + std::to_string(q));
  return e;
}

void check_plane(const IncidenceMatrix& plane) {
  const designs::BibdParams p = designs::verify_bibd(plane);
  if (p.b != p.v || p.lambda != 1 || p.k * (p.k - 1) + 1 != p.v) {
    throw Error(ErrorCode::kNotBibd, "input is not a projective plane");
  }
}

etf::HyperovalFrame construct(const Options& o, etf::Variant variant) {
  etf::HyperovalOptions opt;
  opt.printed_layout = o.printed_layout;
  if (!o.plane) return etf::hyperoval_construction(o.q, variant, opt);
  check_plane(*o.plane);
  const std::vector<int> s = o.hyperoval ? *o.hyperoval : find_hyperoval(*o.plane);
  return etf::hyperoval_construction(*o.plane, s, variant, opt);
}

int order_of(const Options& o) {
  if (!o.plane) return o.q;
  const int v = o.plane->v();
  for (int q = 2; q * q + q + 1 <= v; ++q)
    if (q * q + q + 1 == v) return q;
  throw Error(ErrorCode::kNotBibd, "plane size is not q^2 + q + 1");
}

FrameMatrix flat_frame(const Options& o, int q) {
  const etf::HyperovalFrame h = construct(o, etf::Variant::kAffine);
  const auto classes = designs::parallel_classes(h.design, designs::ClassOrder::kBottomRepresentatives);
  return etf::flatten(h.frame, h.design, classes, seeds::sylvester_hadamard(log2_exact(q)));
}

}  // namespace

Kind parse_kind(const std::string& text) {
  if (text == "affine") return Kind::kAffine;
  if (text == "projective") return Kind::kProjective;
  if (text == "steiner") return Kind::kSteiner;
  if (text == "flat") return Kind::kFlat;
  if (text == "extended") return Kind::kExtended;
  throw Error(ErrorCode::kParse, "unknown variant '" + text + "'");
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::kAffine: return "affine";
    case Kind::kProjective: return "projective";
    case Kind::kSteiner: return "steiner";
    case Kind::kFlat: return "flat";
    case Kind::kExtended: return "extended";
  }
  return "";
}

etf::Branch parse_branch(const std::string& text) {
  if (text == "plus") return etf::Branch::kPlus;
  if (text == "minus") return etf::Branch::kMinus;
  throw Error(ErrorCode::kParse, "unknown branch '" + text + "'");
}

FrameMatrix build(const Options& o) {
  const int q = order_of(o);
  if (!o.plane) order_info(q);
  if (o.printed_layout && (q != 4 || o.plane || (o.kind != Kind::kAffine && o.kind != Kind::kFlat))) {
    throw Error(ErrorCode::kPreconditionViolated, "printed layout applies to the canonical q = 4 affine and flat frames");
  }
  switch (o.kind) {
    case Kind::kAffine: return construct(o, etf::Variant::kAffine).frame;
    case Kind::kProjective: return construct(o, etf::Variant::kProjective).frame;
    case Kind::kSteiner: {
      // Blocks of the affine plane listed class by class.
      const etf::HyperovalFrame h = construct(o, etf::Variant::kAffine);
      std::vector<int> order;
      for (const auto& c : designs::parallel_classes(h.design).classes) {
        std::vector<int> members = c;
        std::sort(members.begin(), members.end());
        order.insert(order.end(), members.begin(), members.end());
      }
      std::vector<int> cols(h.design.v());
      std::iota(cols.begin(), cols.end(), 0);
      const IncidenceMatrix x = h.design.select(order, cols);
      const auto source = q == 2 ? seeds::SimplexSource::kSylvester : seeds::SimplexSource::kDft;
      FrameMatrix f = etf::steiner_etf(x, seeds::unimodular_simplex(q, source));
      f.meta() = {q, "steiner", "steiner construction on the affine plane"};
      return f;
    }
    case Kind::kFlat: {
      FrameMatrix f = flat_frame(o, q);
      f.meta() = {q, "flat", "flattened hyperoval construction"};
      return f;
    }
    case Kind::kExtended: {
      // q = 2 extends the shipped real flat frame; larger orders extend the flattened frame.
      const FrameMatrix flat = q == 2 && !o.plane
                                   ? FrameMatrix(golden::flat_6x10(), SpanSpec::zero_sum_all(6), {2, "flat", "shipped"})
                                   : flat_frame(o, q);
      FrameMatrix f = etf::extend(flat, o.branch).psi;
      f.meta() = {q, "extended", o.branch == etf::Branch::kPlus ? "extension, plus branch" : "extension, minus branch"};
      return f;
    }
  }
  throw Error(ErrorCode::kPreconditionViolated, "unknown variant");
}

std::vector<int> find_hyperoval(const IncidenceMatrix& plane) {
  check_plane(plane);
  const int v = plane.v();
  const int size = designs::verify_bibd(plane).k + 1;
  std::vector<int> on_line(plane.b(), 0);
  std::vector<int> chosen;
  const std::function<bool(int)> grow = [&](int from) -> bool {
    if (static_cast<int>(chosen.size()) == size) return true;
    for (int p = from; p <= v - (size - static_cast<int>(chosen.size())); ++p) {
      const std::vector<int> lines = plane.col_support(p);
      if (std::any_of(lines.begin(), lines.end(), [&](int l) { return on_line[l] >= 2; })) continue;
      for (int l : lines) ++on_line[l];
      chosen.push_back(p);
      if (grow(p + 1)) return true;
      chosen.pop_back();
      for (int l : lines) --on_line[l];
    }
    return false;
  };
  if (!grow(0)) throw Error(ErrorCode::kNotHyperoval, "plane has no hyperoval");
  return chosen;
}

OrderInfo order_info(int q) {
  if (q != 2 && q != 4 && q != 8) {
    throw Error(ErrorCode::kUnsupportedOrder, "q must be 2, 4 or 8, got " + std::to_string(q));
  }
  OrderInfo info;
  info.q = q;
  info.d = q * q + q - 1;
  info.n = q * info.d;
  info.m = info.d + 1;
  info.welch_bound_sq = cyclo::make_rational(info.n - info.d, static_cast<long>(info.d) * (info.n - 1));
  return info;
}

std::string sqrt_string(const Rational& r) {
  if (r < 0) throw Error(ErrorCode::kPreconditionViolated, "square root of a negative rational");
  // sqrt(a/b) = sqrt(a b) / b
  const mpz_class ab = r.get_num() * r.get_den();
  if (!ab.fits_slong_p()) throw Error(ErrorCode::kTooLarge, "radicand too large");
  Rational c(1, 1);
  c /= Rational(r.get_den());
  return Surd::sqrt(ab.get_si(), c).to_string();
}

}  // namespace hyperetf::generate
