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

#include "hyperetf/designs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hyperetf/error.hpp"

namespace hyperetf::designs {
namespace {

[[noreturn]] void not_bibd(const std::string& why) { throw Error(ErrorCode::kNotBibd, why); }

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void expect_bibd(const IncidenceMatrix& m, const BibdParams& want, const char* what) {
  BibdParams got;
  try {
    got = verify_bibd(m);
  } catch (const Error& e) {
    throw Error(ErrorCode::kNotHyperoval, std::string(what) + ": " + e.what());
  }
  if (got.v != want.v || got.k != want.k || got.lambda != want.lambda) {
    std::ostringstream os;
    os << what << ": expected BIBD(" << want.v << "," << want.k << "," << want.lambda << "), got BIBD(" << got.v
       << "," << got.k << "," << got.lambda << ")";
    throw Error(ErrorCode::kNotHyperoval, os.str());
  }
}

int plane_order(const IncidenceMatrix& plane) {
  const BibdParams p = verify_bibd(plane);
  const int q = p.k - 1;
  if (p.lambda != 1 || q < 1 || p.v != q * q + q + 1 || p.b != p.v) {
    throw Error(ErrorCode::kNotBibd, "not a projective plane");
  }
  return q;
}

}  // namespace

IncidenceMatrix::IncidenceMatrix(int b, int v)
    : b_(b), v_(v), words_per_row_((v + 63) / 64),
      words_(static_cast<std::size_t>(b) * static_cast<std::size_t>((v + 63) / 64), 0) {
  if (b < 0 || v < 0) throw Error(ErrorCode::kSizeMismatch, "negative incidence dimensions");
}

IncidenceMatrix IncidenceMatrix::from_rows(const std::vector<std::string>& rows) {
  const int v = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  IncidenceMatrix m(static_cast<int>(rows.size()), v);
  for (int i = 0; i < m.b_; ++i) {
    const std::string& r = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != v) throw Error(ErrorCode::kParse, "ragged incidence rows");
    for (int j = 0; j < v; ++j) {
      if (r[j] == '1') {
        m.set(i, j, true);
      } else if (r[j] != '0') {
        throw Error(ErrorCode::kParse, std::string("incidence entry '") + r[j] + "' is not 0/1");
      }
    }
  }
  return m;
}

IncidenceMatrix IncidenceMatrix::from_supports(int v, const std::vector<std::vector<int>>& supports) {
  IncidenceMatrix m(static_cast<int>(supports.size()), v);
  for (int i = 0; i < m.b_; ++i) {
    for (int j : supports[static_cast<std::size_t>(i)]) {
      if (j < 0 || j >= v) throw Error(ErrorCode::kSizeMismatch, "support index out of range");
      m.set(i, j, true);
    }
  }
  return m;
}

void IncidenceMatrix::set(int i, int j, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (static_cast<unsigned>(j) & 63U);
  if (value) {
    words_[word(i, j)] |= bit;
  } else {
    words_[word(i, j)] &= ~bit;
  }
}

int IncidenceMatrix::row_sum(int i) const {
  int s = 0;
  for (int w = 0; w < words_per_row_; ++w) s += std::popcount(words_[static_cast<std::size_t>(i) * words_per_row_ + w]);
  return s;
}

int IncidenceMatrix::col_sum(int j) const {
  int s = 0;
  for (int i = 0; i < b_; ++i) s += (*this)(i, j) ? 1 : 0;
  return s;
}

int IncidenceMatrix::row_overlap(int i, int k) const {
  int s = 0;
  const std::size_t a = static_cast<std::size_t>(i) * words_per_row_;
  const std::size_t c = static_cast<std::size_t>(k) * words_per_row_;
  for (int w = 0; w < words_per_row_; ++w) s += std::popcount(words_[a + w] & words_[c + w]);
  return s;
}

std::vector<int> IncidenceMatrix::row_support(int i) const {
  std::vector<int> s;
  for (int j = 0; j < v_; ++j)
    if ((*this)(i, j)) s.push_back(j);
  return s;
}

std::vector<int> IncidenceMatrix::col_support(int j) const {
  std::vector<int> s;
  for (int i = 0; i < b_; ++i)
    if ((*this)(i, j)) s.push_back(i);
  return s;
}

std::string IncidenceMatrix::row_string(int i) const {
  std::string s(static_cast<std::size_t>(v_), '0');
  for (int j = 0; j < v_; ++j)
    if ((*this)(i, j)) s[j] = '1';
  return s;
}

IncidenceMatrix IncidenceMatrix::transpose() const {
  IncidenceMatrix t(v_, b_);
  for (int i = 0; i < b_; ++i)
    for (int j = 0; j < v_; ++j)
      if ((*this)(i, j)) t.set(j, i, true);
  return t;
}

IncidenceMatrix IncidenceMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  IncidenceMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int i = 0; i < m.b_; ++i)
    for (int j = 0; j < m.v_; ++j)
      if ((*this)(rows[i], cols[j])) m.set(i, j, true);
  return m;
}

BibdParams verify_bibd(const IncidenceMatrix& x) {
  if (x.b() == 0 || x.v() == 0) not_bibd("empty incidence matrix");
  BibdParams p;
  p.b = x.b();
  p.v = x.v();
  p.k = x.row_sum(0);
  for (int i = 1; i < x.b(); ++i) {
    if (x.row_sum(i) != p.k) {
      not_bibd("non-constant row sum: block " + std::to_string(i) + " has " + std::to_string(x.row_sum(i)) +
               ", block 0 has " + std::to_string(p.k));
    }
  }
  const IncidenceMatrix t = x.transpose();
  p.r = t.row_sum(0);
  for (int j = 1; j < x.v(); ++j) {
    if (t.row_sum(j) != p.r) {
      not_bibd("non-constant column sum: vertex " + std::to_string(j) + " lies in " + std::to_string(t.row_sum(j)) +
               " blocks, vertex 0 in " + std::to_string(p.r));
    }
  }
  if (x.v() == 1) {
    p.lambda = 1;
  } else {
    p.lambda = t.row_overlap(0, 1);
    for (int j = 0; j < x.v(); ++j) {
      for (int l = j + 1; l < x.v(); ++l) {
        if (t.row_overlap(j, l) != p.lambda) {
          not_bibd("pair count violation: vertices " + std::to_string(j) + "," + std::to_string(l) + " share " +
                   std::to_string(t.row_overlap(j, l)) + " blocks, expected " + std::to_string(p.lambda));
        }
      }
    }
  }
  if (p.lambda == 0) not_bibd("lambda = 0");
  if (p.b * p.k != p.v * p.r || p.lambda * (p.v - 1) != p.r * (p.k - 1)) not_bibd("parameter identities fail");
  return p;
}

ProjectivePlane singer_projective_plane(int e) {
  if (e < 1 || e > 3) throw Error(ErrorCode::kUnsupportedOrder, "shipped planes cover e = 1, 2, 3");
  return singer_projective_plane(gf::default_field(3 * e));
}

ProjectivePlane singer_projective_plane(gf::FieldPtr field) {
  if (field->degree() % 3 != 0) {
    throw Error(ErrorCode::kBadDegreeDivision, "field degree " + std::to_string(field->degree()) + " not divisible by 3");
  }
  ProjectivePlane plane;
  plane.e = field->degree() / 3;
  plane.q = 1 << plane.e;
  plane.field = field;
  const int q = plane.q;
  const int v = q * q + q + 1;
  for (int i = 0; i < v; ++i) {
    if (gf::subfield_trace(gf::FieldElement::alpha_pow(field, static_cast<std::uint64_t>(i)), plane.e).is_zero()) {
      plane.difference_set.push_back(i);
    }
  }
  plane.x = IncidenceMatrix(v, v);
  for (int i = 0; i < v; ++i)
    for (int s : plane.difference_set) plane.x.set(i, (i + s) % v, true);
  return plane;
}

std::vector<int> canonical_hyperoval(const ProjectivePlane& plane) {
  const auto& f = plane.field;
  const int q = plane.q;
  const std::uint64_t v = static_cast<std::uint64_t>(q) * q + q + 1;
  using gf::FieldElement;
  const FieldElement alpha = FieldElement::alpha_pow(f, 1);
  const FieldElement alpha2 = FieldElement::alpha_pow(f, 2);
  std::vector<FieldElement> subfield{FieldElement::zero(f)};
  for (int j = 0; j < q - 1; ++j) subfield.push_back(FieldElement::alpha_pow(f, v * static_cast<std::uint64_t>(j)));
  std::vector<int> s;
  for (const FieldElement& t : subfield) s.push_back(static_cast<int>((t + t * t * alpha + alpha2).log() % v));
  s.push_back(static_cast<int>(alpha.log() % v));
  s.push_back(0);
  std::sort(s.begin(), s.end());
  return s;
}

bool is_hyperoval(const IncidenceMatrix& plane, const std::vector<int>& s) {
  int q = 0;
  try {
    q = plane_order(plane);
  } catch (const Error&) {
    return false;
  }
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (static_cast<int>(s.size()) != q + 2) return false;
  for (int j : s)
    if (j < 0 || j >= plane.v()) return false;
  for (int i = 0; i < plane.b(); ++i) {
    int hits = 0;
    for (int j : s) hits += plane(i, j) ? 1 : 0;
    if (hits > 2) return false;
  }
  return true;
}

PrimalDecomposition hyperoval_decomposition(const IncidenceMatrix& plane, const std::vector<int>& s) {
  const int q = plane_order(plane);
  if (q % 2 != 0) throw Error(ErrorCode::kOddOrder, "hyperovals need even order, got q = " + std::to_string(q));
  if (!is_hyperoval(plane, s)) throw Error(ErrorCode::kNotHyperoval, "vertex set is not a hyperoval");
  std::vector<bool> in_s(static_cast<std::size_t>(plane.v()), false);
  for (int j : s) in_s[j] = true;

  HyperovalDecomposition d;
  d.shape = DecompositionShape::kProjectivePrimal;
  for (int j = 0; j < plane.v(); ++j)
    if (in_s[j]) d.col_perm.push_back(j);
  for (int j = 0; j < plane.v(); ++j)
    if (!in_s[j]) d.col_perm.push_back(j);
  std::vector<int> exterior;
  for (int i = 0; i < plane.b(); ++i) {
    int hits = 0;
    for (int j : s) hits += plane(i, j) ? 1 : 0;
    (hits == 2 ? d.row_perm : exterior).push_back(i);
  }
  d.split_row = static_cast<int>(d.row_perm.size());
  d.split_col = q + 2;
  d.row_perm.insert(d.row_perm.end(), exterior.begin(), exterior.end());

  PrimalDecomposition out{plane.select(d.row_perm, d.col_perm), d};
  const IncidenceMatrix& x = out.x;
  auto range = [](int lo, int hi) {
    std::vector<int> r;
    for (int i = lo; i < hi; ++i) r.push_back(i);
    return r;
  };
  const IncidenceMatrix x11 = x.select(range(0, d.split_row), range(0, d.split_col));
  const IncidenceMatrix x22 = x.select(range(d.split_row, x.b()), range(d.split_col, x.v()));
  expect_bibd(x11, {q + 2, 2, 1, 0, 0}, "X11");
  expect_bibd(x22.transpose(), {q * (q - 1) / 2, q / 2, 1, 0, 0}, "X22^T");
  return out;
}

IncidenceMatrix restore(const IncidenceMatrix& m, const HyperovalDecomposition& layout) {
  std::vector<int> inv_row(layout.row_perm.size());
  std::vector<int> inv_col(layout.col_perm.size());
  for (std::size_t i = 0; i < layout.row_perm.size(); ++i) inv_row[layout.row_perm[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < layout.col_perm.size(); ++j) inv_col[layout.col_perm[j]] = static_cast<int>(j);
  return m.select(inv_row, inv_col);
}

DualDecomposition dual_decomposition(const IncidenceMatrix& plane, const std::vector<int>& s,
                                     std::optional<int> removed_row) {
  const PrimalDecomposition primal = hyperoval_decomposition(plane, s);
  const int q = primal.layout.split_col - 2;
  std::vector<int> hv(s.begin(), s.end());
  std::sort(hv.begin(), hv.end());
  std::vector<int> slot(static_cast<std::size_t>(plane.v()), -1);
  for (std::size_t t = 0; t < hv.size(); ++t) slot[hv[t]] = static_cast<int>(t);

  // Columns of Y are blocks of the plane: exterior (source order), then secant by pair.
  const auto& rp = primal.layout.row_perm;
  std::vector<int> cols(rp.begin() + primal.layout.split_row, rp.end());
  std::vector<std::pair<std::pair<int, int>, int>> secant;
  for (int t = 0; t < primal.layout.split_row; ++t) {
    const int blk = rp[t];
    std::vector<int> pair;
    for (int j : hv)
      if (plane(blk, j)) pair.push_back(slot[j]);
    secant.push_back({{pair[0], pair[1]}, blk});
  }
  std::sort(secant.begin(), secant.end());
  for (const auto& sc : secant) cols.push_back(sc.second);

  // Rows of Y are vertices: non-hyperoval sorted by pattern, then hyperoval ascending.
  const IncidenceMatrix t = plane.transpose();
  std::vector<std::pair<std::string, int>> others;
  for (int j = 0; j < plane.v(); ++j) {
    if (slot[j] >= 0) continue;
    std::string pattern;
    for (int blk : cols) pattern.push_back(plane(blk, j) ? '1' : '0');
    others.emplace_back(std::move(pattern), j);
  }
  std::sort(others.begin(), others.end());
  std::vector<int> rows;
  for (const auto& o : others) rows.push_back(o.second);
  rows.insert(rows.end(), hv.begin(), hv.end());

  DualDecomposition out;
  out.y = t.select(rows, cols);
  out.y_layout = {rows, cols, q * q - 1, q * (q - 1) / 2, DecompositionShape::kProjectiveDual};

  const int first_hyperoval_row = q * q - 1;
  const int r = removed_row.value_or(first_hyperoval_row);
  if (r < first_hyperoval_row || r >= out.y.b()) {
    throw Error(ErrorCode::kBadRowChoice, "removed row " + std::to_string(r) + " is not among the last " +
                                              std::to_string(q + 2) + " rows");
  }
  out.removed_row = r;
  std::vector<int> zrows;
  std::vector<int> zcols;
  for (int i = 0; i < out.y.b(); ++i)
    if (i != r) zrows.push_back(i);
  for (int j = 0; j < out.y.v(); ++j)
    if (!out.y(r, j)) zcols.push_back(j);
  out.z = out.y.select(zrows, zcols);
  std::vector<int> zrow_src;
  std::vector<int> zcol_src;
  for (int i : zrows) zrow_src.push_back(rows[i]);
  for (int j : zcols) zcol_src.push_back(cols[j]);
  out.z_layout = {zrow_src, zcol_src, q * q - 1, q * (q - 1) / 2, DecompositionShape::kAffineDual};

  auto range = [](int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
  };
  const int sr = q * q - 1;
  const int sc = q * (q - 1) / 2;
  if (sc > 0) expect_bibd(out.y.select(range(0, sr), range(0, sc)), {sc, q / 2, 1, 0, 0}, "Y11");
  expect_bibd(out.y.select(range(sr, out.y.b()), range(sc, out.y.v())).transpose(), {q + 2, 2, 1, 0, 0}, "Y22^T");
  expect_bibd(out.z.select(range(sr, out.z.b()), range(sc, out.z.v())).transpose(), {q + 1, 2, 1, 0, 0}, "Z22^T");
  expect_bibd(out.z, {q * q, q, 1, 0, 0}, "Z");
  return out;
}

ParallelClasses parallel_classes(const IncidenceMatrix& z, ClassOrder order) {
  const BibdParams p = verify_bibd(z);
  const int q = p.k;
  if (p.lambda != 1 || p.v != q * q) throw Error(ErrorCode::kNotResolvable, "not an affine plane");
  std::vector<int> seeds;
  if (order == ClassOrder::kAscending) {
    seeds = iota_vec(z.b());
  } else {
    for (int i = z.b() - 1; i >= z.b() - (q + 1); --i) seeds.push_back(i);
  }
  std::vector<bool> used(static_cast<std::size_t>(z.b()), false);
  ParallelClasses pc;
  for (int seed : seeds) {
    if (used[seed]) continue;
    std::vector<int> cls{seed};
    used[seed] = true;
    for (int i = 0; i < z.b(); ++i) {
      if (used[i] || z.row_overlap(seed, i) != 0) continue;
      for (int c : cls)
        if (z.row_overlap(c, i) != 0) throw Error(ErrorCode::kNotResolvable, "parallelism is not transitive");
      cls.push_back(i);
      used[i] = true;
    }
    if (static_cast<int>(cls.size()) != q) {
      throw Error(ErrorCode::kNotResolvable, "class of block " + std::to_string(seed) + " has " +
                                                  std::to_string(cls.size()) + " blocks, expected " + std::to_string(q));
    }
    pc.classes.push_back(std::move(cls));
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw Error(ErrorCode::kNotResolvable, "representatives do not reach every block");
  }
  return pc;
}

IncidenceMatrix read_ascii(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::string row;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') row.push_back(c);
    if (row.empty() || row[0] == '#') continue;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::kParse, "no incidence rows");
  return IncidenceMatrix::from_rows(rows);
}

std::string write_ascii(const IncidenceMatrix& x) {
  std::string out;
  for (int i = 0; i < x.b(); ++i) out += x.row_string(i) + "\n";
  return out;
}

IncidenceMatrix read_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!j.contains("rows") || !j["rows"].is_array()) throw Error(ErrorCode::kParse, "missing \"rows\"");
  std::vector<std::string> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_string()) throw Error(ErrorCode::kParse, "rows must be strings");
    rows.push_back(r.get<std::string>());
  }
  IncidenceMatrix m = IncidenceMatrix::from_rows(rows);
  if (j.contains("b") && j["b"] != m.b()) throw Error(ErrorCode::kParse, "\"b\" disagrees with rows");
  if (j.contains("v") && j["v"] != m.v()) throw Error(ErrorCode::kParse, "\"v\" disagrees with rows");
  return m;
}

std::string write_json(const IncidenceMatrix& x) {
  nlohmann::json j;
  j["b"] = x.b();
  j["v"] = x.v();
  j["rows"] = nlohmann::json::array();
  for (int i = 0; i < x.b(); ++i) j["rows"].push_back(x.row_string(i));
  return j.dump();
}

}  // namespace hyperetf::designs
