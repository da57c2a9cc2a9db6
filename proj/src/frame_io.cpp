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

#include "hyperetf/frame_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hyperetf/error.hpp"

namespace hyperetf::io {
namespace {

using nlohmann::json;
using cyclo::CycloMatrix;
using cyclo::CycloNum;
using cyclo::Rational;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::kParse, what); }

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail("bad integer string");
    return z;
  }
  fail("expected integer");
}

json rational_json(const Rational& r) { return json::array({integer_json(r.get_num()), integer_json(r.get_den())}); }

Rational rational_from(const json& j) {
  if (!j.is_array() || j.size() != 2) fail("expected [num, den]");
  const mpz_class num = integer_from(j[0]);
  const mpz_class den = integer_from(j[1]);
  if (den == 0) fail("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

json optional_rational(const std::optional<Rational>& r) { return r ? rational_json(*r) : json(nullptr); }

json cyclo_entries(const CycloMatrix& a) {
  json out = json::array();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      json c = json::array();
      for (const auto& v : a(i, j).coeffs()) c.push_back(rational_json(v));
      out.push_back(std::move(c));
    }
  return out;
}

CycloMatrix cyclo_from(const json& entries, int m, int n, int conductor) {
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(m) * n) fail("entry count is not m*n");
  CycloMatrix a(m, n, conductor);
  const std::size_t phi = static_cast<std::size_t>(cyclo::euler_phi(conductor));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const json& e = entries[static_cast<std::size_t>(i) * n + j];
      if (!e.is_array() || e.size() != phi) fail("coefficient array length is not phi(N)");
      std::vector<Rational> c;
      c.reserve(phi);
      for (const auto& x : e) c.push_back(rational_from(x));
      a.set(i, j, CycloNum::from_coeffs(conductor, std::move(c)));
    }
  return a;
}

int int_field(const json& j, const char* key, int lo, int hi) {
  if (!j.contains(key) || !j[key].is_number_integer()) fail(std::string("missing integer field ") + key);
  const long long v = j[key].get<long long>();
  if (v < lo || v > hi) fail(std::string("field out of range: ") + key);
  return static_cast<int>(v);
}

constexpr int kMaxDim = 1 << 16;
constexpr int kMaxConductor = 1 << 12;

json span_json(const SpanSpec& s, json& meta) {
  if (s.kind == SpanSpec::Kind::kExplicitProjection) {
    const CycloMatrix& p = *s.projection;
    meta["span_projection"] = {{"conductor", p.conductor()}, {"dim", s.nominal_dim}, {"entries", cyclo_entries(p)}};
  }
  return s.to_string();
}

SpanSpec span_from(const json& meta, int m) {
  if (!meta.contains("span")) return SpanSpec::full(m);
  if (!meta["span"].is_string()) fail("span must be a string");
  const std::string text = meta["span"].get<std::string>();
  if (text != "explicit-projection") return SpanSpec::parse(text, m);
  if (!meta.contains("span_projection") || !meta["span_projection"].is_object()) fail("missing span_projection");
  const json& p = meta["span_projection"];
  const int conductor = int_field(p, "conductor", 1, kMaxConductor);
  const int dim = int_field(p, "dim", 0, m);
  return SpanSpec::explicit_projection(cyclo_from(p["entries"], m, m, conductor), dim);
}

std::string format_complex(std::complex<double> z) {
  char buf[96];
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::snprintf(buf, sizeof buf, "%.*g%+.*gi", kCsvDigits, re, kCsvDigits, im);
  return buf;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail("bad number '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) fail("bad number '" + s + "'");
  return v;
}

std::complex<double> parse_complex(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) fail("empty entry");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0.0, parse_double(s)};
  return {parse_double(s.substr(0, split)), parse_double(s.substr(split))};
}

}  // namespace

std::string certificate_json(const verify::EtfCertificate& c, int indent) {
  json w = json::array();
  for (const auto& x : c.witnesses) w.push_back({{"check", x.check}, {"i", x.i}, {"j", x.j}});
  const json j = {
      {"m", c.m},
      {"n", c.n},
      {"exact", c.exact},
      {"tolerance", c.tolerance},
      {"equal_norm", c.equal_norm},
      {"common_norm_sq", optional_rational(c.common_norm_sq)},
      {"common_norm_sq_float", c.common_norm_sq_float},
      {"equiangular", c.equiangular},
      {"coherence_sq", optional_rational(c.coherence_sq)},
      {"inner_sq", optional_rational(c.inner_sq)},
      {"coherence_sq_float", c.coherence_sq_float},
      {"welch_bound_sq", optional_rational(c.welch_bound_sq)},
      {"welch_bound_sq_float", c.welch_bound_sq_float},
      {"tight_for_span", c.tight_for_span},
      {"tight_constant", optional_rational(c.tight_constant)},
      {"tight_constant_float", c.tight_constant_float},
      {"span_dim", c.span_dim},
      {"span", c.span},
      {"span_matches", c.span_matches},
      {"etf_for_span", c.etf_for_span},
      {"is_etf", c.is_etf},
      {"witnesses", w},
  };
  return j.dump(indent);
}

std::string write_json(const FrameMatrix& f, const std::optional<verify::EtfCertificate>& cert) {
  json j;
  j["format_tag"] = kFormatTag;
  j["representation"] = f.is_exact() ? "cyclotomic" : "float";
  if (f.is_exact()) j["conductor"] = f.conductor();
  j["m"] = f.rows();
  j["n"] = f.cols();
  json meta = {{"q", f.meta().q}, {"variant", f.meta().variant}, {"provenance", f.meta().provenance}};
  meta["span"] = span_json(f.span(), meta);
  j["metadata"] = meta;
  if (f.is_exact()) {
    j["entries"] = cyclo_entries(f.exact());
  } else {
    const kernels::ComplexMatrix a = f.to_complex();
    json e = json::array();
    for (const auto& z : a.data()) e.push_back(json::array({z.real(), z.imag()}));
    j["entries"] = std::move(e);
  }
  if (cert) j["certificate"] = json::parse(certificate_json(*cert));
  return j.dump(1) + "\n";
}

FrameMatrix read_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) fail("top level must be an object");
    if (!j.contains("format_tag") || j["format_tag"] != kFormatTag) fail("missing or unknown format_tag");
    const int m = int_field(j, "m", 1, kMaxDim);
    const int n = int_field(j, "n", 1, kMaxDim);
    FrameMetadata meta;
    json md = j.contains("metadata") ? j["metadata"] : json::object();
    if (!md.is_object()) fail("metadata must be an object");
    if (md.contains("q")) meta.q = int_field(md, "q", 0, kMaxDim);
    if (md.contains("variant")) {
      if (!md["variant"].is_string()) fail("variant must be a string");
      meta.variant = md["variant"].get<std::string>();
    }
    if (md.contains("provenance")) {
      if (!md["provenance"].is_string()) fail("provenance must be a string");
      meta.provenance = md["provenance"].get<std::string>();
    }
    const SpanSpec span = span_from(md, m);
    if (!j.contains("representation") || !j["representation"].is_string()) fail("missing representation");
    const std::string rep = j["representation"].get<std::string>();
    if (!j.contains("entries")) fail("missing entries");
    const json& entries = j["entries"];
    if (rep == "cyclotomic") {
      const int conductor = int_field(j, "conductor", 1, kMaxConductor);
      return FrameMatrix(cyclo_from(entries, m, n, conductor), span, meta);
    }
    if (rep != "float") fail("unknown representation '" + rep + "'");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(m) * n) fail("entry count is not m*n");
    kernels::ComplexMatrix a(m, n);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const json& e = entries[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) fail("expected [re, im]");
      a.data()[k] = {e[0].get<double>(), e[1].get<double>()};
    }
    return FrameMatrix(std::move(a), span, meta);
  } catch (const json::exception& e) {
    fail(std::string("malformed frame file: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    fail(e.what());
  }
}

std::string write_csv(const FrameMatrix& f) {
  std::ostringstream out;
  out << "# " << kFormatTag << " q=" << f.meta().q << " variant=" << (f.meta().variant.empty() ? "-" : f.meta().variant)
      << " span=" << (f.span().kind == SpanSpec::Kind::kExplicitProjection ? "full" : f.span().to_string()) << "\n";
  const kernels::ComplexMatrix a = f.to_complex();
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out << (j ? "," : "") << format_complex(a(i, j));
    out << "\n";
  }
  return out.str();
}

FrameMatrix read_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::complex<double>>> rows;
  FrameMetadata meta;
  std::optional<std::string> span_text;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string tok;
      while (h >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "q") meta.q = static_cast<int>(parse_double(val));
        if (key == "variant" && val != "-") meta.variant = val;
        if (key == "span") span_text = val;
      }
      continue;
    }
    std::vector<std::complex<double>> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_complex(cell));
    if (!rows.empty() && row.size() != rows.front().size()) fail("ragged CSV rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) fail("empty CSV");
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.front().size());
  kernels::ComplexMatrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rows[i][j];
  const SpanSpec span = span_text ? SpanSpec::parse(*span_text, m) : SpanSpec::full(m);
  meta.provenance = "csv import";
  return FrameMatrix(std::move(a), span, meta);
}

FrameMatrix read_frame(const std::string& text) {
  const auto k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') return read_json(text);
  return read_csv(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kPreconditionViolated, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kPreconditionViolated, "write failed for '" + path + "'");
}

}  // namespace hyperetf::io
