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

// etf: generate, verify and search for equiangular tight frames.
//
// Exit codes: 0 certified, 1 not an ETF, 2 certification regression,
// 64 parse or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hyperetf/designs.hpp"
#include "hyperetf/error.hpp"
#include "hyperetf/etf.hpp"
#include "hyperetf/frame_io.hpp"
#include "hyperetf/generate.hpp"
#include "hyperetf/groups.hpp"
#include "hyperetf/verify.hpp"

namespace {

using namespace hyperetf;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNotEtf = 1;
constexpr int kExitRegression = 2;
constexpr int kExitUsage = 64;

std::string decimal(double x, int digits = 15) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string rational_string(const cyclo::Rational& r) { return r.get_str(); }

std::string set_string(const groups::AbelianGroup& g, const std::vector<int>& d) {
  std::string out = "{";
  for (std::size_t k = 0; k < d.size(); ++k) out += (k ? "," : "") + g.format(d[k]);
  return out + "}";
}

/// (1/k) sqrt((k - d) / (d (k - 1))), squared.
cyclo::Rational side_sq(long k, long d) {
  return cyclo::make_rational(k - d, d * (k - 1)) / (cyclo::Rational(k) * k);
}

int cmd_info(int q, bool as_json) {
  const auto info = generate::order_info(q);
  const std::string bound = generate::sqrt_string(info.welch_bound_sq);
  const double bound_float = std::sqrt(info.welch_bound_sq.get_d());
  if (as_json) {
    std::cout << json{{"q", info.q},
                      {"d", info.d},
                      {"n", info.n},
                      {"m", info.m},
                      {"welch_bound_sq", rational_string(info.welch_bound_sq)},
                      {"welch_bound", bound},
                      {"welch_bound_float", bound_float}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << "q = " << info.q << "\n"
            << "d = " << info.d << "\n"
            << "n = " << info.n << "\n"
            << "m = " << info.m << "\n"
            << "welch_bound_sq = " << rational_string(info.welch_bound_sq) << "\n"
            << "welch_bound = " << bound << " ~ " << decimal(bound_float) << "\n";
  return kExitOk;
}

designs::IncidenceMatrix read_plane(const std::string& path) {
  const std::string text = io::read_file(path);
  const auto k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') return designs::read_json(text);
  return designs::read_ascii(text);
}

void print_summary(std::ostream& os, const verify::EtfCertificate& c) {
  os << "m = " << c.m << ", n = " << c.n << ", span = " << c.span << ", d = " << c.span_dim
     << (c.exact ? ", exact" : ", float") << "\n";
  if (c.coherence_sq) os << "coherence_sq = " << rational_string(*c.coherence_sq) << "\n";
  else os << "coherence_sq ~ " << decimal(c.coherence_sq_float) << "\n";
  if (c.welch_bound_sq) os << "welch_bound_sq = " << rational_string(*c.welch_bound_sq) << "\n";
  os << "is_etf = " << (c.is_etf ? "true" : "false") << "\n";
}

struct GenerateArgs {
  int q = 2;
  std::string variant = "affine";
  std::string branch = "plus";
  std::string out;
  std::string format = "json";
  bool printed_layout = false;
  std::string plane;
};

int cmd_generate(const GenerateArgs& a) {
  generate::Options o;
  o.q = a.q;
  o.kind = generate::parse_kind(a.variant);
  o.branch = generate::parse_branch(a.branch);
  o.printed_layout = a.printed_layout;
  if (!a.plane.empty()) o.plane = read_plane(a.plane);
  const FrameMatrix f = generate::build(o);
  const verify::EtfCertificate c = verify::certify(f);
  std::string text;
  if (a.format == "json") text = io::write_json(f, c);
  else if (a.format == "csv") text = io::write_csv(f);
  else throw Error(ErrorCode::kParse, "unknown format '" + a.format + "'");
  if (a.out.empty()) {
    std::cout << text;
    print_summary(std::cerr, c);
  } else {
    io::write_file(a.out, text);
    std::cout << "wrote " << a.out << "\n";
    print_summary(std::cout, c);
  }
  if (!c.is_etf) {
    std::cerr << "error: generated frame failed certification\n";
    return kExitRegression;
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& span) {
  FrameMatrix f = io::read_frame(io::read_file(path));
  if (span != "auto") f.span() = SpanSpec::parse(span, f.rows());
  const verify::EtfCertificate c = verify::certify(f);
  std::cout << io::certificate_json(c) << "\n";
  return c.is_etf ? kExitOk : kExitNotEtf;
}

int cmd_search(const std::string& group, int m, int n, bool all, bool as_json) {
  const auto g = groups::AbelianGroup::parse(group);
  groups::SearchOptions opt;
  opt.all = all;
  const auto pairs = groups::paired_search(g, m, n, opt);
  if (as_json) {
    json list = json::array();
    for (const auto& p : pairs) {
      json d = json::array(), dp = json::array();
      for (int x : p.d) d.push_back(g.format(x));
      for (int x : p.d_prime) dp.push_back(g.format(x));
      list.push_back({{"d", d},
                      {"d_prime", dp},
                      {"rank", p.rank},
                      {"row_side", generate::sqrt_string(side_sq(m, p.rank))},
                      {"column_side", generate::sqrt_string(side_sq(n, p.rank))}});
    }
    std::cout << json{{"group", g.to_string()}, {"m", m}, {"n", n}, {"all", all}, {"pairs", list}}.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << g.to_string() << ", m = " << m << ", n = " << n << (all ? ", all translates" : ", canonical translates")
            << "\n";
  if (pairs.empty()) {
    std::cout << "no pairs found\n";
    return kExitOk;
  }
  for (const auto& p : pairs) {
    std::cout << "D = " << set_string(g, p.d) << "  D' = " << set_string(g, p.d_prime) << "  rank = " << p.rank
              << "  " << generate::sqrt_string(side_sq(n, p.rank)) << " = " << generate::sqrt_string(side_sq(m, p.rank))
              << "\n";
  }
  std::cout << pairs.size() << " pair" << (pairs.size() == 1 ? "" : "s") << " found\n";
  return kExitOk;
}

int cmd_admissible(long max_m) {
  std::cout << std::setw(6) << "q" << std::setw(8) << "m" << std::setw(10) << "n" << "  note\n";
  if (max_m < 6) return kExitOk;
  for (const auto& p : etf::admissible_flat_params(max_m)) {
    const char* note = p.q == 2 ? "exists" : p.q == 4 ? "real existence refuted" : "open";
    std::cout << std::setw(6) << p.q << std::setw(8) << p.m << std::setw(10) << p.n << "  " << note << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equiangular tight frames from hyperovals"};
  app.require_subcommand(1);

  int info_q = 2;
  bool info_json = false;
  auto* info = app.add_subcommand("info", "parameters of the hyperoval ETF of order q");
  info->add_option("--q", info_q, "order q in {2, 4, 8}")->required();
  info->add_flag("--json", info_json, "JSON output");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "build a frame and write it with its certificate");
  g->add_option("--q", gen.q, "order q in {2, 4, 8}");
  g->add_option("--variant", gen.variant, "affine|projective|steiner|flat|extended")
      ->check(CLI::IsMember({"affine", "projective", "steiner", "flat", "extended"}));
  g->add_option("--branch", gen.branch, "plus|minus (extended only)")->check(CLI::IsMember({"plus", "minus"}));
  g->add_option("--out", gen.out, "output file (stdout when omitted)");
  g->add_option("--format", gen.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  g->add_flag("--printed-layout", gen.printed_layout, "q = 4 printed vertex and block order");
  g->add_option("--plane", gen.plane, "projective plane incidence matrix (ASCII or JSON)");

  std::string verify_file, verify_span = "auto";
  auto* v = app.add_subcommand("verify", "certify a frame file");
  v->add_option("file", verify_file, "frame file (JSON or CSV)")->required();
  v->add_option("--span", verify_span, "auto|full|zero-sum-tail:t|zero-sum-all");

  std::string group;
  int sm = 0, sn = 0;
  bool all = false, search_json = false;
  auto* s = app.add_subcommand("search", "pairs of difference sets giving extendable harmonic frames");
  s->add_option("--group", group, "factors, e.g. 2,2,2,2")->required();
  s->add_option("--m", sm, "size of D")->required();
  s->add_option("--n", sn, "size of D'")->required();
  s->add_flag("--all", all, "list every translate");
  s->add_flag("--json", search_json, "JSON output");

  long max_m = 50;
  auto* adm = app.add_subcommand("admissible", "parameters allowed by the flat-frame integrality conditions");
  adm->add_option("--max-m", max_m, "largest m = q(q+1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*info) return cmd_info(info_q, info_json);
    if (*g) return cmd_generate(gen);
    if (*v) return cmd_verify(verify_file, verify_span);
    if (*s) return cmd_search(group, sm, sn, all, search_json);
    if (*adm) return cmd_admissible(max_m);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegression;
  }
  return kExitUsage;
}
