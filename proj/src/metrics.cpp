// Copyright 2026 The qperturb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperturb/metrics.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "qperturb/error.hpp"

namespace qperturb {
namespace {

using Rational = boost::multiprecision::cpp_rational;

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string Opt(const std::optional<double>& x) { return x ? FormatDouble(*x) : std::string(); }

// Splits one CSV record, honoring quoted fields that may span lines.
bool ReadRecord(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string field;
  bool quoted = false;
  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorKind::kParseError, "unterminated quoted CSV field");
  fields.push_back(std::move(field));
  return true;
}

int ParseInt(const std::string& s, const char* column) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kParseError, std::string("bad integer in column ") + column + ": '" + s + "'");
  }
  return v;
}

double ParseDouble(const std::string& s, const char* column) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kParseError, std::string("bad number in column ") + column + ": '" + s + "'");
  }
  return v;
}

std::optional<double> ParseOpt(const std::string& s, const char* column) {
  if (s.empty()) return std::nullopt;
  return ParseDouble(s, column);
}

BigInt ParseBig(const std::string& s, const char* column) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::kParseError, std::string("bad integer in column ") + column + ": '" + s + "'");
  }
  return BigInt(s);
}

}  // namespace

std::string FormatDouble(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

MeanStd MeanAr(std::span<const double> ars) {
  if (ars.empty()) throw Error(ErrorKind::kEmptyInput, "mean AR of an empty run list");
  MeanStd r;
  for (double a : ars) r.mean += a;
  r.mean /= static_cast<double>(ars.size());
  double ss = 0.0;
  for (double a : ars) ss += (a - r.mean) * (a - r.mean);
  r.stddev = std::sqrt(ss / static_cast<double>(ars.size()));
  return r;
}

MeanStd MeanAr(std::span<const QaoaRun> runs) {
  if (runs.empty()) throw Error(ErrorKind::kEmptyInput, "mean AR of an empty run list");
  std::vector<double> ars;
  for (const QaoaRun& r : runs) {
    if (r.graph_id != runs[0].graph_id || r.p != runs[0].p) {
      throw Error(ErrorKind::kInvalidArgument, "runs must share graph and p");
    }
    if (!r.ar) throw Error(ErrorKind::kInvalidArgument, "run has no approximation ratio");
    ars.push_back(*r.ar);
  }
  return MeanAr(ars);
}

double QuotientIPrime(double mu_base, double mu_pert) {
  if (!(mu_pert > 0)) throw Error(ErrorKind::kDivisionByZero, "I' needs mu_pert > 0");
  return mu_base / mu_pert;
}

double SymmetryIndex(int maxcut_base, int maxcut_pert, const BigInt& aut_base,
                     const BigInt& aut_pert) {
  if (maxcut_pert <= 0 || aut_base <= 0) {
    throw Error(ErrorKind::kDivisionByZero, "I_sym needs maxcut_pert > 0 and |Aut| > 0");
  }
  return ToDouble(Rational(BigInt(maxcut_base) * aut_pert, BigInt(maxcut_pert) * aut_base));
}

double ApproxSymmetryIndex(double mu_base, double mu_pert, const BigInt& aut_base,
                           const BigInt& aut_pert) {
  if (!(mu_pert > 0) || aut_base <= 0) {
    throw Error(ErrorKind::kDivisionByZero, "I'_sym needs mu_pert > 0 and |Aut| > 0");
  }
  return mu_base / mu_pert * ToDouble(Rational(aut_pert, aut_base));
}

const std::vector<std::string>& CsvColumns() {
  static const std::vector<std::string> kColumns{
      "graph_id",       "family",         "n",                  "perturbation", "p",
      "seed",           "restarts",       "f_star",             "maxcut",       "maxcut_base",
      "ar",             "aut_order_base", "aut_order_pert",     "aut_order_pert_max",
      "mu_base",        "mu_pert",        "i_prime",            "i_sym",        "i_sym_prime",
      "runtime_ms",     "error"};
  return kColumns;
}

void WriteCsv(std::ostream& out, std::span<const MetricsRecord> records) {
  const auto& cols = CsvColumns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const MetricsRecord& r : records) {
    out << Quote(r.graph_id) << ',' << Quote(r.family) << ',' << r.n << ','
        << Quote(r.perturbation) << ',' << r.p << ',' << r.seed << ',' << r.restarts << ','
        << FormatDouble(r.f_star) << ',' << r.maxcut << ',' << r.maxcut_base << ','
        << Opt(r.ar) << ',' << r.aut_order_base.str() << ',' << r.aut_order_pert.str() << ','
        << r.aut_order_pert_max.str() << ',' << Opt(r.mu_base) << ',' << Opt(r.mu_pert) << ','
        << Opt(r.i_prime) << ',' << Opt(r.i_sym) << ',' << Opt(r.i_sym_prime) << ','
        << FormatDouble(r.runtime_ms) << ',' << Quote(r.error) << '\n';
  }
}

std::vector<MetricsRecord> ParseCsv(std::istream& in) {
  std::vector<std::string> f;
  if (!ReadRecord(in, f) || f != CsvColumns()) {
    throw Error(ErrorKind::kParseError, "CSV header does not match the metrics schema");
  }
  std::vector<MetricsRecord> out;
  while (ReadRecord(in, f)) {
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != CsvColumns().size()) {
      throw Error(ErrorKind::kParseError, "CSV row " + std::to_string(out.size() + 1) + " has " +
                                              std::to_string(f.size()) + " fields");
    }
    MetricsRecord r;
    r.graph_id = f[0];
    r.family = f[1];
    r.n = ParseInt(f[2], "n");
    r.perturbation = f[3];
    r.p = ParseInt(f[4], "p");
    r.seed = ParseInt(f[5], "seed");
    r.restarts = ParseInt(f[6], "restarts");
    r.f_star = ParseDouble(f[7], "f_star");
    r.maxcut = ParseInt(f[8], "maxcut");
    r.maxcut_base = ParseInt(f[9], "maxcut_base");
    r.ar = ParseOpt(f[10], "ar");
    r.aut_order_base = ParseBig(f[11], "aut_order_base");
    r.aut_order_pert = ParseBig(f[12], "aut_order_pert");
    r.aut_order_pert_max = ParseBig(f[13], "aut_order_pert_max");
    r.mu_base = ParseOpt(f[14], "mu_base");
    r.mu_pert = ParseOpt(f[15], "mu_pert");
    r.i_prime = ParseOpt(f[16], "i_prime");
    r.i_sym = ParseOpt(f[17], "i_sym");
    r.i_sym_prime = ParseOpt(f[18], "i_sym_prime");
    r.runtime_ms = ParseDouble(f[19], "runtime_ms");
    r.error = f[20];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qperturb
