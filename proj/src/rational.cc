// Copyright 2026 The siggames Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "siggames/rational.h"

#include <cstdio>
#include <regex>
#include <sstream>

#include "siggames/errors.h"

namespace siggames {

Rational MakeRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  static const std::regex kPattern("-?[0-9]+(/[0-9]+)?");
  std::string s(text);
  if (!std::regex_match(s, kPattern)) {
    throw ParseError("", "not an exact rational: \"" + s + "\"");
  }
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw ParseError("", "not an exact rational: \"" + s + "\"");
  }
  if (r.get_den() == 0) throw ParseError("", "zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double ToDouble(const Rational& r) { return r.get_d(); }

std::string ToDecimal(const Rational& r, int digits) {
  // Round half away from zero at the requested digit.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpq_class scaled = abs(r) * scale;
  mpz_class q = scaled.get_num() / scaled.get_den();
  mpq_class frac = scaled - mpq_class(q);
  if (frac * 2 >= 1) q += 1;
  std::string digits_str = q.get_str();
  if (static_cast<int>(digits_str.size()) <= digits) {
    digits_str.insert(0, digits + 1 - digits_str.size(), '0');
  }
  std::string out = digits_str.substr(0, digits_str.size() - digits);
  if (digits > 0) out += "." + digits_str.substr(digits_str.size() - digits);
  if (r < 0 && q != 0) out.insert(0, "-");
  return out;
}

Rational Sum(const Distribution& d) {
  Rational total = 0;
  for (const Rational& p : d) total += p;
  return total;
}

bool IsDistribution(const Distribution& d) {
  for (const Rational& p : d) {
    if (p < 0) return false;
  }
  return !d.empty() && Sum(d) == 1;
}

Distribution UniformDistribution(int n) {
  return Distribution(n, MakeRational(1, n));
}

Distribution DiracDistribution(int n, int k) {
  Distribution d(n, Rational(0));
  d.at(k) = 1;
  return d;
}

std::string ToString(const Distribution& d) {
  std::string out = "(";
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) out += ", ";
    out += ToString(d[k]);
  }
  return out + ")";
}

}  // namespace siggames
