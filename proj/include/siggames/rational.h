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

#ifndef SIGGAMES_RATIONAL_H_
#define SIGGAMES_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace siggames {

// Exact fraction backed by GMP. Results of arithmetic are always in lowest
// terms; values built from a numerator/denominator pair must go through
// MakeRational or ParseRational.
using Rational = mpq_class;

// A probability vector over an ordered list of alternatives (actions,
// states, ...). Index k is the k-th declared alternative.
using Distribution = std::vector<Rational>;

Rational MakeRational(long num, long den);

// Accepts "p/q" or "p" with an optional leading '-'; q must be positive.
// Throws ParseError otherwise.
Rational ParseRational(std::string_view text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string ToString(const Rational& r);

double ToDouble(const Rational& r);

// Fixed-point decimal rendering, for display only.
std::string ToDecimal(const Rational& r, int digits = 6);

Rational Sum(const Distribution& d);

// Nonnegative entries summing exactly to one.
bool IsDistribution(const Distribution& d);

Distribution UniformDistribution(int n);
Distribution DiracDistribution(int n, int k);

std::string ToString(const Distribution& d);

}  // namespace siggames

#endif  // SIGGAMES_RATIONAL_H_
