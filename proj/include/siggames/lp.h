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

#ifndef SIGGAMES_LP_H_
#define SIGGAMES_LP_H_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "siggames/rational.h"

namespace siggames {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

// maximize c^T x subject to rows, x_k >= 0 unless declared free.
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, Rational>> coeffs;
    Sense sense = Sense::kLessEqual;
    Rational rhs;
  };

  std::vector<Rational> objective;
  std::vector<bool> is_free;
  std::vector<Row> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int AddVariable(const Rational& cost, bool free = false);
  int AddRow(std::vector<std::pair<int, Rational>> coeffs, Sense sense,
             const Rational& rhs);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string StatusName(LpStatus status);

// Dual convention for the maximization above: y_r >= 0 on <= rows, y_r <= 0
// on >= rows, free on = rows; y^T A_k >= c_k for nonnegative x_k and
// y^T A_k = c_k for free x_k.
struct LpResult {
  LpStatus status = LpStatus::kOptimal;
  Rational objective;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  // kInfeasible: y with the dual sign pattern, y^T A_k >= 0 (= 0 for free
  // columns) and y^T b < 0.
  std::vector<Rational> farkas;
  // kUnbounded: a feasible point `primal` and a direction with A d within
  // the row senses' recession cone and c^T d > 0.
  std::vector<Rational> ray;
  int pivots = 0;
};

struct LpOptions {
  int max_pivots = 5000000;
  // Consecutive degenerate pivots after which pricing switches from the
  // largest reduced cost to Bland's smallest-index rule.
  int degenerate_streak = 50;
  // Receives a text dump of the tableau before every pivot.
  std::function<void(const std::string&)> trace;
};

// Exact two-phase simplex. Throws ResourceError when max_pivots is hit.
LpResult SolveLp(const LinearProgram& lp, const LpOptions& options = {});

// Exact check of whatever certificate `result` carries: feasibility, dual
// feasibility and equal objectives for kOptimal; the Farkas inequalities for
// kInfeasible; feasibility of the point and the ray for kUnbounded.
bool VerifyLpResult(const LinearProgram& lp, const LpResult& result,
                    std::string* why = nullptr);

}  // namespace siggames

#endif  // SIGGAMES_LP_H_
