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

#include "siggames/matrix_game.h"

#include <stdexcept>

#include "siggames/lp.h"

namespace siggames {

MatrixGame::MatrixGame(int rows, int cols)
    : rows_(rows), cols_(cols), payoff_(rows * cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("empty game");
}

MatrixGame::MatrixGame(const std::vector<std::vector<Rational>>& payoff)
    : MatrixGame(static_cast<int>(payoff.size()),
                 payoff.empty() ? 0 : static_cast<int>(payoff[0].size())) {
  for (int r = 0; r < rows_; ++r) {
    if (static_cast<int>(payoff[r].size()) != cols_) {
      throw std::invalid_argument("payoff matrix is not rectangular");
    }
    for (int c = 0; c < cols_; ++c) at(r, c) = payoff[r][c];
  }
}

MatrixGame MatrixGame::NegatedTranspose() const {
  MatrixGame out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(c, r) = -at(r, c);
  }
  return out;
}

namespace {

bool PureSaddle(const MatrixGame& g, MatrixGameSolution* sol) {
  for (int r = 0; r < g.rows(); ++r) {
    int cmin = 0;
    for (int c = 1; c < g.cols(); ++c) {
      if (g.at(r, c) < g.at(r, cmin)) cmin = c;
    }
    bool is_max = true;
    for (int r2 = 0; r2 < g.rows() && is_max; ++r2) {
      if (g.at(r2, cmin) > g.at(r, cmin)) is_max = false;
    }
    if (is_max) {
      sol->value = g.at(r, cmin);
      sol->row_strategy = DiracDistribution(g.rows(), r);
      sol->col_strategy = DiracDistribution(g.cols(), cmin);
      return true;
    }
  }
  return false;
}

}  // namespace

MatrixGameSolution SolveMatrixGame(const MatrixGame& game) {
  MatrixGameSolution sol;
  if (PureSaddle(game, &sol)) return sol;

  // max v  s.t.  v - sum_r x_r A[r][c] <= 0 for all c,  sum_r x_r = 1.
  LinearProgram lp;
  for (int r = 0; r < game.rows(); ++r) lp.AddVariable(0);
  const int v = lp.AddVariable(1, /*free=*/true);
  for (int c = 0; c < game.cols(); ++c) {
    std::vector<std::pair<int, Rational>> coeffs;
    for (int r = 0; r < game.rows(); ++r) {
      if (sgn(game.at(r, c)) != 0) coeffs.emplace_back(r, -game.at(r, c));
    }
    coeffs.emplace_back(v, 1);
    lp.AddRow(std::move(coeffs), Sense::kLessEqual, 0);
  }
  std::vector<std::pair<int, Rational>> simplex;
  for (int r = 0; r < game.rows(); ++r) simplex.emplace_back(r, 1);
  lp.AddRow(std::move(simplex), Sense::kEqual, 1);

  const LpResult res = SolveLp(lp);
  if (res.status != LpStatus::kOptimal) {
    throw std::logic_error("matrix game LP not optimal");
  }
  sol.value = res.objective;
  sol.row_strategy.assign(res.primal.begin(), res.primal.begin() + game.rows());
  sol.col_strategy.assign(res.dual.begin(), res.dual.begin() + game.cols());
  return sol;
}

Rational BestResponseValue(const MatrixGame& game, const Distribution& mixed,
                           Player side) {
  const bool rows = side == Player::kOne;
  const int n = rows ? game.rows() : game.cols();
  const int m = rows ? game.cols() : game.rows();
  if (static_cast<int>(mixed.size()) != n) {
    throw std::invalid_argument("mixed strategy has wrong dimension");
  }
  Rational best;
  for (int b = 0; b < m; ++b) {
    Rational s = 0;
    for (int a = 0; a < n; ++a) {
      if (sgn(mixed[a]) == 0) continue;
      s += mixed[a] * (rows ? game.at(a, b) : game.at(b, a));
    }
    if (b == 0 || (rows ? s < best : s > best)) best = s;
  }
  return best;
}

bool CertifySolution(const MatrixGame& game, const MatrixGameSolution& sol,
                     std::string* why) {
  auto fail = [why](const std::string& text) {
    if (why) *why = text;
    return false;
  };
  if (static_cast<int>(sol.row_strategy.size()) != game.rows() ||
      !IsDistribution(sol.row_strategy)) {
    return fail("row strategy is not a distribution");
  }
  if (static_cast<int>(sol.col_strategy.size()) != game.cols() ||
      !IsDistribution(sol.col_strategy)) {
    return fail("column strategy is not a distribution");
  }
  if (BestResponseValue(game, sol.row_strategy, Player::kOne) < sol.value) {
    return fail("row strategy guarantees less than the value");
  }
  if (BestResponseValue(game, sol.col_strategy, Player::kTwo) > sol.value) {
    return fail("column strategy concedes more than the value");
  }
  return true;
}

std::string ToString(const MatrixGame& game) {
  std::string out = "[";
  for (int r = 0; r < game.rows(); ++r) {
    out += r ? ",[" : "[";
    for (int c = 0; c < game.cols(); ++c) {
      out += (c ? "," : "") + ToString(game.at(r, c));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace siggames
