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

#ifndef SIGGAMES_MATRIX_GAME_H_
#define SIGGAMES_MATRIX_GAME_H_

#include <string>
#include <vector>

#include "siggames/game_spec.h"
#include "siggames/rational.h"

namespace siggames {

// Zero-sum matrix game; the row player maximizes.
class MatrixGame {
 public:
  MatrixGame(int rows, int cols);
  explicit MatrixGame(const std::vector<std::vector<Rational>>& payoff);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int r, int c) const { return payoff_[r * cols_ + c]; }
  Rational& at(int r, int c) { return payoff_[r * cols_ + c]; }

  MatrixGame NegatedTranspose() const;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> payoff_;
};

struct MatrixGameSolution {
  Rational value;
  Distribution row_strategy;
  Distribution col_strategy;
};

// Exact value and optimal mixed strategies. Pure saddle points and games
// with a single row or column are solved directly, everything else by the
// exact simplex.
MatrixGameSolution SolveMatrixGame(const MatrixGame& game);

// Guarantee of a mixed strategy: min over columns of x^T A when `side` is
// player 1 (x over rows), max over rows of A y when `side` is player 2.
Rational BestResponseValue(const MatrixGame& game, const Distribution& mixed,
                           Player side);

// Both strategies are distributions and guarantee the value exactly.
bool CertifySolution(const MatrixGame& game, const MatrixGameSolution& sol,
                     std::string* why = nullptr);

std::string ToString(const MatrixGame& game);

}  // namespace siggames

#endif  // SIGGAMES_MATRIX_GAME_H_
