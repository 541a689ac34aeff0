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

#include "siggames/lp.h"

#include <sstream>
#include <stdexcept>

#include "siggames/errors.h"

namespace siggames {

int LinearProgram::AddVariable(const Rational& cost, bool free) {
  objective.push_back(cost);
  is_free.push_back(free);
  return num_vars() - 1;
}

int LinearProgram::AddRow(std::vector<std::pair<int, Rational>> coeffs,
                          Sense sense, const Rational& rhs) {
  for (const auto& [k, a] : coeffs) {
    if (k < 0 || k >= num_vars()) {
      throw std::invalid_argument("row refers to an unknown variable");
    }
  }
  rows.push_back({std::move(coeffs), sense, rhs});
  return num_rows() - 1;
}

std::string StatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

namespace {

enum class ColumnKind { kPositive, kNegative, kSlack, kSurplus, kArtificial };

class Tableau {
 public:
  Tableau(const LinearProgram& lp, const LpOptions& options)
      : lp_(lp), options_(options) {
    const int m = lp.num_rows();
    for (int k = 0; k < lp.num_vars(); ++k) {
      pos_col_.push_back(AddColumn(ColumnKind::kPositive, k));
      neg_col_.push_back(lp.is_free[k] ? AddColumn(ColumnKind::kNegative, k)
                                       : -1);
    }
    flipped_.assign(m, false);
    id_col_.assign(m, -1);
    std::vector<int> surplus(m, -1);
    for (int r = 0; r < m; ++r) {
      Sense sense = lp.rows[r].sense;
      if (lp.rows[r].rhs < 0) {
        flipped_[r] = true;
        if (sense == Sense::kLessEqual) {
          sense = Sense::kGreaterEqual;
        } else if (sense == Sense::kGreaterEqual) {
          sense = Sense::kLessEqual;
        }
      }
      if (sense == Sense::kLessEqual) {
        id_col_[r] = AddColumn(ColumnKind::kSlack, r);
      } else {
        if (sense == Sense::kGreaterEqual) {
          surplus[r] = AddColumn(ColumnKind::kSurplus, r);
        }
        id_col_[r] = AddColumn(ColumnKind::kArtificial, r);
      }
    }
    n_ = static_cast<int>(kind_.size());
    rows_.assign(m + 2, std::vector<Rational>(n_ + 1));
    basis_.assign(m, -1);
    for (int r = 0; r < m; ++r) {
      std::vector<Rational>& row = rows_[r];
      const int sign = flipped_[r] ? -1 : 1;
      for (const auto& [k, a] : lp.rows[r].coeffs) {
        row[pos_col_[k]] += sign * a;
        if (neg_col_[k] >= 0) row[neg_col_[k]] -= sign * a;
      }
      row[n_] = sign * lp.rows[r].rhs;
      row[id_col_[r]] = 1;
      if (surplus[r] >= 0) row[surplus[r]] = -1;
      basis_[r] = id_col_[r];
    }
    // Phase 2 objective row: z_k = -c_k for the initial slack basis.
    std::vector<Rational>& z2 = rows_[m + 1];
    for (int k = 0; k < lp.num_vars(); ++k) {
      z2[pos_col_[k]] = -lp.objective[k];
      if (neg_col_[k] >= 0) z2[neg_col_[k]] = lp.objective[k];
    }
    // Phase 1 maximizes minus the sum of artificials.
    std::vector<Rational>& z1 = rows_[m];
    for (int r = 0; r < m; ++r) {
      if (kind_[id_col_[r]] != ColumnKind::kArtificial) continue;
      for (int c = 0; c <= n_; ++c) {
        if (c != id_col_[r] && sgn(rows_[r][c]) != 0) z1[c] -= rows_[r][c];
      }
    }
  }

  LpResult Solve() {
    const int m = lp_.num_rows();
    LpResult result;
    if (!Run(m)) throw std::logic_error("phase 1 cannot be unbounded");
    if (sgn(rows_[m][n_]) < 0) {
      result.status = LpStatus::kInfeasible;
      result.farkas.resize(m);
      for (int r = 0; r < m; ++r) {
        Rational w = rows_[m][id_col_[r]];
        if (kind_[id_col_[r]] == ColumnKind::kArtificial) w -= 1;
        result.farkas[r] = flipped_[r] ? Rational(-w) : w;
      }
      result.pivots = pivots_;
      return result;
    }
    phase_one_done_ = true;
    DriveOutArtificials();
    const int entering = Run(m + 1) ? -1 : last_entering_;
    result.primal = Primal();
    result.pivots = pivots_;
    if (entering >= 0) {
      result.status = LpStatus::kUnbounded;
      std::vector<Rational> dir(n_);
      dir[entering] = 1;
      for (int r = 0; r < m; ++r) dir[basis_[r]] = -rows_[r][entering];
      result.ray = ToOriginal(dir);
      return result;
    }
    result.status = LpStatus::kOptimal;
    result.objective = rows_[m + 1][n_];
    result.dual.resize(m);
    for (int r = 0; r < m; ++r) {
      const Rational& w = rows_[m + 1][id_col_[r]];
      result.dual[r] = flipped_[r] ? Rational(-w) : w;
    }
    return result;
  }

 private:
  int AddColumn(ColumnKind kind, int owner) {
    kind_.push_back(kind);
    owner_.push_back(owner);
    return static_cast<int>(kind_.size()) - 1;
  }

  // Runs simplex iterations on objective row `z`. Returns false when the
  // objective is unbounded along column last_entering_.
  bool Run(int z) {
    const int m = lp_.num_rows();
    int streak = 0;
    while (true) {
      const std::vector<Rational>& zrow = rows_[z];
      const bool bland = streak >= options_.degenerate_streak;
      int enter = -1;
      for (int c = 0; c < n_; ++c) {
        if (kind_[c] == ColumnKind::kArtificial) continue;
        if (sgn(zrow[c]) >= 0) continue;
        if (enter < 0) {
          enter = c;
          if (bland) break;
        } else if (zrow[c] < zrow[enter]) {
          enter = c;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m; ++r) {
        const Rational& a = rows_[r][enter];
        if (sgn(a) <= 0) continue;
        Rational ratio = rows_[r][n_] / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) {
        last_entering_ = enter;
        return false;
      }
      streak = sgn(best) == 0 ? streak + 1 : 0;
      Pivot(leave, enter);
    }
  }

  void Pivot(int r, int k) {
    if (++pivots_ > options_.max_pivots) {
      throw ResourceError(0, "simplex pivot limit of " +
                                 std::to_string(options_.max_pivots) +
                                 " reached");
    }
    if (options_.trace) options_.trace(Dump(r, k));
    std::vector<Rational>& prow = rows_[r];
    std::vector<int> nz;
    for (int c = 0; c <= n_; ++c) {
      if (sgn(prow[c]) != 0) nz.push_back(c);
    }
    const Rational piv = prow[k];
    for (int c : nz) prow[c] /= piv;
    Rational f, t;
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (i == r) continue;
      if (phase_one_done_ && i == lp_.num_rows()) continue;
      std::vector<Rational>& row = rows_[i];
      if (sgn(row[k]) == 0) continue;
      f = row[k];
      for (int c : nz) {
        t = f * prow[c];
        row[c] -= t;
      }
    }
    basis_[r] = k;
  }

  void DriveOutArtificials() {
    const int m = lp_.num_rows();
    for (int r = 0; r < m; ++r) {
      if (kind_[basis_[r]] != ColumnKind::kArtificial) continue;
      for (int c = 0; c < n_; ++c) {
        if (kind_[c] != ColumnKind::kArtificial && sgn(rows_[r][c]) != 0) {
          Pivot(r, c);
          break;
        }
      }
    }
  }

  std::vector<Rational> Primal() const {
    std::vector<Rational> col(n_);
    for (int r = 0; r < lp_.num_rows(); ++r) col[basis_[r]] = rows_[r][n_];
    return ToOriginal(col);
  }

  std::vector<Rational> ToOriginal(const std::vector<Rational>& col) const {
    std::vector<Rational> x(lp_.num_vars());
    for (int k = 0; k < lp_.num_vars(); ++k) {
      x[k] = col[pos_col_[k]];
      if (neg_col_[k] >= 0) x[k] -= col[neg_col_[k]];
    }
    return x;
  }

  std::string Dump(int r, int k) const {
    std::ostringstream out;
    out << "pivot row " << r << " col " << k << "\n";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i < basis_.size()) {
        out << "x" << basis_[i] << "\t|";
      } else {
        out << (i == basis_.size() ? "z1" : "z2") << "\t|";
      }
      for (int c = 0; c <= n_; ++c) {
        out << " " << (c == n_ ? "| " : "") << ToString(rows_[i][c]);
      }
      out << "\n";
    }
    return out.str();
  }

  const LinearProgram& lp_;
  const LpOptions& options_;
  std::vector<ColumnKind> kind_;
  std::vector<int> owner_;
  std::vector<int> pos_col_, neg_col_, id_col_;
  std::vector<bool> flipped_;
  int n_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  int pivots_ = 0;
  int last_entering_ = -1;
  bool phase_one_done_ = false;
};

Rational RowDot(const LinearProgram::Row& row, const std::vector<Rational>& x) {
  Rational s = 0;
  for (const auto& [k, a] : row.coeffs) s += a * x[k];
  return s;
}

bool Fail(std::string* why, const std::string& text) {
  if (why) *why = text;
  return false;
}

bool WithinSense(Sense sense, const Rational& lhs, const Rational& rhs) {
  switch (sense) {
    case Sense::kLessEqual: return lhs <= rhs;
    case Sense::kGreaterEqual: return lhs >= rhs;
    case Sense::kEqual: return lhs == rhs;
  }
  return false;
}

bool DualSignOk(Sense sense, const Rational& y) {
  switch (sense) {
    case Sense::kLessEqual: return y >= 0;
    case Sense::kGreaterEqual: return y <= 0;
    case Sense::kEqual: return true;
  }
  return false;
}

bool CheckFeasible(const LinearProgram& lp, const std::vector<Rational>& x,
                   std::string* why) {
  if (static_cast<int>(x.size()) != lp.num_vars()) {
    return Fail(why, "primal has wrong size");
  }
  for (int k = 0; k < lp.num_vars(); ++k) {
    if (!lp.is_free[k] && x[k] < 0) {
      return Fail(why, "x" + std::to_string(k) + " negative");
    }
  }
  for (int r = 0; r < lp.num_rows(); ++r) {
    if (!WithinSense(lp.rows[r].sense, RowDot(lp.rows[r], x),
                     lp.rows[r].rhs)) {
      return Fail(why, "row " + std::to_string(r) + " violated");
    }
  }
  return true;
}

// Column sums y^T A_k.
std::vector<Rational> Transposed(const LinearProgram& lp,
                                 const std::vector<Rational>& y) {
  std::vector<Rational> out(lp.num_vars());
  for (int r = 0; r < lp.num_rows(); ++r) {
    if (sgn(y[r]) == 0) continue;
    for (const auto& [k, a] : lp.rows[r].coeffs) out[k] += y[r] * a;
  }
  return out;
}

}  // namespace

LpResult SolveLp(const LinearProgram& lp, const LpOptions& options) {
  for (const auto& row : lp.rows) {
    for (const auto& [k, a] : row.coeffs) {
      if (k < 0 || k >= lp.num_vars()) {
        throw std::invalid_argument("row refers to an unknown variable");
      }
    }
  }
  if (lp.is_free.size() != lp.objective.size()) {
    throw std::invalid_argument("objective and bounds differ in size");
  }
  Tableau tableau(lp, options);
  return tableau.Solve();
}

bool VerifyLpResult(const LinearProgram& lp, const LpResult& result,
                    std::string* why) {
  switch (result.status) {
    case LpStatus::kOptimal: {
      if (!CheckFeasible(lp, result.primal, why)) return false;
      if (static_cast<int>(result.dual.size()) != lp.num_rows()) {
        return Fail(why, "dual has wrong size");
      }
      for (int r = 0; r < lp.num_rows(); ++r) {
        if (!DualSignOk(lp.rows[r].sense, result.dual[r])) {
          return Fail(why, "dual y" + std::to_string(r) + " has wrong sign");
        }
      }
      const std::vector<Rational> yta = Transposed(lp, result.dual);
      Rational primal_obj = 0;
      for (int k = 0; k < lp.num_vars(); ++k) {
        primal_obj += lp.objective[k] * result.primal[k];
        const bool ok = lp.is_free[k] ? yta[k] == lp.objective[k]
                                      : yta[k] >= lp.objective[k];
        if (!ok) {
          return Fail(why, "dual constraint of x" + std::to_string(k) +
                               " violated");
        }
      }
      Rational dual_obj = 0;
      for (int r = 0; r < lp.num_rows(); ++r) {
        dual_obj += result.dual[r] * lp.rows[r].rhs;
      }
      if (primal_obj != dual_obj || primal_obj != result.objective) {
        return Fail(why, "primal and dual objectives differ");
      }
      return true;
    }
    case LpStatus::kInfeasible: {
      const auto& y = result.farkas;
      if (static_cast<int>(y.size()) != lp.num_rows()) {
        return Fail(why, "certificate has wrong size");
      }
      Rational yb = 0;
      for (int r = 0; r < lp.num_rows(); ++r) {
        if (!DualSignOk(lp.rows[r].sense, y[r])) {
          return Fail(why, "certificate sign pattern violated");
        }
        yb += y[r] * lp.rows[r].rhs;
      }
      const std::vector<Rational> yta = Transposed(lp, y);
      for (int k = 0; k < lp.num_vars(); ++k) {
        const bool ok = lp.is_free[k] ? sgn(yta[k]) == 0 : sgn(yta[k]) >= 0;
        if (!ok) return Fail(why, "certificate column inequality violated");
      }
      if (sgn(yb) >= 0) return Fail(why, "certificate has y^T b >= 0");
      return true;
    }
    case LpStatus::kUnbounded: {
      if (!CheckFeasible(lp, result.primal, why)) return false;
      const auto& d = result.ray;
      if (static_cast<int>(d.size()) != lp.num_vars()) {
        return Fail(why, "ray has wrong size");
      }
      Rational gain = 0;
      for (int k = 0; k < lp.num_vars(); ++k) {
        if (!lp.is_free[k] && d[k] < 0) {
          return Fail(why, "ray leaves the nonnegative orthant");
        }
        gain += lp.objective[k] * d[k];
      }
      for (const auto& row : lp.rows) {
        if (!WithinSense(row.sense, RowDot(row, d), Rational(0))) {
          return Fail(why, "ray leaves the feasible region");
        }
      }
      if (sgn(gain) <= 0) return Fail(why, "ray does not improve");
      return true;
    }
  }
  return false;
}

}  // namespace siggames
