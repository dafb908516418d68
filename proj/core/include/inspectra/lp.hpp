#pragma once

#include <limits>
#include <vector>

namespace inspectra {

inline constexpr double kLpInf = std::numeric_limits<double>::infinity();

enum class LpSense { kMaximize, kMinimize };
enum class RowSense { kLessEqual, kEqual, kGreaterEqual };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure };

// Dense LP in row form. Variable bounds default to [0, +inf); a lower bound
// of -inf makes the variable free. Finite upper bounds are honored through
// internal rows.
struct LpProblem {
  LpSense sense = LpSense::kMaximize;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> row_sense;
  std::vector<double> rhs;
  std::vector<double> lower;  // optional; empty means all zeros
  std::vector<double> upper;  // optional; empty means all +inf

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
};

// Dual convention: at optimality, objective == dual . rhs (+ reduced-cost
// terms of variables pinned at finite nonzero bounds). For a maximization,
// duals of <= rows are >= 0 and duals of >= rows are <= 0; minimization
// flips both signs. Equality rows are unrestricted.
struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> primal;
  std::vector<double> dual;
  int iterations = 0;
};

// Revised simplex, dense LU basis refactorized every 50 pivots, Dantzig
// pricing with a permanent switch to Bland's rule after 1000 degenerate
// pivots. Pivot tolerance 1e-9. Deterministic for identical input.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace inspectra
