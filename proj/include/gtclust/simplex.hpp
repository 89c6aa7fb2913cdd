#pragma once

#include <limits>
#include <vector>

namespace gtclust {

enum class RowSense { GreaterEqual, LessEqual, Equal };

struct LpRow {
  std::vector<double> coeffs;
  RowSense sense = RowSense::GreaterEqual;
  double rhs = 0.0;
};

// Per-variable bounds. lower = -infinity makes the variable free; a finite
// upper bound is honored by an extra internal row.
struct VarBound {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

struct LinearProgram {
  std::vector<double> objective;  // one coefficient per variable
  bool maximize = false;
  std::vector<LpRow> rows;
  std::vector<VarBound> bounds;  // defaults to x >= 0 when left empty
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;     // meaningful only when Optimal
  double objective = 0.0;    // in the caller's sense (min or max)
};

// Dense two-phase simplex in dictionary form, Bland's rule for both the
// entering and leaving choices so cycling is impossible. Suited to the small
// programs this toolkit builds (thousands of rows, a handful of variables).
// Throws Error on malformed input and LpError on numerical breakdown.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace gtclust
