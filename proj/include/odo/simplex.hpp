#pragma once

#include <cstddef>
#include <vector>

namespace odo {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kPivotLimit };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
};

// Dense two-phase simplex for
//     maximize c^T x   subject to   A x <= b,  x >= 0,
// with Bland-style (ratio, index) pivot tie-breaking so degenerate games
// (e.g. RPS) cannot cycle. `a` is row-major with b.size() rows and
// c.size() columns.
LpResult simplex_maximize(const std::vector<std::vector<double>>& a,
                          const std::vector<double>& b,
                          const std::vector<double>& c,
                          std::size_t pivot_limit = 0);

}  // namespace odo
