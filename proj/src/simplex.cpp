#include "odo/simplex.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace odo {

namespace {
constexpr double kEps = 1e-11;
}

// Tableau simplex with an artificial variable for phase 1. Column and row
// selection both break ties on the variable id, which prevents cycling on
// degenerate inputs.
LpResult simplex_maximize(const std::vector<std::vector<double>>& a,
                          const std::vector<double>& b,
                          const std::vector<double>& c,
                          std::size_t pivot_limit) {
  const int m = static_cast<int>(b.size());
  const int n = static_cast<int>(c.size());
  if (pivot_limit == 0) {
    pivot_limit = 2000 + 200 * static_cast<std::size_t>(m + n) * (m + n);
  }

  std::vector<int> nonbasic(n + 1);
  std::vector<int> basic(m);
  std::vector<std::vector<double>> d(m + 2, std::vector<double>(n + 2, 0.0));

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) d[i][j] = a[i][j];
    basic[i] = n + i;
    d[i][n] = -1.0;
    d[i][n + 1] = b[i];
  }
  for (int j = 0; j < n; ++j) {
    nonbasic[j] = j;
    d[m][j] = -c[j];
  }
  nonbasic[n] = -1;
  d[m + 1][n] = 1.0;

  std::size_t pivots = 0;

  auto pivot = [&](int r, int s) {
    ++pivots;
    double* pr = d[r].data();
    const double inv = 1.0 / pr[s];
    for (int i = 0; i < m + 2; ++i) {
      if (i != r && std::fabs(d[i][s]) > kEps) {
        double* pi = d[i].data();
        const double scaled = pi[s] * inv;
        for (int j = 0; j < n + 2; ++j) pi[j] -= pr[j] * scaled;
        pi[s] = pr[s] * scaled;
      }
    }
    for (int j = 0; j < n + 2; ++j) {
      if (j != s) pr[j] *= inv;
    }
    for (int i = 0; i < m + 2; ++i) {
      if (i != r) d[i][s] *= -inv;
    }
    pr[s] = inv;
    std::swap(basic[r], nonbasic[s]);
  };

  auto run = [&](int phase) -> bool {
    const int obj = m + phase - 1;
    for (;;) {
      if (pivots > pivot_limit) return false;
      int s = -1;
      for (int j = 0; j <= n; ++j) {
        if (nonbasic[j] == -phase) continue;
        if (s == -1 || std::make_pair(d[obj][j], nonbasic[j]) <
                           std::make_pair(d[obj][s], nonbasic[s])) {
          s = j;
        }
      }
      if (d[obj][s] >= -kEps) return true;
      int r = -1;
      for (int i = 0; i < m; ++i) {
        if (d[i][s] <= kEps) continue;
        if (r == -1 ||
            std::make_pair(d[i][n + 1] / d[i][s], basic[i]) <
                std::make_pair(d[r][n + 1] / d[r][s], basic[r])) {
          r = i;
        }
      }
      if (r == -1) return true;  // phase-2 caller interprets as unbounded
      pivot(r, s);
    }
  };

  LpResult result;

  int r = 0;
  for (int i = 1; i < m; ++i) {
    if (d[i][n + 1] < d[r][n + 1]) r = i;
  }
  if (m > 0 && d[r][n + 1] < -kEps) {
    pivot(r, n);
    if (!run(2)) {
      result.status = LpStatus::kPivotLimit;
      return result;
    }
    if (d[m + 1][n + 1] < -kEps) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    for (int i = 0; i < m; ++i) {
      if (basic[i] == -1) {
        int s = 0;
        for (int j = 1; j <= n; ++j) {
          if (std::make_pair(d[i][j], nonbasic[j]) <
              std::make_pair(d[i][s], nonbasic[s])) {
            s = j;
          }
        }
        pivot(i, s);
      }
    }
  }

  for (;;) {
    if (pivots > pivot_limit) {
      result.status = LpStatus::kPivotLimit;
      return result;
    }
    int s = -1;
    for (int j = 0; j <= n; ++j) {
      if (nonbasic[j] == -1) continue;
      if (s == -1 || std::make_pair(d[m][j], nonbasic[j]) <
                         std::make_pair(d[m][s], nonbasic[s])) {
        s = j;
      }
    }
    if (d[m][s] >= -kEps) break;
    int row = -1;
    for (int i = 0; i < m; ++i) {
      if (d[i][s] <= kEps) continue;
      if (row == -1 ||
          std::make_pair(d[i][n + 1] / d[i][s], basic[i]) <
              std::make_pair(d[row][n + 1] / d[row][s], basic[row])) {
        row = i;
      }
    }
    if (row == -1) {
      result.status = LpStatus::kUnbounded;
      return result;
    }
    pivot(row, s);
  }

  result.status = LpStatus::kOptimal;
  result.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basic[i] >= 0 && basic[i] < n) {
      result.x[static_cast<std::size_t>(basic[i])] = d[i][n + 1];
    }
  }
  result.objective = d[m][n + 1];
  return result;
}

}  // namespace odo
