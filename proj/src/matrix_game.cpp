#include "odo/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "odo/errors.hpp"
#include "odo/simplex.hpp"

namespace odo {

PayoffMatrix::PayoffMatrix(std::size_t rows, std::size_t cols,
                           std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(rows_ >= 1 && cols_ >= 1, "PayoffMatrix: empty dimension");
  require(entries_.size() == rows_ * cols_,
          "PayoffMatrix: entry count does not match rows*cols");
  for (double v : entries_) {
    require(std::isfinite(v) && v >= 0.0 && v <= 1.0,
            "PayoffMatrix: entry outside [0,1]");
  }
}

PayoffMatrix PayoffMatrix::complement_transpose() const {
  std::vector<double> out(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out[j * rows_ + i] = 1.0 - entries_[i * cols_ + j];
    }
  }
  return PayoffMatrix(cols_, rows_, std::move(out));
}

PayoffMatrix PayoffMatrix::submatrix(
    const std::vector<std::size_t>& row_ids,
    const std::vector<std::size_t>& col_ids) const {
  require(!row_ids.empty() && !col_ids.empty(),
          "submatrix: empty index list");
  std::vector<double> out;
  out.reserve(row_ids.size() * col_ids.size());
  for (std::size_t i : row_ids) {
    require(i < rows_, "submatrix: row index out of range");
    for (std::size_t j : col_ids) {
      require(j < cols_, "submatrix: column index out of range");
      out.push_back(entries_[i * cols_ + j]);
    }
  }
  return PayoffMatrix(row_ids.size(), col_ids.size(), std::move(out));
}

MixedStrategy::MixedStrategy(std::vector<double> probs)
    : probs_(std::move(probs)) {
  require(!probs_.empty(), "MixedStrategy: empty");
  double sum = 0.0;
  for (double p : probs_) {
    require(std::isfinite(p) && p >= 0.0,
            "MixedStrategy: negative or non-finite probability");
    sum += p;
  }
  require(std::fabs(sum - 1.0) <= kSimplexTol,
          "MixedStrategy: probabilities sum to " + std::to_string(sum));
}

MixedStrategy::MixedStrategy(std::vector<double> probs, Unchecked)
    : probs_(std::move(probs)) {}

MixedStrategy MixedStrategy::pure(std::size_t dim, std::size_t index) {
  require(dim >= 1, "MixedStrategy::pure: empty");
  require(index < dim, "MixedStrategy::pure: index out of range");
  std::vector<double> p(dim, 0.0);
  p[index] = 1.0;
  return MixedStrategy(std::move(p), Unchecked{});
}

MixedStrategy MixedStrategy::uniform(std::size_t dim) {
  require(dim >= 1, "MixedStrategy::uniform: empty");
  return MixedStrategy(std::vector<double>(dim, 1.0 / static_cast<double>(dim)),
                       Unchecked{});
}

MixedStrategy MixedStrategy::embed(const std::vector<double>& weights,
                                   const std::vector<std::size_t>& subset,
                                   std::size_t full_dim) {
  require(weights.size() == subset.size(),
          "MixedStrategy::embed: weight/index size mismatch");
  std::vector<double> p(full_dim, 0.0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    require(subset[i] < full_dim, "MixedStrategy::embed: index out of range");
    p[subset[i]] = weights[i];
  }
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::normalised(std::vector<double> weights) {
  require(!weights.empty(), "MixedStrategy::normalised: empty");
  double sum = 0.0;
  for (double& w : weights) {
    require(std::isfinite(w), "MixedStrategy::normalised: non-finite weight");
    if (w < 0.0) {
      require(w > -kSimplexTol,
              "MixedStrategy::normalised: negative weight beyond tolerance");
      w = 0.0;
    }
    sum += w;
  }
  require(sum > 0.0, "MixedStrategy::normalised: zero mass");
  for (double& w : weights) w /= sum;
  return MixedStrategy(std::move(weights), Unchecked{});
}

std::vector<std::size_t> support(const MixedStrategy& pi, double tol) {
  require(tol >= 0.0, "support: negative tolerance");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pi.dim(); ++i) {
    if (pi[i] > tol) out.push_back(i);
  }
  return out;
}

LossVector loss_vector(const PayoffMatrix& a, const MixedStrategy& c) {
  require(c.dim() == a.cols(), "loss_vector: strategy/matrix size mismatch");
  // Only columns with mass contribute; opponents with small effective sets
  // keep this much cheaper than a dense product.
  std::vector<std::size_t> nz;
  nz.reserve(c.dim());
  for (std::size_t j = 0; j < c.dim(); ++j) {
    if (c[j] != 0.0) nz.push_back(j);
  }
  const std::vector<double>& e = a.entries();
  LossVector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* row = e.data() + i * a.cols();
    double s = 0.0;
    for (std::size_t j : nz) s += row[j] * c[j];
    out[i] = s;
  }
  return out;
}

double expected_loss(const MixedStrategy& pi, const PayoffMatrix& a,
                     const MixedStrategy& c) {
  require(pi.dim() == a.rows(), "expected_loss: row strategy size mismatch");
  require(c.dim() == a.cols(), "expected_loss: column strategy size mismatch");
  const std::vector<double>& e = a.entries();
  double total = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (pi[i] == 0.0) continue;
    const double* row = e.data() + i * a.cols();
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * c[j];
    total += pi[i] * s;
  }
  return std::clamp(total, 0.0, 1.0);
}

BestResponse best_response(const LossVector& loss) {
  require(!loss.empty(), "best_response: empty loss vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < loss.size(); ++i) {
    if (loss[i] < loss[best]) best = i;
  }
  return {best, loss[best]};
}

BestResponse epsilon_best_response(const LossVector& loss, double eps,
                                   OracleNoise mode, Rng& rng) {
  require(eps >= 0.0, "epsilon_best_response: negative epsilon");
  const BestResponse exact = best_response(loss);
  if (eps == 0.0) return exact;
  const double cutoff = exact.value + eps;
  if (mode == OracleNoise::kAdversarial) {
    std::size_t pick = exact.index;
    for (std::size_t i = 0; i < loss.size(); ++i) {
      if (loss[i] <= cutoff && loss[i] > loss[pick]) pick = i;
    }
    return {pick, loss[pick]};
  }
  std::vector<std::size_t> admissible;
  for (std::size_t i = 0; i < loss.size(); ++i) {
    if (loss[i] <= cutoff) admissible.push_back(i);
  }
  const std::size_t pick = admissible[uniform_index(rng, admissible.size())];
  return {pick, loss[pick]};
}

double exploitability(const PayoffMatrix& a, const MixedStrategy& pi,
                      const MixedStrategy& c) {
  require(pi.dim() == a.rows(), "exploitability: row strategy size mismatch");
  require(c.dim() == a.cols(),
          "exploitability: column strategy size mismatch");
  const std::vector<double>& e = a.entries();
  double best_col = -1.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (pi[i] != 0.0) s += pi[i] * e[i * a.cols() + j];
    }
    best_col = std::max(best_col, s);
  }
  double best_row = 2.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* row = e.data() + i * a.cols();
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * c[j];
    best_row = std::min(best_row, s);
  }
  return best_col - best_row;
}

JointSolution make_joint_solution(const PayoffMatrix& a,
                                  const MixedStrategy& pi,
                                  const MixedStrategy& c) {
  return JointSolution{pi, c, expected_loss(pi, a, c),
                       exploitability(a, pi, c)};
}

JointSolution solve_zero_sum_ne(const PayoffMatrix& a, double tol) {
  require(tol > 0.0, "solve_zero_sum_ne: tolerance must be positive");
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();

  // Shift entries into [1,2] so the game value is strictly positive, then
  // use the classic reduction: the row player solves
  //   max sum(x)  s.t.  A'^T x <= 1, x >= 0,   pi = x / sum(x),
  // and the column player the symmetric program on -A'.
  std::vector<std::vector<double>> row_constraints(
      m, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      row_constraints[j][i] = a(i, j) + 1.0;
    }
  }
  const LpResult row_lp =
      simplex_maximize(row_constraints, std::vector<double>(m, 1.0),
                       std::vector<double>(n, 1.0));

  std::vector<std::vector<double>> col_constraints(
      n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      col_constraints[i][j] = -(a(i, j) + 1.0);
    }
  }
  const LpResult col_lp =
      simplex_maximize(col_constraints, std::vector<double>(n, -1.0),
                       std::vector<double>(m, -1.0));

  const auto fallback = [&]() {
    return make_joint_solution(a, MixedStrategy::uniform(n),
                               MixedStrategy::uniform(m));
  };
  if (row_lp.status != LpStatus::kOptimal || row_lp.objective <= 0.0) {
    throw NonConvergenceError("solve_zero_sum_ne: row LP did not converge",
                              fallback());
  }
  if (col_lp.status != LpStatus::kOptimal || col_lp.objective >= 0.0) {
    throw NonConvergenceError("solve_zero_sum_ne: column LP did not converge",
                              fallback());
  }

  const double row_value = 1.0 / row_lp.objective - 1.0;
  const double col_value = -1.0 / col_lp.objective - 1.0;

  JointSolution solution = make_joint_solution(
      a, MixedStrategy::normalised(row_lp.x),
      MixedStrategy::normalised(col_lp.x));
  if (std::fabs(row_value - col_value) > tol ||
      solution.exploitability > tol) {
    throw NonConvergenceError(
        "solve_zero_sum_ne: solution misses tolerance " + std::to_string(tol),
        solution);
  }
  return solution;
}

}  // namespace odo
