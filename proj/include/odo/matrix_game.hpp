#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "odo/rng.hpp"

namespace odo {

inline constexpr double kSimplexTol = 1e-9;   // simplex-membership tolerance
inline constexpr double kSupportTol = 1e-6;   // default support threshold
inline constexpr double kDefaultNeTol = 1e-8; // default NE solver tolerance

// Loss vector observed by a minimising player; produced from a PayoffMatrix
// and the opponent's mixed strategy, entries stay in [0,1].
using LossVector = std::vector<double>;

// Dense n x m matrix of normalised row-player losses in [0,1], row-major.
class PayoffMatrix {
 public:
  PayoffMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<double>& entries() const { return entries_; }

  // The column seat's game under the [0,1] loss convention:
  // B(j,i) = 1 - A(i,j). Running a minimiser on B plays the column seat of A.
  PayoffMatrix complement_transpose() const;

  PayoffMatrix submatrix(const std::vector<std::size_t>& row_ids,
                         const std::vector<std::size_t>& col_ids) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

// Probability vector over an indexed pure-strategy set. Construction checks
// non-negativity and unit sum within kSimplexTol.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy pure(std::size_t dim, std::size_t index);
  static MixedStrategy uniform(std::size_t dim);
  // Embeds probabilities given on a strategy subset into the full simplex,
  // zero mass elsewhere. `subset[i]` is the full-set index of weight i.
  static MixedStrategy embed(const std::vector<double>& weights,
                             const std::vector<std::size_t>& subset,
                             std::size_t full_dim);
  // Clamps tiny negatives and rescales to unit sum, then validates. Used for
  // solver output and accumulated averages.
  static MixedStrategy normalised(std::vector<double> weights);

  std::size_t dim() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  struct Unchecked {};
  MixedStrategy(std::vector<double> probs, Unchecked);

  std::vector<double> probs_;
};

// Indices with probability strictly above tol.
std::vector<std::size_t> support(const MixedStrategy& pi,
                                 double tol = kSupportTol);

// l = A c, the loss vector the row player observes against column play c.
LossVector loss_vector(const PayoffMatrix& a, const MixedStrategy& c);

// pi^T A c, clamped into [0,1] against round-off.
double expected_loss(const MixedStrategy& pi, const PayoffMatrix& a,
                     const MixedStrategy& c);

struct BestResponse {
  std::size_t index;
  double value;
};

// argmin of the loss vector; ties break to the lowest index.
BestResponse best_response(const LossVector& loss);

enum class OracleNoise {
  kAdversarial,  // worst admissible loss, ties to lowest index
  kRandom,       // uniform over the admissible set
};

// Any index whose loss is within eps of the minimum; `mode` picks which.
BestResponse epsilon_best_response(const LossVector& loss, double eps,
                                   OracleNoise mode, Rng& rng);

// max_j (pi^T A)_j - min_i (A c)_i. Zero exactly at a Nash equilibrium.
double exploitability(const PayoffMatrix& a, const MixedStrategy& pi,
                      const MixedStrategy& c);

struct JointSolution {
  MixedStrategy row_strategy;
  MixedStrategy col_strategy;
  double value;
  double exploitability;
};

// Bundles a strategy pair with its value and exploitability on `a`.
JointSolution make_joint_solution(const PayoffMatrix& a,
                                  const MixedStrategy& pi,
                                  const MixedStrategy& c);

// NE solver failed to reach the requested tolerance; carries the best
// iterate found so the caller can degrade gracefully.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& message, JointSolution best_iterate)
      : std::runtime_error(message), best(std::move(best_iterate)) {}

  JointSolution best;
};

// Minimax solution of the zero-sum game via the standard linear program.
// The result satisfies exploitability <= tol.
JointSolution solve_zero_sum_ne(const PayoffMatrix& a,
                                double tol = kDefaultNeTol);

}  // namespace odo
