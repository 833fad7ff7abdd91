#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "odo/matrix_game.hpp"

namespace odo {

// Protocol shared by loss-feedback learners: play strategy(), receive the
// loss vector for that round, observe() it to advance.
class OnlineLearner {
 public:
  virtual ~OnlineLearner() = default;

  virtual const MixedStrategy& strategy() const = 0;
  virtual void observe(const LossVector& loss) = 0;
  virtual std::size_t dim() const = 0;

  // Size of the strategy set the learner currently mixes over.
  virtual std::size_t active_set_size() const { return dim(); }
  // Full-strategy-set best-response computations performed so far.
  virtual std::size_t oracle_calls() const { return 0; }
};

enum class RateMode {
  kFixedHorizon,  // mu = sqrt(8 ln k / T), horizon known up front
  kAnytime,       // mu_t = sqrt(8 ln k / t)
};

// Learning rate for k experts. `t` is the horizon T in fixed-horizon mode
// and the 1-based step index in anytime mode. k = 1 yields 0.
double mwu_rate(std::size_t k, RateMode mode, std::size_t t);

// In-place exponential reweighting w_i <- w_i * exp(-mu * loss_i),
// renormalised to unit sum.
void mwu_reweight(std::vector<double>& weights, std::span<const double> loss,
                  double mu);

// Multiplicative Weights Update over a fixed expert set.
class Mwu final : public OnlineLearner {
 public:
  Mwu(std::size_t dim, RateMode mode, std::size_t horizon = 0);

  const MixedStrategy& strategy() const override { return strategy_; }
  void observe(const LossVector& loss) override;
  std::size_t dim() const override { return strategy_.dim(); }

  std::size_t step() const { return step_; }

 private:
  MixedStrategy strategy_;
  RateMode mode_;
  std::size_t horizon_;
  std::size_t step_ = 1;  // next update index
};

// Classical fictitious play: pure best response to the opponent's empirical
// average strategy.
class FictitiousPlay {
 public:
  FictitiousPlay(std::size_t own_dim, std::size_t opp_dim,
                 std::size_t first_action);

  // Accumulates the opponent's strategy, then best-responds to the updated
  // average. Returns the action to play next round.
  std::size_t step(const PayoffMatrix& a, const MixedStrategy& opp_strategy);

  std::size_t current() const { return current_; }
  const std::vector<std::size_t>& br_counts() const { return br_counts_; }
  const std::vector<double>& opp_cumulative() const { return opp_cumulative_; }
  std::size_t t() const { return t_; }

 private:
  std::size_t current_;
  std::vector<std::size_t> br_counts_;
  std::vector<double> opp_cumulative_;
  std::size_t t_ = 0;
};

// Cumulative incurred loss and per-pure-strategy losses over the full
// strategy set; regret() is R_T against the best fixed pure strategy.
class RegretLedger {
 public:
  explicit RegretLedger(std::size_t dim);

  void record(const MixedStrategy& pi, const LossVector& loss);

  double regret() const;  // requires t >= 1
  double incurred() const { return incurred_; }
  const std::vector<double>& per_action() const { return per_action_; }
  std::size_t t() const { return t_; }

 private:
  double incurred_ = 0.0;
  std::vector<double> per_action_;
  std::size_t t_ = 0;
};

}  // namespace odo
