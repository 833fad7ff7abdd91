#include "odo/learners.hpp"

#include <algorithm>
#include <cmath>

#include "odo/errors.hpp"

namespace odo {

double mwu_rate(std::size_t k, RateMode mode, std::size_t t) {
  require(k >= 1, "mwu_rate: k must be >= 1");
  require(t >= 1, "mwu_rate: t must be >= 1");
  if (k == 1) return 0.0;
  return std::sqrt(8.0 * std::log(static_cast<double>(k)) /
                   static_cast<double>(t));
}

void mwu_reweight(std::vector<double>& weights, std::span<const double> loss,
                  double mu) {
  require(weights.size() == loss.size(),
          "mwu_reweight: weight/loss size mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] *= std::exp(-mu * loss[i]);
    sum += weights[i];
  }
  require(sum > 0.0, "mwu_reweight: all weights vanished");
  for (double& w : weights) w /= sum;
}

Mwu::Mwu(std::size_t dim, RateMode mode, std::size_t horizon)
    : strategy_(MixedStrategy::uniform(dim)), mode_(mode), horizon_(horizon) {
  require(mode != RateMode::kFixedHorizon || horizon >= 1,
          "Mwu: fixed-horizon mode needs a horizon");
}

void Mwu::observe(const LossVector& loss) {
  require(loss.size() == strategy_.dim(), "Mwu: loss size mismatch");
  const std::size_t t =
      mode_ == RateMode::kFixedHorizon ? horizon_ : step_;
  const double mu = mwu_rate(strategy_.dim(), mode_, t);
  std::vector<double> w = strategy_.probs();
  mwu_reweight(w, loss, mu);
  strategy_ = MixedStrategy::normalised(std::move(w));
  ++step_;
}

FictitiousPlay::FictitiousPlay(std::size_t own_dim, std::size_t opp_dim,
                               std::size_t first_action)
    : current_(first_action),
      br_counts_(own_dim, 0),
      opp_cumulative_(opp_dim, 0.0) {
  require(own_dim >= 1 && opp_dim >= 1, "FictitiousPlay: empty dimension");
  require(first_action < own_dim,
          "FictitiousPlay: first action out of range");
}

std::size_t FictitiousPlay::step(const PayoffMatrix& a,
                                 const MixedStrategy& opp_strategy) {
  require(a.rows() == br_counts_.size(),
          "FictitiousPlay: matrix rows mismatch");
  require(opp_strategy.dim() == opp_cumulative_.size(),
          "FictitiousPlay: opponent strategy size mismatch");
  for (std::size_t j = 0; j < opp_cumulative_.size(); ++j) {
    opp_cumulative_[j] += opp_strategy[j];
  }
  ++t_;
  const MixedStrategy average = MixedStrategy::normalised(opp_cumulative_);
  const BestResponse br = best_response(loss_vector(a, average));
  ++br_counts_[br.index];
  current_ = br.index;
  return br.index;
}

RegretLedger::RegretLedger(std::size_t dim) : per_action_(dim, 0.0) {
  require(dim >= 1, "RegretLedger: empty dimension");
}

void RegretLedger::record(const MixedStrategy& pi, const LossVector& loss) {
  require(pi.dim() == per_action_.size(),
          "RegretLedger: strategy size mismatch");
  require(loss.size() == per_action_.size(),
          "RegretLedger: loss size mismatch");
  double step_loss = 0.0;
  for (std::size_t i = 0; i < loss.size(); ++i) {
    if (pi[i] != 0.0) step_loss += pi[i] * loss[i];
    per_action_[i] += loss[i];
  }
  incurred_ += step_loss;
  ++t_;
}

double RegretLedger::regret() const {
  require(t_ >= 1, "RegretLedger::regret: empty history");
  return incurred_ - *std::min_element(per_action_.begin(), per_action_.end());
}

}  // namespace odo
