#include "odo/oso.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "odo/errors.hpp"

namespace odo {

double alpha_schedule(std::size_t offset) {
  return std::sqrt(static_cast<double>(offset));
}

namespace {

// Within-window rate. Window lengths are unknown in advance, so this is the
// anytime rate, capped at 1 to keep the first updates of a fresh window from
// overshooting (uncapped, the cross-window regret constant degrades
// measurably in self-play).
double window_rate(std::size_t k, std::size_t step) {
  if (k <= 1) return 0.0;
  return std::min(1.0, std::sqrt(8.0 * std::log(static_cast<double>(k)) /
                                 static_cast<double>(step)));
}

}  // namespace

Oso::Oso(std::size_t n, std::size_t start, OsoOptions options)
    : n_(n),
      options_(std::move(options)),
      rng_(options_.seed),
      weights_{1.0},
      window_loss_sum_(n, 0.0),
      strategy_(MixedStrategy::pure(n, start)) {
  require(start < n, "Oso: start strategy out of range");
  require(options_.mode != OsoMode::kThreshold || options_.cadence >= 1,
          "Oso: cadence must be >= 1");
  require(options_.mode != OsoMode::kEpsilon || options_.epsilon >= 0.0,
          "Oso: negative epsilon");
  effective_set_.push_back(start);
  in_effective_set_.assign(n, false);
  in_effective_set_[start] = true;
}

void Oso::open_window(std::size_t added) {
  windows_.push_back(WindowRecord{
      window_index_, global_step_ - window_start_, added,
      window_incurred_ -
          *std::min_element(window_loss_sum_.begin(), window_loss_sum_.end())});
  effective_set_.push_back(added);
  in_effective_set_[added] = true;
  const std::size_t k = effective_set_.size();
  weights_.assign(k, 1.0 / static_cast<double>(k));
  mwu_step_ = 1;
  std::fill(window_loss_sum_.begin(), window_loss_sum_.end(), 0.0);
  window_incurred_ = 0.0;
  ++window_index_;
  window_start_ = global_step_;
}

void Oso::advance_mwu(const LossVector& loss) {
  const std::size_t k = effective_set_.size();
  if (k > 1) {
    std::vector<double> restricted(k);
    for (std::size_t i = 0; i < k; ++i) restricted[i] = loss[effective_set_[i]];
    mwu_reweight(weights_, restricted, window_rate(k, mwu_step_));
  }
  ++mwu_step_;
}

void Oso::rebuild_strategy() {
  strategy_ = MixedStrategy::embed(weights_, effective_set_, n_);
}

OsoStepInfo Oso::step(const LossVector& loss) {
  require(loss.size() == n_, "Oso: loss size mismatch");
  OsoStepInfo info;

  double incurred = 0.0;
  for (std::size_t i = 0; i < effective_set_.size(); ++i) {
    incurred += weights_[i] * loss[effective_set_[i]];
  }
  window_incurred_ += incurred;
  for (std::size_t i = 0; i < n_; ++i) window_loss_sum_[i] += loss[i];
  ++global_step_;
  const std::size_t offset = global_step_ - window_start_;

  if (options_.mode == OsoMode::kThreshold) {
    if (offset % options_.cadence == 0) {
      ++oracle_calls_;
      info.oracle_called = true;
      const BestResponse full = best_response(window_loss_sum_);
      info.best_response = full.index;
      double eff_min = window_loss_sum_[effective_set_[0]];
      for (std::size_t idx : effective_set_) {
        eff_min = std::min(eff_min, window_loss_sum_[idx]);
      }
      if (!in_effective_set_[full.index] &&
          eff_min - full.value >= options_.alpha(offset)) {
        info.added = full.index;
        open_window(full.index);
        rebuild_strategy();
        return info;
      }
    }
    advance_mwu(loss);
    rebuild_strategy();
    return info;
  }

  ++oracle_calls_;
  info.oracle_called = true;
  std::size_t candidate;
  if (options_.mode == OsoMode::kEpsilon) {
    // The epsilon oracle works on the window-average loss so epsilon keeps
    // its per-round scale.
    LossVector average(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      average[i] = window_loss_sum_[i] / static_cast<double>(offset);
    }
    candidate =
        epsilon_best_response(average, options_.epsilon, options_.noise, rng_)
            .index;
  } else {
    // argmin of the window sum equals argmin of the window average.
    candidate = best_response(window_loss_sum_).index;
  }
  info.best_response = candidate;

  if (!in_effective_set_[candidate]) {
    info.added = candidate;
    open_window(candidate);
  } else {
    advance_mwu(loss);
  }
  rebuild_strategy();
  return info;
}

}  // namespace odo
