#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "odo/learners.hpp"
#include "odo/matrix_game.hpp"
#include "odo/rng.hpp"

namespace odo {

// Threshold schedule for the slowly-adding variant: the gap required before
// a new best response enters the effective set, as a function of the round's
// offset inside the current time window.
double alpha_schedule(std::size_t offset);

enum class OsoMode {
  kExact,      // full-set best response every step, add when outside the set
  kThreshold,  // add only when the cumulative gap clears alpha, checked
               // every `cadence` steps
  kEpsilon,    // epsilon-best-response oracle instead of the exact one
};

struct OsoOptions {
  OsoMode mode = OsoMode::kExact;
  double epsilon = 0.0;                      // epsilon mode
  OracleNoise noise = OracleNoise::kAdversarial;
  std::uint64_t seed = 0;                    // epsilon mode, random noise
  std::size_t cadence = 10;                  // threshold mode
  std::function<double(std::size_t)> alpha = alpha_schedule;
};

// One closed time window: the stretch of rounds over which the effective set
// stayed fixed.
struct WindowRecord {
  std::size_t window_index = 0;
  std::size_t length = 0;
  std::optional<std::size_t> added_strategy;
  double window_regret = 0.0;
};

struct OsoStepInfo {
  bool oracle_called = false;
  std::optional<std::size_t> best_response;  // set when the oracle ran
  std::optional<std::size_t> added;          // strategy appended this step
};

// Online Single Oracle: windowed MWU over a growing effective strategy set.
// Strategies carry zero mass outside the effective set; the set grows
// monotonically and a new best response opens a new window.
class Oso final : public OnlineLearner {
 public:
  Oso(std::size_t n, std::size_t start, OsoOptions options = {});

  const MixedStrategy& strategy() const override { return strategy_; }
  void observe(const LossVector& loss) override { step(loss); }
  std::size_t dim() const override { return n_; }
  std::size_t active_set_size() const override { return effective_set_.size(); }
  std::size_t oracle_calls() const override { return oracle_calls_; }

  // Observes the loss for the round just played and advances to the next
  // strategy. The post-reset uniform strategy is emitted the following round.
  OsoStepInfo step(const LossVector& loss);

  const std::vector<std::size_t>& effective_set() const {
    return effective_set_;
  }
  std::size_t window_index() const { return window_index_; }
  std::size_t global_step() const { return global_step_; }
  const std::vector<WindowRecord>& window_records() const { return windows_; }
  const std::vector<double>& window_loss_sum() const {
    return window_loss_sum_;
  }

 private:
  void open_window(std::size_t added);
  void advance_mwu(const LossVector& loss);
  void rebuild_strategy();

  std::size_t n_;
  OsoOptions options_;
  Rng rng_;

  std::vector<std::size_t> effective_set_;
  std::vector<bool> in_effective_set_;
  std::vector<double> weights_;  // MWU weights over effective_set_
  std::size_t mwu_step_ = 1;     // update index within the current window

  std::vector<double> window_loss_sum_;  // full-length accumulator
  double window_incurred_ = 0.0;
  std::size_t window_index_ = 1;
  std::size_t window_start_ = 0;  // global steps completed when window opened
  std::size_t global_step_ = 0;
  std::size_t oracle_calls_ = 0;

  MixedStrategy strategy_;
  std::vector<WindowRecord> windows_;
};

}  // namespace odo
