#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "odo/learners.hpp"
#include "odo/matrix_game.hpp"
#include "odo/oso.hpp"

namespace odo {

// Per-iteration snapshot of a self-play run. Exploitability and value refer
// to the TIME-AVERAGED strategies, which is what the convergence guarantees
// cover.
struct TraceRow {
  std::size_t step = 0;
  double exploitability = 0.0;
  std::size_t k_row = 0;
  std::size_t k_col = 0;
  double value = 0.0;
  std::size_t oracle_calls = 0;
  double regret_row = 0.0;
  double regret_col = 0.0;
};

using Trace = std::vector<TraceRow>;

struct SelfPlayResult {
  Trace trace;
  JointSolution averages;
  std::size_t k_row = 0;
  std::size_t k_col = 0;
  double regret_row = 0.0;
  double regret_col = 0.0;
  std::size_t oracle_calls = 0;
};

// Runs both seats for T rounds with simultaneous updates. The column seat
// minimises its own loss on the complement-transposed game.
SelfPlayResult selfplay(const PayoffMatrix& a, OnlineLearner& row,
                        OnlineLearner& col, std::size_t t_max,
                        std::size_t log_every);

// Both seats run OSO (Online Double Oracle).
SelfPlayResult odo_selfplay(const PayoffMatrix& a, std::size_t t_max,
                            std::pair<std::size_t, std::size_t> init,
                            const OsoOptions& row_options = {},
                            const OsoOptions& col_options = {},
                            std::size_t log_every = 100);

// Both seats run full-set MWU.
SelfPlayResult mwu_selfplay(const PayoffMatrix& a, std::size_t t_max,
                            RateMode mode = RateMode::kFixedHorizon,
                            std::size_t log_every = 100);

// Both seats run classical fictitious play from the given pure inits.
SelfPlayResult fp_selfplay(const PayoffMatrix& a, std::size_t t_max,
                           std::pair<std::size_t, std::size_t> init,
                           std::size_t log_every = 100);

struct DoState {
  std::vector<std::size_t> row_set;
  std::vector<std::size_t> col_set;
  JointSolution subgame;  // solution of the final restricted game
};

struct DoResult {
  JointSolution solution;  // embedded into the full game
  DoState state;
  std::size_t iterations = 0;
  std::size_t oracle_calls = 0;
};

// Double Oracle: iterated restricted-game NE solve plus best-response
// expansion; terminates when neither strategy set grows. With br_eps > 0 the
// expansion uses the epsilon-best-response oracle and the result is an
// (ne_tol + 2 br_eps)-equilibrium of the full game.
DoResult double_oracle(const PayoffMatrix& a, double ne_tol, double br_eps,
                       std::pair<std::size_t, std::size_t> init,
                       OracleNoise noise = OracleNoise::kAdversarial,
                       std::uint64_t seed = 0);

// Prod-style combination of OSO with a fallback no-regret learner B
// (full-set MWU by default). Meta-weights update multiplicatively by
// (1 - eta * expected loss of the sub-learner); the played strategy is the
// weight-normalised mixture.
class OsoProd final : public OnlineLearner {
 public:
  OsoProd(std::size_t n, std::size_t horizon, std::size_t start,
          std::unique_ptr<OnlineLearner> algo_b = nullptr,
          double eta = -1.0);  // eta < 0 picks 0.5 sqrt(ln T / T)

  const MixedStrategy& strategy() const override { return strategy_; }
  void observe(const LossVector& loss) override;
  std::size_t dim() const override { return n_; }
  std::size_t active_set_size() const override {
    return oso_.active_set_size();
  }
  std::size_t oracle_calls() const override { return oso_.oracle_calls(); }

  double weight_oso() const { return w_oso_; }
  double weight_b() const { return w_b_; }
  const Oso& sub_oso() const { return oso_; }

 private:
  void rebuild_strategy();

  std::size_t n_;
  double eta_;
  double w_oso_;
  double w_b_;
  Oso oso_;
  std::unique_ptr<OnlineLearner> b_;
  MixedStrategy strategy_;
};

}  // namespace odo
