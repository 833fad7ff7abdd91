#include "odo/meta.hpp"

#include <cmath>
#include <utility>

#include "odo/errors.hpp"

namespace odo {

namespace {

MixedStrategy average_of(const std::vector<double>& sums) {
  return MixedStrategy::normalised(sums);
}

}  // namespace

SelfPlayResult selfplay(const PayoffMatrix& a, OnlineLearner& row,
                        OnlineLearner& col, std::size_t t_max,
                        std::size_t log_every) {
  require(t_max >= 1, "selfplay: t_max must be >= 1");
  require(log_every >= 1, "selfplay: log_every must be >= 1");
  require(row.dim() == a.rows() && col.dim() == a.cols(),
          "selfplay: learner dimensions do not match the game");

  const PayoffMatrix b = a.complement_transpose();
  RegretLedger row_ledger(a.rows());
  RegretLedger col_ledger(a.cols());
  std::vector<double> pi_sum(a.rows(), 0.0);
  std::vector<double> c_sum(a.cols(), 0.0);

  SelfPlayResult result;
  for (std::size_t t = 1; t <= t_max; ++t) {
    const MixedStrategy& pi = row.strategy();
    const MixedStrategy& c = col.strategy();
    for (std::size_t i = 0; i < pi_sum.size(); ++i) pi_sum[i] += pi[i];
    for (std::size_t j = 0; j < c_sum.size(); ++j) c_sum[j] += c[j];

    const LossVector row_loss = loss_vector(a, c);
    const LossVector col_loss = loss_vector(b, pi);
    row_ledger.record(pi, row_loss);
    col_ledger.record(c, col_loss);
    row.observe(row_loss);
    col.observe(col_loss);

    if (t % log_every == 0 || t == t_max) {
      const JointSolution avg =
          make_joint_solution(a, average_of(pi_sum), average_of(c_sum));
      result.trace.push_back(TraceRow{
          t, avg.exploitability, row.active_set_size(), col.active_set_size(),
          avg.value, row.oracle_calls() + col.oracle_calls(),
          row_ledger.regret(), col_ledger.regret()});
    }
  }

  result.averages = make_joint_solution(a, average_of(pi_sum),
                                        average_of(c_sum));
  result.k_row = row.active_set_size();
  result.k_col = col.active_set_size();
  result.regret_row = row_ledger.regret();
  result.regret_col = col_ledger.regret();
  result.oracle_calls = row.oracle_calls() + col.oracle_calls();
  return result;
}

SelfPlayResult odo_selfplay(const PayoffMatrix& a, std::size_t t_max,
                            std::pair<std::size_t, std::size_t> init,
                            const OsoOptions& row_options,
                            const OsoOptions& col_options,
                            std::size_t log_every) {
  Oso row(a.rows(), init.first, row_options);
  Oso col(a.cols(), init.second, col_options);
  return selfplay(a, row, col, t_max, log_every);
}

SelfPlayResult mwu_selfplay(const PayoffMatrix& a, std::size_t t_max,
                            RateMode mode, std::size_t log_every) {
  Mwu row(a.rows(), mode, t_max);
  Mwu col(a.cols(), mode, t_max);
  return selfplay(a, row, col, t_max, log_every);
}

SelfPlayResult fp_selfplay(const PayoffMatrix& a, std::size_t t_max,
                           std::pair<std::size_t, std::size_t> init,
                           std::size_t log_every) {
  require(t_max >= 1, "fp_selfplay: t_max must be >= 1");
  require(log_every >= 1, "fp_selfplay: log_every must be >= 1");
  const PayoffMatrix b = a.complement_transpose();
  FictitiousPlay row(a.rows(), a.cols(), init.first);
  FictitiousPlay col(a.cols(), a.rows(), init.second);
  RegretLedger row_ledger(a.rows());
  RegretLedger col_ledger(a.cols());
  std::vector<double> pi_sum(a.rows(), 0.0);
  std::vector<double> c_sum(a.cols(), 0.0);

  SelfPlayResult result;
  for (std::size_t t = 1; t <= t_max; ++t) {
    const MixedStrategy pi = MixedStrategy::pure(a.rows(), row.current());
    const MixedStrategy c = MixedStrategy::pure(a.cols(), col.current());
    pi_sum[row.current()] += 1.0;
    c_sum[col.current()] += 1.0;

    row_ledger.record(pi, loss_vector(a, c));
    col_ledger.record(c, loss_vector(b, pi));
    row.step(a, c);
    col.step(b, pi);

    if (t % log_every == 0 || t == t_max) {
      const JointSolution avg =
          make_joint_solution(a, average_of(pi_sum), average_of(c_sum));
      result.trace.push_back(TraceRow{t, avg.exploitability, a.rows(),
                                      a.cols(), avg.value, 2 * t,
                                      row_ledger.regret(),
                                      col_ledger.regret()});
    }
  }

  result.averages = make_joint_solution(a, average_of(pi_sum),
                                        average_of(c_sum));
  result.k_row = a.rows();
  result.k_col = a.cols();
  result.regret_row = row_ledger.regret();
  result.regret_col = col_ledger.regret();
  result.oracle_calls = 2 * t_max;
  return result;
}

DoResult double_oracle(const PayoffMatrix& a, double ne_tol, double br_eps,
                       std::pair<std::size_t, std::size_t> init,
                       OracleNoise noise, std::uint64_t seed) {
  require(ne_tol > 0.0, "double_oracle: ne_tol must be positive");
  require(br_eps >= 0.0, "double_oracle: negative br_eps");
  require(init.first < a.rows() && init.second < a.cols(),
          "double_oracle: init strategy out of range");

  const PayoffMatrix b = a.complement_transpose();
  Rng rng(seed);
  DoState state;
  state.row_set.push_back(init.first);
  state.col_set.push_back(init.second);
  std::vector<bool> in_row(a.rows(), false);
  std::vector<bool> in_col(a.cols(), false);
  in_row[init.first] = true;
  in_col[init.second] = true;

  std::size_t iterations = 0;
  for (;;) {
    ++iterations;
    const PayoffMatrix sub = a.submatrix(state.row_set, state.col_set);
    const JointSolution sub_solution = solve_zero_sum_ne(sub, ne_tol);

    const MixedStrategy pi_full = MixedStrategy::embed(
        sub_solution.row_strategy.probs(), state.row_set, a.rows());
    const MixedStrategy c_full = MixedStrategy::embed(
        sub_solution.col_strategy.probs(), state.col_set, a.cols());

    const LossVector row_loss = loss_vector(a, c_full);
    const LossVector col_loss = loss_vector(b, pi_full);
    const std::size_t row_br =
        br_eps == 0.0
            ? best_response(row_loss).index
            : epsilon_best_response(row_loss, br_eps, noise, rng).index;
    const std::size_t col_br =
        br_eps == 0.0
            ? best_response(col_loss).index
            : epsilon_best_response(col_loss, br_eps, noise, rng).index;

    bool grew = false;
    if (!in_row[row_br]) {
      in_row[row_br] = true;
      state.row_set.push_back(row_br);
      grew = true;
    }
    if (!in_col[col_br]) {
      in_col[col_br] = true;
      state.col_set.push_back(col_br);
      grew = true;
    }
    if (!grew) {
      state.subgame = sub_solution;
      return DoResult{make_joint_solution(a, pi_full, c_full),
                      std::move(state), iterations, 2 * iterations};
    }
  }
}

OsoProd::OsoProd(std::size_t n, std::size_t horizon, std::size_t start,
                 std::unique_ptr<OnlineLearner> algo_b, double eta)
    : n_(n),
      eta_(eta),
      w_oso_(0.0),
      w_b_(0.0),
      oso_(n, start),
      b_(algo_b ? std::move(algo_b)
                : std::make_unique<Mwu>(n, RateMode::kFixedHorizon, horizon)),
      strategy_(MixedStrategy::uniform(n)) {
  require(horizon >= 2, "OsoProd: horizon must be >= 2");
  require(b_->dim() == n, "OsoProd: algorithm B dimension mismatch");
  if (eta_ < 0.0) {
    eta_ = 0.5 * std::sqrt(std::log(static_cast<double>(horizon)) /
                           static_cast<double>(horizon));
  }
  require(eta_ <= 0.5, "OsoProd: eta must be <= 1/2");
  w_oso_ = eta_ > 0.0 ? eta_ : 0.5;
  w_b_ = 1.0 - w_oso_;
  rebuild_strategy();
}

void OsoProd::rebuild_strategy() {
  const MixedStrategy& po = oso_.strategy();
  const MixedStrategy& pb = b_->strategy();
  const double total = w_oso_ + w_b_;
  std::vector<double> mix(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    mix[i] = (w_oso_ * po[i] + w_b_ * pb[i]) / total;
  }
  strategy_ = MixedStrategy::normalised(std::move(mix));
}

void OsoProd::observe(const LossVector& loss) {
  require(loss.size() == n_, "OsoProd: loss size mismatch");
  double l_oso = 0.0;
  double l_b = 0.0;
  const MixedStrategy& po = oso_.strategy();
  const MixedStrategy& pb = b_->strategy();
  for (std::size_t i = 0; i < n_; ++i) {
    if (po[i] != 0.0) l_oso += po[i] * loss[i];
    if (pb[i] != 0.0) l_b += pb[i] * loss[i];
  }
  w_oso_ *= 1.0 - eta_ * l_oso;
  w_b_ *= 1.0 - eta_ * l_b;
  oso_.observe(loss);
  b_->observe(loss);
  rebuild_strategy();
}

}  // namespace odo
