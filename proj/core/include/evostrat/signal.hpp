#pragma once

#include "evostrat/types.hpp"

namespace evostrat {

/// z-score with population (biased) standard deviation and a 1e-8 guard.
/// Constant input maps to all zeros.
Eigen::VectorXd scale(const Eigen::VectorXd& x);

/// Zeroes every reward strictly after the first done in each row. Rows are
/// members, columns are time steps. The reward at the done step is kept.
Eigen::MatrixXd filter_rewards(const Eigen::MatrixXd& rewards, const BoolMatrix& dones);

/// G_t = sum_{k>=t} discount^{k-t} r_k.
Eigen::VectorXd discounted_returns(const Eigen::VectorXd& rewards, double discount);

/// Generalized advantage estimation. values has one more entry than rewards;
/// a done at step t cuts both the bootstrap and the trace.
Eigen::VectorXd gae(const Eigen::VectorXd& rewards, const Eigen::VectorXd& values,
                    const BoolVector& dones, double discount, double lam);

struct KlEstimates {
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
};

/// Three sample estimators of KL(p||q) from log-densities of samples drawn
/// from p. k3 is nonnegative on every input; k1 is unbiased but signed.
KlEstimates kl_sample_estimators(const Eigen::VectorXd& logp, const Eigen::VectorXd& logq);

}  // namespace evostrat
