#include "evostrat/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace evostrat {

Eigen::VectorXd scale(const Eigen::VectorXd& x) {
  if (x.size() < 1) throw std::invalid_argument("scale: input must be non-empty");
  const double mean = x.mean();
  const Eigen::ArrayXd centered = x.array() - mean;
  const double std = std::sqrt(centered.square().mean());
  return centered / (std + 1e-8);
}

Eigen::MatrixXd filter_rewards(const Eigen::MatrixXd& rewards, const BoolMatrix& dones) {
  if (rewards.rows() != dones.rows() || rewards.cols() != dones.cols())
    throw std::invalid_argument("filter_rewards: rewards and dones shapes must match");
  Eigen::MatrixXd out = rewards;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    bool finished = false;
    for (Eigen::Index t = 0; t < out.cols(); ++t) {
      if (finished) out(i, t) = 0.0;
      if (dones(i, t)) finished = true;
    }
  }
  return out;
}

Eigen::VectorXd discounted_returns(const Eigen::VectorXd& rewards, double discount) {
  if (discount < 0.0 || discount > 1.0)
    throw std::invalid_argument("discounted_returns: discount must be in [0, 1]");
  Eigen::VectorXd returns(rewards.size());
  double acc = 0.0;
  for (Eigen::Index t = rewards.size() - 1; t >= 0; --t) {
    acc = rewards(t) + discount * acc;
    returns(t) = acc;
  }
  return returns;
}

Eigen::VectorXd gae(const Eigen::VectorXd& rewards, const Eigen::VectorXd& values,
                    const BoolVector& dones, double discount, double lam) {
  const Eigen::Index steps = rewards.size();
  if (values.size() != steps + 1)
    throw std::invalid_argument("gae: values must have exactly one more entry than rewards");
  if (dones.size() != steps) throw std::invalid_argument("gae: dones length must match rewards");
  if (discount < 0.0 || discount > 1.0 || lam < 0.0 || lam > 1.0)
    throw std::invalid_argument("gae: discount and lam must be in [0, 1]");

  Eigen::VectorXd advantages(steps);
  double trace = 0.0;
  for (Eigen::Index t = steps - 1; t >= 0; --t) {
    const double not_done = dones(t) ? 0.0 : 1.0;
    const double delta = rewards(t) + discount * not_done * values(t + 1) - values(t);
    trace = delta + discount * lam * not_done * trace;
    advantages(t) = trace;
  }
  return advantages;
}

KlEstimates kl_sample_estimators(const Eigen::VectorXd& logp, const Eigen::VectorXd& logq) {
  if (logp.size() != logq.size() || logp.size() < 1)
    throw std::invalid_argument("kl_sample_estimators: logp and logq lengths must match");
  const Eigen::ArrayXd log_ratio = logq.array() - logp.array();
  KlEstimates est;
  est.k1 = -log_ratio.mean();
  est.k2 = (log_ratio.square() / 2.0).mean();
  est.k3 = (log_ratio.exp() - 1.0 - log_ratio).mean();
  return est;
}

}  // namespace evostrat
