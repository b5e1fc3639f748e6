#include "evostrat/optimizer.hpp"

#include <cmath>
#include <stdexcept>

#include "evostrat/signal.hpp"

namespace evostrat {

AdamState AdamState::zero(int dimension) {
  if (dimension < 1) throw std::invalid_argument("AdamState::zero: dimension must be >= 1");
  AdamState state;
  state.m = Eigen::VectorXd::Zero(dimension);
  state.v = Eigen::VectorXd::Zero(dimension);
  state.step = 1;
  return state;
}

void ESConfig::validate() const {
  if (!(learning_rate > 0.0)) throw std::invalid_argument("ESConfig: learning_rate must be > 0");
  if (!(noise_std > 0.0)) throw std::invalid_argument("ESConfig: noise_std must be > 0");
  if (population_size < 2) throw std::invalid_argument("ESConfig: population_size must be >= 2");
}

void AdamESConfig::validate() const {
  ESConfig::validate();
  if (beta1 < 0.0 || beta1 >= 1.0) throw std::invalid_argument("AdamESConfig: beta1 must be in [0, 1)");
  if (beta2 < 0.0 || beta2 >= 1.0) throw std::invalid_argument("AdamESConfig: beta2 must be in [0, 1)");
  if (!(fuzz > 0.0)) throw std::invalid_argument("AdamESConfig: fuzz must be > 0");
}

Eigen::VectorXd estimate_gradient(const NoiseMatrix& eps, const Eigen::VectorXd& fitness,
                                  double mean_std, bool scale_fitness) {
  const Eigen::Index n = eps.rows();
  if (n < 2) throw std::invalid_argument("estimate_gradient: need at least 2 population members");
  if (fitness.size() != n)
    throw std::invalid_argument("estimate_gradient: fitness length must equal eps row count");
  if (!fitness.allFinite()) throw std::invalid_argument("estimate_gradient: fitness must be finite");
  if (!(mean_std > 0.0)) throw std::invalid_argument("estimate_gradient: mean_std must be > 0");

  const Eigen::VectorXd weights = scale_fitness ? scale(fitness) : fitness;
  return eps.transpose() * weights / (mean_std * static_cast<double>(n));
}

std::pair<Eigen::VectorXd, AdamState> adam_direction(const AdamState& state,
                                                     const Eigen::VectorXd& grad,
                                                     const AdamESConfig& cfg) {
  cfg.validate();
  if (!grad.allFinite()) throw std::invalid_argument("adam_direction: grad must be finite");
  if (state.m.size() != grad.size() || state.v.size() != grad.size())
    throw std::invalid_argument("adam_direction: state dimension mismatch");
  if ((state.v.array() < 0.0).any())
    throw std::invalid_argument("adam_direction: v must be elementwise nonnegative");

  AdamState next;
  next.m = (1.0 - cfg.beta1) * grad + cfg.beta1 * state.m;
  next.v = ((1.0 - cfg.beta2) * grad.array().square()).matrix() + cfg.beta2 * state.v;
  const double m_correction = 1.0 - std::pow(cfg.beta1, static_cast<double>(state.step));
  const double v_correction = 1.0 - std::pow(cfg.beta2, static_cast<double>(state.step));
  const Eigen::ArrayXd m_hat = next.m.array() / m_correction;
  const Eigen::ArrayXd v_hat = next.v.array() / v_correction;
  Eigen::VectorXd direction = (m_hat / (v_hat.sqrt() + cfg.fuzz)).matrix();
  next.step = state.step + 1;
  return {std::move(direction), std::move(next)};
}

std::pair<PopulationDistribution, UpdateLog> es_step(const PopulationDistribution& dist,
                                                     const Eigen::VectorXd& grad,
                                                     double learning_rate) {
  if (grad.size() != dist.dimension()) throw std::invalid_argument("es_step: dimension mismatch");
  PopulationDistribution next(dist.mean + learning_rate * grad, dist.std, dist.size);
  UpdateLog log;
  log.divergence = population_kl(dist, next);
  log.entropy = population_entropy(next);
  return {std::move(next), log};
}

AdamESResult adames_step(const PopulationDistribution& dist, const NoiseMatrix& eps,
                         const Eigen::VectorXd& fitness, const AdamState& state,
                         const AdamESConfig& cfg) {
  const Eigen::VectorXd grad =
      estimate_gradient(eps, fitness, dist.mean_std(), cfg.scale_fitness);
  auto [direction, next_state] = adam_direction(state, grad, cfg);
  auto [next_dist, log] = es_step(dist, direction, cfg.learning_rate);
  return {std::move(next_dist), std::move(next_state), log};
}

}  // namespace evostrat
