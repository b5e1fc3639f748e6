#pragma once

#include <utility>

#include "evostrat/population.hpp"
#include "evostrat/types.hpp"

namespace evostrat {

/// Momentum and dampening accumulators for the Adam-style update.
struct AdamState {
  Eigen::VectorXd m;  // exponentially weighted gradient average
  Eigen::VectorXd v;  // exponentially weighted squared-gradient average
  long step = 1;

  static AdamState zero(int dimension);
};

struct ESConfig {
  double learning_rate = 0.1;
  double noise_std = 1.0;
  int population_size = 10;
  // z-score returns before the gradient estimate; disable for the literal
  // raw-return update.
  bool scale_fitness = true;

  void validate() const;
};

struct AdamESConfig : ESConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double fuzz = 1e-8;

  void validate() const;
};

struct UpdateLog {
  double divergence = 0.0;  // KL(old || new) in nats
  double entropy = 0.0;     // entropy of the new distribution in nats
};

/// Sample gradient approximation eps^T * scale(fitness) / (mean_std * n).
/// With scale_fitness=false the raw fitness values are used instead.
Eigen::VectorXd estimate_gradient(const NoiseMatrix& eps, const Eigen::VectorXd& fitness,
                                  double mean_std, bool scale_fitness = true);

/// One Adam accumulator update plus bias correction; returns the step
/// direction m_hat / (sqrt(v_hat) + fuzz) and the advanced state.
std::pair<Eigen::VectorXd, AdamState> adam_direction(const AdamState& state,
                                                     const Eigen::VectorXd& grad,
                                                     const AdamESConfig& cfg);

/// Plain gradient-ascent step on the distribution mean: mean += lr * grad.
/// std is left unchanged. The log carries the exact KL between the old and
/// new distributions and the entropy of the new one.
std::pair<PopulationDistribution, UpdateLog> es_step(const PopulationDistribution& dist,
                                                     const Eigen::VectorXd& grad,
                                                     double learning_rate);

struct AdamESResult {
  PopulationDistribution dist;
  AdamState state;
  UpdateLog log;
};

/// Composition: estimate the gradient from population returns, run it through
/// the Adam accumulators, shift the mean along the resulting direction.
AdamESResult adames_step(const PopulationDistribution& dist, const NoiseMatrix& eps,
                         const Eigen::VectorXd& fitness, const AdamState& state,
                         const AdamESConfig& cfg);

}  // namespace evostrat
