#pragma once

#include "evostrat/rng.hpp"
#include "evostrat/types.hpp"

namespace evostrat {

/// Isotropic (diagonal) Gaussian search distribution over parameter space.
struct PopulationDistribution {
  ParameterVector mean;
  Eigen::VectorXd std;  // per-dimension, strictly positive
  int size = 0;         // population size n

  PopulationDistribution(ParameterVector mean_in, Eigen::VectorXd std_in, int size_in);
  PopulationDistribution(ParameterVector mean_in, double std_in, int size_in);

  int dimension() const { return static_cast<int>(mean.size()); }
  double mean_std() const { return std.mean(); }
};

/// n x d matrix of i.i.d. N(0,1) draws. Row-major fill order, so the first
/// k rows of a larger request coincide with a smaller request on the same
/// generator state.
NoiseMatrix sample_noise(GaussianRng& rng, int n, int d);

/// Row i = mean + std .* eps_i.
PopulationMatrix expand_population(const PopulationDistribution& dist, const NoiseMatrix& eps);

/// The population average in expectation: the distribution mean. Used as the
/// post-training "global" parameter vector.
ParameterVector global_parameters(const PopulationDistribution& dist);

/// Differential entropy of the diagonal Gaussian, in nats.
double population_entropy(const PopulationDistribution& dist);

/// KL(from || to) between two diagonal Gaussians, in nats. Dimensions must match.
double population_kl(const PopulationDistribution& from, const PopulationDistribution& to);

}  // namespace evostrat
