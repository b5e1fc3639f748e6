#include "evostrat/population.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace evostrat {

namespace {

void validate(const ParameterVector& mean, const Eigen::VectorXd& std, int size) {
  if (mean.size() == 0) throw std::invalid_argument("PopulationDistribution: empty mean");
  if (!mean.allFinite()) throw std::invalid_argument("PopulationDistribution: mean must be finite");
  if (std.size() != mean.size())
    throw std::invalid_argument("PopulationDistribution: std length must match mean length");
  if (!(std.array() > 0.0).all() || !std.allFinite())
    throw std::invalid_argument("PopulationDistribution: std entries must be strictly positive");
  if (size < 1) throw std::invalid_argument("PopulationDistribution: size must be >= 1");
}

}  // namespace

PopulationDistribution::PopulationDistribution(ParameterVector mean_in, Eigen::VectorXd std_in,
                                               int size_in)
    : mean(std::move(mean_in)), std(std::move(std_in)), size(size_in) {
  validate(mean, std, size);
}

PopulationDistribution::PopulationDistribution(ParameterVector mean_in, double std_in, int size_in)
    : mean(std::move(mean_in)),
      std(Eigen::VectorXd::Constant(mean.size(), std_in)),
      size(size_in) {
  validate(mean, std, size);
}

NoiseMatrix sample_noise(GaussianRng& rng, int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("sample_noise: n and d must be >= 1");
  NoiseMatrix eps(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) eps(i, j) = rng.next_normal();
  return eps;
}

PopulationMatrix expand_population(const PopulationDistribution& dist, const NoiseMatrix& eps) {
  if (eps.rows() != dist.size || eps.cols() != dist.dimension())
    throw std::invalid_argument("expand_population: eps shape must be (size, dimension)");
  PopulationMatrix rows(eps.rows(), eps.cols());
  rows = eps.array().rowwise() * dist.std.transpose().array();
  rows.rowwise() += dist.mean.transpose();
  return rows;
}

ParameterVector global_parameters(const PopulationDistribution& dist) { return dist.mean; }

double population_entropy(const PopulationDistribution& dist) {
  constexpr double kHalfLog2PiE = 1.4189385332046727;  // 0.5 * ln(2*pi*e)
  return dist.std.array().log().sum() + dist.dimension() * kHalfLog2PiE;
}

double population_kl(const PopulationDistribution& from, const PopulationDistribution& to) {
  if (from.dimension() != to.dimension())
    throw std::invalid_argument("population_kl: dimension mismatch");
  const auto& sp = from.std.array();
  const auto& sq = to.std.array();
  const auto dm = (from.mean - to.mean).array();
  return ((sq / sp).log() + (sp.square() + dm.square()) / (2.0 * sq.square()) - 0.5).sum();
}

}  // namespace evostrat
