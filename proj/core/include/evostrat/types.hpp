#pragma once

#include <Eigen/Core>

namespace evostrat {

using ParameterVector = Eigen::VectorXd;

/// n x d matrix of standard-normal draws, one row per population member.
using NoiseMatrix = Eigen::MatrixXd;

/// n x d matrix of realized parameter vectors, row i = mean + std .* eps_i.
using PopulationMatrix = Eigen::MatrixXd;

using BoolVector = Eigen::Array<bool, Eigen::Dynamic, 1>;
using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace evostrat
