#pragma once

#include <string>
#include <vector>

#include "evostrat/types.hpp"

namespace evostrat {

/// Declarative description of a feed-forward policy: encoder -> torso -> head.
///
/// Parameters live in a flat vector with a fixed layout contract: layers in
/// order, per layer all weights in row-major order followed by the biases.
/// The dummy spec has no layers at all; its parameter vector *is* the output,
/// which is what static black-box optimization runs on.
struct NetworkSpec {
  enum class Encoder { Identity, Concat };
  enum class Head { Linear, TanhBounded, ArgmaxDiscrete };
  enum class Activation { Tanh, Relu };

  Encoder encoder = Encoder::Identity;
  std::vector<int> torso;  // hidden layer widths, possibly empty
  Head head = Head::Linear;
  Activation activation = Activation::Tanh;
  int input_dim = 0;
  int output_dim = 0;
  bool is_dummy = false;

  /// A parameter vector with no network structure; forward() ignores the
  /// input and returns the parameters.
  static NetworkSpec dummy(int dimension);

  static NetworkSpec mlp(int input_dim, std::vector<int> torso, int output_dim,
                         Head head = Head::Linear, Activation activation = Activation::Tanh,
                         Encoder encoder = Encoder::Identity);
};

/// Exact number of weights and biases implied by the spec.
int param_count(const NetworkSpec& spec);

/// Deterministic forward pass. For the ArgmaxDiscrete head the result is a
/// length-1 vector holding the index of the largest logit.
Eigen::VectorXd forward(const NetworkSpec& spec, const ParameterVector& params,
                        const Eigen::VectorXd& input);

}  // namespace evostrat
