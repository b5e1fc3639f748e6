#include "evostrat/network.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace evostrat {

NetworkSpec NetworkSpec::dummy(int dimension) {
  if (dimension < 1) throw std::invalid_argument("NetworkSpec::dummy: dimension must be >= 1");
  NetworkSpec spec;
  spec.is_dummy = true;
  spec.output_dim = dimension;
  return spec;
}

NetworkSpec NetworkSpec::mlp(int input_dim, std::vector<int> torso, int output_dim, Head head,
                             Activation activation, Encoder encoder) {
  if (input_dim < 1 || output_dim < 1)
    throw std::invalid_argument("NetworkSpec::mlp: input_dim and output_dim must be >= 1");
  for (int w : torso)
    if (w < 1) throw std::invalid_argument("NetworkSpec::mlp: all torso widths must be >= 1");
  NetworkSpec spec;
  spec.encoder = encoder;
  spec.torso = std::move(torso);
  spec.head = head;
  spec.activation = activation;
  spec.input_dim = input_dim;
  spec.output_dim = output_dim;
  return spec;
}

int param_count(const NetworkSpec& spec) {
  if (spec.is_dummy) return spec.output_dim;
  int count = 0;
  int in = spec.input_dim;
  for (int width : spec.torso) {
    count += in * width + width;
    in = width;
  }
  count += in * spec.output_dim + spec.output_dim;
  return count;
}

namespace {

Eigen::VectorXd apply_activation(NetworkSpec::Activation act, Eigen::VectorXd x) {
  switch (act) {
    case NetworkSpec::Activation::Tanh:
      return x.array().tanh();
    case NetworkSpec::Activation::Relu:
      return x.cwiseMax(0.0);
  }
  throw std::logic_error("unreachable activation");
}

// Consumes one layer's parameters (row-major weights, then biases) and
// applies it to x.
Eigen::VectorXd apply_layer(const ParameterVector& params, Eigen::Index& offset, int in, int out,
                            const Eigen::VectorXd& x) {
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> weights(params.data() + offset, out, in);
  offset += static_cast<Eigen::Index>(in) * out;
  Eigen::Map<const Eigen::VectorXd> biases(params.data() + offset, out);
  offset += out;
  return weights * x + biases;
}

}  // namespace

Eigen::VectorXd forward(const NetworkSpec& spec, const ParameterVector& params,
                        const Eigen::VectorXd& input) {
  if (params.size() != param_count(spec))
    throw std::invalid_argument("forward: params length does not match spec");
  if (spec.is_dummy) return params;
  if (input.size() != spec.input_dim)
    throw std::invalid_argument("forward: input length does not match spec");

  Eigen::Index offset = 0;
  Eigen::VectorXd x = input;
  int in = spec.input_dim;
  for (int width : spec.torso) {
    x = apply_activation(spec.activation, apply_layer(params, offset, in, width, x));
    in = width;
  }
  x = apply_layer(params, offset, in, spec.output_dim, x);

  switch (spec.head) {
    case NetworkSpec::Head::Linear:
      return x;
    case NetworkSpec::Head::TanhBounded:
      return x.array().tanh();
    case NetworkSpec::Head::ArgmaxDiscrete: {
      Eigen::Index best = 0;
      x.maxCoeff(&best);
      return Eigen::VectorXd::Constant(1, static_cast<double>(best));
    }
  }
  throw std::logic_error("unreachable head");
}

}  // namespace evostrat
