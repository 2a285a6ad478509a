#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lacmodel/matrix.hpp"

namespace lac::net {

// Minimal sequential network engine: dense, 1-D convolution (plain and
// strided), max pooling, nearest-neighbour upsampling, batch normalization
// and ReLU, trained with Adam on an MSE loss. Rows are samples; feature
// vectors of convolutional stages are channel-major ([ch0 | ch1 | ...]).

enum class ArchKind { FCNN1, FCNN2, FCNN3, CNN1, CNN2, CNN2_DEEP };

const char* arch_name(ArchKind k);
ArchKind arch_from_name(const std::string& name);

struct NetworkArch {
    ArchKind kind = ArchKind::FCNN1;
    std::size_t input_len = 26;
    std::size_t latent_dim = 5;  // 3 inside the hybrid, 5 standalone
};

enum class Mode { train, eval };

struct Dense {
    std::size_t in = 0, out = 0;
    std::vector<double> w;  // in x out, row-major
    std::vector<double> b;  // out
};

struct Relu {
    std::size_t n = 0;
};

struct BatchNorm {
    std::size_t n = 0;
    std::vector<double> gamma, beta;
    std::vector<double> run_mean, run_var;  // population statistics
    double momentum = 0.1;
    double eps = 1e-5;
};

struct Conv1d {
    std::size_t in_ch = 0, out_ch = 0, in_len = 0;
    std::size_t kernel = 3, stride = 1, pad = 1;
    std::vector<double> w;  // out_ch x (in_ch * kernel), row-major
    std::vector<double> b;  // out_ch

    std::size_t out_len() const { return (in_len + 2 * pad - kernel) / stride + 1; }
};

struct MaxPool1d {
    std::size_t ch = 0, in_len = 0;
    std::size_t window = 2, stride = 2;

    std::size_t out_len() const { return (in_len - window) / stride + 1; }
};

struct Upsample1d {
    std::size_t ch = 0, in_len = 0;
    std::size_t factor = 2;
};

using Layer = std::variant<Dense, Relu, BatchNorm, Conv1d, MaxPool1d, Upsample1d>;

std::size_t layer_in_features(const Layer& l);
std::size_t layer_out_features(const Layer& l);
const char* layer_type_name(const Layer& l);

struct Network {
    NetworkArch arch;
    std::vector<Layer> layers;
    std::size_t latent_layer = 0;  // index of the dense layer producing the code
};

/// Builds the architecture and initializes weights from a scaled uniform
/// fan-in distribution (biases zero, batch-norm identity); deterministic in
/// the seed.
Network init_network(const NetworkArch& arch, std::uint64_t seed);

struct LayerCache {
    linalg::Matrix in;                // layer input (dense/conv/relu backward)
    linalg::Matrix xhat;              // batch-norm normalized input
    std::vector<double> inv_std;      // batch-norm 1/sqrt(var+eps)
    std::vector<std::size_t> argmax;  // max-pool winners, flat per (row, out feature)
};

struct ForwardCache {
    std::vector<LayerCache> layers;
    linalg::Matrix output;
};

/// Train mode uses batch statistics and updates batch-norm running stats;
/// eval mode is a pure function of the parameters. Throws NumericalError
/// (with the layer index) if activations stop being finite.
linalg::Matrix forward(Network& net, const linalg::Matrix& batch, Mode mode,
                       ForwardCache* cache = nullptr);

/// Eval-mode forward, usable on a const network.
linalg::Matrix reconstruct(const Network& net, const linalg::Matrix& batch);

/// Encoder half: through the latent layer (codes have latent_dim columns).
linalg::Matrix encode(const Network& net, const linalg::Matrix& batch);
/// Decoder half: from latent codes to outputs.
linalg::Matrix decode(const Network& net, const linalg::Matrix& codes);

/// One gradient vector per trainable parameter block, in block order.
using Grads = std::vector<std::vector<double>>;

/// Trainable blocks (dense w/b, conv w/b, batch-norm gamma/beta) in layer order.
std::vector<std::span<double>> param_blocks(Network& net);
std::size_t parameter_count(const Network& net);

/// Gradients of 0.5-free MSE-style upstream gradient `gout` w.r.t. every
/// trainable block; cache must come from a matching forward(train) call.
Grads backward(const Network& net, const ForwardCache& cache, const linalg::Matrix& gout);

struct TrainConfig {
    std::size_t epochs = 300;
    std::size_t batch_size = 64;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t seed = 0;
};

struct AdamState {
    std::vector<std::vector<double>> m, v;
    std::uint64_t step = 0;
};

void adam_step(Network& net, const Grads& grads, AdamState& state, const TrainConfig& config);

struct TrainHistory {
    std::vector<double> train_loss;
    std::vector<double> val_loss;
};

/// Denoising loop: MSE(forward(noisy), clean) over shuffled mini-batches
/// (shuffle seeded per epoch, last partial batch kept). Validation loss is
/// computed in eval mode each epoch; the final-epoch parameters are kept.
TrainHistory train_denoising(Network& net, const linalg::Matrix& train_noisy,
                             const linalg::Matrix& train_clean, const linalg::Matrix& val_noisy,
                             const linalg::Matrix& val_clean, const TrainConfig& config);

double mse(const linalg::Matrix& pred, const linalg::Matrix& target);

}  // namespace lac::net
