#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace plancheck::projector {

struct Hyper {
  std::size_t input_dim = 1536;
  std::size_t hidden1 = 128;
  std::size_t hidden2 = 32;
  std::size_t latent = 10;
  std::size_t batch = 20;
  std::size_t epochs = 10;
  double lr = 1e-3;
  std::uint64_t seed = 0;

  bool operator==(const Hyper&) const = default;
};

struct Layer {
  std::size_t in = 0, out = 0;
  std::vector<double> w;  // out × in, row-major
  std::vector<double> b;

  bool operator==(const Layer&) const = default;
};

/// Projector (three affine layers with ReLU between them) followed by the
/// affine two-class head. layers[3] is the head.
struct Params {
  Hyper hyper;
  std::array<Layer, 4> layers;

  static Params init(const Hyper& h);
  static Params zeros(const Hyper& h);

  std::size_t count() const;
  std::vector<double> flat() const;
  void set_flat(const std::vector<double>& v);

  bool operator==(const Params&) const = default;
};

struct Sample {
  std::vector<double> x;
  int label = 0;  // 1 = safe
};

std::vector<double> project(const Params& p, const std::vector<double>& embedding);
std::array<double, 2> head_logits(const Params& p, const std::vector<double>& z);

/// Index of the larger logit; equal logits give 0.
int classify_logits(const std::array<double, 2>& logits);
int classify(const Params& p, const std::vector<double>& z);

/// Summed cross-entropy of the head over `data`.
double loss(const Params& p, const std::vector<Sample>& data);
/// Cross-entropy of a single prediction, -log softmax(logits)[label].
double cross_entropy(const std::array<double, 2>& logits, int label);

/// Gradient of `loss`, shaped like the parameters.
Params gradient(const Params& p, const std::vector<Sample>& data);

struct TrainReport {
  std::vector<double> epoch_loss;  // mean loss over the data after each epoch
  double seconds = 0.0;
};

/// Adam (0.9, 0.999, 1e-8) on the mean minibatch loss. The trainer sorts the samples
/// canonically and shuffles with its own seed, so caller order is irrelevant.
Params train(const std::vector<Sample>& data, const Hyper& h, TrainReport* report = nullptr);

/// Largest relative difference between analytic and central-difference
/// gradients over `probes` randomly chosen parameters. `corrupt` may alter
/// the analytic gradient first.
double grad_check(const Params& p, const std::vector<Sample>& data, std::size_t probes = 200, std::uint64_t seed = 1,
                  double step = 1e-4, const std::function<void(Params&)>& corrupt = {});

void save_checkpoint(const Params& p, const std::filesystem::path& path);
Params load_checkpoint(const std::filesystem::path& path);
std::string encode_checkpoint(const Params& p);
Params decode_checkpoint(const std::string& bytes);

}  // namespace plancheck::projector
