#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "blobs.hpp"
#include "plancheck/error.hpp"
#include "plancheck/projector/mlp.hpp"

using namespace plancheck;
using namespace plancheck::projector;

namespace {

Hyper small() {
  Hyper h;
  h.input_dim = 12;
  h.hidden1 = 8;
  h.hidden2 = 6;
  h.latent = 4;
  h.seed = 5;
  return h;
}

std::vector<Sample> noise(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].label = static_cast<int>(i % 2);
    out[i].x.resize(dim);
    for (auto& x : out[i].x) x = gaussian(rng);
  }
  return out;
}

// Straightforward forward pass written out layer by layer.
std::vector<double> affine(const Layer& l, const std::vector<double>& x, bool rectify) {
  std::vector<double> y(l.out);
  for (std::size_t o = 0; o < l.out; ++o) {
    double s = l.b[o];
    for (std::size_t i = 0; i < l.in; ++i) s += l.w[o * l.in + i] * x[i];
    y[o] = rectify ? std::max(s, 0.0) : s;
  }
  return y;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::io_error;
}

}  // namespace

TEST(Projector, DefaultParameterCount) {
  const auto p = Params::init(Hyper{});
  EXPECT_EQ(p.count(), 1536u * 128 + 128 + 128 * 32 + 32 + 32 * 10 + 10 + 10 * 2 + 2);
  EXPECT_EQ(p.count(), 201216u);
}

TEST(Projector, ZeroEmbeddingFollowsBiases) {
  const auto p = Params::init(small());
  const std::vector<double> zero(12, 0.0);
  auto h1 = p.layers[0].b;
  for (auto& x : h1) x = std::max(x, 0.0);
  const auto h2 = affine(p.layers[1], h1, true);
  const auto z = affine(p.layers[2], h2, false);
  const auto got = project(p, zero);
  ASSERT_EQ(got.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(got[i], z[i]);
}

TEST(Projector, MatchesReferenceForward) {
  const auto p = Params::init(small());
  for (const auto& s : noise(10, 12, 3)) {
    const auto z = affine(p.layers[2], affine(p.layers[1], affine(p.layers[0], s.x, true), true), false);
    const auto got = project(p, s.x);
    for (std::size_t i = 0; i < z.size(); ++i) EXPECT_NEAR(got[i], z[i], 1e-12);
    const auto logits = affine(p.layers[3], z, false);
    const auto hl = head_logits(p, got);
    EXPECT_NEAR(hl[0], logits[0], 1e-12);
    EXPECT_NEAR(hl[1], logits[1], 1e-12);
  }
}

TEST(Projector, IdenticalInputsIdenticalOutputs) {
  const auto p = Params::init(small());
  const auto x = noise(1, 12, 9)[0].x;
  EXPECT_EQ(project(p, x), project(p, x));
}

TEST(Projector, DimensionMismatch) {
  const auto p = Params::init(small());
  EXPECT_EQ(kind_of([&] { project(p, std::vector<double>(11)); }), ErrorKind::dimension_mismatch);
  EXPECT_EQ(kind_of([&] { head_logits(p, std::vector<double>(3)); }), ErrorKind::dimension_mismatch);
}

TEST(Projector, ClassifyArgmaxTiesUnsafe) {
  EXPECT_EQ(classify_logits({2.0, -1.0}), 0);
  EXPECT_EQ(classify_logits({-1.0, 2.0}), 1);
  EXPECT_EQ(classify_logits({0.5, 0.5}), 0);
}

TEST(Projector, CrossEntropySpotValues) {
  EXPECT_NEAR(cross_entropy({0.0, 0.0}, 0), std::log(2.0), 1e-15);
  EXPECT_NEAR(cross_entropy({2.0, -1.0}, 0), std::log1p(std::exp(-3.0)), 1e-15);
  EXPECT_NEAR(cross_entropy({2.0, -1.0}, 1), 3.0 + std::log1p(std::exp(-3.0)), 1e-12);
  // Large margins must not overflow.
  EXPECT_NEAR(cross_entropy({800.0, 0.0}, 1), 800.0, 1e-9);
}

TEST(Projector, LossIsSumOfSampleLosses) {
  const auto p = Params::init(small());
  const auto data = noise(7, 12, 4);
  double sum = 0.0;
  for (const auto& s : data) sum += cross_entropy(head_logits(p, project(p, s.x)), s.label);
  EXPECT_NEAR(loss(p, data), sum, 1e-12);
}

TEST(Projector, ZeroWeightGradientClosedForm) {
  // All parameters zero: logits are (0, 0), softmax is (1/2, 1/2) and only
  // the head bias receives gradient, Σ (1/2 − [label = k]).
  const auto p = Params::zeros(small());
  const auto data = noise(5, 12, 8);  // labels 0,1,0,1,0
  const auto g = gradient(p, data);
  EXPECT_NEAR(g.layers[3].b[0], 5 * 0.5 - 3, 1e-15);
  EXPECT_NEAR(g.layers[3].b[1], 5 * 0.5 - 2, 1e-15);
  auto flat = g.flat();
  const std::size_t head_bias_at = flat.size() - 2;
  for (std::size_t i = 0; i < head_bias_at; ++i) ASSERT_EQ(flat[i], 0.0) << i;
}

TEST(Projector, GradientMatchesFiniteDifferences) {
  const auto p = Params::init(small());
  const auto data = noise(16, 12, 2);
  EXPECT_LT(grad_check(p, data, 300), 1e-4);
}

TEST(Projector, GradientCheckAtDefaultSize) {
  Hyper h;
  h.seed = 11;
  const auto p = Params::init(h);
  const auto data = blobs(8, 3);
  EXPECT_LT(grad_check(p, data, 200), 1e-4);
}

TEST(Projector, GradientCheckDetectsCorruption) {
  const auto p = Params::init(small());
  const auto data = noise(16, 12, 2);
  const double bad = grad_check(p, data, 300, 1, 1e-4, [](Params& g) {
    for (auto& l : g.layers) {
      for (auto& w : l.w) w *= 1.05;
      for (auto& b : l.b) b *= 1.05;
    }
  });
  EXPECT_GT(bad, 1e-2);
  const double dropped = grad_check(p, data, 300, 1, 1e-4, [](Params& g) {
    std::fill(g.layers[0].w.begin(), g.layers[0].w.end(), 0.0);
  });
  EXPECT_GT(dropped, 1e-2);
}

TEST(Projector, ZeroEpochsReturnInit) {
  auto h = small();
  h.epochs = 0;
  EXPECT_EQ(train(noise(10, 12, 1), h), Params::init(h));
}

TEST(Projector, DegenerateLabels) {
  auto data = noise(10, 12, 1);
  for (auto& s : data) s.label = 1;
  data[0].label = 0;
  EXPECT_EQ(kind_of([&] { train(data, small()); }), ErrorKind::degenerate_labels);
  data[1].label = 0;
  EXPECT_NO_THROW(train(data, small()));
}

TEST(Projector, DeterministicAndOrderFree) {
  const auto data = noise(40, 12, 6);
  const auto a = train(data, small());
  EXPECT_EQ(a, train(data, small()));
  auto shuffled = data;
  std::mt19937_64 rng(99);
  shuffle(shuffled, rng);
  EXPECT_EQ(a, train(shuffled, small()));
  auto h = small();
  h.seed = 6;
  EXPECT_NE(a, train(data, h));
}

TEST(Projector, SeparatesBlobs) {
  Hyper h;
  h.seed = 3;
  TrainReport report;
  const auto p = train(blobs(400, 1), h, &report);
  EXPECT_GE(holdout_accuracy(p, blobs(400, 2)), 0.99);
  ASSERT_EQ(report.epoch_loss.size(), 10u);
  for (std::size_t e = 1; e < report.epoch_loss.size(); ++e) {
    EXPECT_LE(report.epoch_loss[e], report.epoch_loss[e - 1] * 1.05 + 1e-6) << "epoch " << e;
  }
  EXPECT_LT(report.epoch_loss.back(), 0.1 * report.epoch_loss.front());
}

TEST(Projector, CheckpointRoundTrip) {
  const auto p = train(noise(20, 12, 2), small());
  const auto bytes = encode_checkpoint(p);
  EXPECT_EQ(bytes.substr(0, 4), "PCKP");
  EXPECT_EQ(bytes.size(), 4 + 4 + 7 * 8 + 8 + 8 + p.count() * 8);
  EXPECT_EQ(decode_checkpoint(bytes), p);

  const auto path = std::filesystem::temp_directory_path() / "plancheck_ckpt_test.bin";
  save_checkpoint(p, path);
  EXPECT_EQ(load_checkpoint(path), p);
  std::filesystem::remove(path);

  EXPECT_EQ(kind_of([&] { decode_checkpoint("XXXX" + bytes.substr(4)); }), ErrorKind::format_error);
  EXPECT_EQ(kind_of([&] { decode_checkpoint(bytes.substr(0, bytes.size() - 3)); }), ErrorKind::format_error);
  EXPECT_EQ(kind_of([&] { decode_checkpoint(bytes + "x"); }), ErrorKind::format_error);
  auto v2 = bytes;
  v2[4] = 2;
  EXPECT_EQ(kind_of([&] { decode_checkpoint(v2); }), ErrorKind::format_error);
}
