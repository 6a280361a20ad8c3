#include "plancheck/projector/mlp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

#include "plancheck/error.hpp"
#include "plancheck/random.hpp"

namespace plancheck::projector {

namespace {

Layer make_layer(std::size_t in, std::size_t out) {
  return {in, out, std::vector<double>(in * out, 0.0), std::vector<double>(out, 0.0)};
}

void affine(const Layer& l, const std::vector<double>& x, std::vector<double>& y) {
  y.assign(l.out, 0.0);
  for (std::size_t o = 0; o < l.out; ++o) {
    const double* row = l.w.data() + o * l.in;
    double s = l.b[o];
    for (std::size_t i = 0; i < l.in; ++i) s += row[i] * x[i];
    y[o] = s;
  }
}

void relu(std::vector<double>& v) {
  for (double& x : v) x = x > 0.0 ? x : 0.0;
}

struct Trace {
  std::vector<double> a1, h1, a2, h2, z;
  std::array<double, 2> logits{};
};

Trace forward(const Params& p, const std::vector<double>& x) {
  Trace t;
  affine(p.layers[0], x, t.a1);
  t.h1 = t.a1;
  relu(t.h1);
  affine(p.layers[1], t.h1, t.a2);
  t.h2 = t.a2;
  relu(t.h2);
  affine(p.layers[2], t.h2, t.z);
  std::vector<double> lg;
  affine(p.layers[3], t.z, lg);
  t.logits = {lg[0], lg[1]};
  return t;
}

std::array<double, 2> softmax(const std::array<double, 2>& l) {
  const double m = std::max(l[0], l[1]);
  const double e0 = std::exp(l[0] - m), e1 = std::exp(l[1] - m);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

// Adds d(loss)/d(params) for one sample into g.
double accumulate(const Params& p, const Sample& s, Params& g) {
  Trace t = forward(p, s.x);
  auto prob = softmax(t.logits);
  const double l = cross_entropy(t.logits, s.label);
  std::vector<double> d4{prob[0] - (s.label == 0 ? 1.0 : 0.0), prob[1] - (s.label == 1 ? 1.0 : 0.0)};

  auto back = [](const Layer& L, Layer& G, const std::vector<double>& in, const std::vector<double>& dout,
                 std::vector<double>* din) {
    for (std::size_t o = 0; o < L.out; ++o) {
      const double d = dout[o];
      G.b[o] += d;
      if (d == 0.0) continue;
      double* grow = G.w.data() + o * L.in;
      for (std::size_t i = 0; i < L.in; ++i) grow[i] += d * in[i];
    }
    if (din != nullptr) {
      din->assign(L.in, 0.0);
      for (std::size_t o = 0; o < L.out; ++o) {
        const double d = dout[o];
        if (d == 0.0) continue;
        const double* row = L.w.data() + o * L.in;
        for (std::size_t i = 0; i < L.in; ++i) (*din)[i] += d * row[i];
      }
    }
  };

  std::vector<double> dz, dh2, dh1;
  back(p.layers[3], g.layers[3], t.z, d4, &dz);
  back(p.layers[2], g.layers[2], t.h2, dz, &dh2);
  for (std::size_t i = 0; i < dh2.size(); ++i)
    if (t.a2[i] <= 0.0) dh2[i] = 0.0;
  back(p.layers[1], g.layers[1], t.h1, dh2, &dh1);
  for (std::size_t i = 0; i < dh1.size(); ++i)
    if (t.a1[i] <= 0.0) dh1[i] = 0.0;
  back(p.layers[0], g.layers[0], s.x, dh1, nullptr);
  return l;
}

void check_dim(const Params& p, const std::vector<double>& x) {
  if (x.size() != p.hyper.input_dim) {
    throw Error(ErrorKind::dimension_mismatch, "embedding has " + std::to_string(x.size()) + " components, projector expects " +
                                                   std::to_string(p.hyper.input_dim));
  }
}

}  // namespace

Params Params::zeros(const Hyper& h) {
  Params p;
  p.hyper = h;
  p.layers = {make_layer(h.input_dim, h.hidden1), make_layer(h.hidden1, h.hidden2), make_layer(h.hidden2, h.latent),
              make_layer(h.latent, 2)};
  return p;
}

Params Params::init(const Hyper& h) {
  Params p = zeros(h);
  std::mt19937_64 rng(h.seed);
  for (auto& l : p.layers) {
    const double wb = std::sqrt(6.0 / static_cast<double>(l.in));
    const double bb = 1.0 / std::sqrt(static_cast<double>(l.in));
    for (double& w : l.w) w = uniform(rng, -wb, wb);
    for (double& b : l.b) b = uniform(rng, -bb, bb);
  }
  return p;
}

std::size_t Params::count() const {
  std::size_t n = 0;
  for (const auto& l : layers) n += l.w.size() + l.b.size();
  return n;
}

std::vector<double> Params::flat() const {
  std::vector<double> v;
  v.reserve(count());
  for (const auto& l : layers) {
    v.insert(v.end(), l.w.begin(), l.w.end());
    v.insert(v.end(), l.b.begin(), l.b.end());
  }
  return v;
}

void Params::set_flat(const std::vector<double>& v) {
  if (v.size() != count()) throw Error(ErrorKind::dimension_mismatch, "parameter vector has the wrong length");
  std::size_t k = 0;
  for (auto& l : layers) {
    for (double& w : l.w) w = v[k++];
    for (double& b : l.b) b = v[k++];
  }
}

std::vector<double> project(const Params& p, const std::vector<double>& embedding) {
  check_dim(p, embedding);
  return forward(p, embedding).z;
}

std::array<double, 2> head_logits(const Params& p, const std::vector<double>& z) {
  if (z.size() != p.hyper.latent) throw Error(ErrorKind::dimension_mismatch, "latent vector has the wrong length");
  std::vector<double> lg;
  affine(p.layers[3], z, lg);
  return {lg[0], lg[1]};
}

int classify_logits(const std::array<double, 2>& logits) { return logits[1] > logits[0] ? 1 : 0; }

int classify(const Params& p, const std::vector<double>& z) { return classify_logits(head_logits(p, z)); }

double cross_entropy(const std::array<double, 2>& logits, int label) {
  const double m = std::max(logits[0], logits[1]);
  const double lse = m + std::log(std::exp(logits[0] - m) + std::exp(logits[1] - m));
  return lse - logits[static_cast<std::size_t>(label)];
}

double loss(const Params& p, const std::vector<Sample>& data) {
  double s = 0.0;
  for (const auto& d : data) {
    check_dim(p, d.x);
    s += cross_entropy(forward(p, d.x).logits, d.label);
  }
  return s;
}

Params gradient(const Params& p, const std::vector<Sample>& data) {
  Params g = Params::zeros(p.hyper);
  for (const auto& d : data) {
    check_dim(p, d.x);
    accumulate(p, d, g);
  }
  return g;
}

Params train(const std::vector<Sample>& data, const Hyper& h, TrainReport* report) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t pos = 0;
  for (const auto& d : data) {
    if (d.label != 0 && d.label != 1) throw Error(ErrorKind::invalid_argument, "labels must be 0 or 1");
    pos += static_cast<std::size_t>(d.label);
  }
  if (pos < 2 || data.size() - pos < 2) {
    throw Error(ErrorKind::degenerate_labels, "training needs at least two samples of each class (have " +
                                                  std::to_string(pos) + " safe, " + std::to_string(data.size() - pos) +
                                                  " unsafe)");
  }
  if (h.batch == 0) throw Error(ErrorKind::invalid_argument, "batch size must be positive");

  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (data[a].label != data[b].label) return data[a].label < data[b].label;
    return data[a].x < data[b].x;
  });

  Params p = Params::init(h);
  for (const auto& d : data) check_dim(p, d.x);
  std::mt19937_64 rng(h.seed ^ 0x9e3779b97f4a7c15ULL);
  Params g = Params::zeros(h);
  Params m1 = Params::zeros(h), m2 = Params::zeros(h);
  constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
  double b1t = 1.0, b2t = 1.0;
  auto adam = [&](std::vector<double>& w, const std::vector<double>& gw, std::vector<double>& m, std::vector<double>& v,
                  double scale, double step) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double gi = gw[i] * scale;
      m[i] = b1 * m[i] + (1.0 - b1) * gi;
      v[i] = b2 * v[i] + (1.0 - b2) * gi * gi;
      w[i] -= step * m[i] / (std::sqrt(v[i] / (1.0 - b2t)) + eps);
    }
  };
  for (std::size_t epoch = 0; epoch < h.epochs; ++epoch) {
    shuffle(order, rng);
    for (std::size_t start = 0; start < order.size(); start += h.batch) {
      for (auto& l : g.layers) {
        std::fill(l.w.begin(), l.w.end(), 0.0);
        std::fill(l.b.begin(), l.b.end(), 0.0);
      }
      const std::size_t end = std::min(order.size(), start + h.batch);
      for (std::size_t k = start; k < end; ++k) accumulate(p, data[order[k]], g);
      b1t *= b1;
      b2t *= b2;
      const double scale = 1.0 / static_cast<double>(end - start);
      const double step = h.lr / (1.0 - b1t);
      for (std::size_t li = 0; li < 4; ++li) {
        adam(p.layers[li].w, g.layers[li].w, m1.layers[li].w, m2.layers[li].w, scale, step);
        adam(p.layers[li].b, g.layers[li].b, m1.layers[li].b, m2.layers[li].b, scale, step);
      }
    }
    if (report != nullptr) report->epoch_loss.push_back(loss(p, data) / static_cast<double>(data.size()));
  }
  if (report != nullptr) {
    report->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return p;
}

double grad_check(const Params& p, const std::vector<Sample>& data, std::size_t probes, std::uint64_t seed, double step,
                  const std::function<void(Params&)>& corrupt) {
  Params g = gradient(p, data);
  if (corrupt) corrupt(g);
  const auto analytic = g.flat();
  auto theta = p.flat();
  std::mt19937_64 rng(seed);
  Params q = p;
  double worst = 0.0;
  for (std::size_t k = 0; k < probes; ++k) {
    const std::size_t i = below(rng, theta.size());
    const double orig = theta[i];
    theta[i] = orig + step;
    q.set_flat(theta);
    const double up = loss(q, data);
    theta[i] = orig - step;
    q.set_flat(theta);
    const double down = loss(q, data);
    theta[i] = orig;
    const double numeric = (up - down) / (2.0 * step);
    const double denom = std::max({std::abs(numeric), std::abs(analytic[i]), 1e-6});
    worst = std::max(worst, std::abs(numeric - analytic[i]) / denom);
  }
  return worst;
}

// Checkpoint: "PCKP", u32 version, hyperparameters, then every parameter as
// a little-endian IEEE double.
namespace {
constexpr char kMagic[4] = {'P', 'C', 'K', 'P'};
constexpr std::uint32_t kVersion = 1;

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_f64(std::string& out, double d) {
  std::uint64_t v;
  std::memcpy(&v, &d, 8);
  put_u64(out, v);
}
struct Reader {
  const std::string& s;
  std::size_t pos = 0;
  std::uint64_t u64() {
    if (pos + 8 > s.size()) throw Error(ErrorKind::format_error, "truncated checkpoint");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
    pos += 8;
    return v;
  }
  double f64() {
    std::uint64_t v = u64();
    double d;
    std::memcpy(&d, &v, 8);
    return d;
  }
};
}  // namespace

std::string encode_checkpoint(const Params& p) {
  std::string out(kMagic, 4);
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((kVersion >> (8 * i)) & 0xff));
  const Hyper& h = p.hyper;
  for (std::uint64_t v : {std::uint64_t{h.input_dim}, std::uint64_t{h.hidden1}, std::uint64_t{h.hidden2},
                          std::uint64_t{h.latent}, std::uint64_t{h.batch}, std::uint64_t{h.epochs}, h.seed})
    put_u64(out, v);
  put_f64(out, h.lr);
  auto flat = p.flat();
  put_u64(out, flat.size());
  for (double d : flat) put_f64(out, d);
  return out;
}

Params decode_checkpoint(const std::string& bytes) {
  if (bytes.size() < 8 || bytes.compare(0, 4, kMagic, 4) != 0) throw Error(ErrorKind::format_error, "not a projector checkpoint");
  std::uint32_t version = 0;
  for (int i = 0; i < 4; ++i) version |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[4 + i])) << (8 * i);
  if (version != kVersion) throw Error(ErrorKind::format_error, "unsupported checkpoint version " + std::to_string(version));
  Reader r{bytes, 8};
  Hyper h;
  h.input_dim = r.u64();
  h.hidden1 = r.u64();
  h.hidden2 = r.u64();
  h.latent = r.u64();
  h.batch = r.u64();
  h.epochs = r.u64();
  h.seed = r.u64();
  h.lr = r.f64();
  Params p = Params::zeros(h);
  const std::uint64_t n = r.u64();
  if (n != p.count()) throw Error(ErrorKind::format_error, "checkpoint parameter count does not match its dimensions");
  std::vector<double> flat(n);
  for (auto& d : flat) d = r.f64();
  if (r.pos != bytes.size()) throw Error(ErrorKind::format_error, "trailing bytes in checkpoint");
  p.set_flat(flat);
  return p;
}

void save_checkpoint(const Params& p, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  const auto bytes = encode_checkpoint(p);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path.string());
}

Params load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return decode_checkpoint(ss.str());
}

}  // namespace plancheck::projector
