#pragma once

#include <cmath>
#include <vector>

#include "plancheck/projector/mlp.hpp"
#include "plancheck/random.hpp"

// Two Gaussian clouds at ±margin along a fixed random unit direction.
// The hyperplane orthogonal to that direction separates them up to noise.
inline std::vector<plancheck::projector::Sample> blobs(std::size_t n, std::uint64_t seed, std::size_t dim = 1536,
                                                       double margin = 0.2, double noise = 0.02) {
  std::mt19937_64 dir(42), rng(seed);
  std::vector<double> u(dim);
  double norm = 0.0;
  for (auto& x : u) {
    x = plancheck::gaussian(dir);
    norm += x * x;
  }
  for (auto& x : u) x /= std::sqrt(norm);
  std::vector<plancheck::projector::Sample> out;
  for (std::size_t i = 0; i < n; ++i) {
    plancheck::projector::Sample s;
    s.label = static_cast<int>(i % 2);
    s.x.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) s.x[k] = (s.label ? margin : -margin) * u[k] + noise * plancheck::gaussian(rng);
    out.push_back(std::move(s));
  }
  return out;
}

inline double holdout_accuracy(const plancheck::projector::Params& p,
                               const std::vector<plancheck::projector::Sample>& data) {
  std::size_t ok = 0;
  for (const auto& s : data) ok += plancheck::projector::classify(p, plancheck::projector::project(p, s.x)) == s.label;
  return static_cast<double>(ok) / static_cast<double>(data.size());
}
