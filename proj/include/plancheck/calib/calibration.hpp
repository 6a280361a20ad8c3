#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace plancheck::calib {

/// A calibration sample in latent space.
struct Point {
  std::vector<double> z;
  int y_safe = 0;  // ground truth: did the interpreter agree with the checker
  int y_hat = 0;   // classifier output
};

/// Distances from one centroid to every calibration sample, by class.
struct Side {
  std::vector<double> centroid;
  std::vector<double> same;      // distances of samples of the centroid's class, ascending
  std::vector<double> opposite;  // distances of the other class, ascending

  std::size_t size() const { return same.size() + opposite.size(); }
  double prior() const;  // fraction of the side's samples of the other class
  /// Fraction of opposite-class distances strictly greater than d.
  double survival(double d) const;
  /// Number of samples with distance ≤ d.
  std::size_t within(double d) const;

  bool operator==(const Side&) const = default;
};

struct Table {
  Side unsafe;  // class 0
  Side safe;    // class 1
  std::size_t n = 0;

  const Side& side(int cls) const { return cls == 1 ? safe : unsafe; }

  nlohmann::json to_json() const;
  static Table from_json(const nlohmann::json& doc);

  bool operator==(const Table&) const = default;
};

double distance(const std::vector<double>& a, const std::vector<double>& b);

/// Centroids are means of correctly classified samples per class; both
/// sides then hold the distances of all samples.
Table calibrate(const std::vector<Point>& points);

struct Guarantee {
  int nearest = 0;  // 1 = safe centroid
  double d_safe = 0.0, d_unsafe = 0.0;
  double d_prime = 0.0;
  double p_hat = 0.0;
  std::size_t support = 0;
  bool low_support = true;
};

inline constexpr std::size_t kMinSupport = 5;

/// p̂ = 1 − (1 − F_C(d′)) · prior / Pr[dist ≤ d′], with empirical estimates
/// from the nearest centroid's side (ties go to unsafe), the denominator
/// floored at 1/N and the result clamped to [0, 1].
Guarantee guarantee(const Table& t, const std::vector<double>& z);

struct Verdict {
  int y = 0;
  int y_hat_safe = 0;
  bool complies = false;
  Guarantee g;
};

/// The interpreter's label stands when the classifier calls the sample
/// safe and is inverted when it calls it unsafe.
bool complies(int y, int y_hat_safe);

}  // namespace plancheck::calib
