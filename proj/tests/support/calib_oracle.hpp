#pragma once

#include <cmath>
#include <vector>

#include "plancheck/calib/calibration.hpp"

// Direct enumeration: the share of calibration samples within d' of the
// nearest centroid that carry that centroid's class.
struct OracleGuarantee {
  int nearest;
  double d_prime;
  double p_hat;
  std::size_t support;
};

inline double oracle_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline std::vector<double> oracle_centroid(const std::vector<plancheck::calib::Point>& pts, int cls) {
  std::vector<double> c(pts.front().z.size(), 0.0);
  std::size_t n = 0;
  for (const auto& p : pts) {
    if (p.y_safe != cls || p.y_hat != cls) continue;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p.z[i];
    ++n;
  }
  for (auto& x : c) x /= static_cast<double>(n);
  return c;
}

inline OracleGuarantee oracle_guarantee(const std::vector<plancheck::calib::Point>& pts, const std::vector<double>& z) {
  const auto cs = oracle_centroid(pts, 1), cu = oracle_centroid(pts, 0);
  const double ds = oracle_dist(z, cs), du = oracle_dist(z, cu);
  const int nearest = ds < du ? 1 : 0;
  const auto& c = nearest ? cs : cu;
  const double d = std::min(ds, du);
  std::size_t within = 0, wrong = 0;
  for (const auto& p : pts) {
    if (oracle_dist(p.z, c) <= d) {
      ++within;
      wrong += p.y_safe != nearest;
    }
  }
  const double p = 1.0 - static_cast<double>(wrong) / static_cast<double>(within == 0 ? 1 : within);
  return {nearest, d, p, within};
}
