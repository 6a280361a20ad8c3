#include "plancheck/calib/calibration.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "plancheck/error.hpp"

namespace plancheck::calib {

namespace {
constexpr const char* kSchema = "plancheck.calibration/1";
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::dimension_mismatch, "latent vectors differ in length");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double Side::prior() const {
  return size() == 0 ? 0.0 : static_cast<double>(opposite.size()) / static_cast<double>(size());
}

double Side::survival(double d) const {
  if (opposite.empty()) return 1.0;
  auto it = std::upper_bound(opposite.begin(), opposite.end(), d);
  return static_cast<double>(opposite.end() - it) / static_cast<double>(opposite.size());
}

std::size_t Side::within(double d) const {
  return static_cast<std::size_t>(std::upper_bound(same.begin(), same.end(), d) - same.begin()) +
         static_cast<std::size_t>(std::upper_bound(opposite.begin(), opposite.end(), d) - opposite.begin());
}

Table calibrate(const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorKind::degenerate_calibration, "no calibration samples");
  const std::size_t m = points.front().z.size();
  std::vector<double> sum[2] = {std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
  std::size_t count[2] = {0, 0};
  for (const auto& p : points) {
    if (p.z.size() != m) throw Error(ErrorKind::dimension_mismatch, "latent vectors differ in length");
    if (p.y_safe != p.y_hat) continue;
    const auto c = static_cast<std::size_t>(p.y_safe);
    for (std::size_t i = 0; i < m; ++i) sum[c][i] += p.z[i];
    ++count[c];
  }
  for (int c = 0; c < 2; ++c) {
    if (count[c] == 0) {
      throw Error(ErrorKind::degenerate_calibration,
                  std::string("no correctly classified ") + (c ? "safe" : "unsafe") + " calibration samples");
    }
  }
  Table t;
  t.n = points.size();
  t.unsafe.centroid = sum[0];
  t.safe.centroid = sum[1];
  for (double& x : t.unsafe.centroid) x /= static_cast<double>(count[0]);
  for (double& x : t.safe.centroid) x /= static_cast<double>(count[1]);
  for (const auto& p : points) {
    for (int c = 0; c < 2; ++c) {
      Side& side = c == 1 ? t.safe : t.unsafe;
      (p.y_safe == c ? side.same : side.opposite).push_back(distance(p.z, side.centroid));
    }
  }
  for (Side* s : {&t.safe, &t.unsafe}) {
    std::sort(s->same.begin(), s->same.end());
    std::sort(s->opposite.begin(), s->opposite.end());
  }
  return t;
}

Guarantee guarantee(const Table& t, const std::vector<double>& z) {
  Guarantee g;
  g.d_safe = distance(z, t.safe.centroid);
  g.d_unsafe = distance(z, t.unsafe.centroid);
  g.nearest = g.d_safe < g.d_unsafe ? 1 : 0;
  g.d_prime = std::min(g.d_safe, g.d_unsafe);
  const Side& s = t.side(g.nearest);
  g.support = s.within(g.d_prime);
  g.low_support = g.support < kMinSupport;
  const double n = static_cast<double>(s.size());
  const double denom = std::max(static_cast<double>(g.support), 1.0) / n;
  const double p = 1.0 - (1.0 - s.survival(g.d_prime)) * s.prior() / denom;
  g.p_hat = std::clamp(p, 0.0, 1.0);
  return g;
}

bool complies(int y, int y_hat_safe) { return (y_hat_safe == 1 && y == 1) || (y_hat_safe == 0 && y == 0); }

nlohmann::json Table::to_json() const {
  auto side = [](const Side& s) {
    return nlohmann::json{{"centroid", s.centroid}, {"same", s.same}, {"opposite", s.opposite}};
  };
  return {{"schema", kSchema}, {"n", n}, {"safe", side(safe)}, {"unsafe", side(unsafe)}};
}

Table Table::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("schema", std::string()) != kSchema) {
    throw Error(ErrorKind::format_error, std::string("calibration table must declare schema ") + kSchema);
  }
  try {
    auto side = [](const nlohmann::json& j) {
      Side s;
      s.centroid = j.at("centroid").get<std::vector<double>>();
      s.same = j.at("same").get<std::vector<double>>();
      s.opposite = j.at("opposite").get<std::vector<double>>();
      if (!std::is_sorted(s.same.begin(), s.same.end()) || !std::is_sorted(s.opposite.begin(), s.opposite.end())) {
        throw Error(ErrorKind::format_error, "calibration distances must be sorted");
      }
      return s;
    };
    Table t;
    t.n = doc.at("n").get<std::size_t>();
    t.safe = side(doc.at("safe"));
    t.unsafe = side(doc.at("unsafe"));
    if (t.safe.size() != t.n || t.unsafe.size() != t.n) throw Error(ErrorKind::format_error, "calibration table size mismatch");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::format_error, std::string("malformed calibration table: ") + e.what());
  }
}

}  // namespace plancheck::calib
