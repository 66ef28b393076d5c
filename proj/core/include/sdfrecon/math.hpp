#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace sdfrecon {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Matrix3Xd = Eigen::Matrix<double, 3, Eigen::Dynamic>;

inline double sqr(double x) { return x * x; }

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

inline Vec3 clamp01(const Vec3& c) {
  return Vec3(clamp01(c.x()), clamp01(c.y()), clamp01(c.z()));
}

inline double logistic(double z) {
  // Overflow-safe in both tails.
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

struct Aabb {
  Vec3 lo{-1.0, -1.0, -1.0};
  Vec3 hi{1.0, 1.0, 1.0};

  Vec3 extent() const { return hi - lo; }
  bool contains(const Vec3& p) const {
    return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
  }
};

}  // namespace sdfrecon
