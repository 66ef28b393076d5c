#pragma once

#include "sdfrecon/math.hpp"

namespace sdfrecon {

struct GradientResult {
  Vec3 value{Vec3::Zero()};
  bool degenerate = false;  // |grad| < 1e-8
};

// Anything that maps a 3D point to a signed distance and a spatial gradient:
// analytic primitives, composed scenes, or a learned network.
class ScalarField {
 public:
  virtual ~ScalarField() = default;

  virtual double distance(const Vec3& p) const = 0;

  // Default loops over columns; network-backed fields override with a
  // batched matrix path.
  virtual void distance_batch(const Matrix3Xd& points, VectorXd& out) const;

  // Analytic where available; the base implementation falls back to central
  // finite differences with the given step.
  virtual Vec3 gradient(const Vec3& p) const;

  GradientResult gradient_checked(const Vec3& p) const;

  static constexpr double kDegenerateGradientNorm = 1e-8;
};

// Central finite differences, step h per axis.
Vec3 numeric_gradient(const ScalarField& field, const Vec3& p, double h = 1e-4);

}  // namespace sdfrecon
