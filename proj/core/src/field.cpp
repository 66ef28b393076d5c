#include "sdfrecon/geometry/field.hpp"

namespace sdfrecon {

void ScalarField::distance_batch(const Matrix3Xd& points, VectorXd& out) const {
  out.resize(points.cols());
  for (Eigen::Index i = 0; i < points.cols(); ++i) out[i] = distance(points.col(i));
}

Vec3 ScalarField::gradient(const Vec3& p) const { return numeric_gradient(*this, p); }

GradientResult ScalarField::gradient_checked(const Vec3& p) const {
  GradientResult r;
  r.value = gradient(p);
  r.degenerate = r.value.norm() < kDegenerateGradientNorm;
  return r;
}

Vec3 numeric_gradient(const ScalarField& field, const Vec3& p, double h) {
  Vec3 g;
  for (int a = 0; a < 3; ++a) {
    Vec3 lo = p, hi = p;
    lo[a] -= h;
    hi[a] += h;
    g[a] = (field.distance(hi) - field.distance(lo)) / (2.0 * h);
  }
  return g;
}

}  // namespace sdfrecon
