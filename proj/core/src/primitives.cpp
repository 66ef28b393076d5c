#include "sdfrecon/geometry/primitives.hpp"

#include <limits>
#include <stdexcept>

namespace sdfrecon {

SphereField::SphereField(const Vec3& center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("SphereField: radius must be positive");
}

double SphereField::distance(const Vec3& p) const { return (p - center_).norm() - radius_; }

Vec3 SphereField::gradient(const Vec3& p) const {
  const Vec3 d = p - center_;
  const double n = d.norm();
  if (n < kDegenerateGradientNorm) return Vec3::Zero();  // singular at the center
  return d / n;
}

PlaneField::PlaneField(const Vec3& normal, double offset) : normal_(normal), offset_(offset) {
  const double n = normal_.norm();
  if (n < 1e-12) throw std::invalid_argument("PlaneField: zero normal");
  normal_ /= n;
}

double PlaneField::distance(const Vec3& p) const { return normal_.dot(p) - offset_; }

Vec3 PlaneField::gradient(const Vec3&) const { return normal_; }

BoxField::BoxField(const Vec3& center, const Vec3& half_extents)
    : center_(center), half_(half_extents) {
  if (!(half_.minCoeff() > 0.0)) throw std::invalid_argument("BoxField: half extents must be positive");
}

double BoxField::distance(const Vec3& p) const {
  const Vec3 q = (p - center_).cwiseAbs() - half_;
  const Vec3 outside = q.cwiseMax(0.0);
  return outside.norm() + std::min(q.maxCoeff(), 0.0);
}

Vec3 BoxField::gradient(const Vec3& p) const {
  const Vec3 local = p - center_;
  const Vec3 q = local.cwiseAbs() - half_;
  const Vec3 outside = q.cwiseMax(0.0);
  const double out_norm = outside.norm();
  Vec3 g = Vec3::Zero();
  if (out_norm > 1e-15) {
    for (int a = 0; a < 3; ++a) {
      if (q[a] > 0.0) g[a] = (local[a] >= 0.0 ? 1.0 : -1.0) * q[a] / out_norm;
    }
    return g;
  }
  // Inside: distance to the nearest face; gradient is that face's normal.
  int axis = 0;
  for (int a = 1; a < 3; ++a)
    if (q[a] > q[axis]) axis = a;
  g[axis] = local[axis] >= 0.0 ? 1.0 : -1.0;
  return g;
}

UnionField::UnionField(std::vector<std::shared_ptr<const ScalarField>> children)
    : children_(std::move(children)) {
  if (children_.empty()) throw std::invalid_argument("UnionField: no children");
  for (const auto& c : children_)
    if (!c) throw std::invalid_argument("UnionField: null child");
}

double UnionField::distance(const Vec3& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : children_) best = std::min(best, c->distance(p));
  return best;
}

int UnionField::closest_child(const Vec3& p) const {
  int best = 0;
  double best_d = children_[0]->distance(p);
  for (int i = 1; i < static_cast<int>(children_.size()); ++i) {
    const double d = children_[i]->distance(p);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

Vec3 UnionField::gradient(const Vec3& p) const {
  return children_[closest_child(p)]->gradient(p);
}

TransformedField::TransformedField(std::shared_ptr<const ScalarField> inner, const Mat3& rotation,
                                   const Vec3& translation)
    : inner_(std::move(inner)), rotation_(rotation), translation_(translation) {
  if (!inner_) throw std::invalid_argument("TransformedField: null inner field");
  if ((rotation_ * rotation_.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-9 ||
      rotation_.determinant() < 0.0)
    throw std::invalid_argument("TransformedField: rotation must be a proper rotation");
}

double TransformedField::distance(const Vec3& p) const {
  return inner_->distance(rotation_.transpose() * (p - translation_));
}

Vec3 TransformedField::gradient(const Vec3& p) const {
  return rotation_ * inner_->gradient(rotation_.transpose() * (p - translation_));
}

std::shared_ptr<const ScalarField> make_sphere(const Vec3& center, double radius) {
  return std::make_shared<SphereField>(center, radius);
}
std::shared_ptr<const ScalarField> make_plane(const Vec3& normal, double offset) {
  return std::make_shared<PlaneField>(normal, offset);
}
std::shared_ptr<const ScalarField> make_box(const Vec3& center, const Vec3& half_extents) {
  return std::make_shared<BoxField>(center, half_extents);
}
std::shared_ptr<const ScalarField> make_union(
    std::vector<std::shared_ptr<const ScalarField>> children) {
  return std::make_shared<UnionField>(std::move(children));
}
std::shared_ptr<const ScalarField> make_transformed(std::shared_ptr<const ScalarField> inner,
                                                    const Mat3& rotation,
                                                    const Vec3& translation) {
  return std::make_shared<TransformedField>(std::move(inner), rotation, translation);
}

}  // namespace sdfrecon
