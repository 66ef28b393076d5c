#pragma once

#include <memory>
#include <vector>

#include "sdfrecon/geometry/field.hpp"

namespace sdfrecon {

// Exact signed distance; gradient is unit everywhere except the center.
class SphereField final : public ScalarField {
 public:
  SphereField(const Vec3& center, double radius);

  double distance(const Vec3& p) const override;
  Vec3 gradient(const Vec3& p) const override;

  const Vec3& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  Vec3 center_;
  double radius_;
};

// Half-space f(p) = n.p - offset; exact, constant unit gradient.
class PlaneField final : public ScalarField {
 public:
  PlaneField(const Vec3& normal, double offset);

  double distance(const Vec3& p) const override;
  Vec3 gradient(const Vec3& p) const override;

  const Vec3& normal() const { return normal_; }
  double offset() const { return offset_; }

 private:
  Vec3 normal_;
  double offset_;
};

// Exact outside and inside; gradient is unit except on edge/corner loci.
class BoxField final : public ScalarField {
 public:
  BoxField(const Vec3& center, const Vec3& half_extents);

  double distance(const Vec3& p) const override;
  Vec3 gradient(const Vec3& p) const override;

  const Vec3& center() const { return center_; }
  const Vec3& half_extents() const { return half_; }

 private:
  Vec3 center_;
  Vec3 half_;
};

// min over children: exact outside, a lower bound (in magnitude) inside
// overlapping regions. Gradient follows the closest child; ties pick the
// first child for determinism.
class UnionField final : public ScalarField {
 public:
  explicit UnionField(std::vector<std::shared_ptr<const ScalarField>> children);

  double distance(const Vec3& p) const override;
  Vec3 gradient(const Vec3& p) const override;

  int closest_child(const Vec3& p) const;
  const std::vector<std::shared_ptr<const ScalarField>>& children() const { return children_; }

 private:
  std::vector<std::shared_ptr<const ScalarField>> children_;
};

// Rigid motion wrapper: f(p) = inner(R^T (p - t)). Signed distance is
// preserved exactly under rigid motions.
class TransformedField final : public ScalarField {
 public:
  TransformedField(std::shared_ptr<const ScalarField> inner, const Mat3& rotation,
                   const Vec3& translation);

  double distance(const Vec3& p) const override;
  Vec3 gradient(const Vec3& p) const override;

 private:
  std::shared_ptr<const ScalarField> inner_;
  Mat3 rotation_;
  Vec3 translation_;
};

std::shared_ptr<const ScalarField> make_sphere(const Vec3& center, double radius);
std::shared_ptr<const ScalarField> make_plane(const Vec3& normal, double offset);
std::shared_ptr<const ScalarField> make_box(const Vec3& center, const Vec3& half_extents);
std::shared_ptr<const ScalarField> make_union(
    std::vector<std::shared_ptr<const ScalarField>> children);
std::shared_ptr<const ScalarField> make_transformed(std::shared_ptr<const ScalarField> inner,
                                                    const Mat3& rotation,
                                                    const Vec3& translation);

}  // namespace sdfrecon
