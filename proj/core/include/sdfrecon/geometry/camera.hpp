#pragma once

#include <string>
#include <vector>

#include "sdfrecon/geometry/ray.hpp"
#include "sdfrecon/math.hpp"

namespace sdfrecon {

// Pinhole camera. Convention: camera x right, y down, z forward; integer
// pixel coordinates are pixel centers. Pose is world-from-camera, so the
// camera center in world space is the translation.
class CameraModel {
 public:
  CameraModel() = default;
  CameraModel(double fx, double fy, double cx, double cy, int width, int height,
              const Mat3& rotation, const Vec3& translation);

  static CameraModel look_at(const Vec3& eye, const Vec3& target, const Vec3& world_up,
                             double fov_x_deg, int width, int height);

  double fx() const { return fx_; }
  double fy() const { return fy_; }
  double cx() const { return cx_; }
  double cy() const { return cy_; }
  int width() const { return width_; }
  int height() const { return height_; }
  const Mat3& rotation() const { return rotation_; }
  const Vec3& translation() const { return translation_; }
  Vec3 center() const { return translation_; }
  Vec3 forward() const { return rotation_.col(2); }

  bool pixel_in_bounds(double px, double py) const;

  // Ray through the (continuous) pixel coordinate; out-of-bounds rejected.
  Ray pixel_ray(double px, double py) const;

  struct Projection {
    double px = 0.0;
    double py = 0.0;
    double depth = 0.0;   // camera-space z
    bool in_front = false;
    bool in_bounds = false;
  };
  Projection project(const Vec3& world) const;

 private:
  double fx_ = 1.0, fy_ = 1.0, cx_ = 0.0, cy_ = 0.0;
  int width_ = 1, height_ = 1;
  Mat3 rotation_{Mat3::Identity()};
  Vec3 translation_{Vec3::Zero()};
};

struct CameraEntry {
  CameraModel camera;
  std::string image_file;
};

// JSON document: per-camera intrinsics, 3x4 row-major pose, image filename.
std::string cameras_to_json(const std::vector<CameraEntry>& cameras);
std::vector<CameraEntry> cameras_from_json(const std::string& text);
void save_cameras(const std::string& path, const std::vector<CameraEntry>& cameras);
std::vector<CameraEntry> load_cameras(const std::string& path);

}  // namespace sdfrecon
