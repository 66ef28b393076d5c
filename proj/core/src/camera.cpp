#include "sdfrecon/geometry/camera.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sdfrecon {

CameraModel::CameraModel(double fx, double fy, double cx, double cy, int width, int height,
                         const Mat3& rotation, const Vec3& translation)
    : fx_(fx), fy_(fy), cx_(cx), cy_(cy), width_(width), height_(height),
      rotation_(rotation), translation_(translation) {
  if (!(fx > 0.0) || !(fy > 0.0)) throw std::invalid_argument("CameraModel: focal lengths must be positive");
  if (width < 1 || height < 1) throw std::invalid_argument("CameraModel: empty image plane");
  if (!(cx >= 0.0 && cx < width)) throw std::invalid_argument("CameraModel: cx out of range");
  if (!(cy >= 0.0 && cy < height)) throw std::invalid_argument("CameraModel: cy out of range");
  if ((rotation_ * rotation_.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("CameraModel: rotation not orthonormal");
  if (rotation_.determinant() < 0.0)
    throw std::invalid_argument("CameraModel: rotation must have determinant +1");
}

CameraModel CameraModel::look_at(const Vec3& eye, const Vec3& target, const Vec3& world_up,
                                 double fov_x_deg, int width, int height) {
  const Vec3 forward = (target - eye).normalized();
  Vec3 right = forward.cross(world_up).normalized();
  if (!right.allFinite() || right.norm() < 1e-9) {
    // Looking straight along up; pick an arbitrary right axis.
    right = forward.cross(Vec3::UnitX()).normalized();
  }
  const Vec3 down = forward.cross(right).normalized();
  Mat3 r;
  r.col(0) = right;
  r.col(1) = down;
  r.col(2) = forward;
  const double f = 0.5 * width / std::tan(0.5 * fov_x_deg * M_PI / 180.0);
  return CameraModel(f, f, 0.5 * (width - 1), 0.5 * (height - 1), width, height, r, eye);
}

bool CameraModel::pixel_in_bounds(double px, double py) const {
  return px >= -0.5 && px <= width_ - 0.5 && py >= -0.5 && py <= height_ - 0.5;
}

Ray CameraModel::pixel_ray(double px, double py) const {
  if (!pixel_in_bounds(px, py))
    throw std::out_of_range("pixel_ray: pixel outside image bounds");
  const Vec3 dir_cam((px - cx_) / fx_, (py - cy_) / fy_, 1.0);
  return Ray(translation_, rotation_ * dir_cam);
}

CameraModel::Projection CameraModel::project(const Vec3& world) const {
  const Vec3 cam = rotation_.transpose() * (world - translation_);
  Projection p;
  p.depth = cam.z();
  p.in_front = cam.z() > 1e-9;
  if (p.in_front) {
    p.px = fx_ * cam.x() / cam.z() + cx_;
    p.py = fy_ * cam.y() / cam.z() + cy_;
    p.in_bounds = pixel_in_bounds(p.px, p.py);
  }
  return p;
}

namespace {

nlohmann::json camera_to_json(const CameraEntry& e) {
  const CameraModel& c = e.camera;
  std::vector<double> pose(12);
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) pose[r * 4 + k] = c.rotation()(r, k);
    pose[r * 4 + 3] = c.translation()[r];
  }
  return nlohmann::json{{"fx", c.fx()},       {"fy", c.fy()},
                        {"cx", c.cx()},       {"cy", c.cy()},
                        {"width", c.width()}, {"height", c.height()},
                        {"pose", pose},       {"image", e.image_file}};
}

CameraEntry camera_from_json(const nlohmann::json& j) {
  const auto pose = j.at("pose").get<std::vector<double>>();
  if (pose.size() != 12) throw std::runtime_error("cameras json: pose must have 12 entries");
  Mat3 r;
  Vec3 t;
  for (int row = 0; row < 3; ++row) {
    for (int k = 0; k < 3; ++k) r(row, k) = pose[row * 4 + k];
    t[row] = pose[row * 4 + 3];
  }
  CameraEntry e;
  e.camera = CameraModel(j.at("fx"), j.at("fy"), j.at("cx"), j.at("cy"),
                         j.at("width"), j.at("height"), r, t);
  e.image_file = j.value("image", "");
  return e;
}

}  // namespace

std::string cameras_to_json(const std::vector<CameraEntry>& cameras) {
  nlohmann::json j;
  j["cameras"] = nlohmann::json::array();
  for (const auto& c : cameras) j["cameras"].push_back(camera_to_json(c));
  return j.dump(2);
}

std::vector<CameraEntry> cameras_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<CameraEntry> out;
  for (const auto& cj : j.at("cameras")) out.push_back(camera_from_json(cj));
  return out;
}

void save_cameras(const std::string& path, const std::vector<CameraEntry>& cameras) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << cameras_to_json(cameras) << "\n";
}

std::vector<CameraEntry> load_cameras(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return cameras_from_json(text);
}

}  // namespace sdfrecon
