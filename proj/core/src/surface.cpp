#include "sdfrecon/geometry/surface.hpp"

#include <cmath>
#include <stdexcept>

namespace sdfrecon {

namespace {

SurfaceHit finish_hit(const ScalarField& field, const Ray& ray, double t, double f,
                      const SurfaceLocateConfig& cfg) {
  SurfaceHit hit;
  hit.t = t;
  hit.point = ray.at(t);
  hit.valid = std::abs(f) < cfg.tolerance;
  const GradientResult g = field.gradient_checked(hit.point);
  hit.degenerate_normal = g.degenerate;
  if (!g.degenerate) hit.normal = g.value.normalized();
  return hit;
}

}  // namespace

SurfaceHit refine_surface(const ScalarField& field, const Ray& ray, double t_lo, double f_lo,
                          double t_hi, double f_hi, const SurfaceLocateConfig& cfg) {
  if (f_lo == 0.0) return finish_hit(field, ray, t_lo, f_lo, cfg);
  if (f_hi == 0.0) return finish_hit(field, ray, t_hi, f_hi, cfg);
  double best_t = 0.5 * (t_lo + t_hi);
  double best_f = field.distance(ray.at(best_t));
  for (int i = 0; i < cfg.bisect_iters && std::abs(best_f) >= cfg.tolerance; ++i) {
    if ((best_f < 0.0) == (f_lo < 0.0)) {
      t_lo = best_t;
      f_lo = best_f;
    } else {
      t_hi = best_t;
      f_hi = best_f;
    }
    best_t = 0.5 * (t_lo + t_hi);
    best_f = field.distance(ray.at(best_t));
  }
  return finish_hit(field, ray, best_t, best_f, cfg);
}

SurfaceHit locate_surface(const ScalarField& field, const Ray& ray, double t_near, double t_far,
                          const SurfaceLocateConfig& cfg) {
  if (!(t_near < t_far)) throw std::invalid_argument("locate_surface: t_near must be < t_far");
  if (cfg.steps < 2) throw std::invalid_argument("locate_surface: need at least 2 steps");

  Matrix3Xd pts(3, cfg.steps + 1);
  const double dt = (t_far - t_near) / cfg.steps;
  for (int i = 0; i <= cfg.steps; ++i) pts.col(i) = ray.at(t_near + i * dt);
  VectorXd f;
  field.distance_batch(pts, f);

  for (int i = 0; i < cfg.steps; ++i) {
    const double f0 = f[i], f1 = f[i + 1];
    if (f0 == 0.0) return finish_hit(field, ray, t_near + i * dt, f0, cfg);
    if ((f0 > 0.0) != (f1 > 0.0))
      return refine_surface(field, ray, t_near + i * dt, f0, t_near + (i + 1) * dt, f1, cfg);
  }
  if (f[cfg.steps] == 0.0) return finish_hit(field, ray, t_far, 0.0, cfg);
  return SurfaceHit{};  // no sign change: no intersection
}

}  // namespace sdfrecon
