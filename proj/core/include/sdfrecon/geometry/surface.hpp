#pragma once

#include "sdfrecon/geometry/field.hpp"
#include "sdfrecon/geometry/ray.hpp"

namespace sdfrecon {

struct SurfaceHit {
  double t = 0.0;
  Vec3 point{Vec3::Zero()};
  Vec3 normal{Vec3::Zero()};
  bool valid = false;
  bool degenerate_normal = false;
};

struct SurfaceLocateConfig {
  int steps = 128;          // fixed-step march resolution
  int bisect_iters = 32;
  double tolerance = 1e-4;  // |f| at the reported point
};

// Fixed-step march finds the first sign change of f along [t_near, t_far],
// then bisects. Sphere tracing is deliberately not used: learned fields
// violate the Lipschitz bound early in training.
SurfaceHit locate_surface(const ScalarField& field, const Ray& ray, double t_near, double t_far,
                          const SurfaceLocateConfig& cfg = {});

// Same bisection refinement when the caller already has a bracketing
// interval with f(lo) and f(hi) of opposite sign (or zero at an end).
SurfaceHit refine_surface(const ScalarField& field, const Ray& ray, double t_lo, double f_lo,
                          double t_hi, double f_hi, const SurfaceLocateConfig& cfg = {});

}  // namespace sdfrecon
