#pragma once

#include <stdexcept>

#include "sdfrecon/math.hpp"

namespace sdfrecon {

struct Ray {
  Vec3 origin{Vec3::Zero()};
  Vec3 dir{Vec3::UnitZ()};

  Ray() = default;

  // Normalizes the direction; a zero or non-finite direction is rejected.
  Ray(const Vec3& o, const Vec3& d) : origin(o) {
    const double n = d.norm();
    if (!(n > 1e-12) || !d.allFinite())
      throw std::invalid_argument("Ray: degenerate direction");
    dir = d / n;
  }

  Vec3 at(double t) const { return origin + t * dir; }
};

}  // namespace sdfrecon
