#pragma once

#include "pushrec/model.hpp"

namespace pushrec {

/// Rectangular foot; ankle_offset_m is the ankle position relative to the
/// foot center (strictly inside the outline).
struct FootGeometry {
  double length_m = 0.15;
  double width_m = 0.08;
  Vec2 ankle_offset_m = Vec2::Zero();

  void validate() const;
};

/// Axis-aligned contact rectangle in the ground frame.
struct SupportPolygon {
  Vec2 min_xy_m = Vec2::Zero();
  Vec2 max_xy_m = Vec2::Zero();

  bool contains(const Vec2& p) const;  // boundary counts as inside
  Vec2 center() const { return 0.5 * (min_xy_m + max_xy_m); }
  Vec2 half_extent() const { return 0.5 * (max_xy_m - min_xy_m); }
};

/// Contact rectangle for a foot whose ankle sits at stance_center.
/// Throws std::invalid_argument on degenerate geometry.
SupportPolygon polygon_from_stance(const FootGeometry& foot,
                                   const Vec2& stance_center);

/// Componentwise clamp into the polygon; interior points pass through.
GroundPoint clamp_cop(const GroundPoint& p, const SupportPolygon& polygon);

/// Ankle torque intervals whose mapped CoP stays on the polygon.
/// tau_x is bounded by the y extent, tau_y by the x extent.
struct TorqueBounds {
  Vec2 min_Nm = Vec2::Zero();
  Vec2 max_Nm = Vec2::Zero();

  Vec2 clamp(const Vec2& tau) const;
};

TorqueBounds max_ankle_torque(const SupportPolygon& polygon,
                              const RobotParams& params);

}  // namespace pushrec
