#include "pushrec/support_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pushrec {

void FootGeometry::validate() const {
  if (!(std::isfinite(length_m) && length_m > 0.0))
    throw std::invalid_argument("foot length_m must be > 0");
  if (!(std::isfinite(width_m) && width_m > 0.0))
    throw std::invalid_argument("foot width_m must be > 0");
  if (!ankle_offset_m.allFinite() ||
      std::abs(ankle_offset_m.x()) >= 0.5 * length_m ||
      std::abs(ankle_offset_m.y()) >= 0.5 * width_m)
    throw std::invalid_argument(
        "ankle_offset_m must lie strictly inside the foot outline");
}

bool SupportPolygon::contains(const Vec2& p) const {
  return p.x() >= min_xy_m.x() && p.x() <= max_xy_m.x() &&
         p.y() >= min_xy_m.y() && p.y() <= max_xy_m.y();
}

SupportPolygon polygon_from_stance(const FootGeometry& foot,
                                   const Vec2& stance_center) {
  foot.validate();
  if (!stance_center.allFinite())
    throw std::invalid_argument("stance_center must be finite");
  const Vec2 foot_center = stance_center - foot.ankle_offset_m;
  const Vec2 half(0.5 * foot.length_m, 0.5 * foot.width_m);
  return SupportPolygon{foot_center - half, foot_center + half};
}

GroundPoint clamp_cop(const GroundPoint& p, const SupportPolygon& polygon) {
  GroundPoint out = p;
  out.role = GroundRole::CoP;
  out.xy_m.x() =
      std::clamp(p.xy_m.x(), polygon.min_xy_m.x(), polygon.max_xy_m.x());
  out.xy_m.y() =
      std::clamp(p.xy_m.y(), polygon.min_xy_m.y(), polygon.max_xy_m.y());
  return out;
}

Vec2 TorqueBounds::clamp(const Vec2& tau) const {
  return Vec2(std::clamp(tau.x(), min_Nm.x(), max_Nm.x()),
              std::clamp(tau.y(), min_Nm.y(), max_Nm.y()));
}

TorqueBounds max_ankle_torque(const SupportPolygon& polygon,
                              const RobotParams& params) {
  const double fz = params.vertical_force_N();
  TorqueBounds b;
  b.min_Nm = Vec2(fz * polygon.min_xy_m.y(), fz * polygon.min_xy_m.x());
  b.max_Nm = Vec2(fz * polygon.max_xy_m.y(), fz * polygon.max_xy_m.x());
  return b;
}

}  // namespace pushrec
