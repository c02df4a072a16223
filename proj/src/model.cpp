#include "pushrec/model.hpp"

#include <cmath>
#include <stdexcept>

namespace pushrec {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void RobotParams::validate() const {
  require(std::isfinite(mass_kg) && mass_kg > 0.0, "mass_kg must be > 0");
  require(std::isfinite(com_height_m) && com_height_m > 0.0,
          "com_height_m must be > 0");
  require(std::isfinite(gravity_mps2) && gravity_mps2 > 0.0,
          "gravity_mps2 must be > 0");
  require(std::isfinite(flywheel_inertia_kgm2) && flywheel_inertia_kgm2 > 0.0,
          "flywheel_inertia_kgm2 must be > 0");
  require(std::isfinite(flywheel_angle_limit_rad) &&
              flywheel_angle_limit_rad >= 0.0,
          "flywheel_angle_limit_rad must be >= 0");
  require(std::isfinite(flywheel_torque_limit_Nm) &&
              flywheel_torque_limit_Nm >= 0.0,
          "flywheel_torque_limit_Nm must be >= 0");
}

double natural_frequency(const RobotParams& params) {
  return std::sqrt(params.gravity_mps2 / params.com_height_m);
}

bool CentroidalState::all_finite() const {
  return com_pos_m.allFinite() && com_vel_mps.allFinite() &&
         flywheel_angle_rad.allFinite() && flywheel_rate_radps.allFinite();
}

Vec2 flywheel_momentum(const CentroidalState& state, const RobotParams& params) {
  // Pitch rate carries H_y, roll rate carries H_x.
  return Vec2(params.flywheel_inertia_kgm2 * state.flywheel_rate_radps.y(),
              params.flywheel_inertia_kgm2 * state.flywheel_rate_radps.x());
}

Vec2 com_accel_lipm(const CentroidalState& state, const GroundPoint& cop,
                    const RobotParams& params) {
  const double w = natural_frequency(params);
  return w * w * (state.com_pos_m - cop.xy_m);
}

Vec2 com_accel_flywheel(const CentroidalState& state, const GroundPoint& cop,
                        const Vec2& hdot_Nm, const RobotParams& params) {
  const double mz = params.mass_kg * params.com_height_m;
  Vec2 accel = com_accel_lipm(state, cop, params);
  accel.x() -= hdot_Nm.y() / mz;
  accel.y() += hdot_Nm.x() / mz;
  return accel;
}

GroundPoint cmp_from_cop(const GroundPoint& cop, const Vec2& hdot_Nm,
                         const RobotParams& params) {
  const double fz = params.vertical_force_N();
  return cmp_point(Vec2(cop.xy_m.x() + hdot_Nm.y() / fz,
                        cop.xy_m.y() - hdot_Nm.x() / fz));
}

GroundPoint cop_from_ankle_torque(const Vec2& tau_ankle_Nm,
                                  const RobotParams& params) {
  const double fz = params.vertical_force_N();
  return cop_point(tau_ankle_Nm.y() / fz, tau_ankle_Nm.x() / fz);
}

}  // namespace pushrec
