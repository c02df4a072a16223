#include "pushrec/controllers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pushrec {

void PdGains::validate_nonnegative(const char* name) const {
  if (!(std::isfinite(kp) && std::isfinite(kd)))
    throw std::invalid_argument(std::string(name) + " gains must be finite");
  if (kp < 0.0 || kd < 0.0)
    throw std::invalid_argument(std::string(name) + " gains must be >= 0");
}

CpError cp_error(const CapturePointState& reference,
                 const CapturePointState& measured, const Vec2& reference_rate,
                 const Vec2& measured_rate) {
  return CpError{reference.xi_m - measured.xi_m,
                 reference_rate - measured_rate};
}

Vec2 cp_pd_torque(const CpError& e, const PdGains& gains) {
  return Vec2(gains.kp * e.error_m.y() + gains.kd * e.error_rate_mps.y(),
              gains.kp * e.error_m.x() + gains.kd * e.error_rate_mps.x());
}

Vec2 ankle_torque_pd(const CpError& e, const PdGains& gains,
                     const SupportPolygon& polygon, const RobotParams& params) {
  return max_ankle_torque(polygon, params).clamp(cp_pd_torque(e, gains));
}

Vec2 flywheel_drive_from_hip_torque(const Vec2& tau_hip_Nm) {
  // Pitch drive from the sagittal command, roll drive from the frontal one.
  return Vec2(-tau_hip_Nm.y(), tau_hip_Nm.x());
}

Vec2 hdot_from_flywheel_drive(const Vec2& drive_Nm) {
  return Vec2(drive_Nm.y(), drive_Nm.x());
}

Vec2 guard_flywheel_drive(const Vec2& drive_Nm, const Vec2& angle_rad,
                          const Vec2& rate_radps, const RobotParams& params,
                          bool* engaged) {
  (void)rate_radps;
  const double angle_lim = params.flywheel_angle_limit_rad;
  Vec2 out = drive_Nm;
  for (int axis = 0; axis < 2; ++axis) {
    const double angle = angle_rad[axis];
    if (std::abs(angle) > angle_lim) {
      out[axis] = -std::copysign(params.flywheel_torque_limit_Nm, angle);
    } else if (std::abs(angle) >= angle_lim && angle * out[axis] > 0.0) {
      out[axis] = 0.0;
    }
    if (engaged && out[axis] != drive_Nm[axis]) *engaged = true;
  }
  return out;
}

Vec2 hip_torque_pd(const CpError& e, const PdGains& gains,
                   const RobotParams& params, const Vec2& flywheel_angle_rad,
                   const Vec2& flywheel_rate_radps) {
  const double lim = params.flywheel_torque_limit_Nm;
  Vec2 tau = cp_pd_torque(e, gains);
  tau.x() = std::clamp(tau.x(), -lim, lim);
  tau.y() = std::clamp(tau.y(), -lim, lim);

  const Vec2 drive =
      guard_flywheel_drive(flywheel_drive_from_hip_torque(tau),
                           flywheel_angle_rad, flywheel_rate_radps, params);
  return Vec2(drive.y(), -drive.x());  // back to torque convention
}

PositionCommand position_command_pd(const CpError& e, const JointGains& gains,
                                    const StrategyFlags& flags,
                                    const JointLimits& limits) {
  const auto row = [&e](const PdGains& g, int axis, double sign) {
    return sign * (g.kp * e.error_m[axis] + g.kd * e.error_rate_mps[axis]);
  };
  const auto clip = [](Vec2 v, double lim) {
    return Vec2(std::clamp(v.x(), -lim, lim), std::clamp(v.y(), -lim, lim));
  };

  PositionCommand cmd;
  if (flags.ankle) {
    cmd.ankle_rad = clip(
        Vec2(row(gains.ankle, 0, 1.0), row(gains.ankle, 1, 1.0)),
        limits.ankle_rad);
  }
  // Flywheel joints flip the frontal row.
  if (flags.hip) {
    cmd.hip_rad = clip(Vec2(row(gains.hip, 0, 1.0), row(gains.hip, 1, -1.0)),
                       limits.hip_rad);
  }
  if (flags.arm) {
    cmd.arm_rad = clip(Vec2(row(gains.arm, 0, 1.0), row(gains.arm, 1, -1.0)),
                       limits.arm_rad);
    cmd.elbow_rad =
        clip(Vec2(row(gains.elbow, 0, 1.0), row(gains.elbow, 1, -1.0)),
             limits.elbow_rad);
  }
  return cmd;
}

void ServoParams::validate() const {
  if (!(std::isfinite(stiffness_Nm_per_rad) && stiffness_Nm_per_rad >= 0.0 &&
        std::isfinite(damping_Nm_s_per_rad) && damping_Nm_s_per_rad >= 0.0 &&
        std::isfinite(torque_limit_Nm) && torque_limit_Nm >= 0.0))
    throw std::invalid_argument("servo parameters must be finite and >= 0");
}

double servo_torque(double commanded_angle_rad, double actual_angle_rad,
                    double actual_rate_radps, const ServoParams& servo) {
  const double tau =
      servo.stiffness_Nm_per_rad * (commanded_angle_rad - actual_angle_rad) -
      servo.damping_Nm_s_per_rad * actual_rate_radps;
  return std::clamp(tau, -servo.torque_limit_Nm, servo.torque_limit_Nm);
}

}  // namespace pushrec
