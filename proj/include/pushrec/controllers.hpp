#pragma once

#include "pushrec/capture_point.hpp"
#include "pushrec/model.hpp"
#include "pushrec/support_polygon.hpp"

namespace pushrec {

struct PdGains {
  double kp = 0.0;
  double kd = 0.0;

  void validate_nonnegative(const char* name) const;
};

/// Capture-point tracking error, reference minus measured.
struct CpError {
  Vec2 error_m = Vec2::Zero();
  Vec2 error_rate_mps = Vec2::Zero();
};

CpError cp_error(const CapturePointState& reference,
                 const CapturePointState& measured, const Vec2& reference_rate,
                 const Vec2& measured_rate);

struct TorqueCommand {
  Vec2 ankle_Nm = Vec2::Zero();
  Vec2 hip_Nm = Vec2::Zero();
};

/// Unsaturated PD with the shared axis pairing: tau_y is driven by the x
/// error, tau_x by the y error.
Vec2 cp_pd_torque(const CpError& e, const PdGains& gains);

/// Angle-limit guard for a flywheel drive (pitch, roll): outward drive is
/// zeroed at the limit and replaced by a full inward torque past it. Sets
/// *engaged when it alters the drive.
Vec2 guard_flywheel_drive(const Vec2& drive_Nm, const Vec2& angle_rad,
                          const Vec2& rate_radps, const RobotParams& params,
                          bool* engaged = nullptr);

/// Ankle PD on the capture-point error. Axis pairing follows the torque
/// convention of cop_from_ankle_torque: tau_y acts on x, tau_x on y.
/// Saturated so the mapped CoP stays on the support polygon.
Vec2 ankle_torque_pd(const CpError& e, const PdGains& gains,
                     const SupportPolygon& polygon, const RobotParams& params);

/// Flywheel PD on the capture-point error, same axis pairing, saturated to
/// the flywheel torque limit. When the flywheel angle is at its limit and
/// the command would push it further out, the outward component is zeroed;
/// past the limit the command is replaced by a full inward torque so the
/// wheel is driven back toward zero.
Vec2 hip_torque_pd(const CpError& e, const PdGains& gains,
                   const RobotParams& params, const Vec2& flywheel_angle_rad,
                   const Vec2& flywheel_rate_radps);

/// Flywheel drive per motion axis (pitch, roll) realizing the commanded hip
/// torque: the resulting pivot offset opposes the error on both axes.
Vec2 flywheel_drive_from_hip_torque(const Vec2& tau_hip_Nm);

/// Momentum-rate vector (Hdot_x, Hdot_y) produced by a flywheel drive.
Vec2 hdot_from_flywheel_drive(const Vec2& drive_Nm);

/// Joint-angle offsets commanded on top of the nominal posture.
struct PositionCommand {
  Vec2 ankle_rad = Vec2::Zero();
  Vec2 hip_rad = Vec2::Zero();
  Vec2 arm_rad = Vec2::Zero();
  Vec2 elbow_rad = Vec2::Zero();
};

/// Per-joint feedback gains, in rad per meter of capture-point error.
/// Sagittal rows are kp e_x + kd ed_x; the frontal rows of the flywheel
/// joints (hip, arm, elbow) carry a flipped sign so one gain set serves
/// both axes. Stabilizing signs: ankle positive, flywheel joints negative.
struct JointGains {
  PdGains ankle;
  PdGains hip;
  PdGains arm;
  PdGains elbow;
};

/// Symmetric command clip per joint, radians.
struct JointLimits {
  double ankle_rad = 0.6;
  double hip_rad = 0.6;
  double arm_rad = 1.2;
  double elbow_rad = 1.2;
};

struct StrategyFlags {
  bool ankle = true;
  bool hip = true;
  bool arm = true;
};

/// Angle offsets for the position-controlled servos. Disabled strategies
/// contribute exactly zero.
PositionCommand position_command_pd(const CpError& e, const JointGains& gains,
                                    const StrategyFlags& flags,
                                    const JointLimits& limits);

/// Stiff position servo: tau = k (commanded - actual) - d rate, clamped.
struct ServoParams {
  double stiffness_Nm_per_rad = 20.0;
  double damping_Nm_s_per_rad = 0.5;
  double torque_limit_Nm = 3.0;

  void validate() const;
};

double servo_torque(double commanded_angle_rad, double actual_angle_rad,
                    double actual_rate_radps, const ServoParams& servo);

}  // namespace pushrec
