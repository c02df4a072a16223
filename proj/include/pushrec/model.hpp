#pragma once

#include <Eigen/Core>

namespace pushrec {

using Vec2 = Eigen::Vector2d;

// What a ground-plane point stands for.
enum class GroundRole { CoP, Cmp, CapturePoint, ReferenceCp };

struct GroundPoint {
  Vec2 xy_m{Vec2::Zero()};
  GroundRole role{GroundRole::CoP};
};

inline GroundPoint cop_point(double x, double y) {
  return {Vec2(x, y), GroundRole::CoP};
}
inline GroundPoint cop_point(const Vec2& xy) { return {xy, GroundRole::CoP}; }
inline GroundPoint cmp_point(const Vec2& xy) { return {xy, GroundRole::Cmp}; }

/// Point-mass pendulum of constant height with a reaction wheel at the
/// center of mass. Horizontal axes are (x, y) = (sagittal, frontal).
struct RobotParams {
  double mass_kg = 3.6;
  double com_height_m = 0.35;
  double gravity_mps2 = 9.81;
  double flywheel_inertia_kgm2 = 0.05;
  double flywheel_angle_limit_rad = 0.6;
  double flywheel_torque_limit_Nm = 1.5;

  double vertical_force_N() const { return mass_kg * gravity_mps2; }

  /// Throws std::invalid_argument when any parameter is out of range.
  void validate() const;
};

/// Divergence rate of the pendulum's unstable mode, sqrt(g / z_c).
double natural_frequency(const RobotParams& params);

/// Planar centroidal state. Flywheel components are indexed by the motion
/// axis they act on: [0] pitch (drives x), [1] roll (drives y). Positive
/// pitch folds the trunk toward +x; positive roll folds it toward -y.
struct CentroidalState {
  Vec2 com_pos_m = Vec2::Zero();
  Vec2 com_vel_mps = Vec2::Zero();
  Vec2 flywheel_angle_rad = Vec2::Zero();
  Vec2 flywheel_rate_radps = Vec2::Zero();

  bool all_finite() const;
};

/// Angular momentum carried by the flywheel, per momentum axis (H_x, H_y).
Vec2 flywheel_momentum(const CentroidalState& state, const RobotParams& params);

/// CoM acceleration of the plain pendulum: w^2 (com - cop) per axis.
Vec2 com_accel_lipm(const CentroidalState& state, const GroundPoint& cop,
                    const RobotParams& params);

/// CoM acceleration with a centroidal momentum rate hdot = (Hdot_x, Hdot_y):
///   xdd = w^2 (x - p_x) - Hdot_y / (m z),  ydd = w^2 (y - p_y) + Hdot_x / (m z).
Vec2 com_accel_flywheel(const CentroidalState& state, const GroundPoint& cop,
                        const Vec2& hdot_Nm, const RobotParams& params);

/// Ground point the net reaction force line pierces when the centroidal
/// moment is hdot. Coincides with the CoP at hdot = 0 and is allowed to
/// leave the support polygon; no clamping here.
GroundPoint cmp_from_cop(const GroundPoint& cop, const Vec2& hdot_Nm,
                         const RobotParams& params);

/// CoP produced by an ankle torque (tau_x, tau_y):
///   p_x = tau_y / (m g),  p_y = tau_x / (m g). Unclamped.
GroundPoint cop_from_ankle_torque(const Vec2& tau_ankle_Nm,
                                  const RobotParams& params);

}  // namespace pushrec
