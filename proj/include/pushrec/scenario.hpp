#pragma once

#include <vector>

#include "pushrec/controllers.hpp"
#include "pushrec/model.hpp"
#include "pushrec/support_polygon.hpp"

namespace pushrec {

enum class ControlMode { Torque, Position };

/// Strategy selection plus every gain the two controller families use.
/// Torque-mode PD gains default to kp = 2 m g and kd = 0.1 m g / w for the
/// configured robot; negative sentinels mean "derive at validation time".
struct ControllerConfig {
  ControlMode mode = ControlMode::Torque;
  StrategyFlags strategies;

  PdGains ankle_gains{-1.0, -1.0};  // torque mode, N·m per m
  PdGains hip_gains{-1.0, -1.0};

  JointGains position_gains{
      /*ankle=*/{4.0, 0.4},
      /*hip=*/{-6.0, -0.6},
      /*arm=*/{-6.0, -0.6},
      /*elbow=*/{-6.0, -0.6}};  // rad per m; flywheel joints fold into the push
  JointLimits joint_limits;
  ServoParams servo;
  double hip_weight = 1.0;
  double arm_weight = 0.3;
  double elbow_weight = 0.1;

  /// Measure the capture-point rate by finite-differencing consecutive
  /// control ticks instead of evaluating the pivot model.
  bool finite_difference_rate = false;
};

/// External disturbance. duration_s = 0 applies an instantaneous velocity
/// jump impulse/mass; otherwise a constant force impulse/duration acts over
/// [time_s, time_s + duration_s).
struct PushEvent {
  double time_s = 0.5;
  Vec2 impulse_Ns = Vec2::Zero();
  double duration_s = 0.0;
};

struct OutcomeThresholds {
  double fall_multiplier = 3.0;       // times the polygon half extent, per axis
  double settle_tolerance_m = 0.005;  // capture-point distance to reference
  double settle_window_s = 0.5;
};

struct EnvelopeSettings {
  double tolerance_Ns = 1e-3;
  double bracket_max_Ns = 16.0;
};

struct ScenarioConfig {
  RobotParams robot;
  FootGeometry foot;
  Vec2 stance_center_m = Vec2::Zero();
  ControllerConfig controller;
  std::vector<PushEvent> pushes;
  Vec2 initial_com_offset_m = Vec2::Zero();
  Vec2 initial_com_vel_mps = Vec2::Zero();
  double physics_dt_s = 0.001;
  double control_dt_s = 0.01;
  double horizon_s = 5.0;
  OutcomeThresholds thresholds;
  EnvelopeSettings envelope;
  unsigned rng_seed = 0;  // reserved

  SupportPolygon polygon() const;

  /// Full validation; throws std::invalid_argument with the failing field.
  void validate() const;

  /// Copy with the derived torque-mode gain defaults filled in.
  ScenarioConfig resolved() const;
};

}  // namespace pushrec
