#include "pushrec/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace pushrec {

SupportPolygon ScenarioConfig::polygon() const {
  return polygon_from_stance(foot, stance_center_m);
}

ScenarioConfig ScenarioConfig::resolved() const {
  ScenarioConfig out = *this;
  const double mg = robot.vertical_force_N();
  const double w = natural_frequency(robot);
  if (out.controller.ankle_gains.kp < 0.0) out.controller.ankle_gains.kp = 2.0 * mg;
  if (out.controller.ankle_gains.kd < 0.0) out.controller.ankle_gains.kd = 0.1 * mg / w;
  if (out.controller.hip_gains.kp < 0.0) out.controller.hip_gains.kp = 2.0 * mg;
  if (out.controller.hip_gains.kd < 0.0) out.controller.hip_gains.kd = 0.1 * mg / w;
  return out;
}

void ScenarioConfig::validate() const {
  robot.validate();
  foot.validate();
  if (!stance_center_m.allFinite())
    throw std::invalid_argument("stance_center_m must be finite");

  if (!(std::isfinite(physics_dt_s) && physics_dt_s > 0.0))
    throw std::invalid_argument("physics_dt_s must be > 0");
  if (!(std::isfinite(control_dt_s) && control_dt_s > 0.0))
    throw std::invalid_argument("control_dt_s must be > 0");
  const double ratio = control_dt_s / physics_dt_s;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio || ratio < 1.0)
    throw std::invalid_argument(
        "physics_dt_s must divide control_dt_s exactly");
  if (!(std::isfinite(horizon_s) && horizon_s > 0.0))
    throw std::invalid_argument("horizon_s must be > 0");

  for (const PushEvent& push : pushes) {
    if (!(std::isfinite(push.time_s) && push.time_s >= 0.0))
      throw std::invalid_argument("push time_s must be >= 0");
    if (!(std::isfinite(push.duration_s) && push.duration_s >= 0.0))
      throw std::invalid_argument("push duration_s must be >= 0");
    if (!push.impulse_Ns.allFinite())
      throw std::invalid_argument("push impulse_Ns must be finite");
  }

  if (!initial_com_offset_m.allFinite() || !initial_com_vel_mps.allFinite())
    throw std::invalid_argument("initial state must be finite");

  const ScenarioConfig r = resolved();
  r.controller.ankle_gains.validate_nonnegative("ankle");
  r.controller.hip_gains.validate_nonnegative("hip");
  controller.servo.validate();
  if (!(controller.hip_weight >= 0.0 && controller.arm_weight >= 0.0 &&
        controller.elbow_weight >= 0.0))
    throw std::invalid_argument("effectiveness weights must be >= 0");

  if (!(thresholds.fall_multiplier > 0.0))
    throw std::invalid_argument("fall_multiplier must be > 0");
  if (!(thresholds.settle_tolerance_m > 0.0))
    throw std::invalid_argument("settle_tolerance_m must be > 0");
  if (!(thresholds.settle_window_s > 0.0 &&
        thresholds.settle_window_s <= horizon_s))
    throw std::invalid_argument(
        "settle_window_s must be in (0, horizon_s]");

  if (!(envelope.tolerance_Ns > 0.0))
    throw std::invalid_argument("envelope tolerance_Ns must be > 0");
  if (!(envelope.bracket_max_Ns > 0.0))
    throw std::invalid_argument("envelope bracket_max_Ns must be > 0");
}

}  // namespace pushrec
