#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pushrec/capture_point.hpp"
#include "pushrec/controllers.hpp"
#include "pushrec/scenario.hpp"

namespace pushrec {

/// Raised when integration produces a non-finite state.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One sample per control tick. cop_m is post-clamp; cmp_m may leave the
/// polygon. Raw PD torques are kept pre-saturation for diagnostics.
struct LogRow {
  double t_s = 0.0;
  Vec2 com_m = Vec2::Zero();
  Vec2 com_vel_mps = Vec2::Zero();
  Vec2 xi_m = Vec2::Zero();
  Vec2 cop_m = Vec2::Zero();
  Vec2 cmp_m = Vec2::Zero();
  Vec2 hdot_Nm = Vec2::Zero();
  Vec2 fly_angle_rad = Vec2::Zero();
  bool sat_cop = false;
  bool sat_fly = false;
  Vec2 tau_ankle_Nm = Vec2::Zero();
  Vec2 tau_hip_Nm = Vec2::Zero();
  Vec2 ankle_pd_raw_Nm = Vec2::Zero();
  Vec2 hip_pd_raw_Nm = Vec2::Zero();
  PositionCommand position_cmd;
};

struct TrajectoryLog {
  std::vector<LogRow> rows;
};

enum class Verdict { Recovered, Fell, FlywheelExhausted };

const char* verdict_name(Verdict v);

struct RecoveryOutcome {
  Verdict verdict = Verdict::Recovered;
  double max_cp_excursion_m = 0.0;
  double time_to_settle_s = -1.0;  // -1 when the run never settles
  double cop_saturated_fraction = 0.0;
  std::string detail;
};

struct RunResult {
  TrajectoryLog log;
  RecoveryOutcome outcome;
};

/// Instantaneous velocity jump impulse/mass.
CentroidalState apply_impulse(const CentroidalState& state,
                              const Vec2& impulse_Ns,
                              const RobotParams& params);

/// One fixed-step RK4 update under zero-order-held inputs: pivot torques,
/// momentum rate and external force all constant over the step.
CentroidalState step_held(const CentroidalState& state, const GroundPoint& cop,
                          const Vec2& hdot_Nm, const Vec2& external_force_N,
                          double physics_dt_s, const RobotParams& params);

/// Closed-loop run over the configured horizon. Logs every control tick;
/// bit-deterministic for identical configs.
RunResult run_scenario(const ScenarioConfig& config);

RecoveryOutcome classify_outcome(const TrajectoryLog& log,
                                 const ScenarioConfig& config);

struct EnvelopeResult {
  double impulse_Ns = 0.0;
  bool unbounded_at_limit = false;
  int runs = 0;
};

/// Largest recoverable push impulse along a direction, found by bisection
/// between a recovered and a fallen bracket. With every strategy disabled
/// the per-probe verdict is the stance capturability test (post-push
/// capture point inside the support polygon); otherwise it is the
/// simulated outcome.
EnvelopeResult max_recoverable_push(const ScenarioConfig& config,
                                    const Vec2& direction,
                                    double tolerance_Ns);

}  // namespace pushrec
