#pragma once

#include "pushrec/model.hpp"
#include "pushrec/support_polygon.hpp"

namespace pushrec {

/// Unstable component of the CoM dynamics, xi = com + com_vel / w.
struct CapturePointState {
  Vec2 xi_m = Vec2::Zero();
};

CapturePointState capture_point(const CentroidalState& state,
                                const RobotParams& params);

/// Inverse of capture_point: com_vel = w (xi - com).
Vec2 com_rate_from_cp(const Vec2& com_pos_m, const CapturePointState& xi,
                      const RobotParams& params);

/// xi_dot = w (xi - cop). The pivot always pushes the capture point away.
Vec2 cp_rate(const CapturePointState& xi, const GroundPoint& cop,
             const RobotParams& params);

/// Same law with the CMP as the pivot, for nonzero centroidal moment.
Vec2 cp_rate_cmp(const CapturePointState& xi, const GroundPoint& cmp,
                 const RobotParams& params);

/// Closed-form solution of cp_rate for a pivot held constant:
///   xi(t) = cop + (xi0 - cop) e^{w t}.
CapturePointState analytic_cp_trajectory(const CapturePointState& xi0,
                                         const GroundPoint& cop_const,
                                         double t_s, const RobotParams& params);

/// True when the capture point lies inside or on the support polygon, i.e.
/// the stance leg alone can absorb the push.
bool is_ankle_recoverable(const CapturePointState& xi,
                          const SupportPolygon& polygon);

}  // namespace pushrec
