#include "pushrec/capture_point.hpp"

#include <cmath>
#include <stdexcept>

namespace pushrec {

CapturePointState capture_point(const CentroidalState& state,
                                const RobotParams& params) {
  const double w = natural_frequency(params);
  return CapturePointState{state.com_pos_m + state.com_vel_mps / w};
}

Vec2 com_rate_from_cp(const Vec2& com_pos_m, const CapturePointState& xi,
                      const RobotParams& params) {
  return natural_frequency(params) * (xi.xi_m - com_pos_m);
}

Vec2 cp_rate(const CapturePointState& xi, const GroundPoint& cop,
             const RobotParams& params) {
  return natural_frequency(params) * (xi.xi_m - cop.xy_m);
}

Vec2 cp_rate_cmp(const CapturePointState& xi, const GroundPoint& cmp,
                 const RobotParams& params) {
  return cp_rate(xi, cmp, params);
}

CapturePointState analytic_cp_trajectory(const CapturePointState& xi0,
                                         const GroundPoint& cop_const,
                                         double t_s,
                                         const RobotParams& params) {
  if (!(t_s >= 0.0)) throw std::invalid_argument("t_s must be >= 0");
  const double growth = std::exp(natural_frequency(params) * t_s);
  return CapturePointState{cop_const.xy_m +
                           (xi0.xi_m - cop_const.xy_m) * growth};
}

bool is_ankle_recoverable(const CapturePointState& xi,
                          const SupportPolygon& polygon) {
  return polygon.contains(xi.xi_m);
}

}  // namespace pushrec
