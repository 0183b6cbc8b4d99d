#pragma once

#include <string>
#include <utility>

#include "blc/control_signal.hpp"
#include "blc/field.hpp"
#include "blc/trajectory.hpp"

namespace blc::control {

/// Four-phase partition of [0,T]: smoothing [0,t1], settling [t1,t2] of
/// physical length eps (fast duration 1), push-down [t2,t3] of physical
/// length eps^4 (fast duration eps^3), passive [t3,T].
struct PhaseSchedule {
  double T = 0.0;
  double eps = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;

  PhaseSchedule(double T_, double eps_);
};

/// Fully assembled physical-time control pair. u and v vanish on [0,t1] and
/// [t3,T]; joints carry the left phase's value (v is continuous there).
struct ControlPlan {
  ControlSignal u;
  ControlSignal v;
  PhaseSchedule schedule;
  double H = 0.0;

  std::string to_json() const;
};

/// Fast-frame maps: ybar = eps * y, ubar(t) = eps^2 u(eps t),
/// vbar(t) = eps v(eps t). scale_from_* are exact inverses.
Field scale_to_fast(const Field& y, double eps);
Field scale_from_fast(const Field& ybar, double eps);
std::pair<ControlSignal, ControlSignal>
scale_controls_to_fast(const ControlSignal& u, const ControlSignal& v, double eps);
std::pair<ControlSignal, ControlSignal>
scale_controls_from_fast(const ControlSignal& ubar, const ControlSignal& vbar, double eps);

/// Settling boundary control vbar(t) = -2 eps Z_x(t,0), where Z solves the
/// settling heat system from Z0(x) = exp(-(1/2) int_0^x y0). predicted_gap is
/// the terminal L2 estimate (1/sqrt(eps))(2 eps + H) C(Z0) e^{-(H/4eps)(H d - 2)}
/// with C(Z0) = sqrt(16 + |Z0|_H1^2).
struct SettlingControl {
  ControlSignal vbar;
  double predicted_gap = 0.0;
  Field Z0;
};
SettlingControl settling_control(const Field& y0, double H, double eps, double duration,
                                 int n_modes);

/// Fast-frame push-down pair: ubar = -H/duration, vbar(t) = H(1 - t/duration).
std::pair<ControlSignal, ControlSignal> pushdown_controls(double H, double duration);

/// Assembles the four phases. Runs the zero-control smoothing solve on
/// [0,t1] internally (hence grid and dt) so the settling control is derived
/// from the smoothed state, and requires H > 2 so the settling exponent
/// H(H - 2)/4eps is positive at fast duration 1.
ControlPlan build_pipeline(const Field& y0, double T, double eps, double H,
                           const Grid& grid, double dt, int n_modes = 512);

/// Executes the plan with the viscous solver (viscosity 1, per-phase dt
/// capped by the advective CFL bound and eps^4/64 inside the push-down).
/// Snapshots at phase boundaries, every snapshot_stride steps when > 0, and
/// at T.
struct PipelineResult {
  Trajectory traj;
  double final_l2 = 0.0;
  double l2_t1 = 0.0;
  double l2_t2 = 0.0;
  double l2_t3 = 0.0;
};
PipelineResult run_pipeline(const ControlPlan& plan, const Field& y0, const Grid& grid,
                            double dt, int snapshot_stride = 0);

} // namespace blc::control
