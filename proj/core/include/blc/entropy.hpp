#pragma once

#include <vector>

#include "blc/control_signal.hpp"
#include "blc/field.hpp"
#include "blc/flux.hpp"
#include "blc/trajectory.hpp"

namespace blc::entropy {

/// Inviscid limit: ybar_t + (ybar^2/2)_x = u(t), weak boundary conditions
/// ybar(t,0) in E(v(t)) on the left and ybar(t,1) >= 0 on the right, both
/// realized through ghost-cell Godunov fluxes (left ghost = v(t), right
/// ghost = 0). States are cell averages.
struct InviscidProblem {
  Field y0;  // cell_centered
  ControlSignal u;
  ControlSignal v;  // desired left trace
  double T = 0.0;

  InviscidProblem(Field y0_, ControlSignal u_, ControlSignal v_, double T_);
};

using blc::godunov_flux;

/// Membership in the BLN admission set:
/// E(a) = (-inf, 0] for a <= 0, (-inf, -a] U {a} for a > 0.
bool e_set_contains(double alpha, double trace);

/// Tolerant variant for computed traces; the exact branch {alpha} is widened
/// to |trace - alpha| <= tol. Diagnostics use tol = 10 * dx * |y|_inf, a
/// heuristic for how far a discrete shock smears the trace.
bool e_set_contains(double alpha, double trace, double tol);

/// One Godunov step with ghost cells; dt must satisfy the CFL bound.
Field inviscid_step(const Field& state, double t, double dt, const InviscidProblem& prob);

/// Advances to T, re-choosing dt = cfl*dx/max(|y|,|v(t)|) every step (the
/// override wave speed grows with H, so a fixed dt would be wrong).
/// Steps land exactly on any `must_record` times and snapshots are taken
/// there and every `snapshot_stride` steps.
Trajectory solve_inviscid(const InviscidProblem& prob, const Grid& grid, double cfl,
                          int snapshot_stride = 1,
                          const std::vector<double>& must_record = {});

/// First / last cell average: the computed traces y(t,0+), y(t,1-).
double left_trace(const Field& state);
double right_trace(const Field& state);

/// Null-control pair for the inviscid system: smallest H with
/// (H - |y0|_inf)/2 >= 2/T (taken with equality), v = H then a linear
/// ramp 2H(1-t/T) on [T/2,T], u = 0 then -2H/T.
struct HyperbolicControl {
  double H = 0.0;
  ControlSignal u;
  ControlSignal v;
};
HyperbolicControl hyperbolic_null_control(double y0_linf, double T);

} // namespace blc::entropy
