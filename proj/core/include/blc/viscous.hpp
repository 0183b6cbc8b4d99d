#pragma once

#include "blc/control_signal.hpp"
#include "blc/field.hpp"
#include "blc/params.hpp"
#include "blc/trajectory.hpp"

namespace blc::viscous {

/// y_t + y y_x - nu y_xx = u(t) on (0,1) with Dirichlet traces v0(t), v1(t).
/// y0 is node-centered; a mismatch between y0 and the t=0 boundary data is
/// allowed (the scheme overwrites boundary nodes every step).
struct ViscousProblem {
  Params params;
  Field y0;
  ControlSignal u;
  ControlSignal v0;
  ControlSignal v1;

  ViscousProblem(Params p, Field y0_, ControlSignal u_, ControlSignal v0_, ControlSignal v1_);
};

/// One step of the splitting scheme, in fixed order: explicit Godunov
/// advection, backward-Euler diffusion (Thomas solve), dt*u(t) forcing on the
/// interior, then boundary nodes set to v0(t+dt), v1(t+dt). Monotone under
/// the advective CFL bound dt <= dx / max(|state|, |boundary data|).
/// Throws on CFL violation or non-finite state.
Field step(const Field& state, double t, double dt, const ViscousProblem& prob);

/// Steps prob over [0, params.T] with fixed dt (last step shortened so the
/// final time is exactly T). Snapshots every `snapshot_stride` steps; the
/// initial and final states are always recorded. Refuses grids with
/// dx > viscosity/(4H): that is the boundary-layer resolution rule.
Trajectory solve(const ViscousProblem& prob, const Grid& grid, double dt,
                 int snapshot_stride = 1);

/// Discrete residual of f f_x - nu f_xx - u_const at interior nodes,
/// zero-padded at the boundary. Zero (to truncation order) on steady states.
Field steady_residual(const Field& f, double nu, double u_const);

} // namespace blc::viscous
