#pragma once

#include <span>
#include <vector>

#include "blc/control_signal.hpp"
#include "blc/field.hpp"

namespace blc::parabolic {

/// Moment system for the boundary-controlled heat equation
/// z_t = z_xx, z(t,0) = alpha(t), z_x(t,1) = 0 on the f-basis:
/// z_n' = -lambda_n^2 z_n + sqrt2 lambda_n alpha(t). Null targets require
/// int_0^Tc e^{-lambda_n^2 (Tc-s)} alpha(s) ds = -z_n(0) e^{-lambda_n^2 Tc} / (sqrt2 lambda_n).
struct MomentProblem {
  double T = 0.0;        // control deadline the targets refer to
  int n_modes = 0;
  std::vector<double> targets;
  std::vector<double> lambdas;  // strictly increasing, (n+1/2) pi
};
MomentProblem make_moment_problem(const Field& z0, double deadline, int n_modes);

struct MomentReport {
  double gram_cond = 0.0;      // condition number of the deadline-horizon Gram matrix
  double alpha_inf = 0.0;
  double alpha_l2 = 0.0;
  double heat_residual_l2 = 0.0;           // |z(T)|_L2, modal re-simulation with untargeted modes
  std::vector<double> moment_residuals;    // |z_n(T)| for the targeted modes
  double control_ratio = 0.0;              // |alpha|_inf / |z0|_L2
};

/// Minimum-L2-norm control in the span of the heat kernels
/// {e^{-lambda_k^2 (Tc - s)}} acting on [0, Tc], Tc = deadline_fraction * T,
/// with alpha == 0 on the coast segment (Tc, T] so the targeted modes stay
/// null and the untargeted tail keeps decaying. deadline_fraction = 1
/// recovers the plain full-horizon Gram solve.
/// Throws when n_modes > 12 or the Gram condition number exceeds 1e14.
struct MomentControl {
  ControlSignal alpha;          // 4096 samples, piecewise linear
  std::vector<double> coeffs;   // span coefficients c_k
  double deadline = 0.0;
  MomentReport report;
};
MomentControl heat_null_control_moments(const Field& z0, double T, int n_modes,
                                        double deadline_fraction = 0.8);

/// Boundary trace z_x(t,0) of the controlled heat solution at the given
/// times, evaluated from the lifted expansion z = alpha(t) + zeta (so the
/// mode series converges absolutely for t > 0). At t = 0 the trace is the
/// one-sided finite difference of z0.
std::vector<double> heat_trace_slopes(const Field& z0, const MomentControl& mc,
                                      std::span<const double> ts);

/// Full local exact-control stage: z0 = exp(-(1/2) int_0^x y0) - 1, moment
/// control on the heat side, Burgers boundary control
/// v(t) = -2 z_x(t,0) / (1 + alpha(t)), then a viscosity-1 Burgers
/// simulation on y0's grid reporting the terminal L2 norm.
/// Throws when the produced control has |alpha|_inf >= 1 (the 1 + z > 0
/// maximum principle would be lost); the message carries the margin.
struct ExactControl {
  ControlSignal v;
  ControlSignal alpha;
  MomentReport moments;
  double terminal_l2 = 0.0;  // simulated Burgers |y(T)|_L2
  double v_inf = 0.0;
};
ExactControl local_exact_control(const Field& y0, double T, int n_modes,
                                 double deadline_fraction = 0.8);

} // namespace blc::parabolic
