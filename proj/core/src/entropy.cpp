#include "blc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace blc::entropy {

namespace {
constexpr double kSpeedFloor = 1e-12;

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

void godunov_update(std::vector<double>& y, double dt, double dx, double ghost_left,
                    double u_val) {
  const std::size_t n = y.size();
  const double lam = dt / dx;
  double fl = godunov_flux(ghost_left, y[0]);  // BLN admission through the boundary flux
  for (std::size_t i = 0; i < n; ++i) {
    const double right = (i + 1 < n) ? y[i + 1] : 0.0;  // right ghost: y(t,1) >= 0
    const double fr = godunov_flux(y[i], right);
    const double yi = y[i] - lam * (fr - fl) + dt * u_val;
    fl = fr;
    y[i] = yi;
  }
  for (double v : y)
    if (!std::isfinite(v)) throw std::runtime_error("entropy: non-finite state");
}
} // namespace

InviscidProblem::InviscidProblem(Field y0_, ControlSignal u_, ControlSignal v_, double T_)
    : y0(std::move(y0_)), u(std::move(u_)), v(std::move(v_)), T(T_) {
  if (y0.grid.layout != Layout::cell_centered)
    throw std::invalid_argument("InviscidProblem: y0 must be cell_centered");
  if (!(T > 0.0)) throw std::invalid_argument("InviscidProblem: T must be > 0");
  if (u.t_end() < T - 1e-12 || v.t_end() < T - 1e-12)
    throw std::invalid_argument("InviscidProblem: signals must cover [0,T]");
}

bool e_set_contains(double alpha, double trace) { return e_set_contains(alpha, trace, 0.0); }

bool e_set_contains(double alpha, double trace, double tol) {
  if (alpha <= 0.0) return trace <= tol;
  return trace <= -alpha + tol || std::fabs(trace - alpha) <= tol;
}

Field inviscid_step(const Field& state, double t, double dt, const InviscidProblem& prob) {
  if (!(state.grid == prob.y0.grid))
    throw std::invalid_argument("inviscid_step: state grid does not match problem grid");
  const double dx = state.grid.dx;
  const double ghost = prob.v.eval(t);
  const double speed = std::max({max_abs(state.values), std::fabs(ghost), kSpeedFloor});
  if (dt * speed > dx * (1.0 + 1e-9))
    throw std::runtime_error("inviscid_step: CFL violation");
  Field out = state;
  godunov_update(out.values, dt, dx, ghost, prob.u.eval(t));
  return out;
}

Trajectory solve_inviscid(const InviscidProblem& prob, const Grid& grid, double cfl,
                          int snapshot_stride, const std::vector<double>& must_record) {
  if (!(grid == prob.y0.grid))
    throw std::invalid_argument("solve_inviscid: grid does not match prob.y0.grid");
  if (!(cfl > 0.0 && cfl <= 1.0))
    throw std::invalid_argument("solve_inviscid: cfl must be in (0,1]");

  std::vector<double> record = must_record;
  record.push_back(prob.T);
  std::sort(record.begin(), record.end());

  Trajectory tr;
  tr.u = prob.u;
  tr.v0 = prob.v;
  tr.v1 = ControlSignal::constant(0.0, prob.T);
  tr.times.push_back(0.0);
  tr.states.push_back(prob.y0);

  std::vector<double> y = prob.y0.values;
  const double dx = grid.dx;
  double t = 0.0;
  long step_index = 0;
  while (t < prob.T - 1e-13 * std::max(1.0, prob.T)) {
    const double ghost = prob.v.eval(t);
    const double speed = std::max({max_abs(y), std::fabs(ghost), kSpeedFloor});
    double dt = cfl * dx / speed;
    bool hit = false;
    for (double rt : record) {
      if (t < rt - 1e-14 && t + dt >= rt - 1e-14) {
        dt = rt - t;  // land exactly on recorded times
        hit = true;
        break;
      }
    }
    godunov_update(y, dt, dx, ghost, prob.u.eval(t));
    t += dt;
    ++step_index;
    if (hit || (snapshot_stride > 0 && step_index % snapshot_stride == 0)) {
      tr.times.push_back(t);
      tr.states.emplace_back(grid, y);
    }
  }
  if (tr.times.back() != prob.T) {
    tr.times.push_back(prob.T);
    tr.states.emplace_back(grid, y);
  }
  return tr;
}

double left_trace(const Field& state) { return state.values.front(); }
double right_trace(const Field& state) { return state.values.back(); }

HyperbolicControl hyperbolic_null_control(double y0_linf, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("hyperbolic_null_control: T must be > 0");
  if (y0_linf < 0.0) throw std::invalid_argument("hyperbolic_null_control: y0_linf >= 0");
  HyperbolicControl hc;
  hc.H = y0_linf + 4.0 / T;  // (H - |y0|)/2 >= 2/T with equality
  hc.v = ControlSignal({0.0, T / 2.0, T}, {hc.H, hc.H, 0.0}, Interp::piecewise_linear);
  hc.u = ControlSignal({0.0, T / 2.0, T}, {0.0, -2.0 * hc.H / T, -2.0 * hc.H / T},
                       Interp::piecewise_constant_left);
  return hc;
}

} // namespace blc::entropy
