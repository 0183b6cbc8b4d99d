#include "blc/viscous.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "blc/flux.hpp"
#include "blc/numerics.hpp"

namespace blc::viscous {

namespace {

constexpr double kSpeedFloor = 1e-12;

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

struct Workspace {
  std::vector<double> flux;   // n interfaces between n+1 nodes
  std::vector<double> diag, rhs;
  std::vector<double> sub, sup;

  explicit Workspace(std::size_t n_nodes) {
    flux.resize(n_nodes - 1);
    const std::size_t m = n_nodes - 2;  // interior unknowns
    diag.resize(m);
    rhs.resize(m);
    sub.resize(m);
    sup.resize(m);
  }
};

// One splitting step on the raw value vector. Order is fixed:
// advection -> diffusion -> forcing -> boundary overwrite.
void step_inplace(std::vector<double>& y, double t, double dt, double dx, double nu,
                  const ControlSignal& u, const ControlSignal& v0, const ControlSignal& v1,
                  Workspace& ws) {
  const std::size_t nn = y.size();
  const double v0n = v0.eval(t + dt);
  const double v1n = v1.eval(t + dt);

  const double speed = std::max({max_abs(y), std::fabs(v0.eval(t)), std::fabs(v1.eval(t)),
                                 std::fabs(v0n), std::fabs(v1n), kSpeedFloor});
  if (dt * speed > dx * (1.0 + 1e-9))
    throw std::runtime_error("viscous::step: CFL violation, dt <= dx/" + std::to_string(speed) +
                             " required, got dt = " + std::to_string(dt));

  for (std::size_t i = 0; i + 1 < nn; ++i) ws.flux[i] = godunov_flux(y[i], y[i + 1]);

  const double lam = dt / dx;
  const double r = nu * dt / (dx * dx);
  const std::size_t m = nn - 2;
  for (std::size_t i = 0; i < m; ++i) {
    ws.rhs[i] = y[i + 1] - lam * (ws.flux[i + 1] - ws.flux[i]);
    ws.diag[i] = 1.0 + 2.0 * r;
    ws.sub[i] = -r;
    ws.sup[i] = -r;
  }
  ws.rhs[0] += r * v0n;
  ws.rhs[m - 1] += r * v1n;
  thomas_solve(ws.sub, ws.diag, ws.sup, ws.rhs);

  const double force = dt * u.eval(t);
  for (std::size_t i = 0; i < m; ++i) y[i + 1] = ws.rhs[i] + force;
  y[0] = v0n;
  y[nn - 1] = v1n;

  for (double v : y)
    if (!std::isfinite(v)) throw std::runtime_error("viscous::step: non-finite state");
}

void check_signal_coverage(const ControlSignal& c, double T, const char* name) {
  if (c.t_end() < T - 1e-12)
    throw std::invalid_argument(std::string("ViscousProblem: signal ") + name +
                                " does not cover [0,T]");
}

} // namespace

ViscousProblem::ViscousProblem(Params p, Field y0_, ControlSignal u_, ControlSignal v0_,
                               ControlSignal v1_)
    : params(p), y0(std::move(y0_)), u(std::move(u_)), v0(std::move(v0_)), v1(std::move(v1_)) {
  if (y0.grid.layout != Layout::node_centered)
    throw std::invalid_argument("ViscousProblem: y0 must be node_centered");
  check_signal_coverage(u, params.T, "u");
  check_signal_coverage(v0, params.T, "v0");
  check_signal_coverage(v1, params.T, "v1");
  y0.check_finite("ViscousProblem.y0");
}

Field step(const Field& state, double t, double dt, const ViscousProblem& prob) {
  if (!(state.grid == prob.y0.grid))
    throw std::invalid_argument("viscous::step: state grid does not match problem grid");
  if (!(dt > 0.0)) throw std::invalid_argument("viscous::step: dt must be > 0");
  Field out = state;
  Workspace ws(out.size());
  step_inplace(out.values, t, dt, out.grid.dx, prob.params.viscosity, prob.u, prob.v0, prob.v1, ws);
  return out;
}

Trajectory solve(const ViscousProblem& prob, const Grid& grid, double dt, int snapshot_stride) {
  if (!(grid == prob.y0.grid))
    throw std::invalid_argument("viscous::solve: grid does not match prob.y0.grid");
  if (!(dt > 0.0)) throw std::invalid_argument("viscous::solve: dt must be > 0");
  if (snapshot_stride < 0) throw std::invalid_argument("viscous::solve: snapshot_stride >= 0");
  // boundary-layer resolution rule: layers have width ~ viscosity/H
  const double dx_max = prob.params.viscosity / (4.0 * prob.params.H);
  if (grid.dx > dx_max * (1.0 + 1e-12))
    throw std::invalid_argument(
        "viscous::solve: grid too coarse for the boundary layer: dx = " +
        std::to_string(grid.dx) + " > viscosity/(4H) = " + std::to_string(dx_max));

  const double T = prob.params.T;
  Trajectory tr;
  tr.u = prob.u;
  tr.v0 = prob.v0;
  tr.v1 = prob.v1;
  tr.times.push_back(0.0);
  tr.states.push_back(prob.y0);

  std::vector<double> y = prob.y0.values;
  Workspace ws(y.size());
  double t = 0.0;
  long step_index = 0;
  while (t < T - 1e-13 * std::max(1.0, T)) {
    const double h = std::min(dt, T - t);
    step_inplace(y, t, h, grid.dx, prob.params.viscosity, prob.u, prob.v0, prob.v1, ws);
    t += h;
    ++step_index;
    const bool last = !(t < T - 1e-13 * std::max(1.0, T));
    if (last || (snapshot_stride > 0 && step_index % snapshot_stride == 0)) {
      tr.times.push_back(last ? T : t);
      tr.states.emplace_back(grid, y);
    }
  }
  return tr;
}

Field steady_residual(const Field& f, double nu, double u_const) {
  if (f.grid.layout != Layout::node_centered)
    throw std::invalid_argument("steady_residual: node_centered layout required");
  const double dx = f.grid.dx;
  const std::size_t n = f.size();
  Field out(f.grid);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double fx = (f.values[i + 1] - f.values[i - 1]) / (2.0 * dx);
    const double fxx = (f.values[i + 1] - 2.0 * f.values[i] + f.values[i - 1]) / (dx * dx);
    out.values[i] = f.values[i] * fx - nu * fxx - u_const;
  }
  return out;
}

} // namespace blc::viscous
