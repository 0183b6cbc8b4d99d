#include "blc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "blc/colehopf.hpp"
#include "blc/numerics.hpp"
#include "blc/params.hpp"
#include "blc/viscous.hpp"

namespace blc::control {

PhaseSchedule::PhaseSchedule(double T_, double eps_) : T(T_), eps(eps_) {
  if (!(T > 0.0) || !(eps > 0.0))
    throw std::invalid_argument("PhaseSchedule: T and eps must be > 0");
  t1 = T / 3.0;
  t2 = t1 + eps;
  t3 = t2 + eps * eps * eps * eps;
  if (!(eps + eps * eps * eps * eps < 2.0 * T / 3.0))
    throw std::invalid_argument("PhaseSchedule: need eps + eps^4 < 2T/3, got eps = " +
                                std::to_string(eps) + " at T = " + std::to_string(T));
}

Field scale_to_fast(const Field& y, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("scale_to_fast: eps must be > 0");
  return eps * y;
}

Field scale_from_fast(const Field& ybar, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("scale_from_fast: eps must be > 0");
  return (1.0 / eps) * ybar;
}

std::pair<ControlSignal, ControlSignal>
scale_controls_to_fast(const ControlSignal& u, const ControlSignal& v, double eps) {
  // ubar(t) = eps^2 u(eps t), vbar(t) = eps v(eps t)
  return {u.rescaled(eps, eps * eps), v.rescaled(eps, eps)};
}

std::pair<ControlSignal, ControlSignal>
scale_controls_from_fast(const ControlSignal& ubar, const ControlSignal& vbar, double eps) {
  return {ubar.rescaled(1.0 / eps, 1.0 / (eps * eps)), vbar.rescaled(1.0 / eps, 1.0 / eps)};
}

SettlingControl settling_control(const Field& y0, double H, double eps, double duration,
                                 int n_modes) {
  if (!(duration > 0.0)) throw std::invalid_argument("settling_control: duration must be > 0");
  Field Z0 = colehopf::forward_transform(y0, 1.0);  // exp(-(1/2) int y0)
  auto settle = colehopf::settle_heat_solve(Z0, H, eps, duration, n_modes);

  ControlSignal vbar = settle.left_slope.rescaled(1.0, -2.0 * eps);
  // compatible value at t = 0: -2 eps Z0'(0) = eps y0(0), free of truncation ringing
  vbar.samples.front() = eps * y0.values.front();

  const double h1 = h1_norm(Z0);
  const double c_z0 = std::sqrt(16.0 + h1 * h1);
  const double expo = -(H / (4.0 * eps)) * (H * duration - 2.0);
  const double gap = (1.0 / std::sqrt(eps)) * (2.0 * eps + H) * c_z0 * std::exp(expo);
  return SettlingControl{std::move(vbar), gap, std::move(Z0)};
}

std::pair<ControlSignal, ControlSignal> pushdown_controls(double H, double duration) {
  if (!(duration > 0.0)) throw std::invalid_argument("pushdown_controls: duration must be > 0");
  ControlSignal ubar = ControlSignal::constant(-H / duration, duration);
  ControlSignal vbar({0.0, duration}, {H, 0.0}, Interp::piecewise_linear);
  return {std::move(ubar), std::move(vbar)};
}

ControlPlan build_pipeline(const Field& y0, double T, double eps, double H, const Grid& grid,
                           double dt, int n_modes) {
  if (!(H > 2.0))
    throw std::invalid_argument("build_pipeline: H > 2 required (settling exponent H-2)");
  PhaseSchedule sched(T, eps);

  // smoothing phase solve so the settling control sees H^1-regular data
  const double y0inf = std::max(linf_norm(y0), 1e-12);
  Params p1(1.0, std::max(1.0, y0inf), sched.t1);
  viscous::ViscousProblem smooth(p1, y0, ControlSignal::constant(0.0, sched.t1),
                                 ControlSignal::constant(0.0, sched.t1),
                                 ControlSignal::constant(0.0, sched.t1));
  const double dt1 = std::min(dt, 0.8 * grid.dx / y0inf);
  Field y_t1 = viscous::solve(smooth, grid, dt1, 0).final_state();

  SettlingControl sc = settling_control(y_t1, H, eps, 1.0, n_modes);

  // u: zero, push-down constant, zero
  const double tau = eps * eps * eps;  // fast push-down duration
  const double u_push = -H / (eps * eps * tau);
  ControlSignal u({0.0, sched.t2, sched.t3, T}, {0.0, u_push, 0.0, 0.0},
                  Interp::piecewise_constant_left);

  // v: zero, settling (fast samples mapped into [t1,t2]), linear push-down
  // ramp to 0, zero. Joints carry the left phase's value.
  std::vector<double> vt, vs;
  vt.push_back(0.0);
  vs.push_back(0.0);
  for (std::size_t j = 0; j < sc.vbar.times.size(); ++j) {
    vt.push_back(sched.t1 + eps * sc.vbar.times[j]);
    vs.push_back(sc.vbar.samples[j] / eps);
  }
  vt.push_back(sched.t3);
  vs.push_back(0.0);
  if (sched.t3 < T) {
    vt.push_back(T);
    vs.push_back(0.0);
  }
  ControlSignal v(std::move(vt), std::move(vs), Interp::piecewise_linear);

  return ControlPlan{std::move(u), std::move(v), sched, H};
}

namespace {

// sub-signal over [a,b] with times shifted to start at 0; endpoint values by
// evaluation so phase solves see exactly the plan's controls
ControlSignal slice_signal(const ControlSignal& c, double a, double b) {
  std::vector<double> t, s;
  t.push_back(0.0);
  s.push_back(c.eval(a));
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    if (c.times[i] > a + 1e-15 && c.times[i] < b - 1e-15) {
      t.push_back(c.times[i] - a);
      s.push_back(c.samples[i]);
    }
  }
  t.push_back(b - a);
  s.push_back(c.eval(b));
  return ControlSignal(std::move(t), std::move(s), c.interpolation);
}

double window_vmax(const ControlSignal& v, double a, double b) {
  double m = std::max(std::fabs(v.eval(a)), std::fabs(v.eval(b)));
  for (std::size_t i = 0; i < v.times.size(); ++i)
    if (v.times[i] >= a && v.times[i] <= b) m = std::max(m, std::fabs(v.samples[i]));
  return m;
}

} // namespace

PipelineResult run_pipeline(const ControlPlan& plan, const Field& y0, const Grid& grid,
                            double dt, int snapshot_stride) {
  const PhaseSchedule& sc = plan.schedule;
  const double eps = sc.eps;
  const double Hs = plan.H / eps;  // physical state scale past the settling phase

  PipelineResult out;
  out.traj.u = plan.u;
  out.traj.v0 = plan.v;
  out.traj.v1 = ControlSignal::constant(0.0, sc.T);
  out.traj.times.push_back(0.0);
  out.traj.states.push_back(y0);

  Field y = y0;
  const double phase_starts[5] = {0.0, sc.t1, sc.t2, sc.t3, sc.T};
  double phase_l2[4] = {0, 0, 0, 0};

  for (int ph = 0; ph < 4; ++ph) {
    const double a = phase_starts[ph], b = phase_starts[ph + 1];
    if (!(b > a)) continue;
    const double speed =
        1.05 * std::max({linf_norm(y), window_vmax(plan.v, a, b), (ph == 2) ? 2.0 * Hs : 1e-12});
    double dtp = std::min(dt, 0.8 * grid.dx / speed);
    if (ph == 2) dtp = std::min(dtp, eps * eps * eps * eps / 64.0);

    Params p(1.0, std::max(1.0, Hs), b - a);
    viscous::ViscousProblem prob(p, y, slice_signal(plan.u, a, b), slice_signal(plan.v, a, b),
                                 ControlSignal::constant(0.0, b - a));
    Trajectory seg = viscous::solve(prob, grid, dtp, snapshot_stride);
    for (std::size_t k = 1; k < seg.times.size(); ++k) {
      out.traj.times.push_back(a + seg.times[k]);
      out.traj.states.push_back(seg.states[k]);
    }
    y = seg.final_state();
    phase_l2[ph] = l2_norm(y);
  }

  out.l2_t1 = phase_l2[0];
  out.l2_t2 = phase_l2[1];
  out.l2_t3 = phase_l2[2];
  out.final_l2 = phase_l2[3];
  return out;
}

std::string ControlPlan::to_json() const {
  nlohmann::json j;
  j["H"] = H;
  j["schedule"] = {{"T", schedule.T}, {"eps", schedule.eps}, {"t1", schedule.t1},
                   {"t2", schedule.t2}, {"t3", schedule.t3}};
  j["phases"] = {
      {{"name", "smoothing"}, {"from", 0.0}, {"to", schedule.t1}},
      {{"name", "settling"}, {"from", schedule.t1}, {"to", schedule.t2}},
      {{"name", "push_down"}, {"from", schedule.t2}, {"to", schedule.t3}},
      {{"name", "passive"}, {"from", schedule.t3}, {"to", schedule.T}},
  };
  auto sig = [](const ControlSignal& c) {
    return nlohmann::json{
        {"times", c.times},
        {"samples", c.samples},
        {"interpolation", c.interpolation == Interp::piecewise_linear
                              ? "piecewise_linear"
                              : "piecewise_constant_left"}};
  };
  j["u"] = sig(u);
  j["v"] = sig(v);
  return j.dump(2);
}

} // namespace blc::control
