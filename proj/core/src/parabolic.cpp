#include "blc/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "blc/colehopf.hpp"
#include "blc/numerics.hpp"
#include "blc/params.hpp"
#include "blc/viscous.hpp"

namespace blc::parabolic {

namespace {
constexpr int kMaxModes = 12;        // Gram matrices of heat exponentials degrade fast
constexpr double kCondLimit = 1e14;
constexpr int kResidModes = 512;     // untargeted modes in the residual re-simulation
constexpr int kTraceModes = 768;
constexpr int kAlphaSamples = 4096;

using colehopf::lambda_f;

double alpha_at(const std::vector<double>& c, const std::vector<double>& l2s, double Tc,
                double t) {
  if (t > Tc) return 0.0;
  std::vector<double> terms(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) terms[k] = c[k] * std::exp(-l2s[k] * (Tc - t));
  return pairwise_sum(terms);
}
} // namespace

MomentProblem make_moment_problem(const Field& z0, double deadline, int n_modes) {
  if (!(deadline > 0.0)) throw std::invalid_argument("make_moment_problem: deadline > 0");
  if (n_modes < 1) throw std::invalid_argument("make_moment_problem: n_modes >= 1");
  MomentProblem mp;
  mp.T = deadline;
  mp.n_modes = n_modes;
  const auto z0c = colehopf::project_f(z0, n_modes);
  mp.lambdas.resize(n_modes);
  mp.targets.resize(n_modes);
  for (int n = 0; n < n_modes; ++n) {
    const double ln = lambda_f(n);
    mp.lambdas[n] = ln;
    mp.targets[n] = -z0c[n] * std::exp(-ln * ln * deadline) / (M_SQRT2 * ln);
  }
  return mp;
}

MomentControl heat_null_control_moments(const Field& z0, double T, int n_modes,
                                        double deadline_fraction) {
  if (!(T > 0.0)) throw std::invalid_argument("heat_null_control_moments: T must be > 0");
  if (n_modes < 1 || n_modes > kMaxModes)
    throw std::invalid_argument("heat_null_control_moments: n_modes must be in [1, " +
                                std::to_string(kMaxModes) + "] (conditioning guard)");
  if (!(deadline_fraction > 0.0 && deadline_fraction <= 1.0))
    throw std::invalid_argument("heat_null_control_moments: deadline_fraction in (0,1]");

  const double Tc = deadline_fraction * T;
  const MomentProblem mp = make_moment_problem(z0, Tc, n_modes);

  std::vector<double> l2s(n_modes);
  for (int n = 0; n < n_modes; ++n) l2s[n] = mp.lambdas[n] * mp.lambdas[n];

  Eigen::MatrixXd G(n_modes, n_modes);
  for (int n = 0; n < n_modes; ++n)
    for (int k = 0; k < n_modes; ++k) {
      const double s = l2s[n] + l2s[k];
      G(n, k) = (1.0 - std::exp(-s * Tc)) / s;
    }
  Eigen::VectorXd tgt(n_modes);
  for (int n = 0; n < n_modes; ++n) tgt(n) = mp.targets[n];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(G, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(0) / sv(n_modes - 1);
  if (!(cond < kCondLimit))
    throw std::runtime_error(
        "heat_null_control_moments: Gram condition number " + std::to_string(cond) +
        " > 1e14; use fewer modes or a larger horizon T");
  Eigen::VectorXd cvec = svd.solve(tgt);

  std::vector<double> c(cvec.data(), cvec.data() + n_modes);

  // alpha on a uniform mesh, with the deadline jump resolved by two extra
  // samples when the control stops before T
  std::vector<double> at, as;
  at.reserve(kAlphaSamples + 3);
  const double jump_eps = 1e-9 * T;
  for (int j = 0; j <= kAlphaSamples; ++j) {
    const double t = T * static_cast<double>(j) / kAlphaSamples;
    if (deadline_fraction < 1.0 && !at.empty() && at.back() < Tc && t > Tc) {
      at.push_back(Tc);
      as.push_back(alpha_at(c, l2s, Tc, Tc));
      at.push_back(Tc + jump_eps);
      as.push_back(0.0);
    }
    if (!at.empty() && t <= at.back()) continue;
    at.push_back(t);
    as.push_back(alpha_at(c, l2s, Tc, t));
  }
  ControlSignal alpha(std::move(at), std::move(as), Interp::piecewise_linear);

  MomentReport rep;
  rep.gram_cond = cond;
  double ainf = 0.0;
  for (double s : alpha.samples) ainf = std::max(ainf, std::fabs(s));
  rep.alpha_inf = ainf;
  rep.alpha_l2 = std::sqrt(std::max(0.0, cvec.dot(G * cvec)));  // int alpha^2 = c'Gc

  // targeted-mode residuals |z_n(T)|: exact from the solve residual
  Eigen::VectorXd rm = G * cvec - tgt;
  rep.moment_residuals.resize(n_modes);
  for (int n = 0; n < n_modes; ++n)
    rep.moment_residuals[n] =
        std::fabs(M_SQRT2 * mp.lambdas[n] * rm(n)) * std::exp(-l2s[n] * (T - Tc));

  // modal re-simulation including untargeted modes
  const auto z0c = colehopf::project_f(z0, kResidModes);
  std::vector<double> zt2(kResidModes);
  for (int n = 0; n < kResidModes; ++n) {
    const double ln = lambda_f(n);
    const double l2n = ln * ln;
    std::vector<double> terms(n_modes);
    for (int k = 0; k < n_modes; ++k) {
      const double s = l2n + l2s[k];
      terms[k] = c[k] * (1.0 - std::exp(-s * Tc)) / s;
    }
    const double Mn = std::exp(-l2n * (T - Tc)) * pairwise_sum(terms);
    const double zn = z0c[n] * std::exp(-l2n * T) + M_SQRT2 * ln * Mn;
    zt2[n] = zn * zn;
  }
  double resid2 = pairwise_sum(zt2);
  if (deadline_fraction >= 1.0) {
    // analytic tail of the boundary-value part beyond kResidModes
    const double aT = alpha_at(c, l2s, Tc, T);
    double r = 0.5;  // sum_n lambda_n^{-2} = 1/2
    for (int n = 0; n < kResidModes; ++n) r -= 1.0 / (lambda_f(n) * lambda_f(n));
    resid2 += 2.0 * aT * aT * std::max(0.0, r);
  }
  rep.heat_residual_l2 = std::sqrt(resid2);
  const double z0n = l2_norm(z0);
  rep.control_ratio = z0n > 0.0 ? rep.alpha_inf / z0n : 0.0;

  return MomentControl{std::move(alpha), std::move(c), Tc, std::move(rep)};
}

std::vector<double> heat_trace_slopes(const Field& z0, const MomentControl& mc,
                                      std::span<const double> ts) {
  const int nm = static_cast<int>(mc.coeffs.size());
  const double Tc = mc.deadline;
  std::vector<double> l2k(nm);
  for (int k = 0; k < nm; ++k) l2k[k] = lambda_f(k) * lambda_f(k);

  const auto z0c = colehopf::project_f(z0, kTraceModes);
  const double a0 = alpha_at(mc.coeffs, l2k, Tc, 0.0);
  std::vector<double> zeta0(kTraceModes), lns(kTraceModes), l2n(kTraceModes);
  for (int n = 0; n < kTraceModes; ++n) {
    lns[n] = lambda_f(n);
    l2n[n] = lns[n] * lns[n];
    zeta0[n] = z0c[n] - a0 * M_SQRT2 / lns[n];
  }
  double tail_r = 0.5;
  for (int n = 0; n < kTraceModes; ++n) tail_r -= 1.0 / l2n[n];
  tail_r = std::max(0.0, tail_r);

  std::vector<double> out(ts.size());
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const double t = ts[j];
    if (t == 0.0) {
      const auto& v = z0.values;
      out[j] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * z0.grid.dx);
      continue;
    }
    const double at = alpha_at(mc.coeffs, l2k, Tc, t);
    std::vector<double> ek(nm);
    double aprime = 0.0;
    if (t <= Tc) {
      for (int k = 0; k < nm; ++k) {
        ek[k] = mc.coeffs[k] * std::exp(-l2k[k] * (Tc - t));
        aprime += ek[k] * l2k[k];
      }
    }
    std::vector<double> terms(kTraceModes);
    for (int n = 0; n < kTraceModes; ++n) {
      double Jn = 0.0;
      if (t <= Tc) {
        for (int k = 0; k < nm; ++k)
          Jn += ek[k] * (1.0 - std::exp(-(l2n[n] + l2k[k]) * t)) / (l2n[n] + l2k[k]);
      } else {
        double JTc = 0.0;
        for (int k = 0; k < nm; ++k)
          JTc += mc.coeffs[k] * (1.0 - std::exp(-(l2n[n] + l2k[k]) * Tc)) / (l2n[n] + l2k[k]);
        Jn = JTc * std::exp(-l2n[n] * (t - Tc));
      }
      const double In = at - a0 * std::exp(-l2n[n] * t) - l2n[n] * Jn;
      const double zeta_n = zeta0[n] * std::exp(-l2n[n] * t) - M_SQRT2 / lns[n] * In;
      terms[n] = zeta_n * M_SQRT2 * lns[n];
    }
    out[j] = pairwise_sum(terms) - 2.0 * aprime * tail_r;  // analytic tail of -2 alpha'/l^2
  }
  return out;
}

ExactControl local_exact_control(const Field& y0, double T, int n_modes,
                                 double deadline_fraction) {
  if (y0.grid.layout != Layout::node_centered)
    throw std::invalid_argument("local_exact_control: y0 must be node_centered");

  // z0 = exp(-(1/2) int_0^x y0) - 1
  const auto I = cumulative_trapezoid(y0.values, y0.grid.dx);
  Field z0(y0.grid);
  for (std::size_t i = 0; i < z0.size(); ++i) {
    const double expo = -0.5 * I[i];
    if (std::fabs(expo) > 700.0)
      throw std::range_error("local_exact_control: Cole-Hopf exponent out of range");
    z0.values[i] = std::expm1(expo);
  }

  MomentControl mc = heat_null_control_moments(z0, T, n_modes, deadline_fraction);
  if (mc.report.alpha_inf >= 1.0)
    throw std::runtime_error(
        "local_exact_control: |alpha|_inf = " + std::to_string(mc.report.alpha_inf) +
        " >= 1, margin " + std::to_string(mc.report.alpha_inf - 1.0) +
        "; y0 too large for the 1 + z > 0 maximum principle");

  std::vector<double> ts(kAlphaSamples + 1);
  for (int j = 0; j <= kAlphaSamples; ++j) ts[j] = T * static_cast<double>(j) / kAlphaSamples;
  const auto slopes = heat_trace_slopes(z0, mc, ts);

  std::vector<double> vs(ts.size());
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const double a = mc.alpha.eval(ts[j]);
    vs[j] = -2.0 * slopes[j] / (1.0 + a);
  }
  vs[0] = y0.values.front();  // compatible initial trace
  ControlSignal v(std::move(ts), std::move(vs), Interp::piecewise_linear);

  double vinf = 0.0;
  for (double s : v.samples) vinf = std::max(vinf, std::fabs(s));

  const double speed = 1.05 * std::max({linf_norm(y0), vinf, 1e-9});
  const double dt = 0.8 * y0.grid.dx / speed;
  Params p(1.0, std::max(1.0, speed), T);
  viscous::ViscousProblem prob(p, y0, ControlSignal::constant(0.0, T), v,
                               ControlSignal::constant(0.0, T));
  const Field yT = viscous::solve(prob, y0.grid, dt, 0).final_state();

  ExactControl out{std::move(v), mc.alpha, mc.report, l2_norm(yT), vinf};
  return out;
}

} // namespace blc::parabolic
