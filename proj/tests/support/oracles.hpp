#pragma once

// Test-only oracles. These deliberately avoid the solver paths they check:
// quadrature instead of closed forms, series built from scratch instead of
// the library's spectral code, and a plain backward-Euler heat stepper.

#include <cmath>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "blc/control_signal.hpp"
#include "blc/field.hpp"
#include "blc/numerics.hpp"

namespace blc::testing {

// composite-trapezoid quadrature of f over [0,1]
inline double quad01(const std::function<double(double)>& f, int panels = 20000) {
  double s = 0.5 * (f(0.0) + f(1.0));
  for (int i = 1; i < panels; ++i) s += f(static_cast<double>(i) / panels);
  return s / panels;
}

// value of the exact Riemann solution for the Burgers flux along x/t = 0
inline double riemann_at_origin(double uL, double uR) {
  if (uL >= uR) {  // shock with speed (uL+uR)/2
    const double s = 0.5 * (uL + uR);
    if (s > 0.0) return uL;
    if (s < 0.0) return uR;
    return uL;  // stationary shock: both sides give the same flux
  }
  // rarefaction fan between uL and uR
  if (uL > 0.0) return uL;
  if (uR < 0.0) return uR;
  return 0.0;  // sonic point
}

// Exact solution of y_t + y y_x - nu y_xx = 0, y(t,0)=y(t,1)=0 via the
// Cole-Hopf cosine series (Neumann heat problem), built independently of
// the library transforms.
inline Field cole_hopf_exact(const Field& y0, double nu, double T, int n_modes = 256) {
  const auto& g = y0.grid;
  const std::size_t nn = y0.size();
  const double dx = g.dx;

  std::vector<double> I(nn, 0.0);
  for (std::size_t i = 1; i < nn; ++i)
    I[i] = I[i - 1] + 0.5 * dx * (y0.values[i - 1] + y0.values[i]);
  std::vector<double> Z(nn);
  for (std::size_t i = 0; i < nn; ++i) Z[i] = std::exp(-I[i] / (2.0 * nu));

  // cosine coefficients c_0 = int Z, c_n = int Z sqrt2 cos(n pi x)
  std::vector<double> c(n_modes + 1, 0.0);
  for (int n = 0; n <= n_modes; ++n) {
    std::vector<double> integrand(nn);
    for (std::size_t i = 0; i < nn; ++i) {
      const double b = n == 0 ? 1.0 : M_SQRT2 * std::cos(n * M_PI * g.x(i));
      integrand[i] = Z[i] * b;
    }
    c[n] = trapezoid(integrand, dx);
  }
  Field out(g);
  for (std::size_t i = 0; i < nn; ++i) {
    const double x = g.x(i);
    double z = c[0], zx = 0.0;
    for (int n = 1; n <= n_modes; ++n) {
      const double dec = std::exp(-nu * n * n * M_PI * M_PI * T);
      z += c[n] * dec * M_SQRT2 * std::cos(n * M_PI * x);
      zx += -c[n] * dec * M_SQRT2 * n * M_PI * std::sin(n * M_PI * x);
    }
    out.values[i] = -2.0 * nu * zx / z;
  }
  return out;
}

// backward-Euler heat solve z_t = z_xx with z(t,0) = alpha(t), z_x(t,1) = 0;
// returns the final state and one-sided boundary slopes at requested times
struct HeatDirichletResult {
  Field zT;
  std::vector<double> trace_times;
  std::vector<double> trace_slopes;
  double min_one_plus_z = 0.0;
};

inline HeatDirichletResult heat_fd_dirichlet(const Field& z0, const ControlSignal& alpha,
                                             double T, double dt,
                                             std::span<const double> trace_times) {
  const int n = z0.grid.n_cells;
  const double dx = z0.grid.dx;
  const double r = dt / (dx * dx);
  const std::size_t m = n;
  std::vector<double> sub(m, -r), sup(m, -r), diag0(m, 1.0 + 2.0 * r);
  sub[m - 1] = -2.0 * r;

  std::vector<double> z = z0.values;
  std::vector<double> diag(m), rhs(m);
  HeatDirichletResult res{Field(z0.grid), {}, {}, 1.0 + z0.values[0]};
  for (double zz : z) res.min_one_plus_z = std::min(res.min_one_plus_z, 1.0 + zz);

  double t = 0.0;
  std::vector<double> want(trace_times.begin(), trace_times.end());
  while (t < T - 1e-13) {
    double h = std::min(dt, T - t);
    for (double w : want)
      if (t < w - 1e-14 && t + h > w) h = w - t;
    const double r2 = h / (dx * dx);
    for (std::size_t i = 0; i < m; ++i) {
      diag[i] = 1.0 + 2.0 * r2;
      rhs[i] = z[i + 1];
    }
    std::vector<double> sub2(m, -r2), sup2(m, -r2);
    sub2[m - 1] = -2.0 * r2;
    const double bval = alpha.eval(t + h);
    rhs[0] += r2 * bval;
    thomas_solve(sub2, diag, sup2, rhs);
    for (std::size_t i = 0; i < m; ++i) z[i + 1] = rhs[i];
    z[0] = bval;
    t += h;
    for (double zz : z) res.min_one_plus_z = std::min(res.min_one_plus_z, 1.0 + zz);
    for (double w : want)
      if (std::fabs(t - w) < 1e-12) {
        res.trace_times.push_back(w);
        res.trace_slopes.push_back((-3.0 * z[0] + 4.0 * z[1] - z[2]) / (2.0 * dx));
      }
  }
  res.zT.values = z;
  return res;
}

inline Field random_fourier_field(std::mt19937_64& rng, const Grid& g, int modes = 8,
                                  double scale = 1.0) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> a(modes), b(modes);
  for (int k = 0; k < modes; ++k) {
    a[k] = coef(rng);
    b[k] = coef(rng);
  }
  Field out(g);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = g.x(i);
    double s = 0.0;
    for (int k = 0; k < modes; ++k)
      s += a[k] * std::sin((k + 1) * M_PI * x) + b[k] * std::cos((k + 1) * M_PI * x);
    out.values[i] = scale * s;
  }
  return out;
}

} // namespace blc::testing
