#include "blc/colehopf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "blc/numerics.hpp"
#include "blc/threading.hpp"

namespace blc::colehopf {

namespace {
constexpr double kExpGuard = 700.0;       // exp() overflow margin
constexpr double kSettleTailTol = 1e-10;  // sup-norm tail budget for Z(T)
constexpr double kDissipTailTol = 1e-12;  // L2 tail budget for w(T)

void require_node(const Field& f, const char* who) {
  if (f.grid.layout != Layout::node_centered)
    throw std::invalid_argument(std::string(who) + ": node_centered layout required");
}
} // namespace

SpectralState::SpectralState(Basis b, std::vector<double> c)
    : basis(b), coeffs(std::move(c)), n_modes(static_cast<int>(coeffs.size())) {
  for (double v : coeffs)
    if (!std::isfinite(v)) throw std::invalid_argument("SpectralState: non-finite coefficient");
}

double lambda_f(int n) { return (n + 0.5) * M_PI; }

double coef_one_f(int n) { return M_SQRT2 / lambda_f(n); }

double coef_steady_f(double H, double eps, int n) {
  const double a2 = H * H / (4.0 * eps * eps);
  const double ln = lambda_f(n);
  return M_SQRT2 * ln / (a2 + ln * ln);
}

double coef_w0_e(double H, double eps, int n) {
  // <(H/eps) e^{(H/eps)(x-1)} | sqrt2 sin(n pi x)>, two integrations by parts
  const double r = eps * n * M_PI / H;
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  return (M_SQRT2 / H) * (eps * n * M_PI) / (1.0 + r * r) * (sign + std::exp(-H / eps));
}

namespace {
std::vector<double> project_impl(const Field& f, int n_modes, bool f_basis) {
  require_node(f, "project");
  const std::size_t nn = f.size();
  const double dx = f.grid.dx;
  std::vector<double> out(n_modes);
  parallel_for(static_cast<std::size_t>(n_modes), [&](std::size_t k) {
    const double ln = f_basis ? lambda_f(static_cast<int>(k))
                              : (static_cast<double>(k) + 1.0) * M_PI;
    std::vector<double> integrand(nn);
    for (std::size_t i = 0; i < nn; ++i)
      integrand[i] = f.values[i] * M_SQRT2 * std::sin(ln * f.grid.x(i));
    out[k] = trapezoid(integrand, dx);
  });
  return out;
}
} // namespace

std::vector<double> project_f(const Field& f, int n_modes) {
  return project_impl(f, n_modes, true);
}

std::vector<double> project_e(const Field& f, int n_modes) {
  return project_impl(f, n_modes, false);
}

Field forward_transform(const Field& y, double nu) {
  require_node(y, "forward_transform");
  if (!(nu > 0.0)) throw std::invalid_argument("forward_transform: nu must be > 0");
  const auto I = cumulative_trapezoid(y.values, y.grid.dx);
  Field z(y.grid);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double expo = -I[i] / (2.0 * nu);
    if (std::fabs(expo) > kExpGuard)
      throw std::range_error("forward_transform: exponent " + std::to_string(expo) +
                             " exceeds +-700");
    z.values[i] = std::exp(expo);
  }
  return z;
}

Field inverse_transform(const Field& z, double nu) {
  require_node(z, "inverse_transform");
  if (!(nu > 0.0)) throw std::invalid_argument("inverse_transform: nu must be > 0");
  for (double v : z.values)
    if (!(v > 0.0)) throw std::invalid_argument("inverse_transform: z must be positive");
  Field dz = fd_derivative(z);
  Field y(z.grid);
  for (std::size_t i = 0; i < y.size(); ++i)
    y.values[i] = -2.0 * nu * dz.values[i] / z.values[i];
  return y;
}

namespace {
void require_steady_args(double H, double eps, const char* who) {
  if (!(H > 0.0) || !(eps > 0.0))
    throw std::invalid_argument(std::string(who) + ": H and eps must be > 0");
}
} // namespace

Field h_eps(double H, double eps, const Grid& g) {
  require_steady_args(H, eps, "h_eps");
  const double a = H / (2.0 * eps);
  Field f(g);
  for (std::size_t i = 0; i < f.size(); ++i) f.values[i] = H * std::tanh(a * (1.0 - g.x(i)));
  return f;
}

SteadySpec k_eps_solve(double H, double eps) {
  require_steady_args(H, eps, "k_eps_solve");
  auto residual = [&](double K) { return K * std::tanh(K / (2.0 * eps)) - H; };
  double lo = H, hi = 2.0 * H;
  int expansions = 0;
  while (residual(hi) < 0.0) {
    hi *= 2.0;
    if (++expansions > 200)
      throw std::runtime_error("k_eps_solve: bracket expansion failed");
  }
  // bisection to a safe width, then Newton to 1e-12 relative
  for (int it = 0; it < 80 && (hi - lo) > 1e-6 * H; ++it) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }
  double K = 0.5 * (lo + hi);
  for (int it = 0; it < 60; ++it) {
    const double th = std::tanh(K / (2.0 * eps));
    const double f = K * th - H;
    const double df = th + K * (1.0 - th * th) / (2.0 * eps);
    const double Knew = K - f / df;
    if (std::fabs(Knew - K) <= 1e-13 * K) {
      K = Knew;
      break;
    }
    K = Knew;
  }
  SteadySpec spec{H, eps, K};
  if (std::fabs(K * std::tanh(K / (2.0 * eps)) - H) > 1e-11 * H)
    throw std::runtime_error("k_eps_solve: did not converge");
  return spec;
}

Field k_eps(const SteadySpec& spec, const Grid& g) {
  const double a = spec.K / (2.0 * spec.eps);
  Field f(g);
  for (std::size_t i = 0; i < f.size(); ++i)
    f.values[i] = spec.K * std::tanh(a * (1.0 - g.x(i)));
  return f;
}

Field H_eps(double H, double eps, const Grid& g) {
  require_steady_args(H, eps, "H_eps");
  if (H / eps > 2.0 * kExpGuard)
    throw std::range_error("H_eps: H/eps = " + std::to_string(H / eps) + " exceeds 1400");
  const double a = H / (2.0 * eps);
  const double lca = log_cosh(a);
  Field f(g);
  for (std::size_t i = 0; i < f.size(); ++i)
    f.values[i] = std::exp(log_cosh(a * (1.0 - g.x(i))) - lca);
  return f;
}

Field phi_eps(double H, double eps, const Grid& g) {
  require_steady_args(H, eps, "phi_eps");
  Field f(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    // tanh(z) - 1 = -2 e^{-2z} / (1 + e^{-2z}), stable for z >= 0
    const double z = (H / (2.0 * eps)) * (1.0 - g.x(i));
    const double e = std::exp(-2.0 * z);
    f.values[i] = -(2.0 * H / eps) * e / (1.0 + e);
  }
  return f;
}

Field z_eps(double H, double eps, const Grid& g) {
  require_steady_args(H, eps, "z_eps");
  const double q = std::exp(-H / eps);
  Field f(g);
  for (std::size_t i = 0; i < f.size(); ++i)
    f.values[i] = (1.0 + std::exp((H / eps) * (g.x(i) - 1.0))) / (1.0 + q);
  return f;
}

std::vector<double> settle_deviation_coeffs(const Field& Z0, double H, double eps,
                                            int n_modes) {
  require_node(Z0, "settle_deviation_coeffs");
  const Field Hs = H_eps(H, eps, Z0.grid);
  return project_f(Z0 - Hs, n_modes);
}

SettleResult settle_heat_solve(const Field& Z0, double H, double eps, double T, int n_modes) {
  require_node(Z0, "settle_heat_solve");
  require_steady_args(H, eps, "settle_heat_solve");
  if (!(T > 0.0)) throw std::invalid_argument("settle_heat_solve: T must be > 0");
  if (n_modes < 8) throw std::invalid_argument("settle_heat_solve: n_modes >= 8 required");
  if (std::fabs(Z0.values.front() - 1.0) > 1e-8)
    throw std::invalid_argument("settle_heat_solve: Z0(0) must equal 1 (got " +
                                std::to_string(Z0.values.front()) + ")");

  const double a = H / (2.0 * eps);
  const double a2 = a * a;
  const auto alpha = settle_deviation_coeffs(Z0, H, eps, n_modes);

  // spectral tail estimate at time T via the closed-form coefficient bounds
  {
    const double h1 = h1_norm(Z0);
    const double lN = lambda_f(n_modes);
    const double amp_z0 = M_SQRT2 * (1.0 + 0.5 * h1) / lN;
    const double amp_st = (lN <= a) ? M_SQRT2 / (2.0 * a) : M_SQRT2 * lN / (a2 + lN * lN);
    const double gap = eps * (2.0 * n_modes + 2.0) * M_PI * M_PI * T;
    const double geom = 1.0 - std::exp(-gap);
    const double tail =
        M_SQRT2 * (amp_z0 + amp_st) * std::exp(-eps * (lN * lN + a2) * T) / geom;
    if (!(tail <= kSettleTailTol))
      throw std::runtime_error("settle_heat_solve: insufficient modes, tail bound " +
                               std::to_string(tail) + " > 1e-10 at T");
  }

  // Z(T) = H^eps + sum alpha_n e^{-eps(l^2+a^2)T} f_n  (steady part exact)
  std::vector<double> decayed(n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double ln = lambda_f(k);
    decayed[k] = alpha[k] * std::exp(-eps * (ln * ln + a2) * T);
  }
  Field ZT = H_eps(H, eps, Z0.grid);
  {
    std::vector<double> bump(ZT.size());
    parallel_for(ZT.size(), [&](std::size_t i) {
      const double x = ZT.grid.x(i);
      std::vector<double> terms(n_modes);
      for (int k = 0; k < n_modes; ++k)
        terms[k] = decayed[k] * M_SQRT2 * std::sin(lambda_f(k) * x);
      bump[i] = pairwise_sum(terms);
    });
    for (std::size_t i = 0; i < ZT.size(); ++i) ZT.values[i] += bump[i];
  }

  // left slope Z_x(t,0) = Heps'(0) + sum alpha_n e^{-eps(l^2+a^2)t} sqrt2 l_n
  const double steady_slope = -a * std::tanh(a);
  const int n_samples = 2048;
  std::vector<double> ts(n_samples + 1), ss(n_samples + 1);
  parallel_for(static_cast<std::size_t>(n_samples + 1), [&](std::size_t j) {
    const double t = T * static_cast<double>(j) / n_samples;
    std::vector<double> terms(n_modes);
    for (int k = 0; k < n_modes; ++k) {
      const double ln = lambda_f(k);
      terms[k] = alpha[k] * std::exp(-eps * (ln * ln + a2) * t) * M_SQRT2 * ln;
    }
    ts[j] = t;
    ss[j] = steady_slope + pairwise_sum(terms);
  });
  SettleResult res{std::move(ZT),
                   ControlSignal(std::move(ts), std::move(ss), Interp::piecewise_linear)};
  return res;
}

Field reconstruct_w0(double H, double eps, const Grid& g, int n_modes) {
  require_steady_args(H, eps, "reconstruct_w0");
  Field w(g);
  std::vector<double> c(n_modes);
  for (int k = 0; k < n_modes; ++k) c[k] = coef_w0_e(H, eps, k + 1);
  parallel_for(w.size(), [&](std::size_t i) {
    const double x = g.x(i);
    std::vector<double> terms(n_modes);
    for (int k = 0; k < n_modes; ++k)
      terms[k] = c[k] * M_SQRT2 * std::sin((k + 1) * M_PI * x);
    w.values[i] = pairwise_sum(terms);
  });
  return w;
}

DissipateResult dissipate_heat_solve(double H, double eps, double T, int n_modes,
                                     const Grid& g) {
  require_steady_args(H, eps, "dissipate_heat_solve");
  if (!(T > 0.0)) throw std::invalid_argument("dissipate_heat_solve: T must be > 0");
  if (n_modes < 1) throw std::invalid_argument("dissipate_heat_solve: n_modes >= 1");
  if (g.layout != Layout::node_centered)
    throw std::invalid_argument("dissipate_heat_solve: node_centered grid required");

  const double q = std::exp(-H / eps);

  // rigorous terminal tail: |w0_n| <= sqrt2 H (1+q)/(eps n pi)
  {
    const double N1 = n_modes + 1.0;
    const double amp2 = 2.0 * H * H * (1.0 + q) * (1.0 + q) / (eps * eps * M_PI * M_PI * N1 * N1);
    const double geom = 1.0 - std::exp(-2.0 * (2.0 * N1 + 1.0) * M_PI * M_PI * T);
    const double tail2 = amp2 * std::exp(-2.0 * N1 * N1 * M_PI * M_PI * T) / geom;
    if (!(std::sqrt(tail2) <= kDissipTailTol))
      throw std::runtime_error("dissipate_heat_solve: insufficient modes, tail " +
                               std::to_string(std::sqrt(tail2)) + " > 1e-12 at T");
  }

  std::vector<double> wn(n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double n = k + 1.0;
    wn[k] = coef_w0_e(H, eps, k + 1) * std::exp(-n * n * M_PI * M_PI * T);
  }

  Field wT(g), intw(g);
  parallel_for(g.n_values(), [&](std::size_t i) {
    const double x = g.x(i);
    std::vector<double> tw(n_modes), ti(n_modes);
    for (int k = 0; k < n_modes; ++k) {
      const double npi = (k + 1.0) * M_PI;
      tw[k] = wn[k] * M_SQRT2 * std::sin(npi * x);
      ti[k] = wn[k] * M_SQRT2 * (1.0 - std::cos(npi * x)) / npi;  // int_0^x e_n
    }
    wT.values[i] = pairwise_sum(tw);
    intw.values[i] = pairwise_sum(ti);
  });

  // z(T,x) = z(T,0) + intw(x)/(1+q); z(T,0) from conservation of int_0^1 z,
  // whose initial value is analytic for z_eps data.
  const double mean0 = (1.0 + (eps / H) * (1.0 - q)) / (1.0 + q);
  std::vector<double> mint(n_modes);
  for (int k = 0; k < n_modes; ++k) mint[k] = wn[k] * M_SQRT2 / ((k + 1.0) * M_PI);
  const double z_at_0 = mean0 - pairwise_sum(mint) / (1.0 + q);

  Field zT(g);
  for (std::size_t i = 0; i < g.n_values(); ++i)
    zT.values[i] = z_at_0 + intw.values[i] / (1.0 + q);

  return DissipateResult{std::move(zT), std::move(wT)};
}

Field dissipated_residue(double H, double eps, double T, const Grid& g, int n_modes) {
  DissipateResult r = dissipate_heat_solve(H, eps, T, n_modes, g);
  const double q = std::exp(-H / eps);
  Field phi(g);
  for (std::size_t i = 0; i < g.n_values(); ++i) {
    if (!(r.zT.values[i] > 0.0))
      throw std::runtime_error("dissipated_residue: z(T) lost positivity");
    phi.values[i] = -2.0 * r.wT.values[i] / ((1.0 + q) * r.zT.values[i]);
  }
  return phi;
}

} // namespace blc::colehopf
