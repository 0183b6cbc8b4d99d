#include "blc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "blc/colehopf.hpp"
#include "blc/entropy.hpp"
#include "blc/numerics.hpp"
#include "blc/parabolic.hpp"
#include "blc/pipeline.hpp"
#include "blc/viscous.hpp"

namespace blc::verify {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << std::scientific << v;
  return os.str();
}

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

// bounded Fourier polynomial, <= 8 modes, coefficients in [-1,1]
std::vector<double> random_fourier(std::mt19937_64& rng, const Grid& g) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> a(8), b(8);
  for (int k = 0; k < 8; ++k) {
    a[k] = coef(rng);
    b[k] = coef(rng);
  }
  std::vector<double> out(g.n_values());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = g.x(i);
    double s = 0.0;
    for (int k = 0; k < 8; ++k)
      s += a[k] * std::sin((k + 1) * M_PI * x) + b[k] * std::cos((k + 1) * M_PI * x);
    out[i] = s;
  }
  return out;
}

} // namespace

DecayFit fit_decay(std::span<const double> xs, std::span<const double> ys, FitKind kind) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw std::invalid_argument("fit_decay: need >= 3 matching points");
  DecayFit fit;
  fit.xs.assign(xs.begin(), xs.end());
  fit.ys.assign(ys.begin(), ys.end());
  std::vector<double> u(xs.size()), w(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(ys[i] > 0.0)) throw std::invalid_argument("fit_decay: ys must be positive");
    if (kind == FitKind::log_log && !(xs[i] > 0.0))
      throw std::invalid_argument("fit_decay: xs must be positive for log_log");
    u[i] = (kind == FitKind::log_log) ? std::log(xs[i]) : xs[i];
    w[i] = std::log(ys[i]);
  }
  const double n = static_cast<double>(u.size());
  const double mu = pairwise_sum(u) / n;
  const double mw = pairwise_sum(w) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    sxx += (u[i] - mu) * (u[i] - mu);
    sxy += (u[i] - mu) * (w[i] - mw);
  }
  fit.slope = sxy / sxx;
  fit.intercept = mw - fit.slope * mu;
  return fit;
}

ComparisonReport check_comparison(std::uint64_t seed, int trials, int n_cells) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_real_distribution<double> visc(0.1, 1.0);

  const Grid gn(n_cells, Layout::node_centered);
  const Grid gc(n_cells, Layout::cell_centered);
  ComparisonReport rep;
  rep.trials = trials;

  const double T = 0.02;
  for (int trial = 0; trial < trials; ++trial) {
    auto fa = random_fourier(rng, gn);
    auto fb = random_fourier(rng, gn);
    std::vector<double> lo(fa.size()), hi(fa.size());
    for (std::size_t i = 0; i < fa.size(); ++i) {
      lo[i] = std::min(fa[i], fb[i]);
      hi[i] = std::max(fa[i], fb[i]);
    }
    double u1 = unif(rng), u2 = unif(rng);
    if (u1 > u2) std::swap(u1, u2);
    double va1 = 2.0 * unif(rng), va2 = 2.0 * unif(rng);
    if (va1 > va2) std::swap(va1, va2);
    double vb1 = 2.0 * unif(rng), vb2 = 2.0 * unif(rng);
    if (vb1 > vb2) std::swap(vb1, vb2);
    const double nu = visc(rng);

    double bound = 2.1;  // |v| range
    for (std::size_t i = 0; i < hi.size(); ++i)
      bound = std::max({bound, std::fabs(lo[i]), std::fabs(hi[i])});
    bound += std::fabs(u2) * T + std::fabs(u1) * T;
    const double dt = 0.5 * gn.dx / bound;

    // viscous pair
    {
      Params p(nu, 1.0, T);
      viscous::ViscousProblem plo(p, Field(gn, lo), ControlSignal::constant(u1, T),
                                  ControlSignal::constant(va1, T), ControlSignal::constant(vb1, T));
      viscous::ViscousProblem phi(p, Field(gn, hi), ControlSignal::constant(u2, T),
                                  ControlSignal::constant(va2, T), ControlSignal::constant(vb2, T));
      Field ylo = plo.y0, yhi = phi.y0;
      double t = 0.0;
      while (t < T - 1e-14) {
        const double h = std::min(dt, T - t);
        ylo = viscous::step(ylo, t, h, plo);
        yhi = viscous::step(yhi, t, h, phi);
        t += h;
        for (std::size_t i = 0; i < ylo.size(); ++i)
          rep.max_violation_viscous =
              std::max(rep.max_violation_viscous, ylo.values[i] - yhi.values[i]);
      }
    }
    // inviscid pair (null-viscosity limit of the same comparison)
    {
      auto ca = random_fourier(rng, gc);
      auto cb = random_fourier(rng, gc);
      std::vector<double> clo(ca.size()), chi(ca.size());
      for (std::size_t i = 0; i < ca.size(); ++i) {
        clo[i] = std::min(ca[i], cb[i]);
        chi[i] = std::max(ca[i], cb[i]);
      }
      entropy::InviscidProblem plo(Field(gc, clo), ControlSignal::constant(u1, T),
                                   ControlSignal::constant(va1, T), T);
      entropy::InviscidProblem phi(Field(gc, chi), ControlSignal::constant(u2, T),
                                   ControlSignal::constant(va2, T), T);
      Field ylo = plo.y0, yhi = phi.y0;
      double t = 0.0;
      while (t < T - 1e-14) {
        const double h = std::min(dt, T - t);
        ylo = entropy::inviscid_step(ylo, t, h, plo);
        yhi = entropy::inviscid_step(yhi, t, h, phi);
        t += h;
        for (std::size_t i = 0; i < ylo.size(); ++i)
          rep.max_violation_inviscid =
              std::max(rep.max_violation_inviscid, ylo.values[i] - yhi.values[i]);
      }
    }
  }
  return rep;
}

Field settle_heat_fd(const Field& Z0, double H, double eps, double T, double dt) {
  if (Z0.grid.layout != Layout::node_centered)
    throw std::invalid_argument("settle_heat_fd: node_centered required");
  const int n = Z0.grid.n_cells;
  const double dx = Z0.grid.dx;
  const double r = eps * dt / (dx * dx);
  const double c0 = H * H / (4.0 * eps) * dt;

  // unknowns: nodes 1..n; Dirichlet Z = 1 at node 0, mirror ghost at node n
  const std::size_t m = n;
  std::vector<double> sub(m, -r), sup(m, -r), diag0(m, 1.0 + 2.0 * r + c0);
  sub[m - 1] = -2.0 * r;
  std::vector<double> z = Z0.values;
  std::vector<double> diag(m), rhs(m);
  long steps = static_cast<long>(std::ceil(T / dt - 1e-12));
  double t = 0.0;
  for (long s = 0; s < steps; ++s) {
    const double h = std::min(dt, T - t);
    if (h != dt) {
      // final shortened step gets its own coefficients
      const double r2 = eps * h / (dx * dx);
      const double c2 = H * H / (4.0 * eps) * h;
      std::vector<double> sub2(m, -r2), sup2(m, -r2), diag2(m, 1.0 + 2.0 * r2 + c2);
      sub2[m - 1] = -2.0 * r2;
      for (std::size_t i = 0; i < m; ++i) rhs[i] = z[i + 1];
      rhs[0] += r2 * 1.0;
      thomas_solve(sub2, diag2, sup2, rhs);
      for (std::size_t i = 0; i < m; ++i) z[i + 1] = rhs[i];
    } else {
      diag = diag0;
      for (std::size_t i = 0; i < m; ++i) rhs[i] = z[i + 1];
      rhs[0] += r * 1.0;
      thomas_solve(sub, diag, sup, rhs);
      for (std::size_t i = 0; i < m; ++i) z[i + 1] = rhs[i];
    }
    z[0] = 1.0;
    t += h;
  }
  return Field(Z0.grid, std::move(z));
}

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig cfg;
  cfg.checks = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"};
  return cfg;
}

namespace {
std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}
} // namespace

SuiteConfig SuiteConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("SuiteConfig: cannot open " + path);
  SuiteConfig cfg = defaults();
  bool any_key = false;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("SuiteConfig: malformed line (expected key = value): " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    any_key = true;
    if (key == "checks") {
      cfg.checks.clear();
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) cfg.checks.push_back(item);
      }
    } else if (key == "seed") {
      cfg.seed = std::stoull(val);
    } else if (key == "trials") {
      cfg.trials = std::stoi(val);
    } else if (key == "grid_scale") {
      cfg.grid_scale = std::stod(val);
    } else if (key == "eps_a4") {
      cfg.eps_a4 = parse_double_list(val);
    } else if (key == "eps_a7") {
      cfg.eps_a7 = parse_double_list(val);
    } else if (key == "eps_a10") {
      cfg.eps_a10 = parse_double_list(val);
    } else {
      throw std::invalid_argument("SuiteConfig: unknown key '" + key + "'");
    }
  }
  if (!any_key) cfg.checks.clear();  // empty config: zero checks, warn in the report
  return cfg;
}

bool SuiteReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["all_pass"] = all_pass();
  j["warnings"] = warnings;
  j["checks"] = nlohmann::json::array();
  for (const auto& e : entries) {
    j["checks"].push_back({{"id", e.id},
                           {"description", e.description},
                           {"pass", e.pass},
                           {"measured", e.measured},
                           {"limit", e.limit},
                           {"detail", e.detail},
                           {"seconds", e.seconds}});
  }
  return j.dump(2);
}

namespace {

int scaled_cells(double scale, int base) {
  int n = static_cast<int>(std::lround(base * scale));
  return std::max(8, n);
}

struct CheckCtx {
  const SuiteConfig& cfg;
  SuiteReport& rep;

  void run(const std::string& id, const std::string& desc,
           const std::function<void(CheckResult&)>& body) {
    bool wanted = false;
    for (const auto& c : cfg.checks) wanted = wanted || (c == id);
    if (!wanted) return;
    CheckResult r;
    r.id = id;
    r.description = desc;
    const double t0 = now_seconds();
    try {
      body(r);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail += std::string(" exception: ") + ex.what();
    }
    r.seconds = now_seconds() - t0;
    rep.entries.push_back(std::move(r));
  }
};

} // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  SuiteReport rep;
  if (cfg.checks.empty())
    rep.warnings.push_back("configuration selects zero checks; nothing was run");
  CheckCtx ctx{cfg, rep};

  // A1: discrete comparison principle, viscous and inviscid
  ctx.run("A1", "comparison principle on random ordered data", [&](CheckResult& r) {
    const auto c = check_comparison(cfg.seed, cfg.trials, scaled_cells(cfg.grid_scale, 400));
    r.measured = std::max(c.max_violation_viscous, c.max_violation_inviscid);
    r.limit = 1e-12;
    r.pass = r.measured <= r.limit;
    r.detail = "viscous violation " + fmt(c.max_violation_viscous) + ", inviscid violation " +
               fmt(c.max_violation_inviscid) + " over " + std::to_string(c.trials) + " trials";
  });

  // A2: steady-state stationarity of h^eps under the viscous solver
  ctx.run("A2", "steady state h^eps is stationary", [&](CheckResult& r) {
    const double H = 1.0, eps = 0.1, T = 0.5;
    const Grid g(scaled_cells(cfg.grid_scale, 4000), Layout::node_centered);
    const Field y0 = colehopf::h_eps(H, eps, g);
    const double vb = H * std::tanh(H / (2.0 * eps));
    Params p(eps, H, T);
    viscous::ViscousProblem prob(p, y0, ControlSignal::constant(0.0, T),
                                 ControlSignal::constant(vb, T), ControlSignal::constant(0.0, T));
    const double dt = 0.8 * g.dx / std::max(1.0, vb);
    const Field yT = viscous::solve(prob, g, dt, 0).final_state();
    r.measured = linf_norm(yT - y0);
    r.limit = 1e-3;
    r.pass = r.measured <= r.limit;
    r.detail = "Linf drift over T=0.5 at nu=eps=0.1, n=" + std::to_string(g.n_cells);
  });

  // A3: steady-state gap estimate |k^eps - h^eps|_inf <= 2H e^{-H/eps}
  ctx.run("A3", "steady-state gap against 2H e^{-H/eps}", [&](CheckResult& r) {
    const double H = 1.0;
    const Grid g(20000, Layout::node_centered);
    double worst = 0.0;
    std::ostringstream det;
    for (double eps : {0.1, 0.15, 0.2}) {
      const auto spec = colehopf::k_eps_solve(H, eps);
      const Field gap = colehopf::k_eps(spec, g) - colehopf::h_eps(H, eps, g);
      const double measured = linf_norm(gap);
      const double bound = 2.0 * H * std::exp(-H / eps);
      const double ratio = measured / bound;
      worst = std::max(worst, ratio);
      det << "eps=" << eps << ": gap " << fmt(measured) << " bound " << fmt(bound) << " ratio "
          << ratio << "; ";
    }
    r.measured = worst;
    r.limit = 1.0;
    r.pass = worst <= 1.0;
    r.detail = det.str() + "(sup of k-h sits inside the layer, not at x=0)";
  });

  // A4: settling decay in H1 against eps^{-1/2} sqrt(17) e^{-H^2 T/4eps}
  ctx.run("A4", "settling decay bound and semilog rate", [&](CheckResult& r) {
    const double H = 1.0, T = 1.0;
    const Grid g(2000, Layout::node_centered);
    const Field one(g, 1.0);
    std::vector<double> inv_eps, meas;
    bool bound_ok = true;
    std::ostringstream det;
    for (double eps : cfg.eps_a4) {
      const auto s = colehopf::settle_heat_solve(one, H, eps, T, 512);
      const double m = h1_norm(s.ZT - colehopf::H_eps(H, eps, g));
      const double bound = std::sqrt(17.0) * std::exp(-H * H * T / (4.0 * eps)) / std::sqrt(eps);
      bound_ok = bound_ok && m <= bound;
      inv_eps.push_back(1.0 / eps);
      meas.push_back(m);
      det << "eps=" << eps << ": H1 gap " << fmt(m) << " bound " << fmt(bound) << "; ";
    }
    const auto fit = fit_decay(inv_eps, meas, FitKind::semilog);
    const double slope_limit = -H * H * T / 4.0 * 0.95;
    det << "semilog slope " << fit.slope << " (limit " << slope_limit << ")";
    r.measured = fit.slope;
    r.limit = slope_limit;
    r.pass = bound_ok && fit.slope <= slope_limit;
    r.detail = det.str();
  });

  // A5: spectral settle solve against the backward-Euler FD oracle
  ctx.run("A5", "settle spectral vs finite-difference oracle", [&](CheckResult& r) {
    const double H = 1.0, eps = 0.2, T = 1.0;
    const Grid g(scaled_cells(cfg.grid_scale, 4000), Layout::node_centered);
    const Field one(g, 1.0);
    const auto s = colehopf::settle_heat_solve(one, H, eps, T, 256);
    const Field fd = settle_heat_fd(one, H, eps, T, 1e-5);
    r.measured = linf_norm(s.ZT - fd);
    r.limit = 1e-4;
    r.pass = r.measured <= r.limit;
    r.detail = "Linf difference at eps=0.2, dt=1e-5, n=" + std::to_string(g.n_cells);
  });

  // A6: push-down sandwich y(T) >= k^eps - H - |delta| envelope
  ctx.run("A6", "push-down sandwich with Gronwall envelope", [&](CheckResult& r) {
    const double H = 1.0, eps = 0.1, tau = 1e-3;
    const Grid g(scaled_cells(cfg.grid_scale, 4000), Layout::node_centered);
    const Field ystart = colehopf::h_eps(H, eps, g);
    const Field ke = colehopf::k_eps(colehopf::k_eps_solve(H, eps), g);
    auto [ubar, vbar] = control::pushdown_controls(H, tau);
    Params p(eps, H, tau);
    viscous::ViscousProblem prob(p, ystart, ubar, vbar, ControlSignal::constant(0.0, tau));
    const Field yT = viscous::solve(prob, g, tau / 2048.0, 0).final_state();

    Field under(g);
    for (std::size_t i = 0; i < under.size(); ++i)
      under.values[i] = std::max(0.0, (ke.values[i] - H) - yT.values[i]);
    const double measured = l2_norm(under);
    const double gap0 = l2_norm(ystart - ke);
    const double bound = std::exp(H * H * tau / (4.0 * eps)) * gap0 +
                         2.0 * H * (std::exp(H * H * tau / (2.0 * eps)) - 1.0);
    double overshoot = 0.0;
    for (double v : yT.values) overshoot = std::max(overshoot, v);
    r.measured = measured / bound;
    r.limit = 1.2;
    r.pass = r.measured <= r.limit;
    r.detail = "undershoot " + fmt(measured) + " envelope " + fmt(bound) + " overshoot above 0: " +
               fmt(overshoot);
  });

  // A7: dissipation of the boundary residue: explicit bound, rate, nonlinear
  // cross-check
  ctx.run("A7", "boundary-layer dissipation rate and bound", [&](CheckResult& r) {
    const double H = 1.0, T = 1.0, eta = 0.25;
    const Grid g(4000, Layout::node_centered);
    std::vector<double> epss = cfg.eps_a7;
    std::vector<double> phinorm;
    bool bound_ok = true;
    std::ostringstream det;
    for (double eps : epss) {
      const int nm = 64;
      const auto d = colehopf::dissipate_heat_solve(H, eps, T, nm, g);
      double w2 = 0.0;
      for (int k = 1; k <= nm; ++k) {
        const double wn = colehopf::coef_w0_e(H, eps, k) * std::exp(-k * k * M_PI * M_PI * T);
        w2 += wn * wn;
      }
      const double bound37 = (8.0 * M_PI * M_PI / (3.0 * H * H)) * std::pow(eps, 2.0 - 3.0 * eta) +
                             4.0 * std::exp(-2.0 * std::pow(eps, -2.0 * eta) * M_PI * M_PI * T);
      bound_ok = bound_ok && (w2 <= bound37);
      const Field phi = colehopf::dissipated_residue(H, eps, T, g, nm);
      phinorm.push_back(l2_norm(phi));
      det << "eps=" << eps << ": |w|^2 " << fmt(w2) << " bound " << fmt(bound37) << " |phi| "
          << fmt(phinorm.back()) << "; ";
    }
    const auto fit = fit_decay(epss, phinorm, FitKind::log_log);
    det << "loglog slope " << fit.slope << " (>= 0.85); ";

    // nonlinear viscous cross-check at eps = 0.1
    const Grid gc(scaled_cells(cfg.grid_scale, 8000), Layout::node_centered);
    const double eps_c = 0.1;
    const Field y0 = colehopf::phi_eps(H, eps_c, gc);
    Params p(1.0, H / eps_c, T);
    viscous::ViscousProblem prob(p, y0, ControlSignal::constant(0.0, T),
                                 ControlSignal::constant(0.0, T), ControlSignal::constant(0.0, T));
    const double dt = 0.8 * gc.dx / linf_norm(y0);
    const Field yT = viscous::solve(prob, gc, dt, 0).final_state();
    const Field phi_spec = colehopf::dissipated_residue(H, eps_c, T, gc, 64);
    const double cross = l2_norm(yT - phi_spec);
    det << "viscous cross-check L2 " << fmt(cross) << " (<= 5e-3)";

    r.measured = fit.slope;
    r.limit = 0.85;
    r.pass = bound_ok && fit.slope >= 0.85 && cross <= 5e-3;
    r.detail = det.str();
  });

  // A8: hyperbolic null control with the override wave
  ctx.run("A8", "hyperbolic null control (override + ramp down)", [&](CheckResult& r) {
    const double T = 1.0;
    const Grid g(scaled_cells(cfg.grid_scale, 800), Layout::cell_centered);
    const Field y0 = Field::from_function(g, [](double x) { return std::sin(2.0 * M_PI * x); });
    const auto hc = entropy::hyperbolic_null_control(1.0, T);
    entropy::InviscidProblem prob(y0, hc.u, hc.v, T);
    const auto tr = entropy::solve_inviscid(prob, g, 0.8, 0, {T / 2.0});

    const Field* mid = nullptr;
    for (std::size_t k = 0; k < tr.times.size(); ++k)
      if (std::fabs(tr.times[k] - T / 2.0) < 1e-12) mid = &tr.states[k];
    if (!mid) throw std::runtime_error("A8: midpoint snapshot missing");

    double plateau_dev = 0.0;
    for (std::size_t i = 2; i + 2 < mid->size(); ++i)
      plateau_dev = std::max(plateau_dev, std::fabs(mid->values[i] - hc.H));
    const double final_inf = linf_norm(tr.final_state());
    r.measured = final_inf;
    r.limit = 5e-2;
    r.pass = final_inf <= 5e-2 && plateau_dev <= 1e-8;
    r.detail = "H=" + std::to_string(hc.H) + ", |y(T)|_inf " + fmt(final_inf) +
               ", plateau deviation at T/2 " + fmt(plateau_dev) + " (within 2dx of boundaries)";
  });

  // A9: exact parabolic stage via the moments method
  ctx.run("A9", "moments-method local exact control", [&](CheckResult& r) {
    const double T = 1.0;
    const Grid g(scaled_cells(cfg.grid_scale, 2000), Layout::node_centered);
    const double amp = 0.05 * M_SQRT2;  // |y0|_L2 = 0.05
    const Field y0 = Field::from_function(g, [&](double x) { return amp * std::sin(M_PI * x); });
    const auto ec = parabolic::local_exact_control(y0, T, 8);
    r.measured = ec.terminal_l2;
    r.limit = 1e-3;
    r.pass = ec.moments.alpha_inf < 1.0 && ec.moments.heat_residual_l2 <= 1e-4 &&
             ec.terminal_l2 <= 1e-3;
    r.detail = "|alpha|_inf " + fmt(ec.moments.alpha_inf) + " (< 1), heat residual " +
               fmt(ec.moments.heat_residual_l2) + " (<= 1e-4), burgers terminal " +
               fmt(ec.terminal_l2) + " (<= 1e-3), cond " + fmt(ec.moments.gram_cond);
  });

  // A10: full four-phase pipeline sweep
  ctx.run("A10", "four-phase pipeline, terminal norm vs eps", [&](CheckResult& r) {
    const double T = 3.0, H = 3.0;
    std::vector<double> finals;
    std::ostringstream det;
    for (double eps : cfg.eps_a10) {
      const int base = std::max(400, static_cast<int>(std::ceil(8.0 * H / eps)));
      const Grid g(scaled_cells(cfg.grid_scale, base), Layout::node_centered);
      const Field y0 =
          Field::from_function(g, [](double x) { return std::sin(2.0 * M_PI * x); });
      const auto plan = control::build_pipeline(y0, T, eps, H, g, 1.0, 512);
      const auto res = control::run_pipeline(plan, y0, g, 1.0, 0);
      finals.push_back(res.final_l2);
      det << "eps=" << eps << ": final " << fmt(res.final_l2) << " (t2 " << fmt(res.l2_t2)
          << ", t3 " << fmt(res.l2_t3) << "); ";
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < finals.size(); ++i)
      decreasing = decreasing && finals[i] < finals[i - 1];
    const double ratio = finals.back() / finals.front();
    det << "ratio(last/first) " << ratio << " (<= 0.2)";
    r.measured = ratio;
    r.limit = 0.2;
    r.pass = decreasing && ratio <= 0.2;
    r.detail = det.str();
  });

  return rep;
}

} // namespace blc::verify
