#pragma once

#include <vector>

#include "blc/control_signal.hpp"
#include "blc/field.hpp"

namespace blc::colehopf {

/// Truncated coefficient vector on one of the two sine bases:
///   f_basis: f_n(x) = sqrt2 sin((n+1/2) pi x), n from 0  (mixed BCs)
///   e_basis: e_n(x) = sqrt2 sin(n pi x),       n from 1  (Dirichlet)
struct SpectralState {
  enum class Basis { f_basis, e_basis };
  Basis basis = Basis::f_basis;
  std::vector<double> coeffs;
  int n_modes = 0;

  SpectralState(Basis b, std::vector<double> c);
  /// Basis index of coeffs[i]: i for f_basis, i+1 for e_basis.
  int index(int i) const { return basis == Basis::f_basis ? i : i + 1; }
};

double lambda_f(int n);  // (n + 1/2) pi

// Closed-form scalar products. Quadrature projections below serve as their
// oracles in the test suite.
double coef_one_f(int n);                             // <1 | f_n>
double coef_steady_f(double H, double eps, int n);    // <H^eps | f_n>
double coef_w0_e(double H, double eps, int n);        // <w(0,.) | e_n>, dissipation data

/// Trapezoid projections onto the first n_modes basis functions,
/// on the field's own grid (node_centered).
std::vector<double> project_f(const Field& f, int n_modes);
std::vector<double> project_e(const Field& f, int n_modes);

/// z(x) = exp(-(1/(2 nu)) int_0^x y), cumulative trapezoid; z(0) = 1.
/// Throws std::range_error if the exponent leaves [-700, 700].
Field forward_transform(const Field& y, double nu);

/// y = -2 nu Dz / z. Requires z > 0.
Field inverse_transform(const Field& z, double nu);

/// Steady profile H tanh((H/2eps)(1-x)); stationary under u=0,
/// v = H tanh(H/2eps).
Field h_eps(double H, double eps, const Grid& g);

/// k^eps carries boundary value exactly H: K tanh((K/2eps)(1-x)) with
/// K tanh(K/(2 eps)) = H.
struct SteadySpec {
  double H = 0.0;
  double eps = 0.0;
  double K = 0.0;  // solved to 1e-12 relative
};
SteadySpec k_eps_solve(double H, double eps);
Field k_eps(const SteadySpec& spec, const Grid& g);

/// Cole-Hopf image of h^eps: cosh((H/2eps)(1-x))/cosh(H/2eps), evaluated in
/// log space. Throws std::range_error if H/eps > 1400.
Field H_eps(double H, double eps, const Grid& g);

/// Boundary residue (H/eps)(tanh((H/2eps)(1-x)) - 1); nonpositive.
Field phi_eps(double H, double eps, const Grid& g);

/// Cole-Hopf image of the residue: (1 + e^{(H/eps)(x-1)})/(1 + e^{-H/eps}).
Field z_eps(double H, double eps, const Grid& g);

/// Deviation coefficients alpha_n = <Z0 - H^eps | f_n> by trapezoid on Z0's
/// grid. Projecting the difference keeps H^eps an exact fixed point of the
/// mode ODEs in floating point.
std::vector<double> settle_deviation_coeffs(const Field& Z0, double H, double eps, int n_modes);

/// Spectral solve of Z_t - eps Z_xx = -(H^2/(4 eps)) Z, Z(t,0) = 1,
/// Z_x(t,1) = 0 from Z0 (Z0(0) = 1 within 1e-8 required):
///   Z(t,.) = H^eps + sum_n alpha_n e^{-eps(lambda_n^2 + H^2/4eps^2) t} f_n.
/// left_slope samples Z_x(t,0) on a uniform 2048-point mesh, piecewise
/// linear. Throws when the spectral tail bound at time T exceeds 1e-10.
struct SettleResult {
  Field ZT;
  ControlSignal left_slope;
};
SettleResult settle_heat_solve(const Field& Z0, double H, double eps, double T, int n_modes);

/// Heat solve for the dissipation stage via w = (1 + e^{-H/eps}) z_x:
/// w(0,x) = (H/eps) e^{(H/eps)(x-1)} expanded on e_basis with the closed-form
/// coefficients, modes decayed by e^{-n^2 pi^2 T}, then w integrated back to
/// z with z(T,0) fixed by conservation of the Neumann invariant int_0^1 z.
struct DissipateResult {
  Field zT;
  Field wT;
};
DissipateResult dissipate_heat_solve(double H, double eps, double T, int n_modes, const Grid& g);

/// Truncated reconstruction of w(0,.) — the T=0 diagnostic. Carries the
/// full Gibbs truncation error of the sharp exponential; see the Parseval
/// tail bound asserted in the tests.
Field reconstruct_w0(double H, double eps, const Grid& g, int n_modes);

/// phi(T) = -2 w(T) / ((1 + e^{-H/eps}) z(T)); valid since z >= 1.
Field dissipated_residue(double H, double eps, double T, const Grid& g, int n_modes);

} // namespace blc::colehopf
