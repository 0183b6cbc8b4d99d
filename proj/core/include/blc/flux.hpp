#pragma once

namespace blc {

/// Exact-Riemann Godunov flux for f(y) = y^2/2. Monotone (nondecreasing in
/// uL, nonincreasing in uR), which is what the discrete comparison principle
/// rests on. Shared by the viscous splitting scheme and the inviscid solver.
inline double godunov_flux(double uL, double uR) {
  const double fL = 0.5 * uL * uL;
  const double fR = 0.5 * uR * uR;
  if (uL >= uR) {                       // shock, speed (uL+uR)/2
    return (uL + uR > 0.0) ? fL : fR;   // equal values when uL = -uR
  }
  if (uL > 0.0) return fL;              // right-moving rarefaction
  if (uR < 0.0) return fR;              // left-moving rarefaction
  return 0.0;                           // transonic: sonic point inside fan
}

} // namespace blc
