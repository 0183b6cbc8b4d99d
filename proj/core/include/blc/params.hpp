#pragma once

#include <stdexcept>

namespace blc {

/// Shared solver parameters: viscosity of the run, the plateau/state scale H
/// the grid has to resolve (boundary layers have width ~ viscosity/H), and
/// the time horizon.
struct Params {
  double viscosity = 1.0;
  double H = 1.0;
  double T = 1.0;

  Params() = default;
  Params(double nu, double h, double t) : viscosity(nu), H(h), T(t) {
    if (!(nu > 0.0)) throw std::invalid_argument("Params: viscosity must be > 0");
    if (!(h > 0.0)) throw std::invalid_argument("Params: H must be > 0");
    if (!(t > 0.0)) throw std::invalid_argument("Params: T must be > 0");
  }
};

} // namespace blc
