#pragma once

#include <functional>
#include <vector>

#include "blc/grid.hpp"

namespace blc {

/// Spatial profile sampled on a Grid. Immutable by convention: solvers
/// return new fields rather than mutating their inputs.
struct Field {
  Grid grid;
  std::vector<double> values;

  Field(const Grid& g, std::vector<double> v);
  Field(const Grid& g, double fill = 0.0);

  static Field from_function(const Grid& g, const std::function<double(double)>& f);

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }

  /// Throws if any value is non-finite.
  void check_finite(const char* what = "Field") const;
};

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double c, const Field& f);

/// Trapezoid (node-centered) / midpoint (cell-centered) approximation of
/// the L2(0,1) norm. Both quadratures are second order in dx.
double l2_norm(const Field& f);

/// Max of |values|.
double linf_norm(const Field& f);

/// sqrt(l2^2 + l2(Df)^2) with D centered in the interior and one-sided
/// second-order at the ends. Node-centered fields only.
double h1_norm(const Field& f);

/// Finite-difference derivative used by h1_norm and the Cole-Hopf inverse.
Field fd_derivative(const Field& f);

} // namespace blc
