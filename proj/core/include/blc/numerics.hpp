#pragma once

#include <span>
#include <vector>

namespace blc {

/// Pairwise (cascade) summation. Deterministic for a fixed input order and
/// accurate to O(log n) ulps, so spectral reductions stay reproducible no
/// matter how the per-element work was scheduled.
double pairwise_sum(std::span<const double> v);

/// Dot product reduced with pairwise summation.
double pairwise_dot(std::span<const double> a, std::span<const double> b);

/// Composite-trapezoid integral of nodal samples with uniform spacing dx.
double trapezoid(std::span<const double> v, double dx);

/// Cumulative trapezoid: out[0] = 0, out[i] = integral up to node i.
std::vector<double> cumulative_trapezoid(std::span<const double> v, double dx);

/// log(cosh(t)) without overflow for large |t|.
double log_cosh(double t);

/// Solves a tridiagonal system in place (Thomas algorithm).
/// sub[0] and sup[m-1] are ignored. diag must be diagonally dominant
/// (the backward-Euler diffusion matrices here always are).
void thomas_solve(std::span<const double> sub, std::span<double> diag,
                  std::span<const double> sup, std::span<double> rhs);

} // namespace blc
