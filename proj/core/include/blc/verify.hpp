#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blc/field.hpp"

namespace blc::verify {

enum class FitKind {
  log_log,   // power laws: fit log y against log x
  semilog    // exponentials in 1/eps: fit log y against x as given
};

struct DecayFit {
  std::vector<double> xs;
  std::vector<double> ys;
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least squares on log-transformed data; >= 3 points, ys > 0 required.
DecayFit fit_decay(std::span<const double> xs, std::span<const double> ys, FitKind kind);

/// Paired solves from random ordered data tuples (bounded Fourier
/// polynomials, <= 8 modes, coefficients in [-1,1]); reports the worst
/// pointwise ordering violation across all nodes and steps. Monotone
/// schemes keep this at roundoff level.
struct ComparisonReport {
  int trials = 0;
  double max_violation_viscous = 0.0;
  double max_violation_inviscid = 0.0;
};
ComparisonReport check_comparison(std::uint64_t seed, int trials, int n_cells = 400);

/// Backward-Euler finite-difference reference for the settling heat system
/// (Dirichlet 1 on the left, homogeneous Neumann on the right, zeroth-order
/// absorption H^2/4eps). Independent oracle for the spectral solver.
Field settle_heat_fd(const Field& Z0, double H, double eps, double T, double dt);

struct SuiteConfig {
  std::vector<std::string> checks;  // criterion ids to run, e.g. {"A1",...,"A10"}
  std::uint64_t seed = 424243;
  int trials = 100;                 // comparison-principle sample count
  double grid_scale = 1.0;          // multiplies the per-check default n_cells
  std::vector<double> eps_a4 = {0.1, 0.15, 0.2, 0.3};
  std::vector<double> eps_a7 = {0.1, 0.05, 0.025};
  std::vector<double> eps_a10 = {0.2, 0.1, 0.05};

  static SuiteConfig defaults();
  /// key = value lines, '#' comments; unknown keys rejected. A file with no
  /// recognized keys yields zero checks and a warning in the report.
  static SuiteConfig from_file(const std::string& path);
};

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  double measured = 0.0;  // the binding measurement
  double limit = 0.0;     // its threshold
  std::string detail;     // all sub-checks, human readable
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<CheckResult> entries;
  std::vector<std::string> warnings;

  bool all_pass() const;
  std::string to_json() const;
};

/// Runs every configured criterion; failures are recorded, not thrown.
SuiteReport run_suite(const SuiteConfig& cfg);

} // namespace blc::verify
