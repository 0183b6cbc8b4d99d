#pragma once

#include <functional>
#include <vector>

namespace blc {

enum class Interp { piecewise_constant_left, piecewise_linear };

/// Time-sampled scalar control on [0, times.back()]. times start at 0 and
/// increase strictly; evaluation is exact at sample times. Concatenated
/// phase controls keep unambiguous joint values through the sample placed
/// at the joint.
struct ControlSignal {
  std::vector<double> times;
  std::vector<double> samples;
  Interp interpolation = Interp::piecewise_linear;

  ControlSignal() = default;
  ControlSignal(std::vector<double> t, std::vector<double> s, Interp interp);

  static ControlSignal constant(double value, double t_end);
  static ControlSignal sampled(const std::function<double(double)>& f, double t0,
                               double t_end, int n_samples, Interp interp);

  double t_end() const { return times.back(); }

  /// Interpolated value; throws std::out_of_range outside [0, t_end].
  double eval(double t) const;

  /// Affine reparametrization: returns g with g(t) = value_scale * (*this)(time_scale * t).
  ControlSignal rescaled(double time_scale, double value_scale) const;
};

/// Free-function form of ControlSignal::eval, matching the operation name
/// used throughout the solver modules.
inline double eval_control(const ControlSignal& c, double t) { return c.eval(t); }

} // namespace blc
