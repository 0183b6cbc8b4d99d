#include "blc/control_signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace blc {

ControlSignal::ControlSignal(std::vector<double> t, std::vector<double> s, Interp interp)
    : times(std::move(t)), samples(std::move(s)), interpolation(interp) {
  if (times.size() < 2 || times.size() != samples.size())
    throw std::invalid_argument("ControlSignal: need >= 2 matching times/samples");
  if (times.front() != 0.0)
    throw std::invalid_argument("ControlSignal: times must start at 0");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("ControlSignal: times must increase strictly");
  for (double v : samples)
    if (!std::isfinite(v)) throw std::invalid_argument("ControlSignal: non-finite sample");
}

ControlSignal ControlSignal::constant(double value, double t_end) {
  return ControlSignal({0.0, t_end}, {value, value}, Interp::piecewise_constant_left);
}

ControlSignal ControlSignal::sampled(const std::function<double(double)>& f, double t0,
                                     double t_end, int n_samples, Interp interp) {
  if (t0 != 0.0) throw std::invalid_argument("ControlSignal::sampled: t0 must be 0");
  if (n_samples < 2) throw std::invalid_argument("ControlSignal::sampled: n_samples >= 2");
  std::vector<double> t(n_samples), s(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    t[i] = t_end * static_cast<double>(i) / (n_samples - 1);
    s[i] = f(t[i]);
  }
  return ControlSignal(std::move(t), std::move(s), interp);
}

double ControlSignal::eval(double t) const {
  const double slack = 1e-12 * std::max(1.0, times.back());
  if (t < -slack || t > times.back() + slack)
    throw std::out_of_range("ControlSignal::eval: t = " + std::to_string(t) +
                            " outside [0, " + std::to_string(times.back()) + "]");
  t = std::clamp(t, 0.0, times.back());
  auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t hi = std::min<std::size_t>(it - times.begin(), times.size() - 1);
  const std::size_t lo = hi - (hi > 0 ? 1 : 0);
  if (times[hi] == t) return samples[hi];
  if (interpolation == Interp::piecewise_constant_left) return samples[lo];
  const double w = (t - times[lo]) / (times[hi] - times[lo]);
  return samples[lo] * (1.0 - w) + samples[hi] * w;
}

ControlSignal ControlSignal::rescaled(double time_scale, double value_scale) const {
  if (!(time_scale > 0.0)) throw std::invalid_argument("rescaled: time_scale must be > 0");
  ControlSignal out = *this;
  // g(t) = value_scale * f(time_scale * t): sample t_i of f lands at t_i / time_scale.
  for (double& t : out.times) t /= time_scale;
  for (double& s : out.samples) s *= value_scale;
  return out;
}

} // namespace blc
