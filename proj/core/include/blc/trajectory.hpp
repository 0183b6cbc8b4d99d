#pragma once

#include <vector>

#include "blc/control_signal.hpp"
#include "blc/field.hpp"

namespace blc {

/// Time-indexed snapshots of a solve plus the control signals that drove it.
/// Snapshots may be strided; the initial and final states are always present.
struct Trajectory {
  std::vector<double> times;
  std::vector<Field> states;
  ControlSignal u;   // interior forcing
  ControlSignal v0;  // left boundary data / BLN target
  ControlSignal v1;  // right boundary data (constant 0 for the inviscid solver)

  const Field& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

} // namespace blc
