#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blc/control_signal.hpp"
#include "blc/field.hpp"
#include "blc/params.hpp"
#include "blc/trajectory.hpp"

namespace blc::io {

/// Field CSV: header "x,value", one row per node/cell center, 17 significant
/// digits. Reruns with identical inputs produce byte-identical files.
void write_field_csv(const std::string& path, const Field& f);

/// Reads a node-centered field written by write_field_csv. The x column must
/// be a uniform mesh spanning [0,1].
Field read_field_csv(const std::string& path);

/// Signal CSV: header "t,value".
void write_signal_csv(const std::string& path, const ControlSignal& c);

/// Trajectory CSV: long format "t,x,value".
void write_trajectory_csv(const std::string& path, const Trajectory& tr);

/// Spectral coefficients CSV: header "n,coeff".
void write_spectral_csv(const std::string& path, std::span<const int> index,
                        std::span<const double> coeff);

/// Key/value payload for the JSON sidecar every output file pairs with.
struct Sidecar {
  std::string command;
  std::vector<std::pair<std::string, std::string>> text;
  std::vector<std::pair<std::string, double>> number;
  std::vector<std::pair<std::string, std::vector<double>>> series;
  std::optional<std::uint64_t> seed;
  double wall_time_s = 0.0;
};

/// Writes csv_path + ".json" carrying the sidecar, the library version and
/// wall time.
void write_sidecar(const std::string& csv_path, const Sidecar& sc);

/// Trajectory CSV plus sidecar with Params, grid, dt, scheme name and the
/// full control-signal definitions.
void write_trajectory_bundle(const std::string& csv_path, const Trajectory& tr,
                             const Params& p, double dt, const std::string& scheme,
                             Sidecar sc);

} // namespace blc::io
