#include "blc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "blc/version.hpp"

namespace blc::io {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("io: cannot open for writing: " + path);
  return out;
}

nlohmann::json signal_json(const ControlSignal& c) {
  return {
      {"times", c.times},
      {"samples", c.samples},
      {"interpolation", c.interpolation == Interp::piecewise_linear
                            ? "piecewise_linear"
                            : "piecewise_constant_left"},
  };
}

} // namespace

void write_field_csv(const std::string& path, const Field& f) {
  auto out = open_out(path);
  out << "x,value\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    out << fmt17(f.grid.x(i)) << ',' << fmt17(f.values[i]) << '\n';
}

Field read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("io: cannot open field CSV: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,value", 0) != 0)
    throw std::invalid_argument("io: field CSV must start with 'x,value': " + path);
  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("io: malformed field CSV row: " + line);
    xs.push_back(std::stod(line.substr(0, comma)));
    vs.push_back(std::stod(line.substr(comma + 1)));
  }
  if (xs.size() < 5) throw std::invalid_argument("io: field CSV needs >= 5 rows");
  const int n = static_cast<int>(xs.size()) - 1;
  const double dx = 1.0 / n;
  if (std::fabs(xs.front()) > 1e-12 || std::fabs(xs.back() - 1.0) > 1e-12)
    throw std::invalid_argument("io: field CSV x must span [0,1] (node-centered)");
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (std::fabs(xs[i] - i * dx) > 1e-9)
      throw std::invalid_argument("io: field CSV x must be a uniform mesh");
  return Field(Grid(n, Layout::node_centered), std::move(vs));
}

void write_signal_csv(const std::string& path, const ControlSignal& c) {
  auto out = open_out(path);
  out << "t,value\n";
  for (std::size_t i = 0; i < c.times.size(); ++i)
    out << fmt17(c.times[i]) << ',' << fmt17(c.samples[i]) << '\n';
}

void write_trajectory_csv(const std::string& path, const Trajectory& tr) {
  auto out = open_out(path);
  out << "t,x,value\n";
  for (std::size_t k = 0; k < tr.states.size(); ++k) {
    const Field& f = tr.states[k];
    const std::string t = fmt17(tr.times[k]);
    for (std::size_t i = 0; i < f.size(); ++i)
      out << t << ',' << fmt17(f.grid.x(i)) << ',' << fmt17(f.values[i]) << '\n';
  }
}

void write_spectral_csv(const std::string& path, std::span<const int> index,
                        std::span<const double> coeff) {
  if (index.size() != coeff.size())
    throw std::invalid_argument("io: spectral CSV index/coeff size mismatch");
  auto out = open_out(path);
  out << "n,coeff\n";
  for (std::size_t i = 0; i < index.size(); ++i)
    out << index[i] << ',' << fmt17(coeff[i]) << '\n';
}

namespace {
nlohmann::json sidecar_json(const Sidecar& sc) {
  nlohmann::json j;
  j["command"] = sc.command;
  j["version"] = blc::version;
  j["wall_time_s"] = sc.wall_time_s;
  if (sc.seed) j["seed"] = *sc.seed;
  nlohmann::json cfg = nlohmann::json::object();
  for (const auto& [k, v] : sc.text) cfg[k] = v;
  for (const auto& [k, v] : sc.number) cfg[k] = v;
  j["config"] = cfg;
  for (const auto& [k, v] : sc.series) j[k] = v;
  return j;
}
} // namespace

void write_sidecar(const std::string& csv_path, const Sidecar& sc) {
  auto out = open_out(csv_path + ".json");
  out << sidecar_json(sc).dump(2) << '\n';
}

void write_trajectory_bundle(const std::string& csv_path, const Trajectory& tr,
                             const Params& p, double dt, const std::string& scheme,
                             Sidecar sc) {
  write_trajectory_csv(csv_path, tr);
  nlohmann::json j = sidecar_json(sc);
  j["scheme"] = scheme;
  j["dt"] = dt;
  j["params"] = {{"viscosity", p.viscosity}, {"H", p.H}, {"T", p.T}};
  const Grid& g = tr.states.front().grid;
  j["grid"] = {{"n_cells", g.n_cells},
               {"layout", g.layout == Layout::node_centered ? "node_centered" : "cell_centered"}};
  j["controls"] = {{"u", signal_json(tr.u)}, {"v0", signal_json(tr.v0)}, {"v1", signal_json(tr.v1)}};
  auto out = open_out(csv_path + ".json");
  out << j.dump(2) << '\n';
}

} // namespace blc::io
