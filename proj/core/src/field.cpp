#include "blc/field.hpp"

#include <cmath>
#include <stdexcept>

#include "blc/numerics.hpp"

namespace blc {

Field::Field(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != g.n_values())
    throw std::invalid_argument("Field: values length does not match grid layout");
  check_finite();
}

Field::Field(const Grid& g, double fill) : grid(g), values(g.n_values(), fill) {}

Field Field::from_function(const Grid& g, const std::function<double(double)>& f) {
  Field out(g);
  for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = f(g.x(i));
  out.check_finite();
  return out;
}

void Field::check_finite(const char* what) const {
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}

namespace {
void require_same_grid(const Field& a, const Field& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("Field op: grid mismatch");
}
} // namespace

Field operator+(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += b.values[i];
  return out;
}

Field operator-(const Field& a, const Field& b) {
  require_same_grid(a, b);
  Field out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

Field operator*(double c, const Field& f) {
  Field out = f;
  for (double& v : out.values) v *= c;
  return out;
}

double l2_norm(const Field& f) {
  std::vector<double> sq(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) sq[i] = f.values[i] * f.values[i];
  if (f.grid.layout == Layout::node_centered)
    return std::sqrt(trapezoid(sq, f.grid.dx));
  return std::sqrt(f.grid.dx * pairwise_sum(sq));  // midpoint rule on cells
}

double linf_norm(const Field& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::fabs(v));
  return m;
}

Field fd_derivative(const Field& f) {
  if (f.grid.layout != Layout::node_centered)
    throw std::invalid_argument("fd_derivative: node_centered layout required");
  const double dx = f.grid.dx;
  const std::size_t n = f.size();
  Field out(f.grid);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out.values[i] = (f.values[i + 1] - f.values[i - 1]) / (2.0 * dx);
  out.values[0] = (-3.0 * f.values[0] + 4.0 * f.values[1] - f.values[2]) / (2.0 * dx);
  out.values[n - 1] =
      (3.0 * f.values[n - 1] - 4.0 * f.values[n - 2] + f.values[n - 3]) / (2.0 * dx);
  return out;
}

double h1_norm(const Field& f) {
  if (f.grid.layout != Layout::node_centered)
    throw std::invalid_argument("h1_norm: node_centered layout required");
  const double a = l2_norm(f);
  const double b = l2_norm(fd_derivative(f));
  return std::sqrt(a * a + b * b);
}

} // namespace blc
