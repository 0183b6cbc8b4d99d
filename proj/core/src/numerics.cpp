#include "blc/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace blc {

namespace {
double pairwise_block(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_block(v, half) + pairwise_block(v + half, n - half);
}
} // namespace

double pairwise_sum(std::span<const double> v) {
  return pairwise_block(v.data(), v.size());
}

double pairwise_dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("pairwise_dot: size mismatch");
  std::vector<double> prod(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
  return pairwise_sum(prod);
}

double trapezoid(std::span<const double> v, double dx) {
  if (v.size() < 2) throw std::invalid_argument("trapezoid: need at least 2 samples");
  std::vector<double> w(v.begin(), v.end());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return dx * pairwise_sum(w);
}

std::vector<double> cumulative_trapezoid(std::span<const double> v, double dx) {
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 1; i < v.size(); ++i)
    out[i] = out[i - 1] + 0.5 * dx * (v[i - 1] + v[i]);
  return out;
}

double log_cosh(double t) {
  const double a = std::fabs(t);
  return a + std::log1p(std::exp(-2.0 * a)) - M_LN2;
}

void thomas_solve(std::span<const double> sub, std::span<double> diag,
                  std::span<const double> sup, std::span<double> rhs) {
  const std::size_t m = rhs.size();
  if (sub.size() != m || diag.size() != m || sup.size() != m)
    throw std::invalid_argument("thomas_solve: band size mismatch");
  for (std::size_t i = 1; i < m; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[m - 1] /= diag[m - 1];
  for (std::size_t i = m - 1; i-- > 0;)
    rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
}

} // namespace blc
