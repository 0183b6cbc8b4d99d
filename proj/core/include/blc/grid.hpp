#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blc {

enum class Layout { cell_centered, node_centered };

/// Uniform 1-D mesh on [0,1]. Cell-centered grids carry n_cells values at
/// x_i = (i+1/2)dx; node-centered grids carry n_cells+1 values at x_i = i*dx.
struct Grid {
  int n_cells = 0;
  double dx = 0.0;
  Layout layout = Layout::node_centered;

  Grid(int n, Layout lay) : n_cells(n), dx(1.0 / n), layout(lay) {
    if (n < 4) throw std::invalid_argument("Grid: n_cells must be >= 4, got " + std::to_string(n));
  }

  std::size_t n_values() const {
    return layout == Layout::cell_centered ? static_cast<std::size_t>(n_cells)
                                           : static_cast<std::size_t>(n_cells) + 1;
  }

  double x(std::size_t i) const {
    return layout == Layout::cell_centered ? (static_cast<double>(i) + 0.5) * dx
                                           : static_cast<double>(i) * dx;
  }

  bool operator==(const Grid& o) const {
    return n_cells == o.n_cells && layout == o.layout;
  }
};

} // namespace blc
