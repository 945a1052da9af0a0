#include "nlsdtn/grid.hpp"

#include <stdexcept>

namespace nlsdtn {

TriangularGrid::TriangularGrid(double horizon, int steps) : T(horizon), N(steps) {
  if (horizon <= 0.0) throw std::invalid_argument("TriangularGrid: T must be > 0");
  if (steps < 4) throw std::invalid_argument("TriangularGrid: need N >= 4");
}

KernelField::KernelField(const TriangularGrid& g, bool with_L) : grid(g) {
  M1.assign(g.node_count(), Complex(0.0));
  M2.assign(g.node_count(), Complex(0.0));
  if (with_L) {
    L1.assign(g.node_count(), Complex(0.0));
    L2.assign(g.node_count(), Complex(0.0));
  }
}

}  // namespace nlsdtn
