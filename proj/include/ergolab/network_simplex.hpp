#pragma once

#include <cstdint>
#include <vector>

namespace ergolab {

// Dense bipartite transportation problem: minimize sum c[i*n+j] * x[i][j]
// subject to row sums = supply, column sums = demand, x >= 0.
// Supplies and demands must be positive and balanced (within rounding;
// the last demand is adjusted by the residual).
struct TransportSolution {
    double value = 0.0;
    // Sparse optimal plan entries (i, j, mass), basic arcs with mass > 0.
    std::vector<std::tuple<int, int, double>> entries;
};

// Primal network simplex on the complete bipartite graph. Exact up to
// floating-point arithmetic at the <= 512 x 512 scale this project needs.
TransportSolution solve_transport(const std::vector<double>& cost, // m*n row-major
                                  const std::vector<double>& supply,
                                  const std::vector<double>& demand);

} // namespace ergolab
