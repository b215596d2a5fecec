#pragma once

#include <vector>

#include "linlaw/matrix.hpp"

namespace linlaw {

struct SymmetricEigen {
  std::vector<double> values;  ///< descending
  Matrix vectors;              ///< column j pairs with values[j]
};

/// Cyclic Jacobi diagonalization of a symmetric matrix. Only the upper
/// triangle is read. Sweeps until the off-diagonal Frobenius norm is at or
/// below 1e-15 of the matrix norm, or no rotation changes the matrix.
SymmetricEigen jacobi_eigen(const Matrix& sym);

}  // namespace linlaw
