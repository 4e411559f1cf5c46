#pragma once

#include <vector>

#include "gaplra/dense_matrix.hpp"

namespace gaplra {

struct SymmetricEigen {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column i pairs with values[i]
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix. Rotations sweep
// until the off-diagonal Frobenius mass falls below 1e-14 of the on-diagonal
// mass, capped at 60 sweeps. Eigenvalues come out descending; each
// eigenvector's largest-magnitude entry is made nonnegative so repeated runs
// compare bitwise.
SymmetricEigen jacobi_eigh(const DenseMatrix& sym);

}  // namespace gaplra
