#pragma once

#include <cstdint>

#include "gaplra/dense_matrix.hpp"

namespace gaplra {

// d x p block of i.i.d. standard normals. Pure function of (d, p, seed):
// the same arguments always produce the same matrix, bit for bit.
// Requires 1 <= p <= d.
DenseMatrix gaussian_init(int d, int p, std::uint64_t seed);

// Orthonormalizes the columns of Y (modified Gram-Schmidt, two passes, so
// Q^T Q = I holds to 1e-12 even for ill-conditioned input). range(Q) equals
// range(Y). Throws RankDeficient, carrying the offending column, when a
// projected column norm falls below 1e-13 of the largest original norm.
DenseMatrix qr_orthonormalize(const DenseMatrix& y);

// Orthonormalizes `block` against an existing orthonormal `basis` and then
// internally (same two-pass scheme). Used for deflation-basis growth.
DenseMatrix orthonormalize_against(const DenseMatrix& basis, const DenseMatrix& block);

// max_ij |Q^T Q - I|, the orthonormality defect.
double orthonormality_defect(const DenseMatrix& q);

}  // namespace gaplra
