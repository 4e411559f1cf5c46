#pragma once

#include <cstdint>
#include <vector>

#include "gaplra/dense_matrix.hpp"

namespace gaplra {

struct SparseEntry {
  int index;     // row index in [0, d)
  double value;  // finite
};

// Column-major sparse matrix X in R^{d x n}. Columns are stored as sorted
// index/value pairs with O(1) column access, which is what the stochastic
// solvers sample. Immutable after construction and safe to share.
class SparseColumnsMatrix {
 public:
  SparseColumnsMatrix() = default;
  // Validates all invariants: indices strictly increasing and in range,
  // values finite. Throws ContractViolation otherwise.
  SparseColumnsMatrix(int d, int n, std::vector<std::vector<SparseEntry>> columns);

  static SparseColumnsMatrix from_dense(const DenseMatrix& dense, double drop_tol = 0.0);
  static SparseColumnsMatrix identity(int n);
  static SparseColumnsMatrix diagonal(const std::vector<double>& diag);

  int d() const { return d_; }
  int n() const { return n_; }
  std::int64_t nnz() const { return nnz_; }

  const std::vector<SparseEntry>& column(int j) const { return columns_[j]; }

  // y = X v, v in R^n. Cost proportional to nnz(X).
  std::vector<double> spmv(const std::vector<double>& v) const;
  // y = X^T v, v in R^d. Cost proportional to nnz(X).
  std::vector<double> spmv_transpose(const std::vector<double>& v) const;
  // y = X (X^T v) in two passes; X X^T is never materialized.
  std::vector<double> gram_apply(const std::vector<double>& v) const;

  // Sparse column dotted against a dense vector of length d.
  double column_dot(int j, const std::vector<double>& v) const;
  // y += alpha * x_j
  void column_axpy(int j, double alpha, std::vector<double>& y) const;
  double column_norm_squared(int j) const;

  double frobenius_norm_squared() const;

  DenseMatrix to_dense() const;

 private:
  int d_ = 0;
  int n_ = 0;
  std::int64_t nnz_ = 0;
  std::vector<std::vector<SparseEntry>> columns_;
};

}  // namespace gaplra
