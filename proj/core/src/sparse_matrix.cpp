#include "gaplra/sparse_matrix.hpp"

#include <cmath>
#include <string>

#include "gaplra/errors.hpp"

namespace gaplra {

SparseColumnsMatrix::SparseColumnsMatrix(int d, int n,
                                         std::vector<std::vector<SparseEntry>> columns)
    : d_(d), n_(n), columns_(std::move(columns)) {
  if (d < 0 || n < 0) throw ContractViolation("SparseColumnsMatrix: negative dimension");
  if (static_cast<int>(columns_.size()) != n) {
    throw ContractViolation("SparseColumnsMatrix: column count mismatch");
  }
  for (int j = 0; j < n; ++j) {
    int prev = -1;
    for (const SparseEntry& e : columns_[j]) {
      if (e.index < 0 || e.index >= d) {
        throw ContractViolation("SparseColumnsMatrix: row index out of range in column " +
                                std::to_string(j));
      }
      if (e.index <= prev) {
        throw ContractViolation(
            "SparseColumnsMatrix: indices not strictly increasing in column " +
            std::to_string(j));
      }
      if (!std::isfinite(e.value)) {
        throw ContractViolation("SparseColumnsMatrix: non-finite value in column " +
                                std::to_string(j));
      }
      prev = e.index;
    }
    nnz_ += static_cast<std::int64_t>(columns_[j].size());
  }
}

SparseColumnsMatrix SparseColumnsMatrix::from_dense(const DenseMatrix& dense,
                                                    double drop_tol) {
  std::vector<std::vector<SparseEntry>> cols(dense.cols());
  for (int j = 0; j < dense.cols(); ++j) {
    for (int i = 0; i < dense.rows(); ++i) {
      const double v = dense(i, j);
      if (std::fabs(v) > drop_tol) cols[j].push_back({i, v});
    }
  }
  return SparseColumnsMatrix(dense.rows(), dense.cols(), std::move(cols));
}

SparseColumnsMatrix SparseColumnsMatrix::identity(int n) {
  std::vector<std::vector<SparseEntry>> cols(n);
  for (int j = 0; j < n; ++j) cols[j].push_back({j, 1.0});
  return SparseColumnsMatrix(n, n, std::move(cols));
}

SparseColumnsMatrix SparseColumnsMatrix::diagonal(const std::vector<double>& diag) {
  const int n = static_cast<int>(diag.size());
  std::vector<std::vector<SparseEntry>> cols(n);
  for (int j = 0; j < n; ++j) {
    if (diag[j] != 0.0) cols[j].push_back({j, diag[j]});
  }
  return SparseColumnsMatrix(n, n, std::move(cols));
}

std::vector<double> SparseColumnsMatrix::spmv(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw ContractViolation("spmv: vector length != column count");
  }
  if (!vec::all_finite(v)) throw ContractViolation("spmv: non-finite input");
  std::vector<double> out(d_, 0.0);
  for (int j = 0; j < n_; ++j) {
    const double a = v[j];
    if (a == 0.0) continue;
    for (const SparseEntry& e : columns_[j]) out[e.index] += a * e.value;
  }
  return out;
}

std::vector<double> SparseColumnsMatrix::spmv_transpose(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != d_) {
    throw ContractViolation("spmv_transpose: vector length != row count");
  }
  std::vector<double> out(n_, 0.0);
  for (int j = 0; j < n_; ++j) {
    double acc = 0.0;
    for (const SparseEntry& e : columns_[j]) acc += e.value * v[e.index];
    out[j] = acc;
  }
  return out;
}

std::vector<double> SparseColumnsMatrix::gram_apply(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != d_) {
    throw ContractViolation("gram_apply: vector length != row count");
  }
  if (!vec::all_finite(v)) throw ContractViolation("gram_apply: non-finite input");
  return spmv(spmv_transpose(v));
}

double SparseColumnsMatrix::column_dot(int j, const std::vector<double>& v) const {
  double acc = 0.0;
  for (const SparseEntry& e : columns_[j]) acc += e.value * v[e.index];
  return acc;
}

void SparseColumnsMatrix::column_axpy(int j, double alpha, std::vector<double>& y) const {
  for (const SparseEntry& e : columns_[j]) y[e.index] += alpha * e.value;
}

double SparseColumnsMatrix::column_norm_squared(int j) const {
  double acc = 0.0;
  for (const SparseEntry& e : columns_[j]) acc += e.value * e.value;
  return acc;
}

double SparseColumnsMatrix::frobenius_norm_squared() const {
  double acc = 0.0;
  for (int j = 0; j < n_; ++j) acc += column_norm_squared(j);
  return acc;
}

DenseMatrix SparseColumnsMatrix::to_dense() const {
  DenseMatrix out(d_, n_);
  for (int j = 0; j < n_; ++j) {
    for (const SparseEntry& e : columns_[j]) out(e.index, j) = e.value;
  }
  return out;
}

}  // namespace gaplra
