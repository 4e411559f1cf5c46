#include "gaplra/dense_matrix.hpp"

#include <cmath>
#include <string>

#include "gaplra/errors.hpp"

namespace gaplra {

DenseMatrix::DenseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {
  if (rows < 0 || cols < 0) {
    throw ContractViolation("DenseMatrix: negative dimension");
  }
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 ||
      entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw ContractViolation("DenseMatrix: entry count does not match dimensions");
  }
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_columns(const std::vector<std::vector<double>>& cols) {
  if (cols.empty()) return DenseMatrix();
  const int d = static_cast<int>(cols.front().size());
  DenseMatrix m(d, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != d) {
      throw ContractViolation("DenseMatrix::from_columns: ragged columns");
    }
    for (int i = 0; i < d; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<double> DenseMatrix::column(int j) const {
  std::vector<double> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void DenseMatrix::set_column(int j, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != rows_) {
    throw ContractViolation("DenseMatrix::set_column: length mismatch");
  }
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
  if (cols_ != other.rows_) {
    throw ContractViolation("DenseMatrix::multiply: inner dimension mismatch");
  }
  DenseMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::gram_with(const DenseMatrix& other) const {
  if (rows_ != other.rows_) {
    throw ContractViolation("DenseMatrix::gram_with: row mismatch");
  }
  DenseMatrix out(cols_, other.cols_);
  for (int k = 0; k < rows_; ++k) {
    for (int i = 0; i < cols_; ++i) {
      const double a = (*this)(k, i);
      if (a == 0.0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

std::vector<double> DenseMatrix::multiply_vector(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw ContractViolation("DenseMatrix::multiply_vector: length mismatch");
  }
  std::vector<double> out(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double acc = 0.0;
    const double* row = entries_.data() + static_cast<std::size_t>(i) * cols_;
    for (int j = 0; j < cols_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> DenseMatrix::transpose_multiply_vector(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != rows_) {
    throw ContractViolation("DenseMatrix::transpose_multiply_vector: length mismatch");
  }
  std::vector<double> out(cols_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    const double a = v[i];
    if (a == 0.0) continue;
    const double* row = entries_.data() + static_cast<std::size_t>(i) * cols_;
    for (int j = 0; j < cols_; ++j) out[j] += a * row[j];
  }
  return out;
}

double DenseMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (double e : entries_) acc += e * e;
  return std::sqrt(acc);
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double e : entries_) m = std::max(m, std::fabs(e));
  return m;
}

bool DenseMatrix::all_finite() const {
  for (double e : entries_) {
    if (!std::isfinite(e)) return false;
  }
  return true;
}

void DenseMatrix::check_finite(const char* context) const {
  if (!all_finite()) {
    throw ContractViolation(std::string(context) + ": non-finite entry");
  }
}

namespace vec {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ContractViolation("vec::dot: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  if (x.size() != y.size()) throw ContractViolation("vec::axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(std::vector<double>& x, double alpha) {
  for (double& v : x) v *= alpha;
}

bool all_finite(const std::vector<double>& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace vec

}  // namespace gaplra
