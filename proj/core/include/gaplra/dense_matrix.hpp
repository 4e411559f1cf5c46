#pragma once

#include <cstdint>
#include <vector>

namespace gaplra {

// Dense row-major matrix of finite doubles. Workspace type for iteration
// blocks, compressions and the exact oracle; not meant for large data.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols);
  DenseMatrix(int rows, int cols, std::vector<double> entries);

  static DenseMatrix identity(int n);
  static DenseMatrix from_columns(const std::vector<std::vector<double>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& entries() const { return entries_; }
  std::vector<double>& entries() { return entries_; }

  std::vector<double> column(int j) const;
  void set_column(int j, const std::vector<double>& v);

  DenseMatrix transposed() const;

  // this * other
  DenseMatrix multiply(const DenseMatrix& other) const;
  // this^T * other
  DenseMatrix gram_with(const DenseMatrix& other) const;
  std::vector<double> multiply_vector(const std::vector<double>& v) const;
  std::vector<double> transpose_multiply_vector(const std::vector<double>& v) const;

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  // Throws ContractViolation if any entry is non-finite.
  void check_finite(const char* context) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> entries_;
};

// Small vector helpers used across the library.
namespace vec {

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm(const std::vector<double>& a);
void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y);
void scale(std::vector<double>& x, double alpha);
bool all_finite(const std::vector<double>& x);

}  // namespace vec

}  // namespace gaplra
