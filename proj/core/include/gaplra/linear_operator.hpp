#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "gaplra/dense_matrix.hpp"
#include "gaplra/sparse_matrix.hpp"

namespace gaplra {

// Work counters shared between kernels, solvers and the driver. Counting is
// deterministic for a deterministic execution; atomics only make concurrent
// runs safe to aggregate.
struct CostLedger {
  std::atomic<std::uint64_t> gram_applies{0};
  std::atomic<std::uint64_t> operator_applies{0};
  std::atomic<std::uint64_t> qr_factorizations{0};
  std::atomic<std::uint64_t> linear_solves{0};
  std::atomic<std::uint64_t> solver_column_samples{0};

  void reset() {
    gram_applies = 0;
    operator_applies = 0;
    qr_factorizations = 0;
    linear_solves = 0;
    solver_column_samples = 0;
  }
};

// Matrix-free symmetric PSD operator on R^d. Implementations must be
// self-adjoint; the subspace engine probes this at entry.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual int dim() const = 0;
  virtual void apply(const std::vector<double>& in, std::vector<double>& out) const = 0;

  std::vector<double> apply(const std::vector<double>& in) const {
    std::vector<double> out(dim(), 0.0);
    apply(in, out);
    return out;
  }

  // Dense materialization by applying to basis vectors; test/oracle use only.
  DenseMatrix materialize() const;
};

// C = X X^T in factored form; X X^T is never formed.
class GramOperator final : public LinearOperator {
 public:
  explicit GramOperator(const SparseColumnsMatrix& x, CostLedger* ledger = nullptr)
      : x_(x), ledger_(ledger) {}
  int dim() const override { return x_.d(); }
  void apply(const std::vector<double>& in, std::vector<double>& out) const override;
  const SparseColumnsMatrix& matrix() const { return x_; }

 private:
  const SparseColumnsMatrix& x_;
  CostLedger* ledger_;
};

class DiagonalOperator final : public LinearOperator {
 public:
  explicit DiagonalOperator(std::vector<double> diag) : diag_(std::move(diag)) {}
  int dim() const override { return static_cast<int>(diag_.size()); }
  void apply(const std::vector<double>& in, std::vector<double>& out) const override;
  const std::vector<double>& diagonal() const { return diag_; }

 private:
  std::vector<double> diag_;
};

class DenseSymmetricOperator final : public LinearOperator {
 public:
  explicit DenseSymmetricOperator(DenseMatrix m) : m_(std::move(m)) {}
  int dim() const override { return m_.rows(); }
  void apply(const std::vector<double>& in, std::vector<double>& out) const override;

 private:
  DenseMatrix m_;
};

// apply(v) = (I - U U^T) C (I - U U^T) v, composed projection by projection;
// the d x d matrix is never materialized. The basis must be orthonormal to
// 1e-10 in max norm (validated at construction). An empty basis reduces to C.
class DeflatedOperator final : public LinearOperator {
 public:
  DeflatedOperator(const LinearOperator& base, DenseMatrix basis);
  int dim() const override { return base_.dim(); }
  void apply(const std::vector<double>& in, std::vector<double>& out) const override;
  const DenseMatrix& basis() const { return basis_; }

 private:
  const LinearOperator& base_;
  DenseMatrix basis_;
};

// v <- (I - U U^T) v for an orthonormal U (no-op when U has no columns).
void project_out(const DenseMatrix& basis, std::vector<double>& v);

}  // namespace gaplra
