#include "gaplra/linear_operator.hpp"

#include <cmath>

#include "gaplra/errors.hpp"
#include "gaplra/orthonormalize.hpp"

namespace gaplra {

DenseMatrix LinearOperator::materialize() const {
  const int d = dim();
  DenseMatrix out(d, d);
  std::vector<double> e(d, 0.0), col(d, 0.0);
  for (int j = 0; j < d; ++j) {
    e[j] = 1.0;
    apply(e, col);
    for (int i = 0; i < d; ++i) out(i, j) = col[i];
    e[j] = 0.0;
  }
  return out;
}

void GramOperator::apply(const std::vector<double>& in, std::vector<double>& out) const {
  out = x_.gram_apply(in);
  if (ledger_) {
    ledger_->gram_applies.fetch_add(1, std::memory_order_relaxed);
    ledger_->operator_applies.fetch_add(1, std::memory_order_relaxed);
  }
}

void DiagonalOperator::apply(const std::vector<double>& in, std::vector<double>& out) const {
  if (in.size() != diag_.size()) {
    throw ContractViolation("DiagonalOperator::apply: length mismatch");
  }
  out.resize(diag_.size());
  for (std::size_t i = 0; i < diag_.size(); ++i) out[i] = diag_[i] * in[i];
}

void DenseSymmetricOperator::apply(const std::vector<double>& in,
                                   std::vector<double>& out) const {
  out = m_.multiply_vector(in);
}

DeflatedOperator::DeflatedOperator(const LinearOperator& base, DenseMatrix basis)
    : base_(base), basis_(std::move(basis)) {
  if (basis_.cols() > 0) {
    if (basis_.rows() != base_.dim()) {
      throw ContractViolation("DeflatedOperator: basis row count != operator dim");
    }
    if (orthonormality_defect(basis_) > 1e-10) {
      throw ContractViolation("DeflatedOperator: basis not orthonormal to 1e-10");
    }
  }
}

void DeflatedOperator::apply(const std::vector<double>& in, std::vector<double>& out) const {
  if (static_cast<int>(in.size()) != base_.dim()) {
    throw ContractViolation("DeflatedOperator::apply: length mismatch");
  }
  std::vector<double> work = in;
  project_out(basis_, work);
  base_.apply(work, out);
  project_out(basis_, out);
}

void project_out(const DenseMatrix& basis, std::vector<double>& v) {
  const int m = basis.cols();
  if (m == 0) return;
  const int d = basis.rows();
  std::vector<double> coeffs(m, 0.0);
  for (int j = 0; j < m; ++j) {
    double acc = 0.0;
    for (int i = 0; i < d; ++i) acc += basis(i, j) * v[i];
    coeffs[j] = acc;
  }
  for (int j = 0; j < m; ++j) {
    const double c = coeffs[j];
    if (c == 0.0) continue;
    for (int i = 0; i < d; ++i) v[i] -= c * basis(i, j);
  }
}

}  // namespace gaplra
