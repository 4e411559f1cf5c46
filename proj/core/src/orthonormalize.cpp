#include "gaplra/orthonormalize.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gaplra/errors.hpp"
#include "gaplra/rng.hpp"

namespace gaplra {

DenseMatrix gaussian_init(int d, int p, std::uint64_t seed) {
  if (p < 1 || p > d) {
    throw ContractViolation("gaussian_init: requires 1 <= p <= d, got p=" +
                            std::to_string(p) + ", d=" + std::to_string(d));
  }
  Rng rng(derive_seed(seed, 0x6761757373ull));  // tag: "gauss"
  DenseMatrix m(d, p);
  for (double& e : m.entries()) e = rng.normal();
  return m;
}

namespace {

constexpr double kRankTol = 1e-13;

// In-place two-pass MGS on columns [first, cols) of q, projecting against all
// earlier columns. `scale` is the largest original column norm.
void mgs_columns(DenseMatrix& q, int first, double scale) {
  const int d = q.rows();
  const int p = q.cols();
  std::vector<double> col(d);
  for (int j = first; j < p; ++j) {
    for (int i = 0; i < d; ++i) col[i] = q(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int prev = 0; prev < j; ++prev) {
        double proj = 0.0;
        for (int i = 0; i < d; ++i) proj += q(i, prev) * col[i];
        for (int i = 0; i < d; ++i) col[i] -= proj * q(i, prev);
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < d; ++i) nrm += col[i] * col[i];
    nrm = std::sqrt(nrm);
    if (!(nrm > kRankTol * scale)) {
      throw RankDeficient("qr_orthonormalize: column " + std::to_string(j) +
                              " is numerically dependent on earlier columns",
                          j);
    }
    const double inv = 1.0 / nrm;
    for (int i = 0; i < d; ++i) q(i, j) = col[i] * inv;
  }
}

double largest_column_norm(const DenseMatrix& y, int first) {
  double scale = 0.0;
  for (int j = first; j < y.cols(); ++j) {
    double nrm = 0.0;
    for (int i = 0; i < y.rows(); ++i) nrm += y(i, j) * y(i, j);
    scale = std::max(scale, std::sqrt(nrm));
  }
  return scale;
}

}  // namespace

DenseMatrix qr_orthonormalize(const DenseMatrix& y) {
  if (y.rows() < y.cols() || y.cols() == 0) {
    throw ContractViolation("qr_orthonormalize: need 1 <= cols <= rows");
  }
  y.check_finite("qr_orthonormalize");
  const double scale = largest_column_norm(y, 0);
  if (scale == 0.0) {
    throw RankDeficient("qr_orthonormalize: zero input", 0);
  }
  DenseMatrix q = y;
  mgs_columns(q, 0, scale);
  return q;
}

DenseMatrix orthonormalize_against(const DenseMatrix& basis, const DenseMatrix& block) {
  if (basis.cols() == 0) return qr_orthonormalize(block);
  if (basis.rows() != block.rows()) {
    throw ContractViolation("orthonormalize_against: row mismatch");
  }
  const int d = basis.rows();
  const int m = basis.cols();
  const int r = block.cols();
  DenseMatrix q(d, m + r);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < d; ++i) q(i, j) = basis(i, j);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d; ++i) q(i, m + j) = block(i, j);
  const double scale = largest_column_norm(block, 0);
  if (scale == 0.0) {
    throw RankDeficient("orthonormalize_against: zero block", 0);
  }
  mgs_columns(q, m, scale);
  return q;
}

double orthonormality_defect(const DenseMatrix& q) {
  const DenseMatrix g = q.gram_with(q);
  double worst = 0.0;
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::fabs(g(i, j) - target));
    }
  }
  return worst;
}

}  // namespace gaplra
