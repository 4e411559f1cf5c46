#include "gaplra/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gaplra/errors.hpp"

namespace gaplra {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kOffDiagTol = 1e-14;

void apply_sign_convention(DenseMatrix& vectors) {
  for (int j = 0; j < vectors.cols(); ++j) {
    int arg = 0;
    double best = 0.0;
    for (int i = 0; i < vectors.rows(); ++i) {
      const double a = std::fabs(vectors(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (vectors(arg, j) < 0.0) {
      for (int i = 0; i < vectors.rows(); ++i) vectors(i, j) = -vectors(i, j);
    }
  }
}

}  // namespace

SymmetricEigen jacobi_eigh(const DenseMatrix& sym) {
  if (sym.rows() != sym.cols()) {
    throw ContractViolation("jacobi_eigh: matrix must be square");
  }
  const int n = sym.rows();
  DenseMatrix a = sym;
  // Symmetrize to wash out roundoff from upstream compressions.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double m = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = m;
      a(j, i) = m;
    }
  }
  DenseMatrix v = DenseMatrix::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (int i = 0; i < n; ++i) {
      diag += a(i, i) * a(i, i);
      for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    }
    if (off <= kOffDiagTol * kOffDiagTol * std::max(diag, 1e-300)) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0)
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int i = 0; i < n; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a(p, i);
          const double aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  apply_sign_convention(out.vectors);
  return out;
}

}  // namespace gaplra
