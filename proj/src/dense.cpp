#include "dcecon/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "dcecon/error.hpp"

namespace dcecon {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    detail::require(r.size() == cols_, ErrorCode::parameter, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector operator*(const Matrix& m, std::span<const double> x) {
  detail::require(m.cols() == x.size(), ErrorCode::parameter, "matrix-vector size mismatch");
  Vector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = dot(m.row(i), x);
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  detail::require(a.cols() == b.rows(), ErrorCode::parameter, "matrix product size mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double norm_inf(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

SolveResult solve_complete_pivot(Matrix a, Vector b, double rel_tol) {
  const std::size_t n = a.rows();
  detail::require(a.cols() == n && b.size() == n, ErrorCode::parameter,
                  "solve needs a square system");
  const Matrix a0 = a;
  const Vector b0 = b;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, norm_inf(a.row(i)));

  SolveResult out;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    double best = 0.0;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pr = i;
          pc = j;
        }
    if (best <= rel_tol * scale || best == 0.0) break;
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pr, j));
      std::swap(b[k], b[pr]);
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, pc));
      std::swap(perm[k], perm[pc]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
    ++rank;
  }

  Vector z(n, 0.0);
  for (std::size_t k = rank; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < rank; ++j) s -= a(k, j) * z[j];
    z[k] = s / a(k, k);
  }
  out.x.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) out.x[perm[k]] = z[k];
  out.rank = rank;

  if (rank < n) {
    const Vector ax = a0 * out.x;
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) resid = std::max(resid, std::abs(ax[i] - b0[i]));
    out.consistent = resid <= 1e-9 * (scale * norm_inf(out.x) + norm_inf(b0) + 1.0);
  }
  return out;
}

LeastSquaresResult least_squares_qr(Matrix a, Vector b, double rel_tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  detail::require(b.size() == m, ErrorCode::parameter, "least squares size mismatch");
  detail::require(m >= n, ErrorCode::underdetermined, "fewer rows than columns");

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Vector diag(n, 0.0);

  for (std::size_t k = 0; k < n; ++k) {
    // Pivot on the largest remaining column norm.
    std::size_t pc = k;
    double best = -1.0;
    for (std::size_t j = k; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += a(i, j) * a(i, j);
      if (s > best) {
        best = s;
        pc = j;
      }
    }
    if (pc != k) {
      for (std::size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, pc));
      std::swap(perm[k], perm[pc]);
    }

    double norm = 0.0;
    for (std::size_t i = k; i < m; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      diag[k] = 0.0;
      continue;
    }
    const double alpha = a(k, k) > 0.0 ? -norm : norm;
    // v = x - alpha e1, stored in place below the diagonal.
    a(k, k) -= alpha;
    double vtv = 0.0;
    for (std::size_t i = k; i < m; ++i) vtv += a(i, k) * a(i, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += a(i, k) * a(i, j);
      const double f = 2.0 * s / vtv;
      for (std::size_t i = k; i < m; ++i) a(i, j) -= f * a(i, k);
    }
    double s = 0.0;
    for (std::size_t i = k; i < m; ++i) s += a(i, k) * b[i];
    const double f = 2.0 * s / vtv;
    for (std::size_t i = k; i < m; ++i) b[i] -= f * a(i, k);
    diag[k] = alpha;
  }

  LeastSquaresResult out;
  const double lead = n ? std::abs(diag[0]) : 0.0;
  std::size_t rank = 0;
  while (rank < n && lead > 0.0 && std::abs(diag[rank]) > rel_tol * lead) ++rank;
  out.rank = rank;

  Vector z(n, 0.0);
  for (std::size_t k = rank; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < rank; ++j) s -= a(k, j) * z[j];
    z[k] = s / diag[k];
  }
  out.x.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) out.x[perm[k]] = z[k];
  return out;
}

}  // namespace dcecon
