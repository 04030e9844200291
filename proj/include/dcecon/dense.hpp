#pragma once

// Small row-major dense matrices for the fitting and QP code. Sizes here are
// a handful of columns, so nothing is blocked or vectorized.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dcecon {

using Vector = std::vector<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Vector operator*(const Matrix& m, std::span<const double> x);
Matrix operator*(const Matrix& a, const Matrix& b);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double norm_inf(std::span<const double> a);

struct SolveResult {
  Vector x;
  std::size_t rank = 0;
  bool consistent = true;  // false when a singular system has no solution
};

/// Gaussian elimination with complete pivoting. Pivots below
/// `rel_tol * max|a_ij|` are treated as zero; free variables are set to zero.
SolveResult solve_complete_pivot(Matrix a, Vector b, double rel_tol = 1e-12);

struct LeastSquaresResult {
  Vector x;
  std::size_t rank = 0;
};

/// Householder QR with column pivoting; minimizes ||a x - b||. The rank is
/// the count of diagonal entries of R above `rel_tol * |R_00|`.
LeastSquaresResult least_squares_qr(Matrix a, Vector b, double rel_tol = 1e-12);

}  // namespace dcecon
