#include "vmc/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

namespace vmc {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(std::size_t(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> operator*(const Matrix& a, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != a.cols()) throw std::invalid_argument("matvec size mismatch");
  std::vector<double> out(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, double c) {
  Matrix out = a;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) *= c;
  return out;
}

Matrix scale_columns(const Matrix& a, const std::vector<double>& d) {
  if (static_cast<int>(d.size()) != a.cols()) throw std::invalid_argument("scale_columns size mismatch");
  Matrix out = a;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) *= d[j];
  return out;
}

SignedLogDet signed_log_det(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return {1, 0.0, 1.0};

  int sign = 1;
  double log_abs = 0.0;
  double pivot_product = 1.0;

  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        pivot_row = r;
      }
    }
    if (best == 0.0) return {0, -std::numeric_limits<double>::infinity(), 0.0};
    if (pivot_row != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
      sign = -sign;
    }
    const double pivot = a(col, col);
    if (pivot < 0.0) sign = -sign;
    log_abs += std::log(std::abs(pivot));
    pivot_product *= std::abs(pivot);
    for (int r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / pivot;
      if (factor == 0.0) continue;
      for (int j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return {sign, log_abs, sign * pivot_product};
}

}  // namespace vmc
