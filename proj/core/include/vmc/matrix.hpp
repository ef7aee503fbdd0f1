#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace vmc {

// Dense row-major matrix, sized for small type counts (k <= 16 or so).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, value) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> operator*(const Matrix& a, const std::vector<double>& v);
Matrix operator*(const Matrix& a, double c);

// a * D[d]: column j rescaled by d[j].
Matrix scale_columns(const Matrix& a, const std::vector<double>& d);

struct SignedLogDet {
  int sign = 0;          // -1, 0, +1
  double log_abs = 0.0;  // log|det|; meaningful only when sign != 0
  double value = 0.0;    // plain determinant; may over/underflow while log_abs stays valid
};

// LU with partial pivoting; an exactly-zero pivot yields sign == 0.
SignedLogDet signed_log_det(Matrix a);

}  // namespace vmc
