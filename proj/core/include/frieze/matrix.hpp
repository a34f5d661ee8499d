#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "frieze/scalar.hpp"

namespace frieze {

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, ScalarKind kind = ScalarKind::Rational);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix identity(size_t n, ScalarKind kind = ScalarKind::Rational);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  ScalarKind kind() const { return kind_; }

  Scalar& operator()(size_t i, size_t j) { return e_[i * c_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return e_[i * c_ + j]; }

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  size_t r_ = 0, c_ = 0;
  ScalarKind kind_ = ScalarKind::Rational;
  std::vector<Scalar> e_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& m);
Matrix operator+(const Matrix& a, const Matrix& b);

// Fraction-free elimination for the exact kinds, partial pivoting for floats.
Scalar det(const Matrix& m);
Scalar minor(const Matrix& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols);

// Plain Laplace expansion; exponential, intended as a reference in tests.
Scalar det_cofactor(const Matrix& m);

// Solves m x = rhs for square m. Throws DivisionByZero if m is singular.
std::vector<Scalar> solve(const Matrix& m, const std::vector<Scalar>& rhs);

}  // namespace frieze
