#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rowadj/scalar.hpp"

namespace rowadj {

/// Dense row-major matrix over exact Gaussian rationals.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  bool is_zero() const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);

// Elimination-based oracles. None of them looks at any order structure.

/// Fraction-free (Bareiss) determinant with row-swap pivoting.
Scalar det_oracle(const Matrix& a);
std::size_t rank_oracle(const Matrix& a);
/// Gauss-Jordan inverse; throws SingularError when no inverse exists.
Matrix inverse_oracle(const Matrix& a);

/// One row per line, whitespace-separated scalars.
Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace rowadj
