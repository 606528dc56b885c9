// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_MATRIX_HPP
#define IFCALC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ifcalc/nonneg_vector.hpp"

namespace ifcalc {

/// Small dense row-major matrix. The library only needs desk-scale dense
/// operations, so no external linear algebra backend is pulled in.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  /// Row-major construction from nested braces, e.g. {{0, 2}, {0.5, 0}}.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const noexcept { return data_; }

  bool nonnegative() const noexcept;
  bool all_zero() const noexcept;

  /// Maximum absolute row sum (the induced sup-norm).
  double max_row_sum() const noexcept;

  std::vector<double> apply(const std::vector<double>& x) const;
  NonnegVector apply(const NonnegVector& x) const;
  Matrix multiply(const Matrix& other) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

}  // namespace ifcalc

#endif  // IFCALC_MATRIX_HPP
