// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_NONNEG_VECTOR_HPP
#define IFCALC_NONNEG_VECTOR_HPP

#include <cstddef>
#include <vector>

namespace ifcalc {

/// Finite-dimensional vector constrained to the nonnegative orthant.
/// This is the universal state of the library (powers, loads, iterates).
/// Construction validates the entries; instances are immutable afterwards.
class NonnegVector {
public:
  /// Empty placeholder (dim 0); only meaningful as a not-yet-assigned slot
  /// in result structs. Every validated vector has dim >= 1.
  NonnegVector() = default;

  /// Throws std::invalid_argument if entries are empty or any entry is
  /// negative or NaN. Infinities are accepted (overflow is detected by
  /// the consumers that care).
  explicit NonnegVector(std::vector<double> entries);

  static NonnegVector zeros(std::size_t dim);
  static NonnegVector ones(std::size_t dim);
  static NonnegVector constant(std::size_t dim, double value);

  std::size_t dim() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const noexcept { return entries_[i]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  double max_entry() const noexcept;
  double min_entry() const noexcept;
  bool strictly_positive() const noexcept;
  bool all_finite() const noexcept;

  friend bool operator==(const NonnegVector&, const NonnegVector&) = default;

private:
  std::vector<double> entries_;
};

/// sup-norm of x.
double sup_norm(const NonnegVector& x);

/// sup-norm of x - y; throws on dimension mismatch.
double sup_distance(const NonnegVector& x, const NonnegVector& y);

/// Coordinatewise x <= y + slack.
bool leq(const NonnegVector& x, const NonnegVector& y, double slack = 0.0);

/// factor * x for factor >= 0.
NonnegVector scaled(const NonnegVector& x, double factor);

/// Coordinatewise sum.
NonnegVector add(const NonnegVector& x, const NonnegVector& y);

}  // namespace ifcalc

#endif  // IFCALC_NONNEG_VECTOR_HPP
