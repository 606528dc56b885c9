// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/nonneg_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ifcalc {

NonnegVector::NonnegVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("NonnegVector: dimension must be >= 1");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (std::isnan(entries_[i]) || entries_[i] < 0.0) {
      throw std::invalid_argument("NonnegVector: entry " + std::to_string(i) +
                                  " = " + std::to_string(entries_[i]) + " is not nonnegative");
    }
  }
}

NonnegVector NonnegVector::zeros(std::size_t dim) {
  return NonnegVector(std::vector<double>(dim, 0.0));
}

NonnegVector NonnegVector::ones(std::size_t dim) {
  return NonnegVector(std::vector<double>(dim, 1.0));
}

NonnegVector NonnegVector::constant(std::size_t dim, double value) {
  return NonnegVector(std::vector<double>(dim, value));
}

double NonnegVector::max_entry() const noexcept {
  return *std::max_element(entries_.begin(), entries_.end());
}

double NonnegVector::min_entry() const noexcept {
  return *std::min_element(entries_.begin(), entries_.end());
}

bool NonnegVector::strictly_positive() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v > 0.0; });
}

bool NonnegVector::all_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return std::isfinite(v); });
}

double sup_norm(const NonnegVector& x) { return x.max_entry(); }

double sup_distance(const NonnegVector& x, const NonnegVector& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("sup_distance: dimension mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    d = std::max(d, std::abs(x[i] - y[i]));
  }
  return d;
}

bool leq(const NonnegVector& x, const NonnegVector& y, double slack) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("leq: dimension mismatch");
  }
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] > y[i] + slack) return false;
  }
  return true;
}

NonnegVector scaled(const NonnegVector& x, double factor) {
  if (factor < 0.0) {
    throw std::invalid_argument("scaled: factor must be nonnegative");
  }
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = factor * x[i];
  return NonnegVector(std::move(out));
}

NonnegVector add(const NonnegVector& x, const NonnegVector& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("add: dimension mismatch");
  }
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] + y[i];
  return NonnegVector(std::move(out));
}

}  // namespace ifcalc
