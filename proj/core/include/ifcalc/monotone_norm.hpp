// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_MONOTONE_NORM_HPP
#define IFCALC_MONOTONE_NORM_HPP

#include <vector>

#include "ifcalc/nonneg_vector.hpp"

namespace ifcalc {

enum class NormKind { L1, LInf, WeightedL1, WeightedLInf };

/// A norm that is monotone on the nonnegative orthant:
/// 0 <= x <= y coordinatewise implies ||x|| <= ||y||.
///
/// The optional positive `scale` is applied as a multiplicative factor; the
/// budget-constrained eigenproblems use ||v||_a / pbar, which is represented
/// as the base norm with scale = 1/pbar.
class MonotoneNorm {
public:
  static MonotoneNorm l1(double scale = 1.0);
  static MonotoneNorm linf(double scale = 1.0);
  static MonotoneNorm weighted_l1(std::vector<double> weights, double scale = 1.0);
  static MonotoneNorm weighted_linf(std::vector<double> weights, double scale = 1.0);

  /// Returns a copy with the scale multiplied by `factor` (> 0).
  MonotoneNorm scaled(double factor) const;

  /// Evaluates the norm. Throws std::invalid_argument on dimension mismatch
  /// with the weight vector. Zero exactly when x is the zero vector.
  double operator()(const NonnegVector& x) const;

  /// Same evaluation on a raw buffer (absolute values are taken, so it is a
  /// genuine norm on all of R^N).
  double eval_raw(const std::vector<double>& x) const;

  NormKind kind() const noexcept { return kind_; }
  double scale() const noexcept { return scale_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// Kind and weights equal (scales may differ).
  bool same_shape(const MonotoneNorm& other) const;

private:
  MonotoneNorm(NormKind kind, std::vector<double> weights, double scale);

  NormKind kind_;
  std::vector<double> weights_;  // empty for unweighted kinds
  double scale_;
};

/// Free-function form of MonotoneNorm::operator().
double eval_norm(const MonotoneNorm& norm, const NonnegVector& x);

}  // namespace ifcalc

#endif  // IFCALC_MONOTONE_NORM_HPP
