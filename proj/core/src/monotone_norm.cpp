// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/monotone_norm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifcalc {

MonotoneNorm::MonotoneNorm(NormKind kind, std::vector<double> weights, double scale)
    : kind_(kind), weights_(std::move(weights)), scale_(scale) {
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
    throw std::invalid_argument("MonotoneNorm: scale must be positive and finite");
  }
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("MonotoneNorm: weights must be positive and finite");
    }
  }
}

MonotoneNorm MonotoneNorm::l1(double scale) { return MonotoneNorm(NormKind::L1, {}, scale); }

MonotoneNorm MonotoneNorm::linf(double scale) { return MonotoneNorm(NormKind::LInf, {}, scale); }

MonotoneNorm MonotoneNorm::weighted_l1(std::vector<double> weights, double scale) {
  if (weights.empty()) throw std::invalid_argument("MonotoneNorm: empty weight vector");
  return MonotoneNorm(NormKind::WeightedL1, std::move(weights), scale);
}

MonotoneNorm MonotoneNorm::weighted_linf(std::vector<double> weights, double scale) {
  if (weights.empty()) throw std::invalid_argument("MonotoneNorm: empty weight vector");
  return MonotoneNorm(NormKind::WeightedLInf, std::move(weights), scale);
}

MonotoneNorm MonotoneNorm::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("MonotoneNorm::scaled: factor must be > 0");
  MonotoneNorm out = *this;
  out.scale_ *= factor;
  return out;
}

double MonotoneNorm::eval_raw(const std::vector<double>& x) const {
  const bool weighted = kind_ == NormKind::WeightedL1 || kind_ == NormKind::WeightedLInf;
  if (weighted && weights_.size() != x.size()) {
    throw std::invalid_argument("MonotoneNorm: weight/vector dimension mismatch");
  }
  double acc = 0.0;
  switch (kind_) {
    case NormKind::L1:
      for (double v : x) acc += std::abs(v);
      break;
    case NormKind::LInf:
      for (double v : x) acc = std::max(acc, std::abs(v));
      break;
    case NormKind::WeightedL1:
      for (std::size_t i = 0; i < x.size(); ++i) acc += weights_[i] * std::abs(x[i]);
      break;
    case NormKind::WeightedLInf:
      for (std::size_t i = 0; i < x.size(); ++i) acc = std::max(acc, weights_[i] * std::abs(x[i]));
      break;
  }
  return scale_ * acc;
}

double MonotoneNorm::operator()(const NonnegVector& x) const { return eval_raw(x.entries()); }

bool MonotoneNorm::same_shape(const MonotoneNorm& other) const {
  return kind_ == other.kind_ && weights_ == other.weights_;
}

double eval_norm(const MonotoneNorm& norm, const NonnegVector& x) { return norm(x); }

}  // namespace ifcalc
