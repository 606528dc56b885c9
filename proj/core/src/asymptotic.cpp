// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/asymptotic.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifcalc {
namespace {

void validate_schedule(const LimitSchedule& s) {
  if (!(s.h0 > 0.0)) throw std::invalid_argument("LimitSchedule: h0 must be > 0");
  if (!(s.growth > 1.0)) throw std::invalid_argument("LimitSchedule: growth must be > 1");
  if (!(s.tol > 0.0)) throw std::invalid_argument("LimitSchedule: tol must be > 0");
  if (s.max_steps < 1) throw std::invalid_argument("LimitSchedule: max_steps must be >= 1");
}

std::string fmt_vec(const NonnegVector& v) {
  std::string s = "(";
  char buf[40];
  for (std::size_t i = 0; i < v.dim(); ++i) {
    std::snprintf(buf, sizeof buf, "%.9g", v[i]);
    s += buf;
    if (i + 1 < v.dim()) s += ", ";
  }
  return s + ")";
}

}  // namespace

AsymptoticMapping AsymptoticMapping::linear(Matrix coeff) {
  if (coeff.rows() != coeff.cols()) {
    throw std::invalid_argument("AsymptoticMapping::linear: matrix must be square");
  }
  if (!coeff.nonnegative()) {
    throw std::invalid_argument("AsymptoticMapping::linear: matrix must be nonnegative");
  }
  AsymptoticMapping m;
  m.dim_ = coeff.rows();
  m.coeff_ = std::move(coeff);
  return m;
}

AsymptoticMapping AsymptoticMapping::linear(Matrix coeff, InterferenceMapping source) {
  AsymptoticMapping m = linear(std::move(coeff));
  if (source.dim() != m.dim_) {
    throw std::invalid_argument("AsymptoticMapping::linear: source dimension mismatch");
  }
  m.source_ = std::move(source);
  return m;
}

AsymptoticMapping AsymptoticMapping::numeric(InterferenceMapping source, LimitSchedule schedule) {
  validate_schedule(schedule);
  AsymptoticMapping m;
  m.dim_ = source.dim();
  m.source_ = std::move(source);
  m.schedule_ = schedule;
  return m;
}

NonnegVector AsymptoticMapping::eval(const NonnegVector& x, LimitEvalInfo& info) const {
  info = LimitEvalInfo{};
  if (x.dim() != dim_) {
    throw std::invalid_argument("AsymptoticMapping: input dimension mismatch");
  }
  if (coeff_) {
    info.converged = true;
    return coeff_->apply(x);
  }

  const InterferenceMapping& T = *source_;
  const LimitSchedule& s = schedule_;

  double h = s.h0;
  NonnegVector prev = scaled(T(scaled(x, h)), 1.0 / h);
  for (int n = 1; n <= s.max_steps; ++n) {
    h *= s.growth;
    const NonnegVector raw = T(scaled(x, h));
    if (!raw.all_finite()) {
      // Overflow at large scale; the last finite iterate is the best
      // available estimate.
      info.steps = n;
      info.overflow_truncated = true;
      return prev;
    }
    const NonnegVector cur = scaled(raw, 1.0 / h);

    // The scaled sequence is coordinatewise nonincreasing for weakly
    // scalable mappings; a genuine increase means the declared class is
    // wrong (or growth is so fast the limit does not exist).
    for (std::size_t i = 0; i < dim_; ++i) {
      if (cur[i] > prev[i] + s.tol * (1.0 + std::abs(prev[i]))) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "asymptotic limit increased at coordinate %zu (%.9g -> %.9g, h = %.3g); "
                      "mapping is not weakly scalable",
                      i, prev[i], cur[i], h);
        throw ConvergenceError(buf);
      }
    }

    const double gap = sup_distance(cur, prev);
    info.steps = n;
    info.last_gap = gap;
    if (gap <= s.tol * (1.0 + sup_norm(cur))) {
      info.converged = true;
      return cur;
    }
    prev = cur;
  }

  info.converged = false;
  return prev;
}

NonnegVector AsymptoticMapping::operator()(const NonnegVector& x) const {
  LimitEvalInfo info;
  NonnegVector v = eval(x, info);
  if (coeff_) return v;
  if (!info.converged && !info.overflow_truncated) {
    throw ConvergenceError("asymptotic limit did not converge within " +
                           std::to_string(schedule_.max_steps) + " steps; last iterate " +
                           fmt_vec(v) + ", gap " + std::to_string(info.last_gap));
  }
  return v;
}

AsymptoticMapping derive_asymptotic(const InterferenceMapping& mapping,
                                    const LimitSchedule& schedule) {
  validate_schedule(schedule);
  if (!is_wsi_subclass(mapping.mapping_class())) {
    throw std::invalid_argument(std::string("derive_asymptotic: class ") +
                                to_string(mapping.mapping_class()) +
                                " does not declare weak scalability");
  }

  // Closed-form limit matrices first.
  if (const Matrix* a = mapping.asymptote_matrix()) {
    if (mapping.mapping_class() == MappingClass::Affine ||
        mapping.mapping_class() == MappingClass::LoadModel ||
        mapping.mapping_class() == MappingClass::CappedLoadModel || mapping.is_linear()) {
      return AsymptoticMapping::linear(*a, mapping);
    }
  }
  if (mapping.mapping_class() == MappingClass::GI && mapping.is_linear()) {
    // Recover the matrix by probing the basis vectors.
    const std::size_t n = mapping.dim();
    Matrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> e(n, 0.0);
      e[j] = 1.0;
      const NonnegVector col = mapping(NonnegVector(std::move(e)));
      for (std::size_t i = 0; i < n; ++i) a(i, j) = col[i];
    }
    return AsymptoticMapping::linear(std::move(a), mapping);
  }

  return AsymptoticMapping::numeric(mapping, schedule);
}

}  // namespace ifcalc
