// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_ASYMPTOTIC_HPP
#define IFCALC_ASYMPTOTIC_HPP

#include <optional>

#include "ifcalc/errors.hpp"
#include "ifcalc/interference_mapping.hpp"
#include "ifcalc/matrix.hpp"

namespace ifcalc {

/// Geometric scale schedule h_n = h0 * growth^n used to evaluate the limit
/// of T(h x)/h as h -> infinity. The defaults reach scale 1e40, far past
/// where the limit saturates in double precision, while staying cheap.
struct LimitSchedule {
  double h0 = 1.0;
  double growth = 10.0;
  double tol = 1e-9;  // relative sup-norm stopping threshold
  int max_steps = 40;
};

struct LimitEvalInfo {
  int steps = 0;
  bool converged = false;
  /// T(h x) stopped being finite before the tolerance was met; the returned
  /// value is the last finite iterate and should be treated with reduced
  /// confidence.
  bool overflow_truncated = false;
  double last_gap = 0.0;
};

/// The positively homogeneous mapping obtained from a weakly scalable
/// monotone mapping by following T(h x)/h to large h. It is either a
/// linear form (a nonnegative matrix, evaluated exactly) or a numeric form
/// (the limit evaluated on demand through a LimitSchedule).
///
/// Invariants maintained by construction: positively homogeneous and
/// monotone on the nonnegative orthant, and maps 0 to 0 (within the
/// schedule tolerance for numeric forms).
class AsymptoticMapping {
public:
  static AsymptoticMapping linear(Matrix coeff);
  static AsymptoticMapping linear(Matrix coeff, InterferenceMapping source);
  static AsymptoticMapping numeric(InterferenceMapping source, LimitSchedule schedule = {});

  /// Evaluates the mapping. Numeric forms iterate g_n = T(h_n x)/h_n until
  /// the relative sup-norm change falls below the schedule tolerance; the
  /// sequence must be coordinatewise nonincreasing, and a detected increase
  /// beyond the tolerance aborts with a ConvergenceError (it indicates a
  /// mapping wrongly declared weakly scalable, or overflow). Throws
  /// ConvergenceError on non-convergence within max_steps, reporting the
  /// last two iterates and their gap.
  NonnegVector operator()(const NonnegVector& x) const;

  /// Same as operator() but reports iteration details, and degrades
  /// gracefully on overflow (returns the last finite iterate with
  /// info.overflow_truncated set instead of throwing).
  NonnegVector eval(const NonnegVector& x, LimitEvalInfo& info) const;

  bool is_linear() const noexcept { return coeff_.has_value(); }
  const Matrix* matrix() const noexcept { return coeff_ ? &*coeff_ : nullptr; }
  const InterferenceMapping* source() const noexcept { return source_ ? &*source_ : nullptr; }
  const LimitSchedule& schedule() const noexcept { return schedule_; }
  std::size_t dim() const noexcept { return dim_; }

private:
  AsymptoticMapping() = default;

  std::size_t dim_ = 0;
  std::optional<Matrix> coeff_;
  std::optional<InterferenceMapping> source_;
  LimitSchedule schedule_;
};

/// Builds the asymptotic mapping associated with a weakly scalable mapping:
/// a linear form when the limit matrix is known in closed form (Affine,
/// load-model classes, declared-linear GI mappings probed at the basis
/// vectors), the numeric form with the given schedule otherwise. Throws
/// std::invalid_argument when the class tag does not declare weak
/// scalability.
AsymptoticMapping derive_asymptotic(const InterferenceMapping& mapping,
                                    const LimitSchedule& schedule = {});

}  // namespace ifcalc

#endif  // IFCALC_ASYMPTOTIC_HPP
