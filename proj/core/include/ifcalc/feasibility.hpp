// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_FEASIBILITY_HPP
#define IFCALC_FEASIBILITY_HPP

#include <optional>

#include "ifcalc/asymptotic.hpp"
#include "ifcalc/spectral.hpp"

namespace ifcalc {

enum class Verdict { Feasible, Infeasible, BoundaryInconclusive };

const char* to_string(Verdict verdict);

/// Near rho = 1 the fixed point escapes to infinity and floating point
/// cannot separate the cases, so verdicts inside this band are reported as
/// inconclusive rather than guessed.
inline constexpr double kRhoBoundaryTol = 1e-6;

struct FeasibilityResult {
  Verdict verdict = Verdict::BoundaryInconclusive;
  /// Point estimate of the asymptotic spectral radius, with the bracket it
  /// was decided from (lower == upper == rho when the radius is exact).
  double rho = 0.0;
  double rho_lower = 0.0;
  double rho_upper = 0.0;
  RadiusStatus rho_status = RadiusStatus::NoConvergence;

  bool feasible() const { return verdict == Verdict::Feasible; }
};

/// Fixed-point existence test for a continuous strictly-scalable monotone
/// mapping: a fixed point exists exactly when the spectral radius of the
/// associated asymptotic mapping is below one.
///
/// When the radius solver reports NeedsBudgetMethod the verdict is decided
/// from a bracket: the boundary eigenpair's eigenvalue bounds the radius
/// from below and the budget method (budgets 1e3, 1e6, 1e9 under norm)
/// bounds it from above. A bracket straddling one yields
/// BoundaryInconclusive.
FeasibilityResult has_fixed_point(const InterferenceMapping& mapping,
                                  const LimitSchedule& schedule = {},
                                  const MonotoneNorm& norm = MonotoneNorm::linf(),
                                  const SolverConfig& cfg = {});

enum class MonotoneDirection { Nondecreasing, Nonincreasing, Mixed };
enum class FixedPointStatus { Converged, Diverged, Inconclusive };

const char* to_string(MonotoneDirection direction);
const char* to_string(FixedPointStatus status);

struct FixedPointOptions {
  SolverConfig solver;
  /// Iterate sup-norm above this is treated as divergence evidence.
  double divergence_ceiling = 1e12;
  /// Start vector; defaults to zero, which guarantees the nondecreasing
  /// regime since T(0) > 0.
  std::optional<NonnegVector> start;
};

struct FixedPointResult {
  bool exists = false;
  FixedPointStatus status = FixedPointStatus::Inconclusive;
  std::optional<NonnegVector> point;
  long iterations = 0;
  MonotoneDirection direction = MonotoneDirection::Mixed;
  double residual = 0.0;

  /// Satisfied when converged: ||T(point) - point||_inf <= tol*(1+||point||).
};

/// Plain fixed-point iteration x_{n+1} = T(x_n). Starting from x with
/// T(x) >= x the iterates are coordinatewise nondecreasing (checked each
/// step, within tolerance); crossing the divergence ceiling reports
/// exists = false with Diverged status; exhausting max_iter without either
/// outcome is Inconclusive.
FixedPointResult compute_fixed_point(const InterferenceMapping& mapping,
                                     const FixedPointOptions& options = {});

enum class BallVerdict { FeasibleWithinBall, InfeasibleWithinBall };

const char* to_string(BallVerdict verdict);

struct ConstrainedFeasibility {
  BallVerdict verdict = BallVerdict::InfeasibleWithinBall;
  double lambda_star = 0.0;
  EigenSolution solution;

  bool feasible() const { return verdict == BallVerdict::FeasibleWithinBall; }
};

/// Norm-constrained feasibility: the fixed point of the mapping exists and
/// lies inside the unit ball of the monotone norm exactly when the
/// conditional eigenvalue lambda* is <= 1.
ConstrainedFeasibility constrained_feasibility(const InterferenceMapping& mapping,
                                               const MonotoneNorm& norm,
                                               const SolverConfig& cfg = {});

}  // namespace ifcalc

#endif  // IFCALC_FEASIBILITY_HPP
