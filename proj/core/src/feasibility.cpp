// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/feasibility.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ifcalc {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Feasible: return "feasible";
    case Verdict::Infeasible: return "infeasible";
    case Verdict::BoundaryInconclusive: return "boundary_inconclusive";
  }
  return "?";
}

const char* to_string(MonotoneDirection direction) {
  switch (direction) {
    case MonotoneDirection::Nondecreasing: return "nondecreasing";
    case MonotoneDirection::Nonincreasing: return "nonincreasing";
    case MonotoneDirection::Mixed: return "mixed";
  }
  return "?";
}

const char* to_string(FixedPointStatus status) {
  switch (status) {
    case FixedPointStatus::Converged: return "converged";
    case FixedPointStatus::Diverged: return "diverged";
    case FixedPointStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(BallVerdict verdict) {
  switch (verdict) {
    case BallVerdict::FeasibleWithinBall: return "feasible_within_ball";
    case BallVerdict::InfeasibleWithinBall: return "infeasible_within_ball";
  }
  return "?";
}

FeasibilityResult has_fixed_point(const InterferenceMapping& mapping,
                                  const LimitSchedule& schedule, const MonotoneNorm& norm,
                                  const SolverConfig& cfg) {
  const AsymptoticMapping limit = derive_asymptotic(mapping, schedule);
  SpectralRadiusResult radius = spectral_radius(limit, norm, cfg);

  FeasibilityResult out;
  out.rho_status = radius.status;

  switch (radius.status) {
    case RadiusStatus::Exact:
      out.rho = out.rho_lower = out.rho_upper = radius.value;
      break;
    case RadiusStatus::NeedsBudgetMethod: {
      // Bracket the radius: the boundary eigenpair is a genuine eigenpair,
      // so its eigenvalue is a lower bound; the budget method on the source
      // mapping gives decreasing upper bounds.
      out.rho_lower = radius.lower;
      const std::vector<double> uppers =
          spectral_radius_upper_via_budget(mapping, {1e3, 1e6, 1e9}, norm, cfg);
      out.rho_upper = uppers.back();
      out.rho = std::isfinite(radius.lower) ? radius.lower : out.rho_upper;
      break;
    }
    case RadiusStatus::NoConvergence:
      throw ConvergenceError("has_fixed_point: spectral radius iteration did not converge");
  }

  if (out.rho_upper < 1.0 - kRhoBoundaryTol) {
    out.verdict = Verdict::Feasible;
  } else if (out.rho_lower > 1.0 + kRhoBoundaryTol) {
    out.verdict = Verdict::Infeasible;
  } else {
    out.verdict = Verdict::BoundaryInconclusive;
  }
  return out;
}

FixedPointResult compute_fixed_point(const InterferenceMapping& mapping,
                                     const FixedPointOptions& options) {
  const SolverConfig& cfg = options.solver;
  if (!(cfg.tol_x > 0.0)) throw std::invalid_argument("compute_fixed_point: tol must be > 0");
  if (!(options.divergence_ceiling > 0.0)) {
    throw std::invalid_argument("compute_fixed_point: divergence ceiling must be > 0");
  }

  NonnegVector x = options.start ? *options.start : NonnegVector::zeros(mapping.dim());
  if (x.dim() != mapping.dim()) {
    throw std::invalid_argument("compute_fixed_point: start dimension mismatch");
  }

  FixedPointResult out;

  // Direction of the monotone regime, decided by the first step.
  NonnegVector fx = mapping(x);
  const double slack0 = cfg.tol_x * (1.0 + sup_norm(fx));
  const bool expect_up = leq(x, fx, slack0);
  const bool expect_down = leq(fx, x, slack0);
  out.direction = expect_up   ? MonotoneDirection::Nondecreasing
                  : expect_down ? MonotoneDirection::Nonincreasing
                                : MonotoneDirection::Mixed;

  for (long it = 1; it <= cfg.max_iter; ++it) {
    out.iterations = it;
    if (!fx.all_finite() || sup_norm(fx) > options.divergence_ceiling) {
      out.status = FixedPointStatus::Diverged;
      out.exists = false;
      out.residual = std::numeric_limits<double>::infinity();
      return out;
    }

    // The monotone regimes must persist along the whole orbit.
    const double slack = cfg.tol_x * (1.0 + sup_norm(fx));
    if (expect_up && !leq(x, fx, slack)) {
      throw ConvergenceError(
          "compute_fixed_point: iterate left the nondecreasing regime; the mapping is not "
          "monotone");
    }
    if (expect_down && !expect_up && !leq(fx, x, slack)) {
      throw ConvergenceError(
          "compute_fixed_point: iterate left the nonincreasing regime; the mapping is not "
          "monotone");
    }

    const double residual = sup_distance(fx, x);
    if (residual <= cfg.tol_x * (1.0 + sup_norm(fx))) {
      out.status = FixedPointStatus::Converged;
      out.exists = true;
      out.point = fx;
      out.residual = sup_distance(mapping(fx), fx);
      return out;
    }
    x = fx;
    fx = mapping(x);
  }

  out.status = FixedPointStatus::Inconclusive;
  out.exists = false;
  out.residual = sup_distance(fx, x);
  return out;
}

ConstrainedFeasibility constrained_feasibility(const InterferenceMapping& mapping,
                                               const MonotoneNorm& norm,
                                               const SolverConfig& cfg) {
  ConstrainedFeasibility out;
  out.solution = solve_conditional_eigenproblem(mapping, norm, cfg);
  if (!out.solution.converged) {
    throw ConvergenceError("constrained_feasibility: eigensolver did not converge");
  }
  out.lambda_star = out.solution.lambda_star;
  out.verdict = out.lambda_star <= 1.0 ? BallVerdict::FeasibleWithinBall
                                       : BallVerdict::InfeasibleWithinBall;
  return out;
}

}  // namespace ifcalc
