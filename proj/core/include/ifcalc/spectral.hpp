// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_SPECTRAL_HPP
#define IFCALC_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "ifcalc/asymptotic.hpp"
#include "ifcalc/interference_mapping.hpp"
#include "ifcalc/monotone_norm.hpp"

namespace ifcalc {

struct SolverConfig {
  double tol_x = 1e-10;       // sup-norm tolerance on iterates
  double tol_lambda = 1e-10;  // tolerance on the eigenvalue sequence
  long max_iter = 100000;
  /// Start vector; defaults to all-ones normalized under the problem norm.
  /// Must be strictly positive when given.
  std::optional<NonnegVector> x0;
};

/// Solution of the conditional eigenvalue problem T(x) = lambda x,
/// ||x|| = 1 under a monotone norm.
struct EigenSolution {
  NonnegVector x_star;
  double lambda_star = 0.0;
  long iterations = 0;
  bool converged = false;
  /// ||T(x*) - lambda* x*||_inf. Bounded by max(tol_x, tol_lambda) *
  /// (1 + lambda*) when converged.
  double residual = 0.0;
};

/// Normalized fixed-point iteration x_{n+1} = T(x_n)/||T(x_n)||, starting
/// from a strictly positive vector. The eigenvalue sequence
/// lambda_n = ||T(x_n)|| is the primary stopping criterion; the iterate
/// criterion guards against oscillation. Both must meet their tolerances.
///
/// Convergence to the unique positive solution is guaranteed for strictly
/// scalable monotone mappings, and for nonnegative-concave primitive ones;
/// other inputs run the same iteration at the caller's risk. On
/// non-convergence the best iterate is returned with converged = false.
/// Throws std::invalid_argument if cfg.x0 is given and not strictly
/// positive.
EigenSolution solve_conditional_eigenproblem(const InterferenceMapping& mapping,
                                             const MonotoneNorm& norm,
                                             const SolverConfig& cfg = {});

enum class RadiusStatus {
  Exact,              // value certified within tolerance
  NeedsBudgetMethod,  // iterates reached the boundary; value is the
                      // eigenvalue of a boundary eigenpair (a lower bound);
                      // refine the upper bound with the budget method
  NoConvergence,
};

const char* to_string(RadiusStatus status);

struct SpectralRadiusResult {
  double value = 0.0;  // best point estimate
  RadiusStatus status = RadiusStatus::NoConvergence;
  /// Bracket around the radius. Equal to value when Exact; lower comes from
  /// a converged boundary eigenpair, upper stays NaN until a budget-method
  /// refinement supplies one.
  double lower = 0.0;
  double upper = 0.0;
  long iterations = 0;
};

/// Spectral radius of an asymptotic (monotone, positively homogeneous)
/// mapping.
///
/// Linear forms use power iteration on the nonnegative matrix with
/// Collatz-Wielandt bounds as the stopping certificate; matrices on which
/// the bounds cannot close (reducible ones) fall back to dense shifts by
/// eps * (all-ones matrix) for eps in {1e-6, 1e-8} with linear
/// extrapolation to eps -> 0.
///
/// Numeric forms run the normalized iteration under the given norm. If the
/// iterates converge to a strictly positive vector the value is exact; if
/// they converge to the boundary the status is NeedsBudgetMethod.
SpectralRadiusResult spectral_radius(const AsymptoticMapping& mapping, const MonotoneNorm& norm,
                                     const SolverConfig& cfg = {});

/// Budget-method upper bounds: for each budget pbar solves the conditional
/// eigenproblem under ||.||_a / pbar and reports lambda(pbar). The sequence
/// is nonincreasing and every element bounds the asymptotic spectral radius
/// from above. Budgets must be strictly increasing.
std::vector<double> spectral_radius_upper_via_budget(const InterferenceMapping& mapping,
                                                     const std::vector<double>& budgets,
                                                     const MonotoneNorm& norm_a,
                                                     const SolverConfig& cfg = {});

}  // namespace ifcalc

#endif  // IFCALC_SPECTRAL_HPP
