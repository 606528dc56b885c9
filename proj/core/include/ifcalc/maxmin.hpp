// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_MAXMIN_HPP
#define IFCALC_MAXMIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "ifcalc/feasibility.hpp"
#include "ifcalc/spectral.hpp"

namespace ifcalc {

/// Max-min utility problem: maximize u subject to p = u T(p) and
/// ||p||_a <= budget. norm_b is the norm the efficiency is measured in
/// (often equal to norm_a). alpha is a norm-equivalence constant with
/// ||x||_a <= alpha ||x||_b for all x.
struct CanonicalProblem {
  InterferenceMapping mapping;
  MonotoneNorm norm_a;
  MonotoneNorm norm_b;
  double alpha = 1.0;
};

/// Norm-equivalence constant ||x||_a <= alpha ||x||_b on R+^dim. Exact for
/// the l1/linf kind pairs (including scales); otherwise estimated from the
/// basis vectors and 1e3 seeded log-uniform samples, times a 1.01 safety
/// factor.
double norm_equivalence_constant(const MonotoneNorm& norm_a, const MonotoneNorm& norm_b,
                                 std::size_t dim, std::uint64_t seed = 0x5eed);

/// Builds the problem, computing alpha (or verifying a supplied one by
/// sampling).
CanonicalProblem make_canonical_problem(InterferenceMapping mapping, MonotoneNorm norm_a,
                                        MonotoneNorm norm_b,
                                        std::optional<double> alpha = std::nullopt,
                                        std::uint64_t seed = 0x5eed);

struct CanonicalSolution {
  NonnegVector power;
  double utility = 0.0;
  double lambda = 0.0;  // 1/utility
  long iterations = 0;
  bool converged = false;
  double residual = 0.0;  // ||p - u T(p)||_inf
};

/// Solves the problem for one budget via the conditional eigenproblem under
/// ||.||_a / budget: the optimal power is the eigenvector (which exhausts
/// the budget, ||p||_a = budget) and the utility is 1/lambda*.
CanonicalSolution solve_canonical(const CanonicalProblem& problem, double budget,
                                  const SolverConfig& cfg = {});

/// Upper bound on the utility:
///   budget / ||T(0)||_a   when budget <= ||T(0)||_a / rho_inf,
///   1 / rho_inf           otherwise.
/// Throws std::invalid_argument when rho_inf <= 0 (see transition_point).
double utility_bound(const CanonicalProblem& problem, double budget, double rho_inf);

/// Upper bound on the efficiency:
///   min{ 1 / ||T(0)||_b,  alpha / (rho_inf * budget) }.
double efficiency_bound(const CanonicalProblem& problem, double budget, double rho_inf);

/// Budget ||T(0)||_a / rho_inf separating the regime where the utility
/// grows roughly linearly in the budget from the regime where it saturates
/// at 1/rho_inf. Undefined (nullopt) when rho_inf is within the boundary
/// tolerance of zero.
std::optional<double> transition_point(const CanonicalProblem& problem, double rho_inf);

/// Asymptotic spectral radius of the problem's mapping under norm_a,
/// refined through the budget method when the direct iteration ends on the
/// boundary. `refine_budget` caps the refinement budgets and should be at
/// least as large as any budget whose bounds will be computed from the
/// result.
SpectralRadiusResult canonical_rho_inf(const CanonicalProblem& problem,
                                       const SolverConfig& cfg = {},
                                       double refine_budget = 1e9,
                                       const LimitSchedule& schedule = {});

struct SweepRow {
  double budget = 0.0;
  double utility = 0.0;
  NonnegVector power;
  double efficiency = 0.0;
  double utility_bound = 0.0;
  double efficiency_bound = 0.0;
  double lambda = 0.0;
  long iterations = 0;
  bool ok = false;
  std::string error;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double rho_inf = 0.0;
  RadiusStatus rho_status = RadiusStatus::NoConvergence;
  std::optional<double> transition;
  /// Soft monotonicity findings (utility must increase, efficiency must not
  /// increase, row by row); solver tolerance can mask strictness, so these
  /// are reported rather than thrown.
  std::vector<std::string> warnings;
};

/// Solves the problem over a strictly increasing budget grid. Rows can be
/// computed concurrently (jobs > 1); results are ordered by budget
/// regardless. Per-row solver failures are recorded in the row and do not
/// abort the sweep.
SweepResult sweep(const CanonicalProblem& problem, const std::vector<double>& budgets,
                  const SolverConfig& cfg = {}, int jobs = 1);

/// Log-spaced grid from lo to hi inclusive (n >= 2, lo, hi > 0).
std::vector<double> log_spaced(double lo, double hi, int n);
/// Linearly spaced grid from lo to hi inclusive (n >= 2).
std::vector<double> lin_spaced(double lo, double hi, int n);

}  // namespace ifcalc

#endif  // IFCALC_MAXMIN_HPP
