// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ifcalc {
namespace {

constexpr double kBoundaryRel = 1e-9;  // iterate coordinate below this (relative) is "boundary"

void validate_config(const SolverConfig& cfg) {
  if (!(cfg.tol_x > 0.0) || !(cfg.tol_lambda > 0.0)) {
    throw std::invalid_argument("SolverConfig: tolerances must be > 0");
  }
  if (cfg.max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
}

NonnegVector start_vector(std::size_t dim, const MonotoneNorm& norm, const SolverConfig& cfg) {
  if (cfg.x0) {
    if (cfg.x0->dim() != dim) {
      throw std::invalid_argument("SolverConfig: x0 dimension mismatch");
    }
    if (!cfg.x0->strictly_positive()) {
      throw std::invalid_argument("SolverConfig: x0 must be strictly positive");
    }
    return scaled(*cfg.x0, 1.0 / norm(*cfg.x0));
  }
  const NonnegVector ones = NonnegVector::ones(dim);
  return scaled(ones, 1.0 / norm(ones));
}

/// Collatz-Wielandt power iteration on A + cI. The diagonal shift keeps
/// the iterate strictly positive and removes cyclic behavior, and
/// rho(A + cI) = rho(A) + c for nonnegative A, so the bounds transfer.
struct CwResult {
  double value = 0.0;
  bool converged = false;
  long iterations = 0;
};

CwResult cw_power_iteration(const Matrix& a, double shift, double tol, long max_iter) {
  const std::size_t n = a.rows();
  std::vector<double> x(n, 1.0);
  CwResult out;
  for (long it = 1; it <= max_iter; ++it) {
    std::vector<double> y = a.apply(x);
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    double ymax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += shift * x[i];
      const double r = y[i] / x[i];
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
      ymax = std::max(ymax, y[i]);
    }
    out.iterations = it;
    const double mid = 0.5 * (rmax + rmin) - shift;
    if (rmax - rmin <= tol * (1.0 + std::abs(mid))) {
      out.value = mid;
      out.converged = true;
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ymax;
  }
  return out;
}

SpectralRadiusResult linear_radius(const Matrix& a, const SolverConfig& cfg) {
  SpectralRadiusResult res;
  if (a.all_zero()) {
    res.value = res.lower = res.upper = 0.0;
    res.status = RadiusStatus::Exact;
    return res;
  }

  const double shift = a.max_row_sum();
  CwResult primary = cw_power_iteration(a, shift, cfg.tol_lambda, cfg.max_iter);
  res.iterations = primary.iterations;
  if (primary.converged) {
    res.value = res.lower = res.upper = primary.value;
    res.status = RadiusStatus::Exact;
    return res;
  }

  // Reducible matrix: the Collatz-Wielandt gap cannot close. Make the
  // matrix positive with a small rank-one shift and extrapolate to zero.
  const double eps[2] = {1e-6, 1e-8};
  double rho_eps[2] = {0.0, 0.0};
  const double entry_scale = std::max(1.0, a.max_row_sum());
  for (int k = 0; k < 2; ++k) {
    Matrix shifted = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) shifted(i, j) += eps[k] * entry_scale;
    }
    CwResult r = cw_power_iteration(shifted, shifted.max_row_sum(), cfg.tol_lambda, cfg.max_iter);
    res.iterations += r.iterations;
    if (!r.converged) {
      res.value = res.lower = res.upper = r.value;
      res.status = RadiusStatus::NoConvergence;
      return res;
    }
    rho_eps[k] = r.value;
  }
  res.value = (eps[0] * rho_eps[1] - eps[1] * rho_eps[0]) / (eps[0] - eps[1]);
  if (res.value < 0.0) res.value = 0.0;  // extrapolation round-off near zero
  res.lower = res.upper = res.value;
  res.status = RadiusStatus::Exact;
  return res;
}

SpectralRadiusResult numeric_radius(const AsymptoticMapping& mapping, const MonotoneNorm& norm,
                                    const SolverConfig& cfg) {
  SpectralRadiusResult res;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  NonnegVector x = start_vector(mapping.dim(), norm, cfg);
  double lambda_prev = -1.0;
  for (long it = 1; it <= cfg.max_iter; ++it) {
    res.iterations = it;
    const NonnegVector y = mapping(x);
    const double lambda = norm(y);

    if (lambda == 0.0) {
      // The image vanished. With a strictly positive x this certifies a
      // zero radius; from the boundary only the eigenpair lower bound holds.
      res.value = res.lower = 0.0;
      if (x.strictly_positive()) {
        res.upper = 0.0;
        res.status = RadiusStatus::Exact;
      } else {
        res.upper = nan;
        res.status = RadiusStatus::NeedsBudgetMethod;
      }
      return res;
    }

    const NonnegVector next = scaled(y, 1.0 / lambda);
    const bool lambda_ok = std::abs(lambda - lambda_prev) <= cfg.tol_lambda * (1.0 + lambda);
    const bool x_ok = sup_distance(next, x) <= cfg.tol_x;
    if (lambda_ok && x_ok) {
      const double lam = norm(mapping(next));
      res.value = lam;
      const bool interior = next.min_entry() > kBoundaryRel * next.max_entry();
      if (interior) {
        // Positive eigenvector: the eigenpair gives the lower bound and the
        // sub-eigenvector inequality T(x) <= lambda x gives the upper one.
        res.lower = res.upper = lam;
        res.status = RadiusStatus::Exact;
      } else {
        // Boundary eigenpair: still an eigenpair of the mapping, so it
        // bounds the radius from below, but no upper certificate exists
        // here. The budget method on the source mapping supplies one.
        res.lower = lam;
        res.upper = nan;
        res.status = RadiusStatus::NeedsBudgetMethod;
      }
      return res;
    }
    lambda_prev = lambda;
    x = next;
  }
  res.value = lambda_prev;
  res.lower = 0.0;
  res.upper = nan;
  res.status = RadiusStatus::NoConvergence;
  return res;
}

}  // namespace

const char* to_string(RadiusStatus status) {
  switch (status) {
    case RadiusStatus::Exact: return "exact";
    case RadiusStatus::NeedsBudgetMethod: return "needs_budget_method";
    case RadiusStatus::NoConvergence: return "no_convergence";
  }
  return "?";
}

EigenSolution solve_conditional_eigenproblem(const InterferenceMapping& mapping,
                                             const MonotoneNorm& norm, const SolverConfig& cfg) {
  validate_config(cfg);

  NonnegVector x = start_vector(mapping.dim(), norm, cfg);
  double lambda_prev = -1.0;
  long it = 1;
  bool converged = false;
  for (; it <= cfg.max_iter; ++it) {
    const NonnegVector y = mapping(x);
    const double lambda = norm(y);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
      throw ConvergenceError("conditional eigensolver: iterate image has invalid norm " +
                             std::to_string(lambda));
    }
    const NonnegVector next = scaled(y, 1.0 / lambda);
    const bool lambda_ok = std::abs(lambda - lambda_prev) <= cfg.tol_lambda;
    const bool x_ok = sup_distance(next, x) <= cfg.tol_x;
    x = next;
    lambda_prev = lambda;
    if (lambda_ok && x_ok) {
      converged = true;
      break;
    }
  }

  EigenSolution sol{x, 0.0, std::min(it, cfg.max_iter), converged, 0.0};
  const NonnegVector image = mapping(x);
  sol.lambda_star = norm(image);
  double residual = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    residual = std::max(residual, std::abs(image[i] - sol.lambda_star * x[i]));
  }
  sol.residual = residual;
  return sol;
}

SpectralRadiusResult spectral_radius(const AsymptoticMapping& mapping, const MonotoneNorm& norm,
                                     const SolverConfig& cfg) {
  validate_config(cfg);
  if (mapping.is_linear()) {
    return linear_radius(*mapping.matrix(), cfg);
  }
  return numeric_radius(mapping, norm, cfg);
}

std::vector<double> spectral_radius_upper_via_budget(const InterferenceMapping& mapping,
                                                     const std::vector<double>& budgets,
                                                     const MonotoneNorm& norm_a,
                                                     const SolverConfig& cfg) {
  validate_config(cfg);
  if (budgets.empty()) throw std::invalid_argument("budget method: no budgets given");
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (!(budgets[i] > 0.0)) throw std::invalid_argument("budget method: budgets must be > 0");
    if (i > 0 && !(budgets[i] > budgets[i - 1])) {
      throw std::invalid_argument("budget method: budgets must be strictly increasing");
    }
  }
  std::vector<double> bounds;
  bounds.reserve(budgets.size());
  for (double pbar : budgets) {
    const EigenSolution sol =
        solve_conditional_eigenproblem(mapping, norm_a.scaled(1.0 / pbar), cfg);
    if (!sol.converged) {
      throw ConvergenceError("budget method: eigensolver did not converge at budget " +
                             std::to_string(pbar));
    }
    bounds.push_back(sol.lambda_star);
  }
  return bounds;
}

}  // namespace ifcalc
