// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/maxmin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <random>
#include <stdexcept>

namespace ifcalc {
namespace {

double ratio_at(const MonotoneNorm& a, const MonotoneNorm& b, const std::vector<double>& x) {
  const double nb = b.eval_raw(x);
  return nb > 0.0 ? a.eval_raw(x) / nb : 0.0;
}

bool plain_or_weighted_l1(NormKind k) { return k == NormKind::L1 || k == NormKind::WeightedL1; }

}  // namespace

double norm_equivalence_constant(const MonotoneNorm& norm_a, const MonotoneNorm& norm_b,
                                 std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("norm_equivalence_constant: dim must be >= 1");

  // Exact constants for the unweighted kind pairs, scales included.
  const double s = norm_a.scale() / norm_b.scale();
  if (norm_a.same_shape(norm_b)) return s;
  if (norm_a.kind() == NormKind::L1 && norm_b.kind() == NormKind::LInf) {
    return s * static_cast<double>(dim);
  }
  if (norm_a.kind() == NormKind::LInf && norm_b.kind() == NormKind::L1) return s;

  // Estimate: basis vectors, the vector attaining max-type b-norms, and
  // seeded log-uniform samples, with a small safety factor.
  double best = 0.0;
  std::vector<double> x(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(x.begin(), x.end(), 0.0);
    x[j] = 1.0;
    best = std::max(best, ratio_at(norm_a, norm_b, x));
  }
  if (norm_b.kind() == NormKind::LInf || norm_b.kind() == NormKind::WeightedLInf) {
    for (std::size_t j = 0; j < dim; ++j) {
      x[j] = norm_b.weights().empty() ? 1.0 : 1.0 / norm_b.weights()[j];
    }
    best = std::max(best, ratio_at(norm_a, norm_b, x));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    for (std::size_t j = 0; j < dim; ++j) x[j] = std::pow(10.0, -3.0 + 6.0 * unit(rng));
    best = std::max(best, ratio_at(norm_a, norm_b, x));
  }
  return best * 1.01;
}

CanonicalProblem make_canonical_problem(InterferenceMapping mapping, MonotoneNorm norm_a,
                                        MonotoneNorm norm_b, std::optional<double> alpha,
                                        std::uint64_t seed) {
  const std::size_t dim = mapping.dim();
  const double a = alpha ? *alpha : norm_equivalence_constant(norm_a, norm_b, dim, seed);
  if (!(a > 0.0)) throw std::invalid_argument("make_canonical_problem: alpha must be > 0");

  // Sampled verification that alpha really dominates the norm ratio.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(dim);
  for (int k = 0; k < 1000; ++k) {
    for (std::size_t j = 0; j < dim; ++j) x[j] = std::pow(10.0, -3.0 + 6.0 * unit(rng));
    if (norm_a.eval_raw(x) > a * norm_b.eval_raw(x) * (1.0 + 1e-12)) {
      throw std::invalid_argument(
          "make_canonical_problem: alpha fails ||x||_a <= alpha ||x||_b on a sample");
    }
  }
  return CanonicalProblem{std::move(mapping), std::move(norm_a), std::move(norm_b), a};
}

CanonicalSolution solve_canonical(const CanonicalProblem& problem, double budget,
                                  const SolverConfig& cfg) {
  if (!(budget > 0.0)) throw std::invalid_argument("solve_canonical: budget must be > 0");

  const EigenSolution sol =
      solve_conditional_eigenproblem(problem.mapping, problem.norm_a.scaled(1.0 / budget), cfg);

  CanonicalSolution out{sol.x_star, 0.0, sol.lambda_star, sol.iterations, sol.converged, 0.0};
  if (!(sol.lambda_star > 0.0)) {
    throw ConvergenceError("solve_canonical: nonpositive eigenvalue");
  }
  out.utility = 1.0 / sol.lambda_star;

  // The optimum exhausts the budget and satisfies p = u T(p).
  const NonnegVector image = problem.mapping(out.power);
  double residual = 0.0;
  for (std::size_t i = 0; i < out.power.dim(); ++i) {
    residual = std::max(residual, std::abs(out.power[i] - out.utility * image[i]));
  }
  out.residual = residual;
  if (out.converged) {
    const double norm_a_value = problem.norm_a(out.power);
    if (std::abs(norm_a_value - budget) > 1e-6 * budget) {
      throw ConvergenceError("solve_canonical: solution does not exhaust the budget");
    }
  }
  return out;
}

double utility_bound(const CanonicalProblem& problem, double budget, double rho_inf) {
  if (!(budget > 0.0)) throw std::invalid_argument("utility_bound: budget must be > 0");
  if (!(rho_inf > 0.0)) {
    throw std::invalid_argument("utility_bound: undefined for rho_inf <= 0");
  }
  const double noise_floor = problem.norm_a(problem.mapping(NonnegVector::zeros(problem.mapping.dim())));
  if (budget <= noise_floor / rho_inf) return budget / noise_floor;
  return 1.0 / rho_inf;
}

double efficiency_bound(const CanonicalProblem& problem, double budget, double rho_inf) {
  if (!(budget > 0.0)) throw std::invalid_argument("efficiency_bound: budget must be > 0");
  if (!(rho_inf > 0.0)) {
    throw std::invalid_argument("efficiency_bound: undefined for rho_inf <= 0");
  }
  const double noise_b = problem.norm_b(problem.mapping(NonnegVector::zeros(problem.mapping.dim())));
  return std::min(1.0 / noise_b, problem.alpha / (rho_inf * budget));
}

std::optional<double> transition_point(const CanonicalProblem& problem, double rho_inf) {
  if (!(rho_inf > kRhoBoundaryTol)) return std::nullopt;
  const double noise_floor =
      problem.norm_a(problem.mapping(NonnegVector::zeros(problem.mapping.dim())));
  return noise_floor / rho_inf;
}

SpectralRadiusResult canonical_rho_inf(const CanonicalProblem& problem, const SolverConfig& cfg,
                                       double refine_budget, const LimitSchedule& schedule) {
  const AsymptoticMapping limit = derive_asymptotic(problem.mapping, schedule);
  SpectralRadiusResult radius = spectral_radius(limit, problem.norm_a, cfg);
  if (radius.status == RadiusStatus::NeedsBudgetMethod) {
    const std::vector<double> budgets = {refine_budget * 1e-4, refine_budget * 1e-2,
                                         refine_budget};
    const std::vector<double> uppers =
        spectral_radius_upper_via_budget(problem.mapping, budgets, problem.norm_a, cfg);
    radius.upper = uppers.back();
    if (!std::isfinite(radius.lower)) radius.lower = 0.0;
    radius.value = radius.upper;  // safe side for bound computations
  }
  return radius;
}

SweepResult sweep(const CanonicalProblem& problem, const std::vector<double>& budgets,
                  const SolverConfig& cfg, int jobs) {
  if (budgets.empty()) throw std::invalid_argument("sweep: no budgets given");
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (!(budgets[i] > 0.0)) throw std::invalid_argument("sweep: budgets must be > 0");
    if (i > 0 && !(budgets[i] > budgets[i - 1])) {
      throw std::invalid_argument("sweep: budgets must be strictly increasing");
    }
  }
  if (jobs < 1) jobs = 1;

  SweepResult result;
  const double refine = std::max(1e9, budgets.back() * 1e3);
  const SpectralRadiusResult radius = canonical_rho_inf(problem, cfg, refine);
  result.rho_inf = radius.value;
  result.rho_status = radius.status;
  result.transition = transition_point(problem, radius.value);

  const bool bounds_defined = radius.value > kRhoBoundaryTol;

  auto solve_row = [&](double budget) -> SweepRow {
    SweepRow row;
    row.budget = budget;
    row.power = NonnegVector::zeros(problem.mapping.dim());
    try {
      const CanonicalSolution sol = solve_canonical(problem, budget, cfg);
      row.utility = sol.utility;
      row.power = sol.power;
      row.lambda = sol.lambda;
      row.iterations = sol.iterations;
      row.efficiency = sol.utility / problem.norm_b(sol.power);
      if (bounds_defined) {
        row.utility_bound = utility_bound(problem, budget, radius.value);
        row.efficiency_bound = efficiency_bound(problem, budget, radius.value);
      } else {
        row.utility_bound = std::numeric_limits<double>::infinity();
        row.efficiency_bound = std::numeric_limits<double>::infinity();
      }
      row.ok = sol.converged;
      if (!sol.converged) row.error = "solver did not converge";
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    return row;
  };

  result.rows.resize(0);
  result.rows.reserve(budgets.size());
  if (jobs == 1) {
    for (double b : budgets) result.rows.push_back(solve_row(b));
  } else {
    std::vector<SweepRow> rows(budgets.size());
    std::size_t next = 0;
    while (next < budgets.size()) {
      const std::size_t batch = std::min<std::size_t>(jobs, budgets.size() - next);
      std::vector<std::future<SweepRow>> futures;
      futures.reserve(batch);
      for (std::size_t k = 0; k < batch; ++k) {
        futures.push_back(
            std::async(std::launch::async, solve_row, budgets[next + k]));
      }
      for (std::size_t k = 0; k < batch; ++k) rows[next + k] = futures[k].get();
      next += batch;
    }
    result.rows = std::move(rows);
  }

  // Soft monotonicity checks across rows (strict tolerance 1e-10).
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    const SweepRow& prev = result.rows[i - 1];
    const SweepRow& cur = result.rows[i];
    if (!prev.ok || !cur.ok) continue;
    char buf[200];
    if (cur.utility < prev.utility - 1e-10 * (1.0 + std::abs(prev.utility))) {
      std::snprintf(buf, sizeof buf, "utility not increasing between budgets %g and %g",
                    prev.budget, cur.budget);
      result.warnings.emplace_back(buf);
    }
    if (cur.efficiency > prev.efficiency + 1e-10 * (1.0 + std::abs(prev.efficiency))) {
      std::snprintf(buf, sizeof buf, "efficiency not nonincreasing between budgets %g and %g",
                    prev.budget, cur.budget);
      result.warnings.emplace_back(buf);
    }
  }
  return result;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_spaced: need 0 < lo < hi");
  if (n < 2) throw std::invalid_argument("log_spaced: need n >= 2");
  std::vector<double> grid(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) grid[i] = lo * std::exp(step * i);
  grid.back() = hi;
  return grid;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
  if (!(hi > lo)) throw std::invalid_argument("lin_spaced: need lo < hi");
  if (n < 2) throw std::invalid_argument("lin_spaced: need n >= 2");
  std::vector<double> grid(n);
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) grid[i] = lo + step * i;
  grid.back() = hi;
  return grid;
}

}  // namespace ifcalc
