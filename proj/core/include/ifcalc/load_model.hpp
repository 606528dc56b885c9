// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_LOAD_MODEL_HPP
#define IFCALC_LOAD_MODEL_HPP

#include <optional>
#include <vector>

#include "ifcalc/maxmin.hpp"

namespace ifcalc {

/// Downlink cellular scenario for the load-coupling model.
///
/// Base stations divide the spectrum into `resource_blocks` blocks of
/// `bandwidth_hz` each and serve disjoint user sets; intercell interference
/// couples the cells because a neighbor's transmissions degrade the rate a
/// block can carry. Loads are fractions of used blocks and may exceed one;
/// raw values are reported unclamped (they rank overloaded cells).
struct NetworkScenario {
  int num_bs = 0;
  int num_users = 0;
  /// Per-user serving base station, 0-based. Every base station must serve
  /// at least one user.
  std::vector<int> assignment;
  /// num_bs x num_users linear-scale gains, all > 0.
  Matrix gains{0, 0};
  std::vector<double> demands_bps;
  int resource_blocks = 0;
  double bandwidth_hz = 0.0;
  /// Noise power per resource block in watts. Must be > 0 except when
  /// explicitly building the zero-noise power mapping.
  double noise_power_w = 0.0;
  /// Per-base-station transmit power per resource block in watts (needed by
  /// the load mappings; empty when unset).
  std::vector<double> power_w;
  /// Per-base-station target load (needed by the power mapping; empty means
  /// all-ones).
  std::vector<double> target_load;
  /// Maximum rate a resource block can carry, in bits/second (enables the
  /// capped load mapping).
  std::optional<double> rate_cap_bps;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate(bool allow_zero_noise = false) const;

  std::vector<std::vector<int>> users_per_bs() const;
  std::vector<double> effective_target_load() const;

  NetworkScenario with_noise(double sigma2) const;
  NetworkScenario with_power(std::vector<double> p) const;
  NetworkScenario with_target_load(std::vector<double> x) const;

  friend bool operator==(const NetworkScenario&, const NetworkScenario&) = default;
};

/// Rate of one resource block that base station `bs` assigns to its user
/// `user`, for the given load vector: the Shannon rate under intercell
/// interference weighted by the interfering cells' loads. Throws when the
/// user is not assigned to the base station.
double rate_per_block(const NetworkScenario& scenario, int bs, int user, const NonnegVector& load);

/// Load mapping: coordinate i sums demand over the users of cell i divided
/// by the rate the cell's blocks carry at the given load vector. Positive
/// concave, hence strictly scalable and monotone. Requires power_w and
/// positive noise.
InterferenceMapping load_mapping(const NetworkScenario& scenario);

/// Load mapping with the per-block rate capped (limited modulation and
/// coding): each user term is max{demand/(K*rate), demand/cap}. Not concave
/// but still strictly scalable and monotone; its asymptotic matrix equals
/// the uncapped one. Requires rate_cap_bps.
InterferenceMapping capped_load_mapping(const NetworkScenario& scenario);

/// Reverse mapping: powers inducing the scenario's target load. Acts on
/// power vectors; the p_i = 0 branch (also used below 1e-300 to avoid 0/0)
/// evaluates the closed-form limit of the ratio form. Requires a strictly
/// positive target load; zero noise is allowed.
InterferenceMapping power_mapping(const NetworkScenario& scenario);

/// The power mapping with the noise removed: positively homogeneous, equal
/// to the asymptotic mapping of the power mapping. Tagged GI.
InterferenceMapping zero_noise_power_mapping(const NetworkScenario& scenario);

/// Intercell coupling matrix: zero diagonal, entry (i,k) sums
/// ln(2) d_j g_{k,j} / (K B g_{i,j}) over the users j of cell i. Depends
/// only on demands, gains, and the block grid; the load model is feasible
/// exactly when its spectral radius is below one.
Matrix coupling_matrix(const NetworkScenario& scenario);

/// diag(p)^-1 * coupling * diag(p): the limit matrix of the (capped) load
/// mapping. Its radius equals the coupling matrix's for every power vector.
Matrix load_asymptote_matrix(const NetworkScenario& scenario);

struct MaxminRateSolution {
  NonnegVector power;
  double rate = 0.0;    // common achievable user rate
  double lambda = 0.0;  // 1/rate eigenvalue
  long iterations = 0;
  bool converged = false;
  double residual = 0.0;
};

/// Canonical problem behind maxmin_rate: the reverse mapping at unit target
/// load (full-load operation is optimal for the common rate) under the
/// sup-norm budget constraint, efficiency in the sup-norm, alpha = 1.
CanonicalProblem maxmin_rate_problem(const NetworkScenario& scenario);

/// Maximizes the common rate of all users subject to a per-base-station
/// power budget (per resource block).
MaxminRateSolution maxmin_rate(const NetworkScenario& scenario, double budget,
                               const SolverConfig& cfg = {});

}  // namespace ifcalc

#endif  // IFCALC_LOAD_MODEL_HPP
