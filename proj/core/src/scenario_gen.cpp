// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/scenario_gen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ifcalc {
namespace {

double dbm_per_hz_to_watts(double dbm_hz, double bandwidth_hz) {
  return std::pow(10.0, (dbm_hz - 30.0) / 10.0) * bandwidth_hz;
}

}  // namespace

NetworkScenario make_random_scenario(std::uint64_t seed, const ScenarioGenOptions& opts) {
  if (opts.num_bs < 1 || opts.users_per_bs < 1) {
    throw std::invalid_argument("make_random_scenario: need at least one cell and one user each");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const int m = opts.num_bs;
  const int n = m * opts.users_per_bs;
  const int grid = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m))));

  std::vector<double> bs_x(m), bs_y(m);
  for (int i = 0; i < m; ++i) {
    bs_x[i] = (i % grid) * opts.cell_spacing_m;
    bs_y[i] = (i / grid) * opts.cell_spacing_m;
  }

  NetworkScenario s;
  s.num_bs = m;
  s.num_users = n;
  s.assignment.resize(n);
  s.gains = Matrix(m, n);
  s.demands_bps.resize(n);
  s.resource_blocks = opts.resource_blocks;
  s.bandwidth_hz = opts.bandwidth_hz;
  s.noise_power_w = dbm_per_hz_to_watts(opts.noise_psd_dbm_hz, opts.bandwidth_hz);
  s.power_w.assign(m, opts.power_w);
  s.rate_cap_bps = opts.rate_cap_bps;

  std::uniform_real_distribution<double> demand(opts.demand_lo_bps, opts.demand_hi_bps);
  for (int j = 0; j < n; ++j) {
    const int home = j % m;
    s.assignment[j] = home;
    // Users uniform in the home cell square.
    const double ux = bs_x[home] + (unit(rng) - 0.5) * opts.cell_spacing_m;
    const double uy = bs_y[home] + (unit(rng) - 0.5) * opts.cell_spacing_m;
    for (int i = 0; i < m; ++i) {
      const double dx = ux - bs_x[i];
      const double dy = uy - bs_y[i];
      const double dist = std::max(std::sqrt(dx * dx + dy * dy), opts.ref_distance_m);
      s.gains(i, j) = std::pow(opts.ref_distance_m / dist, opts.pathloss_exponent);
    }
    s.demands_bps[j] = demand(rng);
  }

  if (opts.target_coupling_radius) {
    // Coupling entries are linear in the demands.
    const Matrix coupling = coupling_matrix(s);
    const SpectralRadiusResult rho =
        spectral_radius(AsymptoticMapping::linear(coupling), MonotoneNorm::linf());
    if (rho.value > 0.0) {
      const double factor = *opts.target_coupling_radius / rho.value;
      for (double& d : s.demands_bps) d *= factor;
    }
  }

  if (opts.target_transition_w) {
    // Noise floor of the reverse mapping is linear in the noise power.
    const CanonicalProblem problem = maxmin_rate_problem(s);
    const SpectralRadiusResult rho = canonical_rho_inf(problem);
    const double floor_at_current =
        problem.norm_a(problem.mapping(NonnegVector::zeros(problem.mapping.dim())));
    if (rho.value > 0.0 && floor_at_current > 0.0) {
      const double wanted_floor = *opts.target_transition_w * rho.value;
      s.noise_power_w *= wanted_floor / floor_at_current;
    }
  }

  s.validate();
  return s;
}

}  // namespace ifcalc
