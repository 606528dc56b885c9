// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_SCENARIO_GEN_HPP
#define IFCALC_SCENARIO_GEN_HPP

#include <cstdint>
#include <optional>

#include "ifcalc/load_model.hpp"

namespace ifcalc {

/// Synthetic scenario generator: base stations on a square grid, each
/// serving users placed uniformly in its cell, log-distance pathloss with
/// exponent 3.5. Deterministic for a fixed seed.
struct ScenarioGenOptions {
  int num_bs = 5;
  int users_per_bs = 3;
  double cell_spacing_m = 200.0;
  double ref_distance_m = 10.0;
  double pathloss_exponent = 3.5;
  double demand_lo_bps = 5e5;
  double demand_hi_bps = 2e6;
  int resource_blocks = 50;
  double bandwidth_hz = 180e3;
  double noise_psd_dbm_hz = -154.0;
  double power_w = 1.0;
  std::optional<double> rate_cap_bps;
  /// Rescale demands so the coupling matrix has this spectral radius
  /// (entries are linear in the demands, so the rescaling is exact).
  std::optional<double> target_coupling_radius;
  /// Override the noise so the max-min rate problem's transition point
  /// lands at this budget (watts). The noise floor of the reverse mapping
  /// is linear in the noise power, so this is exact too.
  std::optional<double> target_transition_w;
};

NetworkScenario make_random_scenario(std::uint64_t seed, const ScenarioGenOptions& opts = {});

}  // namespace ifcalc

#endif  // IFCALC_SCENARIO_GEN_HPP
