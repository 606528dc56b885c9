// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/load_model.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ifcalc {
namespace {

// Below this, p_i is treated as zero and the ratio form is replaced by its
// closed-form limit (the two branches agree in the limit; the guard only
// avoids an indeterminate division by subnormals).
constexpr double kZeroPowerGuard = 1e-300;

struct ModelData {
  int num_bs;
  std::vector<std::vector<int>> users;  // users per base station
  Matrix gains;
  std::vector<double> demands;
  double blocks;  // K
  double bandwidth;
  double sigma2;
  std::vector<double> power;        // for load mappings
  std::vector<double> target_load;  // for power mappings
  std::optional<double> rate_cap;
};

std::shared_ptr<const ModelData> make_data(const NetworkScenario& s, bool allow_zero_noise) {
  s.validate(allow_zero_noise);
  auto d = std::make_shared<ModelData>();
  d->num_bs = s.num_bs;
  d->users = s.users_per_bs();
  d->gains = s.gains;
  d->demands = s.demands_bps;
  d->blocks = static_cast<double>(s.resource_blocks);
  d->bandwidth = s.bandwidth_hz;
  d->sigma2 = s.noise_power_w;
  d->power = s.power_w;
  d->target_load = s.effective_target_load();
  d->rate_cap = s.rate_cap_bps;
  return d;
}

/// Per-block rate at cell i for user j: interference is summed over the
/// other cells weighted by `weight` (load for the load mappings, target
/// load for the power mappings) with transmit powers `power`.
double block_rate(const ModelData& d, int i, int j, const std::vector<double>& weight,
                  const std::vector<double>& power) {
  double interference = d.sigma2;
  for (int k = 0; k < d.num_bs; ++k) {
    if (k == i) continue;
    interference += weight[k] * power[k] * d.gains(k, j);
  }
  return d.bandwidth * std::log2(1.0 + power[i] * d.gains(i, j) / interference);
}

NonnegVector eval_load(const ModelData& d, const NonnegVector& x, bool capped) {
  std::vector<double> out(d.num_bs, 0.0);
  for (int i = 0; i < d.num_bs; ++i) {
    double acc = 0.0;
    for (int j : d.users[i]) {
      const double rate = block_rate(d, i, j, x.entries(), d.power);
      double term = d.demands[j] / (d.blocks * rate);
      if (capped) term = std::max(term, d.demands[j] / *d.rate_cap);
      acc += term;
    }
    out[i] = acc;
  }
  return NonnegVector(std::move(out));
}

NonnegVector eval_power(const ModelData& d, const NonnegVector& p) {
  std::vector<double> out(d.num_bs, 0.0);
  for (int i = 0; i < d.num_bs; ++i) {
    const double xi = d.target_load[i];
    double acc = 0.0;
    if (p[i] > kZeroPowerGuard) {
      for (int j : d.users[i]) {
        const double rate = block_rate(d, i, j, d.target_load, p.entries());
        acc += d.demands[j] / (d.blocks * rate);
      }
      acc *= p[i] / xi;
    } else {
      for (int j : d.users[i]) {
        double interference = d.sigma2;
        for (int k = 0; k < d.num_bs; ++k) {
          if (k == i) continue;
          interference += d.target_load[k] * p[k] * d.gains(k, j);
        }
        acc += d.demands[j] * std::numbers::ln2 * interference /
               (d.blocks * d.bandwidth * d.gains(i, j) * xi);
      }
    }
    out[i] = acc;
  }
  return NonnegVector(std::move(out));
}

}  // namespace

void NetworkScenario::validate(bool allow_zero_noise) const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("scenario: " + what); };

  if (num_bs < 1) fail("num_bs must be >= 1");
  if (num_users < 1) fail("num_users must be >= 1");
  if (static_cast<int>(assignment.size()) != num_users) {
    fail("assignment length must equal num_users");
  }
  std::vector<int> served(num_bs, 0);
  for (int j = 0; j < num_users; ++j) {
    if (assignment[j] < 0 || assignment[j] >= num_bs) {
      fail("assignment[" + std::to_string(j) + "] = " + std::to_string(assignment[j]) +
           " out of range for num_bs = " + std::to_string(num_bs));
    }
    served[assignment[j]]++;
  }
  for (int i = 0; i < num_bs; ++i) {
    if (served[i] == 0) fail("base station " + std::to_string(i) + " serves no user");
  }
  if (gains.rows() != static_cast<std::size_t>(num_bs) ||
      gains.cols() != static_cast<std::size_t>(num_users)) {
    fail("pathloss matrix must be num_bs x num_users");
  }
  for (std::size_t i = 0; i < gains.rows(); ++i) {
    for (std::size_t j = 0; j < gains.cols(); ++j) {
      if (!(gains(i, j) > 0.0) || !std::isfinite(gains(i, j))) {
        fail("pathloss gain (" + std::to_string(i) + "," + std::to_string(j) +
             ") must be strictly positive");
      }
    }
  }
  if (static_cast<int>(demands_bps.size()) != num_users) {
    fail("demands_bps length must equal num_users");
  }
  for (double v : demands_bps) {
    if (!(v > 0.0) || !std::isfinite(v)) fail("demands must be strictly positive");
  }
  if (resource_blocks < 1) fail("resource_blocks must be >= 1");
  if (!(bandwidth_hz > 0.0)) fail("bandwidth_hz must be > 0");
  if (allow_zero_noise ? noise_power_w < 0.0 : !(noise_power_w > 0.0)) {
    fail(allow_zero_noise ? "noise power must be >= 0" : "noise power must be > 0");
  }
  if (!power_w.empty()) {
    if (static_cast<int>(power_w.size()) != num_bs) fail("power_w length must equal num_bs");
    for (double v : power_w) {
      if (!(v > 0.0) || !std::isfinite(v)) fail("powers must be strictly positive");
    }
  }
  if (!target_load.empty()) {
    if (static_cast<int>(target_load.size()) != num_bs) {
      fail("target_load length must equal num_bs");
    }
    for (double v : target_load) {
      if (!(v > 0.0) || !std::isfinite(v)) fail("target load must be strictly positive");
    }
  }
  if (rate_cap_bps && !(*rate_cap_bps > 0.0)) fail("rate_cap_bps must be > 0");
}

std::vector<std::vector<int>> NetworkScenario::users_per_bs() const {
  std::vector<std::vector<int>> users(num_bs);
  for (int j = 0; j < num_users; ++j) users[assignment[j]].push_back(j);
  return users;
}

std::vector<double> NetworkScenario::effective_target_load() const {
  if (!target_load.empty()) return target_load;
  return std::vector<double>(num_bs, 1.0);
}

NetworkScenario NetworkScenario::with_noise(double sigma2) const {
  NetworkScenario out = *this;
  out.noise_power_w = sigma2;
  return out;
}

NetworkScenario NetworkScenario::with_power(std::vector<double> p) const {
  NetworkScenario out = *this;
  out.power_w = std::move(p);
  return out;
}

NetworkScenario NetworkScenario::with_target_load(std::vector<double> x) const {
  NetworkScenario out = *this;
  out.target_load = std::move(x);
  return out;
}

double rate_per_block(const NetworkScenario& scenario, int bs, int user,
                      const NonnegVector& load) {
  auto d = make_data(scenario, false);
  if (scenario.power_w.empty()) {
    throw std::invalid_argument("rate_per_block: scenario has no power vector");
  }
  if (bs < 0 || bs >= scenario.num_bs || user < 0 || user >= scenario.num_users ||
      scenario.assignment[user] != bs) {
    throw std::invalid_argument("rate_per_block: user " + std::to_string(user) +
                                " is not assigned to base station " + std::to_string(bs));
  }
  if (load.dim() != static_cast<std::size_t>(scenario.num_bs)) {
    throw std::invalid_argument("rate_per_block: load dimension mismatch");
  }
  return block_rate(*d, bs, user, load.entries(), d->power);
}

InterferenceMapping load_mapping(const NetworkScenario& scenario) {
  auto d = make_data(scenario, false);
  if (d->power.empty()) {
    throw std::invalid_argument("load_mapping: scenario has no power vector");
  }
  return InterferenceMapping::with_asymptote(
      d->num_bs, MappingClass::LoadModel,
      [d](const NonnegVector& x) { return eval_load(*d, x, false); },
      load_asymptote_matrix(scenario));
}

InterferenceMapping capped_load_mapping(const NetworkScenario& scenario) {
  auto d = make_data(scenario, false);
  if (d->power.empty()) {
    throw std::invalid_argument("capped_load_mapping: scenario has no power vector");
  }
  if (!d->rate_cap) {
    throw std::invalid_argument("capped_load_mapping: scenario has no rate_cap_bps");
  }
  return InterferenceMapping::with_asymptote(
      d->num_bs, MappingClass::CappedLoadModel,
      [d](const NonnegVector& x) { return eval_load(*d, x, true); },
      load_asymptote_matrix(scenario));
}

InterferenceMapping power_mapping(const NetworkScenario& scenario) {
  auto d = make_data(scenario, true);
  return InterferenceMapping(d->num_bs, MappingClass::PowerModel,
                             [d](const NonnegVector& p) { return eval_power(*d, p); });
}

InterferenceMapping zero_noise_power_mapping(const NetworkScenario& scenario) {
  auto d = make_data(scenario.with_noise(0.0), true);
  return InterferenceMapping(d->num_bs, MappingClass::GI,
                             [d](const NonnegVector& p) { return eval_power(*d, p); });
}

Matrix coupling_matrix(const NetworkScenario& scenario) {
  scenario.validate(true);
  const auto users = scenario.users_per_bs();
  const double kb = static_cast<double>(scenario.resource_blocks) * scenario.bandwidth_hz;
  Matrix m(scenario.num_bs, scenario.num_bs);
  for (int i = 0; i < scenario.num_bs; ++i) {
    for (int k = 0; k < scenario.num_bs; ++k) {
      if (i == k) continue;
      double acc = 0.0;
      for (int j : users[i]) {
        acc += std::numbers::ln2 * scenario.demands_bps[j] * scenario.gains(k, j) /
               (kb * scenario.gains(i, j));
      }
      m(i, k) = acc;
    }
  }
  return m;
}

Matrix load_asymptote_matrix(const NetworkScenario& scenario) {
  if (scenario.power_w.empty()) {
    throw std::invalid_argument("load_asymptote_matrix: scenario has no power vector");
  }
  Matrix m = coupling_matrix(scenario);
  for (int i = 0; i < scenario.num_bs; ++i) {
    for (int k = 0; k < scenario.num_bs; ++k) {
      m(i, k) *= scenario.power_w[k] / scenario.power_w[i];
    }
  }
  return m;
}

CanonicalProblem maxmin_rate_problem(const NetworkScenario& scenario) {
  NetworkScenario unit_load =
      scenario.with_target_load(std::vector<double>(scenario.num_bs, 1.0));
  return CanonicalProblem{power_mapping(unit_load), MonotoneNorm::linf(), MonotoneNorm::linf(),
                          1.0};
}

MaxminRateSolution maxmin_rate(const NetworkScenario& scenario, double budget,
                               const SolverConfig& cfg) {
  const CanonicalProblem problem = maxmin_rate_problem(scenario);
  const CanonicalSolution sol = solve_canonical(problem, budget, cfg);
  return MaxminRateSolution{sol.power,      sol.utility,   sol.lambda,
                            sol.iterations, sol.converged, sol.residual};
}

}  // namespace ifcalc
