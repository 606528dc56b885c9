// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#include "ifcalc/axioms.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <vector>

namespace ifcalc {
namespace {

constexpr double kSampleLo = 1e-3;
constexpr double kSampleHi = 1e3;
constexpr double kStrictMargin = 1e-12;  // relative margin for strict inequalities
const double kAlphas[] = {1.5, 2.0, 10.0};
const double kHomAlphas[] = {0.0, 0.5, 1.5, 2.0, 10.0};

std::string fmt_vec(const NonnegVector& v) {
  std::string s = "(";
  char buf[40];
  for (std::size_t i = 0; i < v.dim(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", v[i]);
    s += buf;
    if (i + 1 < v.dim()) s += ", ";
  }
  return s + ")";
}

std::string fmt_cmp(const char* rel, std::size_t coord, double lhs, double rhs) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "coordinate %zu: %.17g %s %.17g fails", coord, lhs, rel, rhs);
  return buf;
}

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed), unit_(0.0, 1.0) {}

  double log_uniform() {
    const double t = unit_(rng_);
    return kSampleLo * std::pow(kSampleHi / kSampleLo, t);
  }

  NonnegVector vector(std::size_t dim) {
    std::vector<double> v(dim);
    for (auto& e : v) e = log_uniform();
    return NonnegVector(std::move(v));
  }

  /// y >= x with a mix of strictly-larger and equal coordinates.
  NonnegVector dominating(const NonnegVector& x) {
    std::vector<double> v(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
      const bool grow = unit_(rng_) < 0.75;
      v[i] = grow ? x[i] + log_uniform() : x[i];
    }
    return NonnegVector(std::move(v));
  }

private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_;
};

void record_failure(AxiomCheck& check, AxiomWitness witness) {
  if (check.passed) {
    check.passed = false;
    check.witness = std::move(witness);
  }
}

}  // namespace

long AxiomReport::total_checked() const {
  return monotonicity.checked + scalability.checked + weak_scalability.checked +
         homogeneity.checked + positivity.checked;
}

AxiomReport check_axioms(const InterferenceMapping& mapping, long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("check_axioms: samples must be >= 1");

  AxiomReport report;
  Sampler sampler(seed);
  const std::size_t dim = mapping.dim();

  for (long s = 0; s < samples; ++s) {
    const NonnegVector x = sampler.vector(dim);
    const NonnegVector tx = mapping(x);

    // Positivity.
    report.positivity.checked++;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!(tx[i] > 0.0)) {
        record_failure(report.positivity,
                       {x, std::nullopt, std::nullopt, fmt_cmp(">", i, tx[i], 0.0)});
        break;
      }
    }

    // Monotonicity: x <= y must give T(x) <= T(y).
    {
      const NonnegVector y = sampler.dominating(x);
      const NonnegVector ty = mapping(y);
      report.monotonicity.checked++;
      for (std::size_t i = 0; i < dim; ++i) {
        const double slack = kStrictMargin * (1.0 + std::abs(tx[i]));
        if (tx[i] > ty[i] + slack) {
          record_failure(report.monotonicity,
                         {x, y, std::nullopt,
                          "x = " + fmt_vec(x) + " <= y = " + fmt_vec(y) + " but " +
                              fmt_cmp("<=", i, tx[i], ty[i])});
          break;
        }
      }
    }

    // Scalability (strict and weak) with alpha > 1.
    for (double alpha : kAlphas) {
      const NonnegVector tax = mapping(scaled(x, alpha));
      report.scalability.checked++;
      report.weak_scalability.checked++;
      for (std::size_t i = 0; i < dim; ++i) {
        const double lhs = alpha * tx[i];
        const double margin = kStrictMargin * (1.0 + std::abs(lhs));
        if (!(lhs - tax[i] > margin)) {
          record_failure(report.scalability,
                         {x, std::nullopt, alpha, fmt_cmp(">", i, lhs, tax[i])});
          break;
        }
      }
      for (std::size_t i = 0; i < dim; ++i) {
        const double lhs = alpha * tx[i];
        const double margin = kStrictMargin * (1.0 + std::abs(lhs));
        if (lhs < tax[i] - margin) {
          record_failure(report.weak_scalability,
                         {x, std::nullopt, alpha, fmt_cmp(">=", i, lhs, tax[i])});
          break;
        }
      }
    }

    // Homogeneity with alpha >= 0.
    for (double alpha : kHomAlphas) {
      const NonnegVector tax = mapping(scaled(x, alpha));
      report.homogeneity.checked++;
      for (std::size_t i = 0; i < dim; ++i) {
        const double want = alpha * tx[i];
        const double tol = kStrictMargin * (1.0 + std::abs(want)) * 100.0;
        if (std::abs(tax[i] - want) > tol) {
          record_failure(report.homogeneity,
                         {x, std::nullopt, alpha, fmt_cmp("==", i, tax[i], want)});
          break;
        }
      }
    }
  }

  return report;
}

}  // namespace ifcalc
