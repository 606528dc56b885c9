// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_AXIOMS_HPP
#define IFCALC_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ifcalc/interference_mapping.hpp"

namespace ifcalc {

/// Concrete counterexample found by sampling: the inputs, the scaling
/// factor when one was involved, and a short description of the violated
/// inequality with both sides.
struct AxiomWitness {
  NonnegVector x;
  std::optional<NonnegVector> y;
  std::optional<double> alpha;
  std::string detail;
};

struct AxiomCheck {
  bool passed = true;
  long checked = 0;  // number of sampled assertions
  std::optional<AxiomWitness> witness;
};

/// Per-axiom sampled verification of the interference-function properties.
/// A pass is evidence over the sampled inputs, not a proof.
struct AxiomReport {
  AxiomCheck monotonicity;      // x <= y  =>  T(x) <= T(y)
  AxiomCheck scalability;       // alpha*T(x) >  T(alpha*x), alpha > 1 (strict)
  AxiomCheck weak_scalability;  // alpha*T(x) >= T(alpha*x), alpha >= 1
  AxiomCheck homogeneity;       // T(alpha*x) == alpha*T(x), alpha >= 0
  AxiomCheck positivity;        // T(x) > 0 coordinatewise

  long total_checked() const;

  /// Properties an SI mapping must satisfy.
  bool si_conformant() const {
    return monotonicity.passed && scalability.passed && positivity.passed;
  }
  /// Properties a GI mapping must satisfy.
  bool gi_conformant() const { return monotonicity.passed && homogeneity.passed; }
  /// Properties a WSI mapping must satisfy.
  bool wsi_conformant() const { return monotonicity.passed && weak_scalability.passed; }
};

/// Samples `samples` base points with entries drawn log-uniformly in
/// [1e-3, 1e3] (interference quantities span many orders of magnitude) and
/// checks each axiom on every sample. Scalings use alpha in {1.5, 2, 10};
/// strict inequalities are asserted with a 1e-12 relative margin. Fully
/// deterministic for a fixed seed.
AxiomReport check_axioms(const InterferenceMapping& mapping, long samples, std::uint64_t seed);

}  // namespace ifcalc

#endif  // IFCALC_AXIOMS_HPP
