// Copyright (c) ifcalc contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef IFCALC_ERRORS_HPP
#define IFCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ifcalc {

/// Thrown when an iterative procedure fails to reach its tolerance within
/// the configured step budget, or detects that its convergence assumptions
/// are violated. The message carries the final iterates and gap.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ifcalc

#endif  // IFCALC_ERRORS_HPP
