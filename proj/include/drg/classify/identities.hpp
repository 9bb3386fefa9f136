#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "drg/classify/parameters.hpp"

namespace drg::classify {

struct IdentityResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

struct IdentityOptions {
  std::size_t trials = 500;
  std::uint64_t seed = 42;
  /// Largest D for the general identities (D ranges over 3..dmax).
  int dmax = 8;
  /// Largest D for the D >= 4 impossibility check.
  int d4max = 10;
  /// Replacement for the eta formula; used to check that the suite detects a
  /// corrupted formula.
  std::function<Scalar(const Scalar& q, int D)> eta = eta_formula;
};

/// Names: eq_exp, theta_d, beta_q, curtin_closed_form, chebyshev, b2_closed_form,
/// d4_impossibility.
std::vector<IdentityResult> run_identities(const IdentityOptions& opts);

/// A rational q with q^2 > 1, drawn deterministically from the generator state.
Rational sample_q(std::uint64_t& state);

}  // namespace drg::classify
