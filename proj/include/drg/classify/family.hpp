#pragma once

#include <array>
#include <optional>

#include "drg/classify/parameters.hpp"

namespace drg::classify {

/// A point (beta, mu) of the diameter-3 family, with the intersection numbers
/// and the eigenvalues in Q-polynomial order. All values live in Q(beta).
struct D3FamilyPoint {
  NumberField field;
  Scalar beta;
  BigInt mu;
  Scalar k;
  Scalar c2;
  Scalar c3;
  Scalar b2;         // k - mu
  Scalar b2_closed;  // (beta^2+beta-1)(beta^2+beta-1-beta mu)
  bool b2_consistent = false;
  std::array<Scalar, 4> theta;

  /// {k, k-1, k-mu; 1, mu, c3} when k and c3 are integers.
  std::optional<IntersectionArray> array() const;
};

/// Throws ParameterViolation when mu < 1.
D3FamilyPoint d3_family(const AlgebraicReal& beta, const BigInt& mu);

}  // namespace drg::classify
