#pragma once

#include <vector>

#include "drg/spectral/spectrum.hpp"

namespace drg::spectral {

/// A Q-polynomial ordering of the eigenvalues.
struct QPolyOrdering {
  /// Indices into SpectralData::eigenvalues(); permutation[0] == 0.
  std::vector<int> permutation;
  /// sigma_l = Q_{l, permutation[1]}.
  std::vector<AlgebraicReal> sigma;
  /// witness[j] has degree j and witness[j](sigma_l) = Q_{l, permutation[j]};
  /// coefficients lowest degree first.
  std::vector<std::vector<AlgebraicReal>> witness;
  /// Set when the multiplicities are not all positive integers.
  bool formal = false;

  std::vector<AlgebraicReal> ordered_eigenvalues(const SpectralData& s) const;
};

/// Which orderings pass, by each criterion, in lexicographic permutation order.
struct QPolyCheck {
  std::vector<std::vector<int>> by_definition;
  std::vector<std::vector<int>> by_krein;
};

/// Orderings passing each criterion, without the agreement check. Equivalent
/// to testing all D! orderings; the search is pruned by fixing pi(1) first.
QPolyCheck q_polynomial_check(const SpectralData& s);

/// Definition check: under the ordering, the interpolant through
/// (sigma_l, Q_{l,pi(j)}) has degree exactly j.
bool passes_definition_check(const SpectralData& s, const std::vector<int>& permutation);
/// Krein criterion: q^1_ij = 0 for |i-j| > 1 and q^1_ij != 0 for |i-j| = 1.
bool passes_krein_check(const SpectralData& s, const std::vector<int>& permutation);

/// Every Q-polynomial ordering. Throws std::logic_error if the two criteria
/// disagree on any ordering.
std::vector<QPolyOrdering> q_polynomial_orderings(const SpectralData& s);
std::vector<QPolyOrdering> q_polynomial_orderings(const IntersectionArray& arr);

}  // namespace drg::spectral
