#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/classify/sieve.hpp"
#include "drg/graphs/graph.hpp"
#include "drg/spectral/qpoly.hpp"

namespace drg::classify {

enum class Verdict {
  Cycle,
  FoldedCube,
  OddGraph,
  D3Family,
  NotQPolynomial,
  NotAlmostBipartite,
  /// Q-polynomial, almost bipartite, D >= 3, yet in none of the four cases.
  /// The classification theorem says this cannot happen.
  ContradictionAlarm,
  /// The theorem concerns D >= 3 only.
  DiameterBelowThree,
};

std::string verdict_name(Verdict v);

/// beta and mu read off one Q-polynomial ordering.
struct BetaMu {
  std::vector<int> permutation;
  std::optional<AlgebraicReal> beta;  // absent when theta1 = theta2
  BigInt mu;
  /// k, c2, c3 agree with the diameter-3 family formulas at (beta, mu).
  bool family_equations_hold = false;
};

struct Classification {
  Verdict verdict = Verdict::NotAlmostBipartite;
  int D = 0;
  bool almost_bipartite = false;
  std::vector<spectral::QPolyOrdering> orderings;
  /// False when a family match was decided without enumerating orderings
  /// (eigenvalue fields of degree above kOrderingFieldDegreeCap).
  bool orderings_computed = false;
  std::vector<BetaMu> beta_mu;
  std::optional<graphs::Family> matched_family;
  /// For D3Family: the first ordering whose (beta, mu) satisfies the equations.
  std::optional<BetaMu> family_point;
  /// Sieve filter verdicts for D3Family with integral beta.
  std::vector<FilterResult> flags;

  /// "OddGraph(3)", "D3Family(-3,1)", "NotQPolynomial", ...
  std::string to_string() const;
};

/// Largest eigenvalue field degree for which family matches also enumerate
/// Q-polynomial orderings.
inline constexpr int kOrderingFieldDegreeCap = 4;

Classification classify(const IntersectionArray& arr);
Classification classify(const spectral::SpectralData& s);

/// Intersection array of the named family on 2D+1 points, by BFS on the
/// constructed graph (closed form above 2^20 vertices).
IntersectionArray family_array(graphs::Family f, int D);
/// Vertex count of the family member on 2D+1 points.
BigInt family_order(graphs::Family f, int D);

}  // namespace drg::classify
