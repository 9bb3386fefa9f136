#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drg/exact/algebraic.hpp"
#include "drg/exact/number_field.hpp"
#include "drg/spectral/intersection_array.hpp"

namespace drg::classify {

using exact::AlgebraicReal;
using exact::BigInt;
using exact::NumberField;
using exact::Rational;
using spectral::IntersectionArray;

/// Exact scalar in a field Q(q) (or Q(beta)); rational values live in a
/// degree-1 field.
using Scalar = NumberField::Element;

/// A parameter restriction is violated; the message names the constraint and
/// the offending index.
class ParameterViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (q, s, D). Both q and s are elements of Q(q).
struct QSParameters {
  NumberField field;
  Scalar q;
  Scalar s;
  int D = 3;

  static QSParameters make(const AlgebraicReal& q, const Rational& s, int D);
  /// s must lie in the field of q.
  static QSParameters make(const Scalar& q, const Scalar& s, int D);

  /// Violated restrictions, e.g. "q^i != 1 fails at i=2".
  std::vector<std::string> violations() const;
  /// Throws ParameterViolation on the first violation.
  void check() const;

  /// h = (q - q^{2D}) / ((q - 1)(1 + s q^{2D+1})).
  Scalar h() const;
};

struct QSValues {
  Scalar h;
  Scalar k;
  std::vector<Scalar> c;      // c[0] = 0, c[1..D]
  std::vector<Scalar> theta;  // theta[0..D]
  /// theta_D from (q^{1-D} - q^D)/(q - 1), for comparison with theta[D].
  Scalar theta_D_closed;
};

/// k, c_i, theta_i from the parametrization. Checks the restrictions first.
QSValues qs_evaluate(const QSParameters& p);

/// (theta0 - theta3)/(theta1 - theta2) - 1. Throws std::domain_error if theta1 == theta2.
AlgebraicReal beta_of(const AlgebraicReal& t0, const AlgebraicReal& t1, const AlgebraicReal& t2,
                      const AlgebraicReal& t3);
Scalar beta_of(const Scalar& t0, const Scalar& t1, const Scalar& t2, const Scalar& t3);

/// T_0 = 2, T_1 = x, T_{i+1} = x T_i - T_{i-1}.
exact::IntPolynomial chebyshev_T(int i);

/// The root of x^2 - beta x + 1 with |q| > 1.
AlgebraicReal q_from_beta(const AlgebraicReal& beta);

/// Solves k = h(1 + s q) for s (linear in s once h is substituted).
Scalar s_from_valency(const Scalar& k, const Scalar& q, int D);
/// s from the valency, then every c_i is compared. Throws ParameterViolation
/// when the array is not in the parametrized family for this q.
Scalar s_from_array(const IntersectionArray& arr, const Scalar& q);

struct EtaReport {
  int D = 3;
  Scalar beta;
  Scalar eta;
  Scalar xi;         // eta + beta^2 - 1
  Scalar xi_closed;  // (q^{2D} - q^9)/(q^{2D+2} - q^7)
  bool identity_holds = false;
  /// D = 3: eta = -beta(beta+1); D = 4: xi = -1/(beta+1); D >= 5: xi as a
  /// ratio of geometric sums in q.
  Scalar closed_form;
  bool closed_form_holds = false;
  bool beta_integral = false;
  bool eta_integral = false;
  /// (c2-1) theta_i^2 != (k-c2)(k-2) for i = 1..D; filled by eta_report.
  std::vector<bool> curtin_ok;
  /// s^2 q^{2D+3} != 1; filled by eta_report.
  std::optional<bool> s2q_ok;
};

/// eta := -(q^2+1)(q^{2D}-q^3)/(q^{2D}-q^5).
Scalar eta_formula(const Scalar& q, int D);
EtaReport eta_of(const Scalar& q, int D);
EtaReport eta_report(const QSParameters& p);

/// (c2 - 1) theta^2 - (k - c2)(k - 2).
AlgebraicReal curtin_gap(const IntersectionArray& arr, const AlgebraicReal& theta);
Scalar curtin_gap(const Scalar& k, const Scalar& c2, const Scalar& theta);
Scalar curtin_gap_closed_form(const QSParameters& p);

struct ModuleMultiplicity {
  Scalar value;
  /// Numerator factors that vanish (the value is then 0).
  std::vector<std::string> zero_factors;
  bool nonzero() const { return zero_factors.empty(); }
};
/// Throws ParameterViolation naming a vanishing denominator factor.
ModuleMultiplicity module_multiplicity(const QSParameters& p);

struct D4Witness {
  Scalar xi;
  Scalar sign_value;  // (q^4 - 1)(q^14 - q^{4D})
  bool sign_negative = false;
  bool xi_squared_below_one = false;
};
/// Requires D >= 4 and q^2 > 1.
D4Witness d4_contradiction_witness(const Scalar& q, int D);

/// Value as integer, p/q, or "root of <poly> ~ <decimal>".
std::string format_scalar(const Scalar& x);
std::string format_value(const AlgebraicReal& x);

}  // namespace drg::classify
