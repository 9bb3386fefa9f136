#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "drg/exact/polynomial.hpp"

namespace drg::exact {

class TensorAlgebra;
class NumberField;

struct Interval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);
  int variations(const Rational& x) const;
  /// Number of distinct roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Rational of smallest denominator strictly inside (lo, hi); requires lo < hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// A real algebraic number: a squarefree integer polynomial together with an
/// open interval holding exactly one of its roots. Rational values are kept
/// with a degree-1 defining polynomial and the degenerate interval [r, r].
///
/// Copies share the root state, so refining one copy tightens every copy.
/// Refinement is serialized by a per-value mutex.
class AlgebraicReal {
 public:
  AlgebraicReal();
  AlgebraicReal(long value);  // NOLINT(google-explicit-constructor)
  AlgebraicReal(const BigInt& value);  // NOLINT(google-explicit-constructor)
  AlgebraicReal(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// The unique root of `poly` in (lo, hi). Throws std::invalid_argument when
  /// the interval does not isolate exactly one root or an endpoint is a root.
  static AlgebraicReal from_isolating_interval(const IntPolynomial& poly, const Rational& lo,
                                               const Rational& hi);

  IntPolynomial defining_polynomial() const;
  Interval interval() const;
  /// Bisects until the interval is narrower than eps; returns the new interval.
  Interval refine(const Rational& eps) const;
  /// One bisection step (no-op for rationals).
  void refine_once() const;

  std::optional<Rational> as_rational() const;
  /// The rational value if already established, without doing any work.
  std::optional<Rational> as_rational_if_known() const;
  std::optional<BigInt> as_integer() const;
  bool is_rational() const { return as_rational().has_value(); }
  bool is_integer() const { return as_integer().has_value(); }

  int sign() const;
  double to_double() const;
  /// Decimal rendering with `digits` digits after the point.
  std::string to_decimal(int digits = 12) const;
  /// Integer, p/q, or "root of <poly> ~ <decimal>".
  std::string to_string() const;

  bool shares_state_with(const AlgebraicReal& other) const { return state_ == other.state_; }

  friend std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b);
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);

  friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a);
  AlgebraicReal inverse() const;
  AlgebraicReal pow(int exponent) const;

  friend std::ostream& operator<<(std::ostream& os, const AlgebraicReal& a) { return os << a.to_string(); }

 private:
  struct State;
  struct Unchecked {};
  AlgebraicReal(Unchecked, IntPolynomial poly, Rational lo, Rational hi);

  std::shared_ptr<State> state_;
  friend std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p);
  friend class TensorAlgebra;
  friend class NumberField;
};

/// Distinct real roots of p in ascending order. Rational roots come back with a
/// degree-1 defining polynomial. Throws std::invalid_argument for p = 0.
std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p);

/// Free-function forms of the module operations.
Interval refine(const AlgebraicReal& r, const Rational& eps);
std::optional<BigInt> as_integer(const AlgebraicReal& r);

}  // namespace drg::exact
