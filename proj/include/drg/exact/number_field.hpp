#pragma once

#include <memory>
#include <optional>

#include "drg/exact/algebraic.hpp"

namespace drg::exact {

/// The field Q(theta) for a real algebraic theta, realized as Q[x]/(g) with g
/// the defining polynomial of theta. g need not be irreducible: whenever an
/// operation meets a zero divisor, g is replaced by the factor that still
/// vanishes at theta, so the modulus only ever shrinks toward the minimal
/// polynomial. The field state is shared by all of its elements.
class NumberField {
 public:
  class Element;

  explicit NumberField(const AlgebraicReal& theta);

  Element constant(const Rational& c) const;
  Element generator() const;
  Element from_polynomial(const RatPolynomial& p) const;

  /// theta, carrying the current (possibly reduced) defining polynomial.
  AlgebraicReal theta() const;
  RatPolynomial modulus() const;
  std::size_t degree() const;

  bool operator==(const NumberField& o) const { return core_ == o.core_; }

 private:
  struct Core;
  explicit NumberField(std::shared_ptr<Core> core) : core_(std::move(core)) {}
  std::shared_ptr<Core> core_;
  friend class Element;
};

class NumberField::Element {
 public:
  Element() = default;

  NumberField field() const { return NumberField(core_); }
  /// Representative polynomial in theta (reduced modulo the current modulus).
  RatPolynomial polynomial() const;

  bool is_zero() const;
  int sign() const;
  std::optional<Rational> as_rational() const;
  AlgebraicReal value() const;
  Element inverse() const;
  Element pow(int exponent) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend Element operator+(const Element& a, const Rational& b);
  friend Element operator-(const Element& a, const Rational& b);
  friend Element operator*(const Element& a, const Rational& b);
  friend Element operator/(const Element& a, const Rational& b);
  friend Element operator+(const Rational& a, const Element& b) { return b + a; }
  friend Element operator-(const Rational& a, const Element& b) { return -(b - a); }
  friend Element operator*(const Rational& a, const Element& b) { return b * a; }
  friend Element operator/(const Rational& a, const Element& b) { return b.inverse() * a; }
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  /// Exact equality of values.
  friend bool operator==(const Element& a, const Element& b) { return (a - b).is_zero(); }

 private:
  Element(std::shared_ptr<Core> core, RatPolynomial p);
  std::shared_ptr<Core> core_;
  RatPolynomial poly_;
  friend class NumberField;
};

}  // namespace drg::exact
