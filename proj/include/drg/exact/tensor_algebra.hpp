#pragma once

#include <cstddef>
#include <vector>

#include "drg/exact/algebraic.hpp"

namespace drg::exact {

/// Q[x_0, ..., x_{m-1}] / (g_0(x_0), ..., g_{m-1}(x_{m-1})) where g_i is the
/// defining polynomial of the i-th generator. Evaluation x_i -> generator i is
/// a ring homomorphism onto the reals, so every element has a definite real
/// value. The value is located exactly as a root of the characteristic
/// polynomial of the multiplication map, picked out by interval enclosure.
class TensorAlgebra {
 public:
  /// Dense coefficients over the monomial basis, generator 0 varying fastest.
  using Element = std::vector<Rational>;

  explicit TensorAlgebra(std::vector<AlgebraicReal> generators);

  std::size_t dimension() const { return dimension_; }
  std::size_t generator_count() const { return generators_.size(); }
  const AlgebraicReal& generator_value(std::size_t i) const { return generators_[i]; }

  Element constant(const Rational& c) const;
  Element generator(std::size_t i) const;
  /// p(x_i), reduced.
  Element embed(std::size_t i, const RatPolynomial& p) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& c) const;

  bool is_identically_zero(const Element& a) const;
  /// Constant term when every other coefficient vanishes.
  std::optional<Rational> as_constant(const Element& a) const;

  /// Rational interval containing the value, from the current generator intervals.
  Interval enclose(const Element& a) const;
  void refine_generators() const;

  /// Characteristic polynomial of multiplication by a (degree = dimension()).
  RatPolynomial characteristic_polynomial(const Element& a) const;

  /// Exact sign of the value.
  int sign(const Element& a) const;
  bool is_zero(const Element& a) const { return sign(a) == 0; }
  /// Exact value as an AlgebraicReal.
  AlgebraicReal value(const Element& a) const;

 private:
  Element multiply_by_generator(const Element& a, std::size_t i) const;
  void reduce_variable(std::vector<Rational>& coeffs, std::vector<std::size_t>& extents,
                       std::size_t var) const;

  std::vector<AlgebraicReal> generators_;
  std::vector<RatPolynomial> moduli_;  // monic
  std::vector<std::size_t> degrees_;
  std::vector<std::size_t> strides_;
  std::size_t dimension_ = 1;
};

/// Characteristic polynomial of a square rational matrix (Hessenberg reduction).
RatPolynomial characteristic_polynomial(std::vector<std::vector<Rational>> matrix);

}  // namespace drg::exact
