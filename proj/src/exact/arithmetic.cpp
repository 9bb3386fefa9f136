// Field operations on AlgebraicReal, routed through TensorAlgebra.
#include <stdexcept>

#include "drg/exact/algebraic.hpp"
#include "drg/exact/tensor_algebra.hpp"

namespace drg::exact {

namespace {

enum class Op { Add, Sub, Mul };

AlgebraicReal combine(const AlgebraicReal& a, const AlgebraicReal& b, Op op) {
  auto ra = a.as_rational_if_known();
  auto rb = b.as_rational_if_known();
  if (ra && rb) {
    switch (op) {
      case Op::Add: return AlgebraicReal(Rational(*ra + *rb));
      case Op::Sub: return AlgebraicReal(Rational(*ra - *rb));
      case Op::Mul: return AlgebraicReal(Rational(*ra * *rb));
    }
  }
  if (a.shares_state_with(b)) {
    TensorAlgebra alg({a});
    auto x = alg.generator(0);
    switch (op) {
      case Op::Add: return alg.value(alg.scale(x, 2));
      case Op::Sub: return AlgebraicReal(0L);
      case Op::Mul: return alg.value(alg.mul(x, x));
    }
  }
  TensorAlgebra alg({a, b});
  auto x = alg.generator(0);
  auto y = alg.generator(1);
  switch (op) {
    case Op::Add: return alg.value(alg.add(x, y));
    case Op::Sub: return alg.value(alg.sub(x, y));
    case Op::Mul: return alg.value(alg.mul(x, y));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) { return combine(a, b, Op::Add); }
AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) { return combine(a, b, Op::Sub); }
AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) { return combine(a, b, Op::Mul); }
AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) { return a * b.inverse(); }

AlgebraicReal operator-(const AlgebraicReal& a) {
  if (auto r = a.as_rational_if_known()) return AlgebraicReal(Rational(-*r));
  // p(-x), interval mirrored
  IntPolynomial p = a.defining_polynomial();
  std::vector<BigInt> c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  Interval iv = a.interval();
  return AlgebraicReal(AlgebraicReal::Unchecked{}, primitive_part(IntPolynomial(std::move(c))), -iv.hi, -iv.lo);
}

AlgebraicReal AlgebraicReal::inverse() const {
  if (sign() == 0) throw std::domain_error("inverse of zero");
  if (auto r = as_rational_if_known()) return AlgebraicReal(Rational(1 / *r));
  // sign() != 0 and the root is irrational, so the interval eventually excludes 0
  Interval iv = interval();
  while (iv.lo < 0 && iv.hi > 0) {
    refine_once();
    iv = interval();
  }
  if (iv.lo == iv.hi) return AlgebraicReal(Rational(1 / iv.lo));
  IntPolynomial p = defining_polynomial();
  std::vector<BigInt> c(p.coefficients().rbegin(), p.coefficients().rend());
  IntPolynomial rev = primitive_part(IntPolynomial(std::move(c)));
  // Bisection can leave 0 as an endpoint; push it away from the root.
  Rational lo0 = iv.lo, hi0 = iv.hi;
  while (lo0 == 0 || hi0 == 0) {
    Rational mid = (lo0 + hi0) / 2;
    int sm = sign_at(p, mid);
    if (sm == 0) return AlgebraicReal(Rational(1 / mid));
    if (lo0 == 0) {
      if (sm == sign_at(p, hi0)) hi0 = mid; else lo0 = mid;
    } else {
      if (sm == sign_at(p, lo0)) lo0 = mid; else hi0 = mid;
    }
  }
  iv = {lo0, hi0};
  Rational lo = 1 / iv.hi, hi = 1 / iv.lo;
  return AlgebraicReal(Unchecked{}, rev, lo, hi);
}

AlgebraicReal AlgebraicReal::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  if (exponent == 0) return AlgebraicReal(1L);
  if (auto r = as_rational_if_known()) {
    Rational acc = 1;
    for (int i = 0; i < exponent; ++i) acc *= *r;
    return AlgebraicReal(acc);
  }
  TensorAlgebra alg({*this});
  auto x = alg.generator(0);
  auto acc = alg.constant(1);
  for (int i = 0; i < exponent; ++i) acc = alg.mul(acc, x);
  return alg.value(acc);
}

}  // namespace drg::exact
