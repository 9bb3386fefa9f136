#include "drg/exact/number_field.hpp"

#include <mutex>
#include <stdexcept>

#include "drg/exact/tensor_algebra.hpp"

namespace drg::exact {

struct NumberField::Core {
  mutable std::mutex mu;
  RatPolynomial modulus;  // monic, squarefree, vanishes at theta
  AlgebraicReal theta;

  // Caller holds mu. theta is a root of exactly one of factor and modulus/factor.
  void split(const RatPolynomial& factor) {
    if (factor.degree() < 1 || factor.degree() >= modulus.degree()) return;
    RatPolynomial keep = factor;
    if (!vanishes_at_theta(factor)) keep = divmod(modulus, factor).first;
    modulus = make_monic(keep);
    Interval iv = theta.interval();
    IntPolynomial ip = primitive_part(modulus);
    if (iv.lo == iv.hi)
      theta = AlgebraicReal(iv.lo);
    else
      theta = AlgebraicReal(AlgebraicReal::Unchecked{}, ip, iv.lo, iv.hi);
  }

  // factor divides the squarefree modulus, so it has at most one root in the
  // isolating interval of theta, and that root is simple.
  bool vanishes_at_theta(const RatPolynomial& factor) const {
    Interval iv = theta.interval();
    IntPolynomial f = primitive_part(factor);
    if (iv.lo == iv.hi) return sign_at(f, iv.lo) == 0;
    return sign_at(f, iv.lo) != sign_at(f, iv.hi);
  }
};

NumberField::NumberField(const AlgebraicReal& theta) : core_(std::make_shared<Core>()) {
  core_->theta = theta;
  core_->modulus = make_monic(to_rational(theta.defining_polynomial()));
}

NumberField::Element NumberField::constant(const Rational& c) const {
  return Element(core_, RatPolynomial::constant(c));
}

NumberField::Element NumberField::generator() const {
  return from_polynomial(RatPolynomial::monomial(1, 1));
}

NumberField::Element NumberField::from_polynomial(const RatPolynomial& p) const { return Element(core_, p); }

AlgebraicReal NumberField::theta() const {
  std::lock_guard lock(core_->mu);
  return core_->theta;
}

RatPolynomial NumberField::modulus() const {
  std::lock_guard lock(core_->mu);
  return core_->modulus;
}

std::size_t NumberField::degree() const {
  std::lock_guard lock(core_->mu);
  return static_cast<std::size_t>(core_->modulus.degree());
}

// ---------------------------------------------------------------------------

NumberField::Element::Element(std::shared_ptr<Core> core, RatPolynomial p) : core_(std::move(core)) {
  std::lock_guard lock(core_->mu);
  poly_ = remainder(p, core_->modulus);
}

RatPolynomial NumberField::Element::polynomial() const {
  std::lock_guard lock(core_->mu);
  return remainder(poly_, core_->modulus);
}

namespace {

void require_same_field(const void* a, const void* b) {
  if (a != b) throw std::invalid_argument("number field elements from different fields");
}

}  // namespace

NumberField::Element operator+(const NumberField::Element& a, const NumberField::Element& b) {
  require_same_field(a.core_.get(), b.core_.get());
  return NumberField::Element(a.core_, a.poly_ + b.poly_);
}

NumberField::Element operator-(const NumberField::Element& a, const NumberField::Element& b) {
  require_same_field(a.core_.get(), b.core_.get());
  return NumberField::Element(a.core_, a.poly_ - b.poly_);
}

NumberField::Element operator*(const NumberField::Element& a, const NumberField::Element& b) {
  require_same_field(a.core_.get(), b.core_.get());
  return NumberField::Element(a.core_, a.poly_ * b.poly_);
}

NumberField::Element operator/(const NumberField::Element& a, const NumberField::Element& b) {
  return a * b.inverse();
}

NumberField::Element operator-(const NumberField::Element& a) { return NumberField::Element(a.core_, -a.poly_); }

NumberField::Element operator+(const NumberField::Element& a, const Rational& b) {
  return NumberField::Element(a.core_, a.poly_ + RatPolynomial::constant(b));
}
NumberField::Element operator-(const NumberField::Element& a, const Rational& b) {
  return NumberField::Element(a.core_, a.poly_ - RatPolynomial::constant(b));
}
NumberField::Element operator*(const NumberField::Element& a, const Rational& b) {
  return NumberField::Element(a.core_, a.poly_ * b);
}
NumberField::Element operator/(const NumberField::Element& a, const Rational& b) {
  if (b == 0) throw std::domain_error("division by zero");
  return NumberField::Element(a.core_, a.poly_ * Rational(1 / b));
}

bool NumberField::Element::is_zero() const {
  std::lock_guard lock(core_->mu);
  RatPolynomial r = remainder(poly_, core_->modulus);
  if (r.is_zero()) return true;
  if (r.degree() == 0) return false;
  RatPolynomial h = gcd(core_->modulus, r);
  if (h.degree() == 0) return false;
  bool zero = core_->vanishes_at_theta(h);
  core_->split(h);
  return zero;
}

std::optional<Rational> NumberField::Element::as_rational() const {
  if (is_zero()) return Rational(0);
  RatPolynomial r = polynomial();
  if (r.degree() == 0) return r.coefficients()[0];
  // Still possibly rational if the modulus is reducible; settle it exactly.
  return value().as_rational();
}

int NumberField::Element::sign() const {
  if (is_zero()) return 0;
  RatPolynomial r = polynomial();
  if (r.degree() == 0) return sgn(r.coefficients()[0]);
  TensorAlgebra alg({core_->theta});
  return alg.sign(alg.embed(0, r));
}

AlgebraicReal NumberField::Element::value() const {
  RatPolynomial r = polynomial();
  if (r.degree() <= 0) return AlgebraicReal(r.is_zero() ? Rational(0) : r.coefficients()[0]);
  AlgebraicReal theta;
  {
    std::lock_guard lock(core_->mu);
    theta = core_->theta;
  }
  TensorAlgebra alg({theta});
  return alg.value(alg.embed(0, r));
}

NumberField::Element NumberField::Element::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in number field");
  // is_zero() has split off every common factor, so r is a unit modulo g.
  std::lock_guard lock(core_->mu);
  RatPolynomial r = remainder(poly_, core_->modulus);
  ExtendedGcd eg = extended_gcd(r, core_->modulus);
  if (eg.gcd.degree() != 0) throw std::logic_error("number field inverse: non-unit after split");
  Element out;
  out.core_ = core_;
  out.poly_ = remainder(eg.s, core_->modulus);
  return out;
}

NumberField::Element NumberField::Element::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Element base = *this;
  Element acc(core_, RatPolynomial::constant(1));
  while (exponent > 0) {
    if (exponent & 1) acc = acc * base;
    base = base * base;
    exponent >>= 1;
  }
  return acc;
}

}  // namespace drg::exact
