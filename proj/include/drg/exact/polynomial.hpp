#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drg::exact {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
  static Polynomial monomial(const Coeff& c, std::size_t deg) {
    std::vector<Coeff> v(deg + 1, Coeff(0));
    v[deg] = c;
    return Polynomial(std::move(v));
  }
  /// x - root
  static Polynomial linear_root(const Coeff& root) { return Polynomial({Coeff(-root), Coeff(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  Coeff coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Coeff(static_cast<long>(i));
    return Polynomial(std::move(r));
  }

  /// Horner evaluation in any ring that accepts Coeff.
  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += T(*it);
    }
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Scales by a positive rational so the result has coprime integer
/// coefficients and a positive leading coefficient.
IntPolynomial primitive_part(const RatPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Quotient and remainder over Q.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b);

RatPolynomial make_monic(const RatPolynomial& p);

/// Monic gcd over Q; gcd(0, 0) = 0.
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Extended Euclid over Q: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  RatPolynomial gcd;
  RatPolynomial s;
  RatPolynomial t;
};
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Exact division over Z; throws if b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial squarefree_part(const IntPolynomial& p);

/// Yun's algorithm: p = c * prod f_i^i, returned as (f_i, i) with deg f_i > 0.
std::vector<std::pair<IntPolynomial, int>> squarefree_factorization(const IntPolynomial& p);

/// Sign of p(x) using integer arithmetic on the homogenized polynomial.
int sign_at(const IntPolynomial& p, const Rational& x);
Rational evaluate(const IntPolynomial& p, const Rational& x);

/// Cauchy-type bound B with every real root strictly inside (-B, B); B is a power of two.
Rational root_bound(const IntPolynomial& p);

std::string to_string(const IntPolynomial& p, const std::string& var = "x");
std::string to_string(const RatPolynomial& p, const std::string& var = "x");

}  // namespace drg::exact
