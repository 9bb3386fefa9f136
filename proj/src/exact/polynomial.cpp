#include "drg/exact/polynomial.hpp"

#include <sstream>

namespace drg::exact {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.get_num() * (den / c.get_den()));
  return primitive_part(IntPolynomial(std::move(out)));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt g = 0;
  for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    out.push_back(q);
  }
  return IntPolynomial(std::move(out));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lb;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coefficients()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    // Keep coefficient size in check by normalizing the running remainder.
    RatPolynomial r = make_monic(remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return primitive_part(gcd(to_rational(a), to_rational(b)));
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    RatPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw std::domain_error("exact_quotient: divisor does not divide");
  std::vector<BigInt> out;
  for (const auto& c : q.coefficients()) {
    if (c.get_den() != 1) throw std::domain_error("exact_quotient: non-integral quotient");
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return primitive_part(p);
  RatPolynomial rp = to_rational(p);
  RatPolynomial g = gcd(rp, rp.derivative());
  return primitive_part(divmod(rp, g).first);
}

std::vector<std::pair<IntPolynomial, int>> squarefree_factorization(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() <= 0) return out;
  RatPolynomial f = make_monic(to_rational(p));
  RatPolynomial a = gcd(f, f.derivative());
  RatPolynomial b = divmod(f, a).first;
  RatPolynomial c = divmod(f.derivative(), a).first;
  RatPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RatPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(primitive_part(g), i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

int sign_at(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) return 0;
  // b^n p(a/b) = sum c_i a^i b^(n-i), Horner in the homogeneous form.
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  const auto& c = p.coefficients();
  BigInt acc = c.back();
  BigInt bpow = b;
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc *= a;
    acc += c[i] * bpow;
    if (i > 0) bpow *= b;
  }
  return sgn(acc);
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += Rational(*it);
  }
  return acc;
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() <= 0) return Rational(1);
  // 1 + max |c_i / c_n|, rounded up to a power of two.
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(Rational(p.coefficients()[i])) / lead;
    if (r > m) m = r;
  }
  Rational bound = m + 1;
  Rational pow2 = 1;
  while (pow2 <= bound) pow2 *= 2;
  return pow2;
}

namespace {

template <class C>
std::string format_poly(const Polynomial<C>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    C c = p.coefficients()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    C mag = neg ? C(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag;
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) { return format_poly(p, var); }
std::string to_string(const RatPolynomial& p, const std::string& var) { return format_poly(p, var); }

}  // namespace drg::exact
