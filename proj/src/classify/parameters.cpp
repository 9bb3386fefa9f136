#include "drg/classify/parameters.hpp"

namespace drg::classify {

using exact::IntPolynomial;

namespace {

bool is_integer(const Scalar& x) {
  auto r = x.as_rational();
  return r && r->get_den() == 1;
}

Scalar power(const Scalar& x, int e) { return x.pow(e); }

// (q^{2D} - q^9) / (q^{2D+2} - q^7)
Scalar xi_closed_form(const Scalar& q, int D) {
  return (power(q, 2 * D) - power(q, 9)) / (power(q, 2 * D + 2) - power(q, 7));
}

}  // namespace

QSParameters QSParameters::make(const AlgebraicReal& q, const Rational& s, int D) {
  NumberField f(q);
  return QSParameters{f, f.generator(), f.constant(s), D};
}

QSParameters QSParameters::make(const Scalar& q, const Scalar& s, int D) {
  if (!(q.field() == s.field())) throw std::invalid_argument("q and s must lie in the same field");
  return QSParameters{q.field(), q, s, D};
}

std::vector<std::string> QSParameters::violations() const {
  std::vector<std::string> out;
  if (D < 3) out.push_back("D >= 3 fails: D=" + std::to_string(D));
  if (q.is_zero()) {
    out.push_back("q != 0 fails");
    return out;
  }
  Scalar qi = q;
  for (int i = 1; i <= 2 * D + 1; ++i, qi *= q) {
    if (i <= 2 * D && (qi - Rational(1)).is_zero()) out.push_back("q^i != 1 fails at i=" + std::to_string(i));
    if (i >= 2 && i <= 2 * D && (s * qi - Rational(1)).is_zero())
      out.push_back("s q^i != 1 fails at i=" + std::to_string(i));
    if ((s * qi + Rational(1)).is_zero()) out.push_back("s q^i != -1 fails at i=" + std::to_string(i));
  }
  return out;
}

void QSParameters::check() const {
  auto v = violations();
  if (!v.empty()) throw ParameterViolation(v.front());
}

Scalar QSParameters::h() const {
  return (q - power(q, 2 * D)) / ((q - Rational(1)) * (s * power(q, 2 * D + 1) + Rational(1)));
}

QSValues qs_evaluate(const QSParameters& p) {
  p.check();
  const Scalar& q = p.q;
  const Scalar& s = p.s;
  const int D = p.D;
  QSValues v;
  v.h = p.h();
  v.k = v.h * (s * q + Rational(1));
  v.c.push_back(p.field.constant(0));
  for (int i = 1; i <= D; ++i) {
    Scalar qi = power(q, i);
    v.c.push_back(v.h * (Rational(1) - qi) * (s * power(q, 2 * D + 2 - i) + Rational(1)) /
                  (qi * (power(q, 2 * D - 2 * i + 1) - Rational(1))));
  }
  for (int i = 0; i <= D; ++i) v.theta.push_back(v.h * power(q, -i) * (s * power(q, 2 * i + 1) + Rational(1)));
  v.theta_D_closed = (power(q, 1 - D) - power(q, D)) / (q - Rational(1));
  return v;
}

AlgebraicReal beta_of(const AlgebraicReal& t0, const AlgebraicReal& t1, const AlgebraicReal& t2,
                      const AlgebraicReal& t3) {
  if (t1 == t2) throw std::domain_error("beta undefined: theta1 = theta2");
  return (t0 - t3) / (t1 - t2) - AlgebraicReal(1);
}

Scalar beta_of(const Scalar& t0, const Scalar& t1, const Scalar& t2, const Scalar& t3) {
  if ((t1 - t2).is_zero()) throw std::domain_error("beta undefined: theta1 = theta2");
  return (t0 - t3) / (t1 - t2) - Rational(1);
}

IntPolynomial chebyshev_T(int i) {
  if (i < 0) throw std::invalid_argument("chebyshev_T: negative index");
  const IntPolynomial x = IntPolynomial::monomial(1, 1);
  IntPolynomial prev = IntPolynomial::constant(2);
  if (i == 0) return prev;
  IntPolynomial cur = x;
  for (int j = 1; j < i; ++j) {
    IntPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

AlgebraicReal q_from_beta(const AlgebraicReal& beta) {
  const AlgebraicReal two(2);
  if (beta == two || beta == -two) throw ParameterViolation("q^i != 1 fails at i=2: beta = +-2 forces q = +-1");
  if (beta < two && beta > -two) throw ParameterViolation("q is not real: |beta| < 2");
  IntPolynomial poly;
  if (auto r = beta.as_rational()) {
    // den x^2 - num x + den
    poly = IntPolynomial({BigInt(r->get_den()), BigInt(-r->get_num()), BigInt(r->get_den())});
  } else {
    // x^d g(x + 1/x) = sum_j g_j x^{d-j} (x^2 + 1)^j
    IntPolynomial g = beta.defining_polynomial();
    const int d = g.degree();
    const IntPolynomial x2p1({BigInt(1), BigInt(0), BigInt(1)});
    IntPolynomial pw = IntPolynomial::constant(1);
    for (int j = 0; j <= d; ++j) {
      poly = poly + pw * IntPolynomial::monomial(g.coefficient(j), d - j);
      pw = pw * x2p1;
    }
    poly = exact::squarefree_part(poly);
  }
  for (const auto& r : exact::isolate_real_roots(poly)) {
    if (!(r > AlgebraicReal(1) || r < AlgebraicReal(-1))) continue;
    if (r + r.inverse() == beta) return r;
  }
  throw std::logic_error("q_from_beta: no root found for beta = " + beta.to_string());
}

Scalar s_from_valency(const Scalar& k, const Scalar& q, int D) {
  // k (q-1)(1 + s q^{2D+1}) = (q - q^{2D})(1 + s q)
  const Scalar a = q - power(q, 2 * D);
  const Scalar coef = k * (q - Rational(1)) * power(q, 2 * D + 1) - a * q;
  if (coef.is_zero()) throw ParameterViolation("degenerate linear equation for s");
  return (a - k * (q - Rational(1))) / coef;
}

Scalar s_from_array(const IntersectionArray& arr, const Scalar& q) {
  const int D = arr.diameter();
  NumberField f = q.field();
  Scalar s = s_from_valency(f.constant(Rational(arr.valency())), q, D);
  QSValues v = qs_evaluate(QSParameters::make(q, s, D));
  for (int i = 1; i <= D; ++i)
    if (!(v.c[static_cast<std::size_t>(i)] - Rational(arr.c(i))).is_zero())
      throw ParameterViolation("array not in parametrized family for this q: c_" + std::to_string(i) + " = " +
                               arr.c(i).get_str() + " but the parametrization gives " +
                               format_scalar(v.c[static_cast<std::size_t>(i)]));
  return s;
}

Scalar eta_formula(const Scalar& q, int D) {
  return -((q * q + Rational(1)) * (power(q, 2 * D) - power(q, 3)) / (power(q, 2 * D) - power(q, 5)));
}

EtaReport eta_of(const Scalar& q, int D) {
  if (D < 3) throw ParameterViolation("D >= 3 fails: D=" + std::to_string(D));
  if (q.is_zero() || (power(q, 2 * D) - power(q, 5)).is_zero() || (power(q, 2 * D + 2) - power(q, 7)).is_zero())
    throw ParameterViolation("eta undefined for this q");
  EtaReport r;
  r.D = D;
  r.beta = q + q.inverse();
  r.eta = eta_formula(q, D);
  r.xi = r.eta + r.beta * r.beta - Rational(1);
  r.xi_closed = xi_closed_form(q, D);
  r.identity_holds = (r.xi - r.xi_closed).is_zero();
  if (D == 3) {
    r.closed_form = -(r.beta * (r.beta + Rational(1)));
    r.closed_form_holds = (r.closed_form - r.eta).is_zero();
  } else if (D == 4) {
    r.closed_form = -((r.beta + Rational(1)).inverse());
    r.closed_form_holds = (r.closed_form - r.xi).is_zero();
  } else {
    Scalar num = q.field().constant(0), den = q.field().constant(0);
    for (int i = 5 - D; i <= D - 5; ++i) num += power(q, i);
    for (int i = 3 - D; i <= D - 3; ++i) den += power(q, i);
    r.closed_form = num / den;
    r.closed_form_holds = (r.closed_form - r.xi).is_zero();
  }
  r.beta_integral = is_integer(r.beta);
  r.eta_integral = is_integer(r.eta);
  return r;
}

EtaReport eta_report(const QSParameters& p) {
  EtaReport r = eta_of(p.q, p.D);
  QSValues v = qs_evaluate(p);
  for (int i = 1; i <= p.D; ++i)
    r.curtin_ok.push_back(!curtin_gap(v.k, v.c[2], v.theta[static_cast<std::size_t>(i)]).is_zero());
  r.s2q_ok = !(p.s * p.s * power(p.q, 2 * p.D + 3) - Rational(1)).is_zero();
  return r;
}

AlgebraicReal curtin_gap(const IntersectionArray& arr, const AlgebraicReal& theta) {
  if (arr.diameter() < 2) throw std::domain_error("curtin_gap needs D >= 2");
  const AlgebraicReal k(arr.valency()), c2(arr.c(2));
  return (c2 - AlgebraicReal(1)) * theta * theta - (k - c2) * (k - AlgebraicReal(2));
}

Scalar curtin_gap(const Scalar& k, const Scalar& c2, const Scalar& theta) {
  return (c2 - Rational(1)) * theta * theta - (k - c2) * (k - Rational(2));
}

Scalar curtin_gap_closed_form(const QSParameters& p) {
  p.check();
  const Scalar& q = p.q;
  const Scalar& s = p.s;
  const int D = p.D;
  const Scalar q2d = power(q, 2 * D);
  const Scalar num = (q2d - Rational(1)) * (q2d - q * q) * (q2d - q) * (q2d - q) *
                     (s * s * power(q, 2 * D + 3) - Rational(1));
  const Scalar t = s * power(q, 2 * D + 1) + Rational(1);
  const Scalar den = q2d * (q - Rational(1)) * (q - Rational(1)) * (q2d - power(q, 3)) * t * t;
  return num / den;
}

ModuleMultiplicity module_multiplicity(const QSParameters& p) {
  const Scalar& q = p.q;
  const Scalar& s = p.s;
  const int D = p.D;
  const Scalar q2d = power(q, 2 * D);
  struct Factor {
    std::string name;
    Scalar value;
  };
  const std::vector<Factor> num{
      {"q^{2D}-1", q2d - Rational(1)},
      {"q^{2D}-q^2", q2d - q * q},
      {"1+sq (s q^i != -1 at i=1)", s * q + Rational(1)},
      {"1+sq^4 (s q^i != -1 at i=4)", s * power(q, 4) + Rational(1)},
      {"s^2q^{2D+3}-1", s * s * power(q, 2 * D + 3) - Rational(1)},
  };
  const std::vector<Factor> den{
      {"q", q},
      {"q+1", q + Rational(1)},
      {"(q-1)^2", (q - Rational(1)) * (q - Rational(1))},
      {"s^2q^{2D+4}-1", s * s * power(q, 2 * D + 4) - Rational(1)},
      {"1+sq^{2D}", s * q2d + Rational(1)},
      {"1+sq^{2D+1}", s * power(q, 2 * D + 1) + Rational(1)},
  };
  Scalar d = p.field.constant(1);
  for (const auto& f : den) {
    if (f.value.is_zero()) throw ParameterViolation("module multiplicity: denominator factor " + f.name + " vanishes");
    d *= f.value;
  }
  ModuleMultiplicity out;
  Scalar n = p.field.constant(1);
  for (const auto& f : num) {
    if (f.value.is_zero()) out.zero_factors.push_back(f.name);
    n *= f.value;
  }
  out.value = n / d;
  return out;
}

D4Witness d4_contradiction_witness(const Scalar& q, int D) {
  if (D < 4) throw ParameterViolation("d4 witness needs D >= 4, got D=" + std::to_string(D));
  if ((q * q - Rational(1)).sign() <= 0) throw ParameterViolation("d4 witness needs q^2 > 1");
  D4Witness w;
  w.xi = xi_closed_form(q, D);
  w.sign_value = (power(q, 4) - Rational(1)) * (power(q, 14) - power(q, 4 * D));
  w.sign_negative = w.sign_value.sign() < 0;
  w.xi_squared_below_one = (w.xi * w.xi - Rational(1)).sign() < 0;
  return w;
}

std::string format_scalar(const Scalar& x) {
  if (auto r = x.as_rational()) return r->get_str();
  return x.value().to_string();
}

std::string format_value(const AlgebraicReal& x) { return x.to_string(); }

}  // namespace drg::classify
