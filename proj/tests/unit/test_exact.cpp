#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "drg/exact/algebraic.hpp"
#include "drg/exact/number_field.hpp"
#include "drg/exact/polynomial.hpp"
#include "drg/exact/tensor_algebra.hpp"

using namespace drg::exact;

namespace {

long long euclid(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

// Plain double evaluation, independent of the library's rational paths.
double eval_double(const IntPolynomial& p, double x) {
  double r = 0;
  for (int i = p.degree(); i >= 0; --i) r = r * x + p.coefficients()[static_cast<std::size_t>(i)].get_d();
  return r;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rational sums agree with a brute-force gcd oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
  for (int t = 0; t < 10000; ++t) {
    long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x(BigInt(std::to_string(a)), BigInt(std::to_string(b)));
    Rational y(BigInt(std::to_string(c)), BigInt(std::to_string(d)));
    x.canonicalize();
    y.canonicalize();
    Rational s = x + y;
    __int128 n = static_cast<__int128>(a) * d + static_cast<__int128>(c) * b;
    __int128 m = static_cast<__int128>(b) * d;
    // Reduce through 64-bit gcds: both fit since |n| < 2^61 and m < 2^40.
    long long nn = static_cast<long long>(n), mm = static_cast<long long>(m);
    long long g = euclid(nn, mm);
    if (g == 0) g = 1;
    nn /= g;
    mm /= g;
    REQUIRE(s.get_num() == BigInt(std::to_string(nn)));
    REQUIRE(s.get_den() == BigInt(std::to_string(mm)));
  }
}

TEST_CASE("isolate_real_roots on small examples") {
  auto r = isolate_real_roots(poly({-3, 1}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].as_integer() == BigInt(3));

  auto s = isolate_real_roots(poly({-2, 0, 1}));
  REQUIRE(s.size() == 2);
  CHECK(s[0].interval().hi <= 0);
  CHECK(s[1].interval().lo >= 0);
  CHECK_FALSE(s[0].is_rational());
  CHECK(s[0] == -s[1]);

  auto c = isolate_real_roots(poly({-1, -2, 1, 1}));
  REQUIRE(c.size() == 3);
  std::vector<double> expect{2 * std::cos(6 * std::numbers::pi / 7), 2 * std::cos(4 * std::numbers::pi / 7),
                             2 * std::cos(2 * std::numbers::pi / 7)};
  for (int i = 0; i < 3; ++i) CHECK(std::abs(c[static_cast<std::size_t>(i)].to_double() - expect[static_cast<std::size_t>(i)]) < 1e-12);

  CHECK(isolate_real_roots(poly({5})).empty());
  CHECK_THROWS(isolate_real_roots(IntPolynomial()));
}

TEST_CASE("refine produces nested intervals") {
  AlgebraicReal sqrt2 = isolate_real_roots(poly({-2, 0, 1}))[1];
  Interval a = refine(sqrt2, Rational(1, 100));
  CHECK(a.width() < Rational(1, 100));
  CHECK(a.lo >= Rational(140, 100));
  CHECK(a.hi <= Rational(143, 100));
  Interval b = refine(sqrt2, Rational(1, 100000));
  CHECK(b.lo >= a.lo);
  CHECK(b.hi <= a.hi);
  CHECK(b.lo * b.lo < 2);
  CHECK(b.hi * b.hi > 2);

  Interval three = refine(AlgebraicReal(3), Rational(1, 10));
  CHECK(three.lo == 3);
  CHECK(three.hi == 3);

  AlgebraicReal w = isolate_real_roots(poly({-1, -2, 1, 1}))[2];
  Interval i = refine(w, Rational(1, 1000000));
  CHECK(i.lo.get_d() <= 2 * std::cos(2 * std::numbers::pi / 7));
  CHECK(i.hi.get_d() >= 2 * std::cos(2 * std::numbers::pi / 7));
}

TEST_CASE("as_integer never guesses") {
  CHECK(as_integer(AlgebraicReal(3)) == BigInt(3));
  CHECK_FALSE(as_integer(isolate_real_roots(poly({-2, 0, 1}))[1]));
  auto q = isolate_real_roots(poly({1, 3, 1}));
  REQUIRE(q.size() == 2);
  CHECK(q[0].interval().lo >= Rational(-27, 10));
  CHECK(q[0].interval().hi <= Rational(-25, 10));
  CHECK_FALSE(as_integer(q[0]));
  CHECK_FALSE(as_integer(AlgebraicReal(Rational(7, 2))));
}

TEST_CASE("integer roots are recovered from random factored products") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> root(-30, 30), coef(-9, 9), count(1, 4);
  for (int t = 0; t < 150; ++t) {
    IntPolynomial p = poly({1});
    std::set<long> expected;
    for (long i = count(rng); i > 0; --i) {
      long r = root(rng);
      expected.insert(r);
      p = p * poly({-r, 1});
    }
    for (long i = count(rng) - 1; i > 0; --i) {
      // x^2 + bx + c with a non-square discriminant has no rational root.
      long b = coef(rng), c = coef(rng);
      long disc = b * b - 4 * c;
      long sq = disc >= 0 ? static_cast<long>(std::llround(std::sqrt(static_cast<double>(disc)))) : -1;
      if (sq * sq == disc) continue;
      p = p * poly({c, b, 1});
    }
    std::set<long> found;
    for (const auto& r : isolate_real_roots(p)) {
      CHECK(std::abs(eval_double(p, r.to_double())) < 1e-6 * (1 + std::abs(eval_double(p, r.to_double() + 1))));
      if (auto z = r.as_integer()) found.insert(z->get_si());
    }
    CHECK(found == expected);
  }
}

TEST_CASE("algebraic arithmetic and comparison") {
  auto s2 = isolate_real_roots(poly({-2, 0, 1}))[1];
  auto s3 = isolate_real_roots(poly({-3, 0, 1}))[1];
  CHECK(s2 * s2 == AlgebraicReal(2));
  CHECK((s2 * s3) * (s2 * s3) == AlgebraicReal(6));
  CHECK(s2 < s3);
  CHECK((s2 + s3).to_decimal(6) == "3.146264");
  CHECK(s2.inverse() == s2 / AlgebraicReal(2));
  CHECK(s2.pow(-2) == AlgebraicReal(Rational(1, 2)));
}

TEST_CASE("number field zero tests and splitting") {
  auto w = isolate_real_roots(poly({-1, -2, 1, 1}))[2];
  NumberField f(w);
  auto t = f.generator();
  CHECK((t * t * t + t * t - 2 * t - 1).is_zero());
  CHECK(t.inverse() * t == f.constant(1));
  CHECK((t * t - 2).sign() < 0);
  // x^2 - 1 has the rational root 1 next to sqrt(2)'s polynomial.
  auto r = isolate_real_roots(poly({2, 0, -3, 0, 1}));  // (x^2-1)(x^2-2)
  NumberField g(r[3]);
  CHECK((g.generator() * g.generator() - 2).is_zero());
  CHECK_FALSE((g.generator() - 1).is_zero());
}

TEST_CASE("tensor algebra signs across independent generators") {
  auto s2 = isolate_real_roots(poly({-2, 0, 1}))[1];
  auto s3 = isolate_real_roots(poly({-3, 0, 1}))[1];
  TensorAlgebra A({s2, s3});
  auto x = A.generator(0), y = A.generator(1);
  auto prod = A.mul(x, y);
  CHECK(A.sign(A.sub(A.mul(prod, prod), A.constant(6))) == 0);
  CHECK(A.sign(A.sub(x, y)) < 0);
  CHECK(A.value(A.add(x, y)).to_decimal(6) == "3.146264");
  // Both generators are roots of the same polynomial; their difference is zero.
  TensorAlgebra B({s2, s2});
  CHECK(B.sign(B.sub(B.generator(0), B.generator(1))) == 0);
}

TEST_CASE("characteristic polynomial of a rational matrix") {
  std::vector<std::vector<Rational>> m{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  auto chi = characteristic_polynomial(m);
  CHECK(chi == RatPolynomial({Rational(0), Rational(-2), Rational(0), Rational(1)}));
}

TEST_CASE("polynomial gcd and squarefree parts") {
  IntPolynomial p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  CHECK(squarefree_part(p) == poly({-2, 1, 1}));
  auto f = squarefree_factorization(p);
  REQUIRE(f.size() == 2);
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
}

}
