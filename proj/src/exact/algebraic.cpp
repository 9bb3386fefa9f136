#include "drg/exact/algebraic.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace drg::exact {

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

// Primitive part with the sign of p kept; the chain depends on it.
IntPolynomial signed_primitive_part(const RatPolynomial& p) {
  IntPolynomial q = primitive_part(p);
  return sgn(q.leading()) == sgn(p.leading()) ? q : -q;
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    RatPolynomial r = remainder(to_rational(a), to_rational(b));
    if (r.is_zero()) break;
    // -rem, scaled by a positive constant
    chain_.push_back(signed_primitive_part(-r));
    if (chain_.back().degree() == 0) break;
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

// ---------------------------------------------------------------------------
// simplest rational

namespace {

std::strong_ordering order_of(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt floor_of(const Rational& x) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

// Smallest-denominator rational in (lo, hi) for 0 <= lo; hi == nullopt means +infinity.
Rational simplest_nonneg(const Rational& lo, const std::optional<Rational>& hi) {
  BigInt fl = floor_of(lo);
  Rational next(fl + 1);
  if (!hi || next < *hi) return next;
  Rational lo_frac = lo - Rational(fl);
  Rational hi_frac = *hi - Rational(fl);
  std::optional<Rational> upper;
  if (lo_frac != 0) upper = 1 / lo_frac;
  Rational r = simplest_nonneg(1 / hi_frac, upper);
  Rational out = Rational(fl) + 1 / r;
  out.canonicalize();
  return out;
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_rational_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return -simplest_nonneg(-hi, Rational(-lo));
  return simplest_nonneg(lo, hi);
}

// ---------------------------------------------------------------------------
// AlgebraicReal state

struct AlgebraicReal::State {
  mutable std::mutex mu;
  IntPolynomial poly;
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  std::optional<Rational> exact;
  bool known_irrational = false;

  void set_exact(const Rational& r) {
    exact = r;
    lo = hi = r;
    poly = primitive_part(RatPolynomial::linear_root(r));
  }

  // Caller holds mu.
  void bisect() {
    if (exact) return;
    Rational mid = (lo + hi) / 2;
    int s = sign_at(poly, mid);
    if (s == 0) {
      set_exact(mid);
    } else if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // Caller holds mu. Tests the smallest-denominator rational of the interval.
  bool try_simplest() {
    if (exact) return true;
    Rational c = simplest_rational_between(lo, hi);
    if (sign_at(poly, c) == 0) {
      set_exact(c);
      return true;
    }
    return false;
  }
};

AlgebraicReal::AlgebraicReal() : AlgebraicReal(Rational(0)) {}
AlgebraicReal::AlgebraicReal(long value) : AlgebraicReal(Rational(value)) {}
AlgebraicReal::AlgebraicReal(const BigInt& value) : AlgebraicReal(Rational(value)) {}

AlgebraicReal::AlgebraicReal(const Rational& value) : state_(std::make_shared<State>()) {
  Rational v = value;
  v.canonicalize();
  state_->set_exact(v);
}

AlgebraicReal::AlgebraicReal(Unchecked, IntPolynomial poly, Rational lo, Rational hi)
    : state_(std::make_shared<State>()) {
  auto& s = *state_;
  s.poly = std::move(poly);
  s.lo = std::move(lo);
  s.hi = std::move(hi);
  if (s.poly.degree() == 1) {
    Rational r = Rational(-s.poly.coefficients()[0]) / Rational(s.poly.coefficients()[1]);
    r.canonicalize();
    s.set_exact(r);
  } else {
    s.sign_lo = sign_at(s.poly, s.lo);
  }
}

AlgebraicReal AlgebraicReal::from_isolating_interval(const IntPolynomial& poly, const Rational& lo,
                                                     const Rational& hi) {
  if (poly.degree() < 1) throw std::invalid_argument("defining polynomial must be nonconstant");
  if (!(lo < hi)) throw std::invalid_argument("isolating interval must satisfy lo < hi");
  IntPolynomial sq = squarefree_part(poly);
  if (sign_at(sq, lo) == 0 || sign_at(sq, hi) == 0)
    throw std::invalid_argument("isolating interval endpoint is a root");
  SturmSequence sturm(sq);
  if (sturm.count_roots(lo, hi) != 1)
    throw std::invalid_argument("interval does not isolate exactly one root");
  return AlgebraicReal(Unchecked{}, sq, lo, hi);
}

IntPolynomial AlgebraicReal::defining_polynomial() const {
  std::lock_guard lock(state_->mu);
  return state_->poly;
}

Interval AlgebraicReal::interval() const {
  std::lock_guard lock(state_->mu);
  return {state_->lo, state_->hi};
}

void AlgebraicReal::refine_once() const {
  std::lock_guard lock(state_->mu);
  state_->bisect();
}

Interval AlgebraicReal::refine(const Rational& eps) const {
  if (eps <= 0) throw std::invalid_argument("refine: eps must be positive");
  std::lock_guard lock(state_->mu);
  while (!state_->exact && !(state_->hi - state_->lo < eps)) state_->bisect();
  return {state_->lo, state_->hi};
}

std::optional<Rational> AlgebraicReal::as_rational_if_known() const {
  std::lock_guard lock(state_->mu);
  return state_->exact;
}

std::optional<Rational> AlgebraicReal::as_rational() const {
  std::lock_guard lock(state_->mu);
  auto& s = *state_;
  if (s.exact) return s.exact;
  if (s.known_irrational) return std::nullopt;
  // A rational root a/b of a primitive integer polynomial has b | lc, so two
  // such roots are at least 1/lc^2 apart. Once the interval is that narrow the
  // smallest-denominator rational inside it is the only candidate.
  BigInt lc = abs(s.poly.leading());
  Rational threshold(BigInt(1), BigInt(lc * lc));
  threshold.canonicalize();
  while (true) {
    if (s.try_simplest()) return s.exact;
    if (s.hi - s.lo < threshold) break;
    for (int i = 0; i < 4 && !s.exact; ++i) s.bisect();
    if (s.exact) return s.exact;
  }
  s.known_irrational = true;
  return std::nullopt;
}

std::optional<BigInt> AlgebraicReal::as_integer() const {
  {
    std::lock_guard lock(state_->mu);
    auto& s = *state_;
    if (s.exact) {
      if (s.exact->get_den() == 1) return s.exact->get_num();
      return std::nullopt;
    }
    if (s.known_irrational) return std::nullopt;
    while (!s.exact && !(s.hi - s.lo < 1)) s.bisect();
    if (!s.exact) {
      // at most one integer lies in an open interval of width < 1
      BigInt n = floor_of(s.lo) + 1;
      if (Rational(n) < s.hi && sign_at(s.poly, Rational(n)) == 0) s.set_exact(Rational(n));
    }
    if (s.exact) {
      if (s.exact->get_den() == 1) return s.exact->get_num();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

int AlgebraicReal::sign() const {
  std::lock_guard lock(state_->mu);
  auto& s = *state_;
  while (true) {
    if (s.exact) return sgn(*s.exact);
    if (s.lo >= 0) return 1;
    if (s.hi <= 0) return -1;
    // 0 is inside the interval; it is the root iff the constant term vanishes
    if (s.poly.coefficients()[0] == 0) {
      s.set_exact(Rational(0));
      return 0;
    }
    s.bisect();
  }
}

double AlgebraicReal::to_double() const {
  std::lock_guard lock(state_->mu);
  auto& s = *state_;
  if (s.exact) return s.exact->get_d();
  Rational scale = abs(s.lo) + abs(s.hi) + 1;
  Rational eps = scale / Rational(BigInt(1) << 60);
  while (!s.exact && !(s.hi - s.lo < eps)) s.bisect();
  if (s.exact) return s.exact->get_d();
  Rational mid = (s.lo + s.hi) / 2;
  return mid.get_d();
}

std::string AlgebraicReal::to_decimal(int digits) const {
  BigInt ten_pow = 1;
  for (int i = 0; i < digits; ++i) ten_pow *= 10;
  Rational value;
  {
    std::lock_guard lock(state_->mu);
    auto& s = *state_;
    Rational eps(BigInt(1), BigInt(ten_pow * 100));
    eps.canonicalize();
    while (!s.exact && !(s.hi - s.lo < eps)) s.bisect();
    value = s.exact ? *s.exact : Rational((s.lo + s.hi) / 2);
  }
  bool neg = value < 0;
  Rational mag = neg ? Rational(-value) : value;
  Rational scaled = mag * Rational(ten_pow) + Rational(BigInt(1), BigInt(2));
  BigInt rounded = floor_of(scaled);
  std::string digits_str = rounded.get_str();
  if (static_cast<int>(digits_str.size()) <= digits)
    digits_str = std::string(static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0') + digits_str;
  std::string out = digits_str.substr(0, digits_str.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + digits_str.substr(digits_str.size() - static_cast<std::size_t>(digits));
  if (neg && rounded != 0) out = "-" + out;
  return out;
}

std::string AlgebraicReal::to_string() const {
  if (auto r = as_rational()) {
    std::ostringstream os;
    os << *r;
    return os.str();
  }
  return "root of " + exact::to_string(defining_polynomial()) + " ~ " + to_decimal(12);
}

// ---------------------------------------------------------------------------
// comparison

std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.state_ == b.state_) return std::strong_ordering::equal;
  auto ra = a.interval();
  auto rb = b.interval();
  bool a_exact = ra.lo == ra.hi;
  bool b_exact = rb.lo == rb.hi;
  if (a_exact && b_exact) return order_of(ra.lo, rb.lo);

  auto compare_with_point = [](const AlgebraicReal& x, const Rational& p) {
    // ordering of x relative to the rational p
    while (true) {
      auto iv = x.interval();
      if (iv.lo == iv.hi) return order_of(iv.lo, p);
      if (p <= iv.lo) return std::strong_ordering::greater;
      if (p >= iv.hi) return std::strong_ordering::less;
      if (sign_at(x.defining_polynomial(), p) == 0) return std::strong_ordering::equal;
      x.refine_once();
    }
  };
  if (b_exact) return compare_with_point(a, rb.lo);
  if (a_exact) return 0 <=> compare_with_point(b, ra.lo);

  std::optional<IntPolynomial> common;
  while (true) {
    ra = a.interval();
    rb = b.interval();
    if (ra.lo == ra.hi || rb.lo == rb.hi) return a <=> b;  // one became exact
    if (ra.hi <= rb.lo) return std::strong_ordering::less;
    if (rb.hi <= ra.lo) return std::strong_ordering::greater;
    if (!common) common = gcd(a.defining_polynomial(), b.defining_polynomial());
    if (common->degree() >= 1) {
      Rational lo = ra.lo > rb.lo ? ra.lo : rb.lo;
      Rational hi = ra.hi < rb.hi ? ra.hi : rb.hi;
      // a root of the gcd inside both isolating intervals is both numbers
      if (SturmSequence(*common).count_roots(lo, hi) > 0) return std::strong_ordering::equal;
    }
    a.refine_once();
    b.refine_once();
  }
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return (a <=> b) == 0; }

// ---------------------------------------------------------------------------
// root isolation

std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<AlgebraicReal> out;
  if (p.degree() == 0) return out;
  IntPolynomial sq = squarefree_part(p);
  SturmSequence sturm(sq);
  Rational bound = root_bound(sq);

  // Isolating intervals in ascending order; lo == hi marks a rational root hit by bisection.
  std::vector<Interval> found;
  std::function<void(const Rational&, const Rational&, int)> isolate =
      [&](const Rational& lo, const Rational& hi, int count) {
        if (count == 0) return;
        if (count == 1) {
          found.push_back({lo, hi});
          return;
        }
        Rational mid = (lo + hi) / 2;
        if (sign_at(sq, mid) != 0) {
          int left = sturm.count_roots(lo, mid);
          isolate(lo, mid, left);
          isolate(mid, hi, count - left);
          return;
        }
        // mid is a rational root; cut it out with a small symmetric gap
        Rational gap = (hi - lo) / 4;
        while (sign_at(sq, mid - gap) == 0 || sign_at(sq, mid + gap) == 0 ||
               sturm.count_roots(mid - gap, mid + gap) != 1)
          gap /= 2;
        int left = sturm.count_roots(lo, mid - gap);
        isolate(lo, mid - gap, left);
        found.push_back({mid, mid});
        isolate(mid + gap, hi, count - left - 1);
      };
  isolate(-bound, bound, sturm.count_roots(-bound, bound));

  for (const auto& iv : found) {
    if (iv.lo == iv.hi)
      out.push_back(AlgebraicReal(iv.lo));
    else
      out.push_back(AlgebraicReal(AlgebraicReal::Unchecked{}, sq, iv.lo, iv.hi));
  }
  // Recognize rational roots, then give the irrational ones the cofactor of
  // the rational linear factors as their defining polynomial.
  RatPolynomial rest = to_rational(sq);
  bool any_rational = false;
  for (const auto& r : out) {
    if (auto v = r.as_rational()) {
      rest = divmod(rest, RatPolynomial::linear_root(*v)).first;
      any_rational = true;
    }
  }
  if (any_rational && rest.degree() >= 2) {
    IntPolynomial reduced = primitive_part(rest);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].is_rational()) continue;
      auto iv = out[i].interval();
      out[i] = AlgebraicReal(AlgebraicReal::Unchecked{}, reduced, iv.lo, iv.hi);
      out[i].state_->known_irrational = true;
    }
  }
  return out;
}

Interval refine(const AlgebraicReal& r, const Rational& eps) { return r.refine(eps); }
std::optional<BigInt> as_integer(const AlgebraicReal& r) { return r.as_integer(); }

}  // namespace drg::exact
