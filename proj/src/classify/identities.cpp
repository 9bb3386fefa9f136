#include "drg/classify/identities.hpp"

#include <random>

#include "drg/classify/family.hpp"

namespace drg::classify {

namespace {

using Engine = std::mt19937_64;

long uniform(Engine& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational draw_q(Engine& rng) {
  while (true) {
    const long den = uniform(rng, 1, 9);
    const long num = uniform(rng, -40, 40);
    Rational q(num, den);
    q.canonicalize();
    if (q * q > 1) return q;
  }
}

Rational draw_s(Engine& rng) {
  Rational s(uniform(rng, -30, 30), uniform(rng, 1, 9));
  s.canonicalize();
  return s;
}

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void record(bool ok, const std::string& what) {
    ++r_.samples;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }
  IdentityResult result() const { return r_; }

 private:
  IdentityResult r_;
};

std::string at(const Rational& q, int D) { return "q=" + q.get_str() + " D=" + std::to_string(D); }
std::string at(const Rational& q, const Rational& s, int D) { return at(q, D) + " s=" + s.get_str(); }

// A valid (q, s, D); s is redrawn until the restrictions hold.
QSParameters draw_params(Engine& rng, int dmax) {
  while (true) {
    const Rational q = draw_q(rng);
    const Rational s = draw_s(rng);
    const int D = static_cast<int>(uniform(rng, 3, dmax));
    QSParameters p = QSParameters::make(AlgebraicReal(q), s, D);
    if (p.violations().empty()) return p;
  }
}

Rational rat(const Scalar& x) { return *x.as_rational(); }

}  // namespace

Rational sample_q(std::uint64_t& state) {
  Engine rng(state);
  Rational q = draw_q(rng);
  state = rng();
  return q;
}

std::vector<IdentityResult> run_identities(const IdentityOptions& opts) {
  Engine rng(opts.seed);
  const int dmax = std::max(3, opts.dmax);
  std::vector<IdentityResult> out;

  {
    Tally t("eq_exp");
    for (std::size_t n = 0; n < opts.trials; ++n) {
      const Rational q = draw_q(rng);
      const int D = static_cast<int>(uniform(rng, 3, dmax));
      NumberField f{AlgebraicReal(q)};
      const Scalar qs = f.generator();
      const Scalar beta = qs + qs.inverse();
      const Scalar xi = opts.eta(qs, D) + beta * beta - Rational(1);
      const Scalar rhs = (qs.pow(2 * D) - qs.pow(9)) / (qs.pow(2 * D + 2) - qs.pow(7));
      t.record((xi - rhs).is_zero(), at(q, D));
    }
    out.push_back(t.result());
  }
  {
    Tally t("theta_d");
    for (std::size_t n = 0; n < opts.trials; ++n) {
      QSParameters p = draw_params(rng, dmax);
      QSValues v = qs_evaluate(p);
      t.record((v.theta[static_cast<std::size_t>(p.D)] - v.theta_D_closed).is_zero(),
               at(rat(p.q), rat(p.s), p.D));
    }
    out.push_back(t.result());
  }
  {
    Tally t("beta_q");
    for (std::size_t n = 0; n < opts.trials; ++n) {
      QSParameters p = draw_params(rng, dmax);
      QSValues v = qs_evaluate(p);
      bool ok = false;
      if (!(v.theta[1] - v.theta[2]).is_zero()) {
        Scalar b = beta_of(v.theta[0], v.theta[1], v.theta[2], v.theta[3]);
        ok = (b - (p.q + p.q.inverse())).is_zero();
      }
      t.record(ok, at(rat(p.q), rat(p.s), p.D));
    }
    out.push_back(t.result());
  }
  {
    Tally t("curtin_closed_form");
    for (std::size_t n = 0; n < opts.trials; ++n) {
      QSParameters p = draw_params(rng, dmax);
      QSValues v = qs_evaluate(p);
      Scalar direct = curtin_gap(v.k, v.c[2], v.theta[static_cast<std::size_t>(p.D)]);
      t.record((direct - curtin_gap_closed_form(p)).is_zero(), at(rat(p.q), rat(p.s), p.D));
    }
    out.push_back(t.result());
  }
  {
    Tally t("chebyshev");
    std::vector<exact::IntPolynomial> T;
    for (int i = 0; i <= 20; ++i) T.push_back(chebyshev_T(i));
    for (std::size_t n = 0; n < opts.trials; ++n) {
      const Rational q = draw_q(rng);
      const Rational beta = q + 1 / q;
      bool ok = true;
      Rational qi = 1;
      for (int i = 1; i <= 20; ++i) {
        qi *= q;
        if (exact::evaluate(T[static_cast<std::size_t>(i)], beta) != qi + 1 / qi) ok = false;
      }
      t.record(ok, "q=" + q.get_str());
    }
    out.push_back(t.result());
  }
  {
    Tally t("b2_closed_form");
    for (long b = -50; b <= 50; ++b)
      for (long m = 1; m <= 50; ++m) {
        D3FamilyPoint p = d3_family(AlgebraicReal(b), BigInt(m));
        t.record(p.b2_consistent, "beta=" + std::to_string(b) + " mu=" + std::to_string(m));
      }
    out.push_back(t.result());
  }
  {
    Tally t("d4_impossibility");
    const int d4max = std::max(4, opts.d4max);
    for (std::size_t n = 0; n < opts.trials; ++n) {
      const Rational q = draw_q(rng);
      const int D = static_cast<int>(uniform(rng, 4, d4max));
      NumberField f{AlgebraicReal(q)};
      D4Witness w = d4_contradiction_witness(f.generator(), D);
      t.record(w.sign_negative && w.xi_squared_below_one, at(q, D));
    }
    out.push_back(t.result());
  }
  return out;
}

}  // namespace drg::classify
