#include "drg/classify/family.hpp"

namespace drg::classify {

D3FamilyPoint d3_family(const AlgebraicReal& beta, const BigInt& mu) {
  if (mu < 1) throw ParameterViolation("mu >= 1 fails: mu=" + mu.get_str());
  NumberField f(beta);
  const Scalar b = f.generator();
  const Rational m(mu);
  const Scalar one = f.constant(1);
  const Scalar bb = b * b;

  const Scalar k = one + (bb - one) * (b * (b + Rational(2)) - (b + one) * m);
  const Scalar b2_closed = (bb + b - one) * (bb + b - one - b * m);
  D3FamilyPoint p{f,
                  b,
                  mu,
                  k,
                  f.constant(m),
                  -((b + one) * (bb + b - one - (b + one) * m)),
                  k - m,
                  b2_closed,
                  false,
                  {k, (b + one) * (bb + b - one - b * m), bb + b - one - (b + one) * m, one - b - bb}};
  p.b2_consistent = (p.b2 - p.b2_closed).is_zero();
  return p;
}

std::optional<IntersectionArray> D3FamilyPoint::array() const {
  auto k_r = k.as_rational();
  auto c3_r = c3.as_rational();
  if (!k_r || !c3_r || k_r->get_den() != 1 || c3_r->get_den() != 1) return std::nullopt;
  const BigInt kk = k_r->get_num();
  return IntersectionArray({kk, kk - 1, kk - mu}, {BigInt(1), mu, c3_r->get_num()});
}

}  // namespace drg::classify
