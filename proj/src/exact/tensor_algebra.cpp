#include "drg/exact/tensor_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace drg::exact {

namespace {

Interval interval_mul(const Interval& x, const Interval& y) {
  Rational p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
  Interval r{p1, p1};
  for (const Rational* p : {&p2, &p3, &p4}) {
    if (*p < r.lo) r.lo = *p;
    if (*p > r.hi) r.hi = *p;
  }
  return r;
}

Interval interval_scale(const Interval& x, const Rational& c) {
  if (c >= 0) return {c * x.lo, c * x.hi};
  return {c * x.hi, c * x.lo};
}

}  // namespace

RatPolynomial characteristic_polynomial(std::vector<std::vector<Rational>> h) {
  const std::size_t n = h.size();
  // Reduce to upper Hessenberg form by elementary similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && h[pivot][m - 1] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      std::swap(h[pivot], h[m]);
      for (std::size_t k = 0; k < n; ++k) std::swap(h[k][pivot], h[k][m]);
    }
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][m - 1] == 0) continue;
      Rational u = h[j][m - 1] / h[m][m - 1];
      for (std::size_t k = 0; k < n; ++k) h[j][k] -= u * h[m][k];
      for (std::size_t k = 0; k < n; ++k) h[k][m] += u * h[k][j];
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<RatPolynomial> p(n + 1);
  p[0] = RatPolynomial::constant(1);
  const RatPolynomial x = RatPolynomial::monomial(1, 1);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = (x - RatPolynomial::constant(h[m - 1][m - 1])) * p[m - 1];
    Rational t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t *= h[i][i - 1];
      if (t == 0) break;
      if (h[i - 1][m - 1] != 0) p[m] -= p[i - 1] * (h[i - 1][m - 1] * t);
    }
  }
  return p[n];
}

TensorAlgebra::TensorAlgebra(std::vector<AlgebraicReal> generators) : generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    RatPolynomial mod = make_monic(to_rational(g.defining_polynomial()));
    strides_.push_back(dimension_);
    degrees_.push_back(static_cast<std::size_t>(mod.degree()));
    dimension_ *= static_cast<std::size_t>(mod.degree());
    moduli_.push_back(std::move(mod));
  }
}

TensorAlgebra::Element TensorAlgebra::constant(const Rational& c) const {
  Element e(dimension_, Rational(0));
  e[0] = c;
  return e;
}

TensorAlgebra::Element TensorAlgebra::generator(std::size_t i) const {
  return embed(i, RatPolynomial::monomial(1, 1));
}

TensorAlgebra::Element TensorAlgebra::embed(std::size_t i, const RatPolynomial& p) const {
  RatPolynomial r = remainder(p, moduli_.at(i));
  Element e(dimension_, Rational(0));
  for (std::size_t k = 0; k < r.coefficients().size(); ++k) e[k * strides_[i]] = r.coefficients()[k];
  return e;
}

TensorAlgebra::Element TensorAlgebra::add(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < dimension_; ++i) r[i] += b[i];
  return r;
}

TensorAlgebra::Element TensorAlgebra::sub(const Element& a, const Element& b) const {
  Element r = a;
  for (std::size_t i = 0; i < dimension_; ++i) r[i] -= b[i];
  return r;
}

TensorAlgebra::Element TensorAlgebra::scale(const Element& a, const Rational& c) const {
  Element r = a;
  for (auto& x : r) x *= c;
  return r;
}

void TensorAlgebra::reduce_variable(std::vector<Rational>& coeffs, std::vector<std::size_t>& extents,
                                    std::size_t var) const {
  // Layout of `coeffs`: mixed radix over `extents`, variable 0 fastest.
  std::vector<std::size_t> stride(extents.size());
  std::size_t total = 1;
  for (std::size_t v = 0; v < extents.size(); ++v) {
    stride[v] = total;
    total *= extents[v];
  }
  const std::size_t d = degrees_[var];
  const auto& g = moduli_[var].coefficients();
  if (extents[var] <= d) return;
  for (std::size_t e = extents[var] - 1; e >= d; --e) {
    for (std::size_t idx = 0; idx < total; ++idx) {
      if ((idx / stride[var]) % extents[var] != e) continue;
      if (coeffs[idx] == 0) continue;
      Rational c = coeffs[idx];
      coeffs[idx] = 0;
      std::size_t base = idx - (d * stride[var]);  // exponent e - d
      for (std::size_t j = 0; j < d; ++j) coeffs[base + j * stride[var]] -= c * g[j];
    }
  }
}

TensorAlgebra::Element TensorAlgebra::mul(const Element& a, const Element& b) const {
  const std::size_t m = generators_.size();
  if (m == 0) return {a[0] * b[0]};
  std::vector<std::size_t> extents(m);
  std::vector<std::size_t> pstride(m);
  std::size_t total = 1;
  for (std::size_t v = 0; v < m; ++v) {
    extents[v] = 2 * degrees_[v] - 1;
    pstride[v] = total;
    total *= extents[v];
  }
  auto product_index = [&](std::size_t basis_idx) {
    std::size_t out = 0;
    for (std::size_t v = 0; v < m; ++v) out += ((basis_idx / strides_[v]) % degrees_[v]) * pstride[v];
    return out;
  };
  std::vector<std::size_t> pidx(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) pidx[i] = product_index(i);

  std::vector<Rational> prod(total, Rational(0));
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dimension_; ++j) {
      if (b[j] == 0) continue;
      prod[pidx[i] + pidx[j]] += a[i] * b[j];
    }
  }
  for (std::size_t v = 0; v < m; ++v) reduce_variable(prod, extents, v);
  Element r(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) r[i] = prod[pidx[i]];
  return r;
}

TensorAlgebra::Element TensorAlgebra::multiply_by_generator(const Element& a, std::size_t i) const {
  Element r(dimension_, Rational(0));
  const std::size_t d = degrees_[i];
  const std::size_t s = strides_[i];
  const auto& g = moduli_[i].coefficients();
  for (std::size_t idx = 0; idx < dimension_; ++idx) {
    if (a[idx] == 0) continue;
    std::size_t e = (idx / s) % d;
    if (e + 1 < d) {
      r[idx + s] += a[idx];
    } else {
      std::size_t base = idx - e * s;
      for (std::size_t j = 0; j < d; ++j) r[base + j * s] -= a[idx] * g[j];
    }
  }
  return r;
}

bool TensorAlgebra::is_identically_zero(const Element& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> TensorAlgebra::as_constant(const Element& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return std::nullopt;
  return a[0];
}

Interval TensorAlgebra::enclose(const Element& a) const {
  const std::size_t m = generators_.size();
  std::vector<std::vector<Interval>> powers(m);
  for (std::size_t v = 0; v < m; ++v) {
    Interval g = generators_[v].interval();
    powers[v].push_back({Rational(1), Rational(1)});
    for (std::size_t e = 1; e < degrees_[v]; ++e) powers[v].push_back(interval_mul(powers[v].back(), g));
  }
  Interval sum{Rational(0), Rational(0)};
  for (std::size_t idx = 0; idx < dimension_; ++idx) {
    if (a[idx] == 0) continue;
    Interval term{Rational(1), Rational(1)};
    for (std::size_t v = 0; v < m; ++v) {
      std::size_t e = (idx / strides_[v]) % degrees_[v];
      if (e > 0) term = interval_mul(term, powers[v][e]);
    }
    term = interval_scale(term, a[idx]);
    sum.lo += term.lo;
    sum.hi += term.hi;
  }
  return sum;
}

void TensorAlgebra::refine_generators() const {
  for (const auto& g : generators_) g.refine_once();
}

RatPolynomial TensorAlgebra::characteristic_polynomial(const Element& a) const {
  // Column j is a * (basis monomial j); each monomial is a generator times an earlier one.
  std::vector<Element> columns(dimension_);
  columns[0] = a;
  for (std::size_t j = 1; j < dimension_; ++j) {
    std::size_t v = 0;
    while ((j / strides_[v]) % degrees_[v] == 0) ++v;
    columns[j] = multiply_by_generator(columns[j - strides_[v]], v);
  }
  std::vector<std::vector<Rational>> mat(dimension_, std::vector<Rational>(dimension_));
  for (std::size_t r = 0; r < dimension_; ++r)
    for (std::size_t c = 0; c < dimension_; ++c) mat[r][c] = columns[c][r];
  return exact::characteristic_polynomial(std::move(mat));
}

int TensorAlgebra::sign(const Element& a) const {
  if (auto c = as_constant(a)) return sgn(*c);
  for (int iter = 0; iter < 40; ++iter) {
    Interval enc = enclose(a);
    if (enc.lo > 0) return 1;
    if (enc.hi < 0) return -1;
    if (enc.lo == enc.hi) return 0;  // all generators have become exact
    refine_generators();
  }
  // The value is a root of the characteristic polynomial chi. If chi(0) != 0
  // the value is nonzero and refinement terminates; otherwise isolate the root
  // 0 of chi and wait for the enclosure to fall inside or away from it.
  IntPolynomial chi = squarefree_part(primitive_part(characteristic_polynomial(a)));
  std::optional<Rational> zero_radius;
  if (chi.coefficients()[0] == 0) {
    SturmSequence sturm(chi);
    Rational r = root_bound(chi);
    while (sign_at(chi, r) == 0 || sign_at(chi, -r) == 0 || sturm.count_roots(-r, r) != 1) r /= 2;
    zero_radius = r;
  }
  while (true) {
    Interval enc = enclose(a);
    if (enc.lo > 0) return 1;
    if (enc.hi < 0) return -1;
    if (zero_radius && enc.lo > -*zero_radius && enc.hi < *zero_radius) return 0;
    if (enc.lo == enc.hi) return 0;
    refine_generators();
  }
}

AlgebraicReal TensorAlgebra::value(const Element& a) const {
  if (auto c = as_constant(a)) return AlgebraicReal(*c);
  IntPolynomial chi = squarefree_part(primitive_part(characteristic_polynomial(a)));
  SturmSequence sturm(chi);
  while (true) {
    Interval enc = enclose(a);
    if (enc.lo == enc.hi) return AlgebraicReal(enc.lo);
    if (sign_at(chi, enc.lo) != 0 && sign_at(chi, enc.hi) != 0 && sturm.count_roots(enc.lo, enc.hi) == 1)
      return AlgebraicReal(AlgebraicReal::Unchecked{}, chi, enc.lo, enc.hi);
    refine_generators();
  }
}

}  // namespace drg::exact
