#include "drg/spectral/spectrum.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace drg::spectral {

using exact::IntPolynomial;
using exact::TensorAlgebra;

struct SpectralData::Cache {
  std::mutex mu;
  std::map<std::array<int, 3>, int> core_sign;
  std::vector<std::optional<int>> m_sign;
};

SpectralData::SpectralData(const IntersectionArray& arr) : array_(arr), cache_(std::make_shared<Cache>()) {
  if (auto v = arr.basic_violations(); !v.empty()) throw SpectralError("invalid intersection array: " + v.front());
  const int d = arr.diameter();

  IntPolynomial chi = arr.characteristic_polynomial();
  if (exact::squarefree_part(chi).degree() != chi.degree())
    throw SpectralError("repeated eigenvalue in " + arr.to_string());
  theta_ = exact::isolate_real_roots(chi);
  if (static_cast<int>(theta_.size()) != d + 1)
    throw SpectralError("non-real eigenvalues in " + arr.to_string());
  std::reverse(theta_.begin(), theta_.end());
  if (theta_[0] != AlgebraicReal(arr.valency()))
    throw SpectralError("k is not the largest eigenvalue of " + arr.to_string());

  for (int l = 0; l <= d; ++l) k_.push_back(arr.sphere_size(l));
  n_ = arr.order();
  const Rational k(arr.valency());

  for (int i = 0; i <= d; ++i) {
    NumberField f(theta_[static_cast<std::size_t>(i)]);
    auto x = f.generator();
    std::vector<NumberField::Element> u{f.constant(1), x / k};
    for (int l = 1; l < d; ++l) {
      const Rational a(arr.a(l)), b(arr.b(l)), c(arr.c(l));
      u.push_back(((x - a) * u[static_cast<std::size_t>(l)] - u[static_cast<std::size_t>(l - 1)] * c) / b);
    }
    u.resize(static_cast<std::size_t>(d) + 1);
    auto norm = f.constant(0);
    for (int l = 0; l <= d; ++l) norm += u[static_cast<std::size_t>(l)] * u[static_cast<std::size_t>(l)] * k_[static_cast<std::size_t>(l)];
    m_.push_back(n_ / norm);
    fields_.push_back(f);
    u_.push_back(std::move(u));
  }
  cache_->m_sign.resize(static_cast<std::size_t>(d) + 1);
}

const NumberField::Element& SpectralData::u(int i, int l) const {
  return u_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(l));
}

NumberField::Element SpectralData::P(int i, int l) const { return u(i, l) * k_.at(static_cast<std::size_t>(l)); }

NumberField::Element SpectralData::Q(int l, int i) const { return u(i, l) * multiplicity(i); }

AlgebraicReal SpectralData::multiplicity_value(int i) const { return multiplicity(i).value(); }

std::optional<Rational> SpectralData::multiplicity_rational(int i) const { return multiplicity(i).as_rational(); }

bool SpectralData::multiplicities_integral() const {
  for (int i = 0; i <= diameter(); ++i) {
    auto r = multiplicity_rational(i);
    if (!r || r->get_den() != 1 || *r <= 0) return false;
  }
  return true;
}

bool SpectralData::eigenvalues_integral() const {
  return std::all_of(theta_.begin(), theta_.end(), [](const AlgebraicReal& t) { return t.is_integer(); });
}

TensorAlgebra SpectralData::algebra_for(const std::vector<int>& indices, std::vector<std::size_t>& slot) const {
  std::vector<int> distinct = indices;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<AlgebraicReal> gens;
  for (int i : distinct) gens.push_back(fields_.at(static_cast<std::size_t>(i)).theta());
  slot.clear();
  for (int i : indices)
    slot.push_back(static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), i) - distinct.begin()));
  return TensorAlgebra(std::move(gens));
}

bool SpectralData::verify_pq() const {
  const int d = diameter();
  for (int i = 0; i <= d; ++i) {
    auto diag = fields_[static_cast<std::size_t>(i)].constant(0);
    for (int l = 0; l <= d; ++l) diag += P(i, l) * Q(l, i);
    if (!(diag - n_).is_zero()) return false;
    for (int j = i + 1; j <= d; ++j) {
      std::vector<std::size_t> slot;
      TensorAlgebra alg = algebra_for({i, j}, slot);
      auto sum = alg.constant(0);
      for (int l = 0; l <= d; ++l)
        sum = alg.add(sum, alg.scale(alg.mul(alg.embed(slot[0], u(i, l).polynomial()),
                                             alg.embed(slot[1], u(j, l).polynomial())),
                                     k_[static_cast<std::size_t>(l)]));
      if (!alg.is_zero(sum)) return false;
    }
  }
  return true;
}

int SpectralData::krein_core_sign(int h, int i, int j) const {
  std::array<int, 3> key{h, i, j};
  std::sort(key.begin(), key.end());
  {
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->core_sign.find(key); it != cache_->core_sign.end()) return it->second;
  }
  std::vector<std::size_t> slot;
  TensorAlgebra alg = algebra_for({key[0], key[1], key[2]}, slot);
  auto sum = alg.constant(0);
  for (int l = 0; l <= diameter(); ++l) {
    auto term = alg.embed(slot[0], u(key[0], l).polynomial());
    term = alg.mul(term, alg.embed(slot[1], u(key[1], l).polynomial()));
    term = alg.mul(term, alg.embed(slot[2], u(key[2], l).polynomial()));
    sum = alg.add(sum, alg.scale(term, k_[static_cast<std::size_t>(l)]));
  }
  const int s = alg.sign(sum);
  std::lock_guard lock(cache_->mu);
  cache_->core_sign[key] = s;
  return s;
}

int SpectralData::krein_sign(int h, int i, int j) const {
  auto m_sign = [&](int t) {
    {
      std::lock_guard lock(cache_->mu);
      if (auto& s = cache_->m_sign[static_cast<std::size_t>(t)]) return *s;
    }
    int s = multiplicity(t).sign();
    std::lock_guard lock(cache_->mu);
    cache_->m_sign[static_cast<std::size_t>(t)] = s;
    return s;
  };
  return m_sign(i) * m_sign(j) * krein_core_sign(h, i, j);
}

AlgebraicReal SpectralData::krein(int h, int i, int j) const {
  std::vector<std::size_t> slot;
  TensorAlgebra alg = algebra_for({h, i, j}, slot);
  auto sum = alg.constant(0);
  for (int l = 0; l <= diameter(); ++l) {
    auto term = alg.embed(slot[0], u(h, l).polynomial());
    term = alg.mul(term, alg.embed(slot[1], u(i, l).polynomial()));
    term = alg.mul(term, alg.embed(slot[2], u(j, l).polynomial()));
    sum = alg.add(sum, alg.scale(term, k_[static_cast<std::size_t>(l)]));
  }
  sum = alg.mul(sum, alg.embed(slot[1], multiplicity(i).polynomial()));
  sum = alg.mul(sum, alg.embed(slot[2], multiplicity(j).polynomial()));
  return alg.value(alg.scale(sum, 1 / n_));
}

bool SpectralData::krein_nonnegative() const {
  const int d = diameter();
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j)
        if (krein_sign(h, i, j) < 0) return false;
  return true;
}

SpectralData spectrum(const IntersectionArray& arr) { return SpectralData(arr); }

}  // namespace drg::spectral
