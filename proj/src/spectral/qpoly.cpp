#include "drg/spectral/qpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace drg::spectral {

using exact::TensorAlgebra;
using Elem = NumberField::Element;

namespace {

std::string perm_string(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// Interpolation data for sigma = column a of Q.
class Interpolation {
 public:
  struct Column {
    std::vector<int> indices;  // {a, e}
    std::vector<std::size_t> slot;
    std::shared_ptr<TensorAlgebra> alg;
    std::vector<TensorAlgebra::Element> coeffs;
    int degree = -1;
  };

  Interpolation(const SpectralData& s, int a) : s_(s), a_(a) {
    const int d = s.diameter();
    for (int l = 0; l <= d; ++l) sigma_.push_back(s.Q(l, a));
    for (int l = 0; l <= d; ++l)
      for (int m = l + 1; m <= d; ++m)
        if ((sigma_[static_cast<std::size_t>(l)] - sigma_[static_cast<std::size_t>(m)]).is_zero()) {
          distinct_ = false;
          return;
        }
    const NumberField& f = s.field(a);
    for (int l = 0; l <= d; ++l) {
      std::vector<Elem> num{f.constant(1)};
      Elem den = f.constant(1);
      for (int m = 0; m <= d; ++m) {
        if (m == l) continue;
        const Elem& sm = sigma_[static_cast<std::size_t>(m)];
        std::vector<Elem> next(num.size() + 1, f.constant(0));
        for (std::size_t t = 0; t < num.size(); ++t) {
          next[t + 1] += num[t];
          next[t] -= sm * num[t];
        }
        num = std::move(next);
        den *= sigma_[static_cast<std::size_t>(l)] - sm;
      }
      Elem inv = den.inverse();
      for (auto& c : num) c *= inv;
      basis_.push_back(std::move(num));
    }
  }

  bool distinct() const { return distinct_; }
  const std::vector<Elem>& sigma() const { return sigma_; }

  // Degree of the interpolant through (sigma_l, Q_{l,e}); -1 when sigma repeats.
  const Column& column(int e) {
    if (auto it = columns_.find(e); it != columns_.end()) return it->second;
    Column col;
    if (distinct_) {
      const int d = s_.diameter();
      col.indices = {a_, e};
      col.alg = std::make_shared<TensorAlgebra>(s_.algebra_for(col.indices, col.slot));
      const TensorAlgebra& alg = *col.alg;
      std::vector<TensorAlgebra::Element> y;
      for (int l = 0; l <= d; ++l) y.push_back(alg.embed(col.slot[1], s_.Q(l, e).polynomial()));
      for (int t = 0; t <= d; ++t) {
        auto c = alg.constant(0);
        for (int l = 0; l <= d; ++l)
          c = alg.add(c, alg.mul(alg.embed(col.slot[0], basis_[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)].polynomial()),
                                 y[static_cast<std::size_t>(l)]));
        col.coeffs.push_back(std::move(c));
      }
      for (int t = d; t >= 0; --t)
        if (!alg.is_zero(col.coeffs[static_cast<std::size_t>(t)])) {
          col.degree = t;
          break;
        }
    }
    return columns_.emplace(e, std::move(col)).first->second;
  }

 private:
  const SpectralData& s_;
  int a_;
  bool distinct_ = true;
  std::vector<Elem> sigma_;
  std::vector<std::vector<Elem>> basis_;  // basis_[l][t]: coefficient t of the l-th Lagrange polynomial
  std::map<int, Column> columns_;
};

class DegreeTable {
 public:
  explicit DegreeTable(const SpectralData& s) : s_(s) {}

  Interpolation& at(int a) {
    auto it = interp_.find(a);
    if (it == interp_.end()) it = interp_.emplace(a, std::make_unique<Interpolation>(s_, a)).first;
    return *it->second;
  }

  bool passes(const std::vector<int>& perm) {
    Interpolation& in = at(perm[1]);
    if (!in.distinct()) return false;
    for (std::size_t j = 1; j < perm.size(); ++j)
      if (in.column(perm[j]).degree != static_cast<int>(j)) return false;
    return true;
  }

 private:
  const SpectralData& s_;
  std::map<int, std::unique_ptr<Interpolation>> interp_;
};

void validate_permutation(const SpectralData& s, const std::vector<int>& perm) {
  const int d = s.diameter();
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(static_cast<std::size_t>(d) + 1);
  std::iota(expect.begin(), expect.end(), 0);
  if (sorted != expect || perm.empty() || perm[0] != 0)
    throw std::invalid_argument("not an eigenvalue ordering with theta_0 first: " + perm_string(perm));
}

}  // namespace

std::vector<AlgebraicReal> QPolyOrdering::ordered_eigenvalues(const SpectralData& s) const {
  std::vector<AlgebraicReal> out;
  for (int i : permutation) out.push_back(s.eigenvalues()[static_cast<std::size_t>(i)]);
  return out;
}

bool passes_definition_check(const SpectralData& s, const std::vector<int>& permutation) {
  validate_permutation(s, permutation);
  DegreeTable table(s);
  return table.passes(permutation);
}

bool passes_krein_check(const SpectralData& s, const std::vector<int>& permutation) {
  validate_permutation(s, permutation);
  const int d = s.diameter();
  const int one = permutation[1];
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      const bool zero = s.krein_zero(one, permutation[static_cast<std::size_t>(i)], permutation[static_cast<std::size_t>(j)]);
      if ((j - i == 1) == zero) return false;
    }
  return true;
}

QPolyCheck q_polynomial_check(const SpectralData& s) {
  // Given pi(1) = a, the definition check pins down the whole ordering
  // (pi(j) is the column whose interpolant has degree j), and the Krein
  // pattern can be extended one position at a time.
  QPolyCheck out;
  const int d = s.diameter();
  DegreeTable table(s);
  for (int a = 1; a <= d; ++a) {
    Interpolation& in = table.at(a);
    if (!in.distinct()) continue;
    std::vector<int> perm(static_cast<std::size_t>(d) + 1, -1);
    perm[0] = 0;
    bool ok = true;
    for (int e = 1; e <= d && ok; ++e) {
      const int deg = in.column(e).degree;
      if (deg < 1 || perm[static_cast<std::size_t>(deg)] != -1)
        ok = false;
      else
        perm[static_cast<std::size_t>(deg)] = e;
    }
    if (ok) out.by_definition.push_back(perm);
  }

  for (int a = 1; a <= d; ++a) {
    if (s.krein_zero(a, 0, a)) continue;
    std::vector<int> seq{0, a};
    std::vector<bool> used(static_cast<std::size_t>(d) + 1, false);
    used[0] = used[static_cast<std::size_t>(a)] = true;
    auto extend = [&](auto&& self) -> void {
      if (static_cast<int>(seq.size()) == d + 1) {
        out.by_krein.push_back(seq);
        return;
      }
      for (int e = 1; e <= d; ++e) {
        if (used[static_cast<std::size_t>(e)]) continue;
        if (s.krein_zero(a, seq.back(), e)) continue;
        bool fits = true;
        for (std::size_t i = 0; i + 1 < seq.size() && fits; ++i) fits = s.krein_zero(a, seq[i], e);
        if (!fits) continue;
        used[static_cast<std::size_t>(e)] = true;
        seq.push_back(e);
        self(self);
        seq.pop_back();
        used[static_cast<std::size_t>(e)] = false;
      }
    };
    extend(extend);
  }
  std::sort(out.by_definition.begin(), out.by_definition.end());
  std::sort(out.by_krein.begin(), out.by_krein.end());
  return out;
}

std::vector<QPolyOrdering> q_polynomial_orderings(const SpectralData& s) {
  QPolyCheck check = q_polynomial_check(s);
  if (check.by_definition != check.by_krein) {
    std::string msg = "Q-polynomial criteria disagree on " + s.array().to_string() + ": definition {";
    for (const auto& p : check.by_definition) msg += perm_string(p);
    msg += "} Krein {";
    for (const auto& p : check.by_krein) msg += perm_string(p);
    throw std::logic_error(msg + "}");
  }
  const bool formal = !s.multiplicities_integral();
  DegreeTable table(s);
  std::vector<QPolyOrdering> out;
  for (const auto& perm : check.by_definition) {
    QPolyOrdering o;
    o.permutation = perm;
    o.formal = formal;
    Interpolation& in = table.at(perm[1]);
    for (const auto& x : in.sigma()) o.sigma.push_back(x.value());
    o.witness.push_back({AlgebraicReal(1)});
    for (std::size_t j = 1; j < perm.size(); ++j) {
      const auto& col = in.column(perm[j]);
      std::vector<AlgebraicReal> coeffs;
      for (std::size_t t = 0; t <= j; ++t) coeffs.push_back(col.alg->value(col.coeffs[t]));
      o.witness.push_back(std::move(coeffs));
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<QPolyOrdering> q_polynomial_orderings(const IntersectionArray& arr) {
  return q_polynomial_orderings(SpectralData(arr));
}

}  // namespace drg::spectral
