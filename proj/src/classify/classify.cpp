#include "drg/classify/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace drg::classify {

using graphs::Family;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Cycle: return "Cycle";
    case Verdict::FoldedCube: return "FoldedCube";
    case Verdict::OddGraph: return "OddGraph";
    case Verdict::D3Family: return "D3Family";
    case Verdict::NotQPolynomial: return "NotQPolynomial";
    case Verdict::NotAlmostBipartite: return "NotAlmostBipartite";
    case Verdict::ContradictionAlarm: return "ContradictionAlarm";
    case Verdict::DiameterBelowThree: return "DiameterBelowThree";
  }
  return "?";
}

std::string Classification::to_string() const {
  switch (verdict) {
    case Verdict::Cycle:
    case Verdict::FoldedCube:
    case Verdict::OddGraph: return verdict_name(verdict) + "(" + std::to_string(D) + ")";
    case Verdict::D3Family:
      return "D3Family(" + family_point->beta->to_string() + "," + family_point->mu.get_str() + ")";
    default: return verdict_name(verdict);
  }
}

BigInt family_order(Family f, int D) {
  const unsigned long n = static_cast<unsigned long>(2 * D + 1);
  BigInt out;
  switch (f) {
    case Family::Cycle: out = n; break;
    case Family::FoldedCube: mpz_ui_pow_ui(out.get_mpz_t(), 2, n - 1); break;
    case Family::Odd: mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(D)); break;
    case Family::Hypercube: mpz_ui_pow_ui(out.get_mpz_t(), 2, n); break;
  }
  return out;
}

namespace {

IntersectionArray closed_form_array(Family f, int D) {
  std::vector<BigInt> b, c;
  for (int i = 0; i < D; ++i) {
    switch (f) {
      case Family::Cycle: b.emplace_back(i == 0 ? 2 : 1); break;
      case Family::FoldedCube: b.emplace_back(2 * D + 1 - i); break;
      case Family::Odd: b.emplace_back(D + 1 - (i + 1) / 2); break;
      case Family::Hypercube: b.emplace_back(2 * D + 1 - i); break;
    }
  }
  for (int i = 1; i <= D; ++i) {
    switch (f) {
      case Family::Cycle: c.emplace_back(1); break;
      case Family::FoldedCube: c.emplace_back(i); break;
      case Family::Odd: c.emplace_back((i + 1) / 2); break;
      case Family::Hypercube: c.emplace_back(i); break;
    }
  }
  return IntersectionArray(std::move(b), std::move(c));
}

}  // namespace

IntersectionArray family_array(Family f, int D) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, IntersectionArray> cache;
  const auto key = std::make_pair(static_cast<int>(f), D);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  IntersectionArray arr = closed_form_array(f, D);
  if (family_order(f, D) <= (1UL << 20)) {
    graphs::Graph g = graphs::construct_family(f, 2 * D + 1);
    auto bfs = graphs::intersection_array_from_vertex(g);
    if (!bfs) throw std::logic_error("constructed family graph is not distance-regular");
    arr = *bfs;
  }
  std::lock_guard lock(mu);
  cache.emplace(key, arr);
  return arr;
}

Classification classify(const IntersectionArray& arr) {
  if (!spectral::is_almost_bipartite(arr)) {
    Classification c;
    c.D = arr.diameter();
    c.verdict = Verdict::NotAlmostBipartite;
    return c;
  }
  return classify(spectral::SpectralData(arr));
}

namespace {

int max_field_degree(const spectral::SpectralData& s) {
  int out = 1;
  for (const auto& t : s.eigenvalues()) out = std::max(out, t.defining_polynomial().degree());
  return out;
}

std::optional<Family> match_family(const spectral::SpectralData& s) {
  const IntersectionArray& arr = s.array();
  const int D = arr.diameter();
  for (Family f : {Family::Cycle, Family::FoldedCube, Family::Odd}) {
    if (s.order() != Rational(family_order(f, D))) continue;
    if (family_array(f, D) == arr) return f;
  }
  return std::nullopt;
}

}  // namespace

Classification classify(const spectral::SpectralData& s) {
  const IntersectionArray& arr = s.array();
  Classification c;
  c.D = arr.diameter();
  c.almost_bipartite = spectral::is_almost_bipartite(arr);
  if (!c.almost_bipartite) {
    c.verdict = Verdict::NotAlmostBipartite;
    return c;
  }
  if (c.D < 3) {
    c.verdict = Verdict::DiameterBelowThree;
    return c;
  }
  c.matched_family = match_family(s);
  if (!c.matched_family || max_field_degree(s) <= kOrderingFieldDegreeCap) {
    c.orderings = spectral::q_polynomial_orderings(s);
    c.orderings_computed = true;
    for (const auto& o : c.orderings) {
      BetaMu bm;
      bm.permutation = o.permutation;
      bm.mu = arr.c(2);
      auto t = o.ordered_eigenvalues(s);
      if (t[1] != t[2]) bm.beta = beta_of(t[0], t[1], t[2], t[3]);
      if (bm.beta && c.D == 3) {
        D3FamilyPoint p = d3_family(*bm.beta, bm.mu);
        bm.family_equations_hold = (p.k - Rational(arr.valency())).is_zero() &&
                                   (p.c2 - Rational(arr.c(2))).is_zero() &&
                                   (p.c3 - Rational(arr.c(3))).is_zero();
      }
      c.beta_mu.push_back(std::move(bm));
    }
    if (c.orderings.empty()) {
      // The known families are Q-polynomial; an empty list here is a bug.
      c.verdict = c.matched_family ? Verdict::ContradictionAlarm : Verdict::NotQPolynomial;
      return c;
    }
  }
  if (c.matched_family) {
    const Family f = *c.matched_family;
    c.verdict = f == Family::Cycle ? Verdict::Cycle : f == Family::FoldedCube ? Verdict::FoldedCube : Verdict::OddGraph;
    return c;
  }
  if (c.D == 3) {
    for (const auto& bm : c.beta_mu)
      if (bm.family_equations_hold) {
        c.family_point = bm;
        break;
      }
    if (c.family_point) {
      c.verdict = Verdict::D3Family;
      if (auto b = c.family_point->beta->as_integer()) c.flags = evaluate_candidate(*b, c.family_point->mu).filters;
      return c;
    }
  }
  c.verdict = Verdict::ContradictionAlarm;
  return c;
}

}  // namespace drg::classify
