#include <algorithm>
#include <cstdint>

#include <gmpxx.h>

#include "drg/graphs/graph.hpp"

namespace drg::graphs {

using exact::BigInt;

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// det(xI - A) mod p, coefficients lowest degree first.
std::vector<u64> charpoly_mod(const Graph& g, u64 p) {
  const std::size_t n = g.order();
  std::vector<u64> h(n * n, 0);
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) at(u, v) = 1;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
    }
    const u64 inv = inv_mod(at(j + 1, j), p);
    for (std::size_t i = j + 2; i < n; ++i) {
      const u64 u = mul_mod(at(i, j), inv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) at(i, c) = sub_mod(at(i, c), mul_mod(u, at(j + 1, c), p), p);
      for (std::size_t r = 0; r < n; ++r) at(r, j + 1) = add_mod(at(r, j + 1), mul_mod(u, at(r, i), p), p);
    }
  }

  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    std::vector<u64> cur(m + 1, 0);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = add_mod(cur[d + 1], prev[d], p);
      cur[d] = sub_mod(cur[d], mul_mod(at(m - 1, m - 1), prev[d], p), p);
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = mul_mod(prod, at(i, i - 1), p);
      if (prod == 0) break;
      const u64 coef = mul_mod(at(i - 1, m - 1), prod, p);
      if (coef == 0) continue;
      const auto& q = polys[i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) cur[d] = sub_mod(cur[d], mul_mod(coef, q[d], p), p);
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

}  // namespace

exact::IntPolynomial characteristic_polynomial(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return exact::IntPolynomial::constant(1);
  // |coefficient of x^{n-i}| <= C(n,i) * maxdeg^i <= (1 + maxdeg)^n
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(1 + g.max_degree()), static_cast<unsigned long>(n));
  const BigInt need = 2 * bound + 1;

  std::vector<BigInt> coeffs(n + 1, 0);
  BigInt modulus = 1;
  BigInt prime = BigInt(1) << 61;
  while (modulus < need) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = prime.get_ui();
    auto r = charpoly_mod(g, p);
    // CRT: x = c + modulus * ((r - c) * modulus^{-1} mod p)
    BigInt minv;
    BigInt pz = prime;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t d = 0; d <= n; ++d) {
      BigInt t = (BigInt(static_cast<unsigned long>(r[d])) - coeffs[d]) * minv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
      coeffs[d] += modulus * t;
    }
    modulus *= pz;
  }
  const BigInt half = modulus / 2;
  for (auto& c : coeffs)
    if (c > half) c -= modulus;
  return exact::IntPolynomial(std::move(coeffs));
}

std::vector<SpectrumEntry> graph_spectrum(const Graph& g, std::size_t cap) {
  if (g.order() == 0) throw GraphError("empty graph");
  if (g.order() > cap)
    throw GraphError("graph has " + std::to_string(g.order()) + " vertices, above the spectrum cap of " +
                     std::to_string(cap));
  std::vector<SpectrumEntry> out;
  for (auto& [factor, mult] : exact::squarefree_factorization(characteristic_polynomial(g)))
    for (auto& root : exact::isolate_real_roots(factor)) out.push_back({std::move(root), static_cast<std::size_t>(mult)});
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) { return b.value < a.value; });
  return out;
}

}  // namespace drg::graphs
