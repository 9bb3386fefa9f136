#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drg/exact/polynomial.hpp"

namespace drg::spectral {

using exact::BigInt;
using exact::Rational;

/// {b_0, ..., b_{D-1}; c_1, ..., c_D} with the conventions c_0 = 0, b_D = 0.
class IntersectionArray {
 public:
  /// Requires b and c of equal length D >= 1; contents are checked separately.
  IntersectionArray(std::vector<BigInt> b, std::vector<BigInt> c);
  IntersectionArray(std::initializer_list<long> b, std::initializer_list<long> c);

  /// Parses "{b0,b1,...;c1,c2,...}" (whitespace ignored).
  static IntersectionArray parse(std::string_view text);
  std::string to_string() const;

  int diameter() const { return static_cast<int>(b_.size()); }
  const BigInt& valency() const { return b_[0]; }
  BigInt b(int i) const;  // 0 <= i <= D
  BigInt c(int i) const;  // 0 <= i <= D
  BigInt a(int i) const;  // k - b_i - c_i
  /// k_i = k_{i-1} b_{i-1} / c_i.
  Rational sphere_size(int i) const;
  Rational order() const;

  /// Violations of c_1 = 1, b_i >= 1, c_i >= 1, a_i >= 0.
  std::vector<std::string> basic_violations() const;
  /// Violations of c_1 <= ... <= c_D and b_0 >= ... >= b_{D-1}.
  std::vector<std::string> monotonicity_violations() const;
  bool is_valid() const { return basic_violations().empty(); }
  bool is_feasible() const { return is_valid() && monotonicity_violations().empty(); }

  /// Characteristic polynomial of the tridiagonal intersection matrix.
  exact::IntPolynomial characteristic_polynomial() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

 private:
  std::vector<BigInt> b_;
  std::vector<BigInt> c_;
};

/// a_i = 0 for i < D and a_D != 0.
bool is_almost_bipartite(const IntersectionArray& arr);
/// a_i = 0 for all i.
bool is_bipartite(const IntersectionArray& arr);

}  // namespace drg::spectral
