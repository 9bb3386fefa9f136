#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "drg/exact/algebraic.hpp"
#include "drg/exact/number_field.hpp"
#include "drg/exact/tensor_algebra.hpp"
#include "drg/spectral/intersection_array.hpp"

namespace drg::spectral {

using exact::AlgebraicReal;
using exact::NumberField;

/// The array does not admit the eigenstructure of a distance-regular graph
/// (repeated or non-real eigenvalues, invalid entries).
class SpectralError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact eigensystem of the tridiagonal intersection matrix.
///
/// Eigenvalue i lives in its own field Q(theta_i). The standard sequence
/// u_l(theta_i) (u_0 = 1, u_1 = theta/k) gives P_il = k_l u_l(theta_i),
/// Q_li = m_i u_l(theta_i) and m_i = n / sum_l k_l u_l(theta_i)^2.
class SpectralData {
 public:
  explicit SpectralData(const IntersectionArray& arr);

  const IntersectionArray& array() const { return array_; }
  int diameter() const { return array_.diameter(); }
  /// n = sum k_l.
  const Rational& order() const { return n_; }

  /// Descending, eigenvalues()[0] == k.
  const std::vector<AlgebraicReal>& eigenvalues() const { return theta_; }
  const NumberField& field(int i) const { return fields_[static_cast<std::size_t>(i)]; }

  const NumberField::Element& u(int i, int l) const;
  NumberField::Element P(int i, int l) const;
  NumberField::Element Q(int l, int i) const;
  const NumberField::Element& multiplicity(int i) const { return m_[static_cast<std::size_t>(i)]; }
  AlgebraicReal multiplicity_value(int i) const;
  std::optional<Rational> multiplicity_rational(int i) const;
  /// Every m_i is a positive integer.
  bool multiplicities_integral() const;
  bool eigenvalues_integral() const;

  /// Exact check of P Q = n I.
  bool verify_pq() const;

  /// K(h,i,j) = sum_l k_l u_l(theta_h) u_l(theta_i) u_l(theta_j); symmetric,
  /// and q^h_ij = m_i m_j K(h,i,j) / n.
  int krein_core_sign(int h, int i, int j) const;
  bool krein_zero(int h, int i, int j) const { return krein_core_sign(h, i, j) == 0; }
  int krein_sign(int h, int i, int j) const;
  AlgebraicReal krein(int h, int i, int j) const;
  /// All q^h_ij >= 0.
  bool krein_nonnegative() const;

  /// Tensor algebra over the distinct fields among `indices`; slot[t] is the
  /// generator standing for theta_{indices[t]}.
  exact::TensorAlgebra algebra_for(const std::vector<int>& indices, std::vector<std::size_t>& slot) const;

 private:
  struct Cache;

  IntersectionArray array_;
  Rational n_;
  std::vector<Rational> k_;
  std::vector<AlgebraicReal> theta_;
  std::vector<NumberField> fields_;
  std::vector<std::vector<NumberField::Element>> u_;  // u_[i][l]
  std::vector<NumberField::Element> m_;
  std::shared_ptr<Cache> cache_;
};

/// Shorthand for SpectralData(arr).
SpectralData spectrum(const IntersectionArray& arr);

}  // namespace drg::spectral
