#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "optapprox/errors.hpp"

namespace optapprox {

using Complex = std::complex<double>;

/// Finite complex coefficient vector; index k holds the coefficient of z^k.
///
/// Construction strips trailing true zeros (modulus below 1e-300) so the zero
/// series has empty support. Tolerance trimming is a separate explicit
/// operation (trim) because the stored degree drives Gram system sizes.
class CoeffSeries {
 public:
  CoeffSeries() = default;
  explicit CoeffSeries(std::vector<Complex> coeffs);

  static CoeffSeries one();
  static CoeffSeries monomial(std::size_t k, Complex c = Complex(1.0, 0.0));

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of the polynomial; the zero series has no degree.
  std::size_t degree() const;

  /// Coefficient of z^k, zero beyond the stored support.
  Complex coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Complex(0.0, 0.0);
  }

 private:
  std::vector<Complex> coeffs_;
};

/// Coefficient convolution; degrees add.
CoeffSeries multiply(const CoeffSeries& f, const CoeffSeries& g);

CoeffSeries add(const CoeffSeries& f, const CoeffSeries& g);
CoeffSeries subtract(const CoeffSeries& f, const CoeffSeries& g);

/// Multiplication by z^k.
CoeffSeries shift(const CoeffSeries& f, std::size_t k);

/// First n_terms Taylor coefficients of 1/f via the division recursion
/// h_0 = 1/f_0, h_k = -(sum_{j=1}^{k} f_j h_{k-j}) / f_0.
/// Requires f(0) != 0.
CoeffSeries reciprocal_taylor(const CoeffSeries& f, std::size_t n_terms);

/// f(lambda z): coefficient k becomes f_k lambda^k. Requires |lambda| = 1
/// within 1e-12.
CoeffSeries rotate(const CoeffSeries& f, Complex lambda);

/// Analytic Wiener algebra norm, sum of coefficient moduli.
double wiener_norm(const CoeffSeries& f);

/// Horner evaluation of f at z.
Complex evaluate(const CoeffSeries& f, Complex z);

/// Strips trailing coefficients with modulus below tol. Explicit so degree
/// changes are always caller-visible.
CoeffSeries trim(const CoeffSeries& f, double tol);

}  // namespace optapprox
