#include "optapprox/series.hpp"

#include <cmath>
#include <utility>

namespace optapprox {

namespace {
// True-zero threshold for canonicalization; anything larger is user data.
constexpr double kZeroStrip = 1e-300;
}  // namespace

CoeffSeries::CoeffSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) < kZeroStrip) {
    coeffs_.pop_back();
  }
}

CoeffSeries CoeffSeries::one() { return CoeffSeries({Complex(1.0, 0.0)}); }

CoeffSeries CoeffSeries::monomial(std::size_t k, Complex c) {
  std::vector<Complex> v(k + 1, Complex(0.0, 0.0));
  v[k] = c;
  return CoeffSeries(std::move(v));
}

std::size_t CoeffSeries::degree() const {
  if (coeffs_.empty()) {
    throw InvalidArgumentError("zero series has no degree");
  }
  return coeffs_.size() - 1;
}

CoeffSeries multiply(const CoeffSeries& f, const CoeffSeries& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Complex> out(f.size() + g.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Complex fi = f.coeffs()[i];
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] += fi * g.coeffs()[j];
    }
  }
  return CoeffSeries(std::move(out));
}

CoeffSeries add(const CoeffSeries& f, const CoeffSeries& g) {
  std::vector<Complex> out(std::max(f.size(), g.size()), Complex(0.0, 0.0));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = f.coeff(k) + g.coeff(k);
  }
  return CoeffSeries(std::move(out));
}

CoeffSeries subtract(const CoeffSeries& f, const CoeffSeries& g) {
  std::vector<Complex> out(std::max(f.size(), g.size()), Complex(0.0, 0.0));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = f.coeff(k) - g.coeff(k);
  }
  return CoeffSeries(std::move(out));
}

CoeffSeries shift(const CoeffSeries& f, std::size_t k) {
  if (f.is_zero()) return {};
  std::vector<Complex> out(f.size() + k, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < f.size(); ++i) out[i + k] = f.coeffs()[i];
  return CoeffSeries(std::move(out));
}

CoeffSeries reciprocal_taylor(const CoeffSeries& f, std::size_t n_terms) {
  if (f.is_zero() || std::abs(f.coeff(0)) == 0.0) {
    throw ZeroAtOriginError("reciprocal requires f(0) != 0");
  }
  if (n_terms == 0) return {};
  std::vector<Complex> h(n_terms, Complex(0.0, 0.0));
  const Complex inv_f0 = Complex(1.0, 0.0) / f.coeff(0);
  h[0] = inv_f0;
  for (std::size_t k = 1; k < n_terms; ++k) {
    Complex acc(0.0, 0.0);
    const std::size_t jmax = std::min(k, f.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      acc += f.coeffs()[j] * h[k - j];
    }
    h[k] = -acc * inv_f0;
  }
  return CoeffSeries(std::move(h));
}

CoeffSeries rotate(const CoeffSeries& f, Complex lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
    throw NotUnimodularError("rotation parameter must have modulus one");
  }
  std::vector<Complex> out(f.size());
  Complex pw(1.0, 0.0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    out[k] = f.coeffs()[k] * pw;
    pw *= lambda;
  }
  return CoeffSeries(std::move(out));
}

double wiener_norm(const CoeffSeries& f) {
  double s = 0.0;
  for (const Complex& c : f.coeffs()) s += std::abs(c);
  return s;
}

Complex evaluate(const CoeffSeries& f, Complex z) {
  Complex acc(0.0, 0.0);
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = acc * z + f.coeffs()[k];
  }
  return acc;
}

CoeffSeries trim(const CoeffSeries& f, double tol) {
  std::vector<Complex> out = f.coeffs();
  while (!out.empty() && std::abs(out.back()) < tol) out.pop_back();
  return CoeffSeries(std::move(out));
}

}  // namespace optapprox
