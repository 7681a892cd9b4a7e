#include "optapprox/gram.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace optapprox {

namespace {

constexpr double kIllConditioned = 1e12;
constexpr double kResidualTarget = 1e-9;  // relative to ||b||_inf
constexpr int kMaxRefinements = 8;

double inf_norm(std::span<const Complex> v) {
  double m = 0.0;
  for (const Complex& x : v) m = std::max(m, std::abs(x));
  return m;
}

// y = b - M[:m,:m] a
std::vector<Complex> residual_prefix(const GramSystem& sys, std::size_t m,
                                     std::span<const Complex> a,
                                     std::span<const Complex> b) {
  std::vector<Complex> r(m);
  for (std::size_t i = 0; i < m; ++i) {
    Complex acc(0.0, 0.0);
    const Complex* row = sys.matrix.data() + i * sys.dim;
    for (std::size_t j = 0; j < m; ++j) acc += row[j] * a[j];
    r[i] = b[i] - acc;
  }
  return r;
}

}  // namespace

GramSystem assemble(const SpaceModel& space, const CoeffSeries& f, std::size_t n) {
  if (f.is_zero()) {
    throw ZeroFunctionError("cannot assemble a Gram system for f = 0");
  }
  if (!space.orthonormal()) {
    throw NotOrthonormalError(
        "Gram assembly needs the orthonormal case c1 = c2 = 1");
  }

  // Trim f to the smallest degree whose excluded mass sum w_k |f_k|^2 is
  // below tail_tol^2; keeps Gram sizes honest for near-polynomial input.
  const double tol2 = space.truncation().tail_tol * space.truncation().tail_tol;
  std::size_t used_degree = f.degree();
  {
    double suffix = 0.0;
    std::size_t k = f.size();
    while (k-- > 0) {
      suffix += space.weight(k) * std::norm(f.coeffs()[k]);
      if (suffix >= tol2) {
        used_degree = k;
        break;
      }
    }
    if (suffix < tol2) used_degree = f.degree();  // f too small to trim safely
  }

  GramSystem sys;
  sys.degree = n;
  sys.dim = n + 1;
  sys.truncation_degree_used = used_degree;
  sys.matrix.assign(sys.dim * sys.dim, Complex(0.0, 0.0));
  sys.rhs.assign(sys.dim, Complex(0.0, 0.0));
  sys.rhs[0] = space.weight(0) * std::conj(f.coeff(0));

  // m_ij = sum_k w_k f_{k-j} conj(f_{k-i}), k in [max(i,j), min(i,j)+d]
  for (std::size_t i = 0; i < sys.dim; ++i) {
    for (std::size_t j = i; j < sys.dim; ++j) {
      if (j > i + used_degree) break;  // band edge
      Complex acc(0.0, 0.0);
      for (std::size_t k = j; k <= i + used_degree; ++k) {
        acc += space.weight(k) * f.coeff(k - j) * std::conj(f.coeff(k - i));
      }
      sys.matrix[i * sys.dim + j] = acc;
      sys.matrix[j * sys.dim + i] = std::conj(acc);
    }
  }

  try {
    HermitianCholesky chol(sys);
    chol.extend(sys.dim);
    sys.cond_estimate = chol.cond_estimate();
  } catch (const NotPositiveDefiniteError&) {
    sys.cond_estimate = std::numeric_limits<double>::infinity();
  }
  return sys;
}

GramSolution solve(const GramSystem& system) {
  HermitianCholesky chol(system);
  chol.extend(system.dim);
  return chol.solve(system.rhs);
}

HermitianCholesky::HermitianCholesky(const GramSystem& system)
    : system_(&system) {
  lower_.assign(system.dim * system.dim, Complex(0.0, 0.0));
  diag_.reserve(system.dim);
}

void HermitianCholesky::extend(std::size_t rows) {
  const std::size_t dim = system_->dim;
  if (rows > dim) {
    throw InvalidArgumentError("factorization extended past the system size");
  }
  for (std::size_t i = rows_; i < rows; ++i) {
    const Complex* arow = system_->matrix.data() + i * dim;
    Complex* lrow = lower_.data() + i * dim;
    for (std::size_t j = 0; j < i; ++j) {
      Complex acc = arow[j];
      const Complex* ljrow = lower_.data() + j * dim;
      for (std::size_t k = 0; k < j; ++k) acc -= lrow[k] * std::conj(ljrow[k]);
      lrow[j] = acc / diag_[j];
    }
    double d = arow[i].real();
    for (std::size_t k = 0; k < i; ++k) d -= std::norm(lrow[k]);
    if (!(d > 0.0) || !std::isfinite(d)) {
      // Pivoted diagnostic: report the largest remaining Schur diagonal so
      // the caller can tell numerical semidefiniteness from garbage input.
      double best = -std::numeric_limits<double>::infinity();
      std::size_t best_row = i;
      for (std::size_t r = i; r < rows; ++r) {
        double s = system_->matrix[r * dim + r].real();
        const Complex* rrow = lower_.data() + r * dim;
        for (std::size_t k = 0; k < i; ++k) s -= std::norm(rrow[k]);
        if (s > best) {
          best = s;
          best_row = r;
        }
      }
      throw NotPositiveDefiniteError(
          "Cholesky pivot " + std::to_string(d) + " at row " + std::to_string(i) +
          " is not positive (largest remaining pivot " + std::to_string(best) +
          " at row " + std::to_string(best_row) +
          "); the function may be zero or catastrophically truncated");
    }
    diag_.push_back(std::sqrt(d));
    lrow[i] = Complex(diag_.back(), 0.0);
  }
  rows_ = std::max(rows_, rows);
}

double HermitianCholesky::pivot_min() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows_; ++i) m = std::min(m, diag_[i]);
  return m;
}

double HermitianCholesky::pivot_max() const {
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) m = std::max(m, diag_[i]);
  return m;
}

double HermitianCholesky::cond_estimate() const {
  if (rows_ == 0) return 1.0;
  const double r = pivot_max() / pivot_min();
  return r * r;
}

std::vector<Complex> HermitianCholesky::raw_solve(std::span<const Complex> b) const {
  const std::size_t m = b.size();
  const std::size_t dim = system_->dim;
  // forward: L y = b
  std::vector<Complex> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    Complex acc = b[i];
    const Complex* lrow = lower_.data() + i * dim;
    for (std::size_t k = 0; k < i; ++k) acc -= lrow[k] * y[k];
    y[i] = acc / diag_[i];
  }
  // backward: L^H x = y
  std::vector<Complex> x(m);
  for (std::size_t i = m; i-- > 0;) {
    Complex acc = y[i];
    for (std::size_t k = i + 1; k < m; ++k) {
      acc -= std::conj(lower_[k * dim + i]) * x[k];
    }
    x[i] = acc / diag_[i];
  }
  return x;
}

GramSolution HermitianCholesky::solve(std::span<const Complex> rhs) const {
  const std::size_t m = rhs.size();
  if (m == 0 || m > rows_) {
    throw InvalidArgumentError("solve size must be within the factored rows");
  }
  GramSolution sol;
  sol.a = raw_solve(rhs);

  const double b_scale = inf_norm(rhs);
  const double target = kResidualTarget * (b_scale > 0.0 ? b_scale : 1.0);

  // One refinement step always, more only while the residual stays above
  // the target.
  for (int step = 0; step < kMaxRefinements; ++step) {
    std::vector<Complex> r = residual_prefix(*system_, m, sol.a, rhs);
    sol.residual_inf = inf_norm(r);
    if (step > 0 && sol.residual_inf <= target) break;
    if (sol.residual_inf == 0.0) break;
    std::vector<Complex> delta = raw_solve(r);
    for (std::size_t i = 0; i < m; ++i) sol.a[i] += delta[i];
    sol.refinement_steps = step + 1;
  }
  {
    std::vector<Complex> r = residual_prefix(*system_, m, sol.a, rhs);
    sol.residual_inf = inf_norm(r);
  }

  // condition proxy over the leading block actually used
  double pmin = std::numeric_limits<double>::infinity();
  double pmax = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    pmin = std::min(pmin, diag_[i]);
    pmax = std::max(pmax, diag_[i]);
  }
  sol.ill_conditioned = (pmax / pmin) * (pmax / pmin) > kIllConditioned;
  return sol;
}

}  // namespace optapprox
