#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "optapprox/series.hpp"
#include "optapprox/space.hpp"

namespace optapprox {

/// Hermitian positive definite system M a = b whose solution holds the
/// coefficients of the degree-n optimal approximant to 1/f:
/// m_ij = <z^j f, z^i f>, b_i = <1, z^i f>.
struct GramSystem {
  std::size_t degree = 0;  // n
  std::size_t dim = 0;     // n + 1
  std::vector<Complex> matrix;  // row-major dim x dim, Hermitian
  std::vector<Complex> rhs;
  /// Cholesky pivot-ratio proxy for the condition number; an estimate, not
  /// a guarantee. Infinite when the factorization broke down.
  double cond_estimate = 1.0;
  /// Degree of f actually used after the tail-mass trim.
  std::size_t truncation_degree_used = 0;

  Complex at(std::size_t i, std::size_t j) const { return matrix[i * dim + j]; }
};

/// Builds the order-(n+1) system in the orthonormal case, where
/// m_ij = sum_k w_k f_{k-j} conj(f_{k-i}) and b_i = w_0 conj(f(0)) [i == 0].
/// f is trimmed to the smallest degree whose excluded coordinate mass
/// sum w_k |f_k|^2 stays below tail_tol^2.
GramSystem assemble(const SpaceModel& space, const CoeffSeries& f, std::size_t n);

struct GramSolution {
  std::vector<Complex> a;
  double residual_inf = 0.0;
  int refinement_steps = 0;
  bool ill_conditioned = false;  // cond_estimate above 1e12; result still valid
};

/// Cholesky solve with iterative refinement; the solution satisfies
/// ||Ma - b||_inf <= 1e-9 ||b||_inf unless flagged.
GramSolution solve(const GramSystem& system);

/// Unpivoted complex Cholesky that grows one trailing row at a time, so a
/// degree sweep factors the largest system once instead of once per degree.
/// The referenced system must outlive the factor.
class HermitianCholesky {
 public:
  explicit HermitianCholesky(const GramSystem& system);

  /// Extends the factorization to cover the leading `rows` rows. Throws
  /// NotPositiveDefinite with a pivoted diagnostic on breakdown.
  void extend(std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  double pivot_min() const;
  double pivot_max() const;
  double cond_estimate() const;

  /// Solves the leading rhs.size() x rhs.size() block, with refinement.
  GramSolution solve(std::span<const Complex> rhs) const;

 private:
  std::vector<Complex> raw_solve(std::span<const Complex> b) const;

  const GramSystem* system_;
  std::size_t rows_ = 0;
  std::vector<Complex> lower_;  // row-major with the system's stride
  std::vector<double> diag_;
};

}  // namespace optapprox
