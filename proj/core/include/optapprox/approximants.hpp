#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "optapprox/gram.hpp"
#include "optapprox/series.hpp"
#include "optapprox/space.hpp"

namespace optapprox {

enum class Method { LinearSystem, ClosedForm };

/// Degree-n optimal approximant to 1/f together with the achieved norm and
/// solver diagnostics. epsilon_n is always recomputed from the residual
/// ||p f - 1||; the quadratic-form value is kept alongside as a cross-check.
struct ApproximationResult {
  std::size_t n = 0;
  CoeffSeries p_star;
  double epsilon_n = 0.0;       // NaN when only bounds are available
  double epsilon_lower = 0.0;   // Riesz-constant bounds; equal when exact
  double epsilon_upper = 0.0;
  double epsilon_quadform = 0.0;
  double cond_estimate = 1.0;
  std::size_t truncation_degree_used = 0;
  Method method = Method::LinearSystem;
  /// Set when the residual and quadratic-form norms disagree beyond 1e-8 or
  /// the system looked ill-conditioned.
  bool conditioning_flag = false;
};

/// Solves the Gram system of degree n for p_n*. Orthonormal case only.
ApproximationResult optimal_approximant(const SpaceModel& space,
                                        const CoeffSeries& f, std::size_t n);

/// All degrees 0..n_max in one pass over a single incrementally factored
/// system; entry k is the degree-k result.
std::vector<ApproximationResult> approximant_sweep(const SpaceModel& space,
                                                   const CoeffSeries& f,
                                                   std::size_t n_max);

/// Closed-form approximant for f(z) = 1 - z with coefficients
/// a_k = 1 - phi(k)/phi(n+1), phi(k) = sum_{j<=k} 1/w_j. In the orthonormal
/// case epsilon_n = phi(n+1)^{-1/2} exactly; otherwise only the bound fields
/// are populated and epsilon_n is NaN.
ApproximationResult closed_form_one_minus_z(const SpaceModel& space, std::size_t n);

/// [epsilon_0, ..., epsilon_{n_max}] for f; nonincreasing.
std::vector<double> optimal_norm_sequence(const SpaceModel& space,
                                          const CoeffSeries& f, std::size_t n_max);

/// phi(n) = sum_{k=0}^{n} 1/w_k.
double phi(const SpaceModel& space, std::size_t n);

/// sum_{m>=1} m^{-alpha} for alpha > 1, by direct summation with an
/// Euler-Maclaurin tail; absolute error below 1e-13.
double zeta_sum(double alpha);

struct RateEntry {
  std::size_t n = 0;
  double epsilon_n = 0.0;
  double phi_n = 0.0;
  double product_eps2_phi = 0.0;
  double wiener_norm_pf = 0.0;
};

/// Decay-rate diagnostics: epsilon_n^2 phi(n) should stay bounded and the
/// Wiener norms of p_n* f should stay uniformly bounded when the boundary
/// zeros of f are simple.
struct RateReport {
  std::vector<RateEntry> entries;
  double empirical_C = 0.0;  // max of product_eps2_phi
  bool product_bounded = false;
  bool wiener_bounded = false;
};

/// Caller asserts f is zero-free on the open disc and analytic past the
/// boundary; the zeros module can verify that for polynomials.
RateReport rate_check(const SpaceModel& space, const CoeffSeries& f,
                      std::size_t n_max);

/// Values s_n w_n for n = n_start .. n_max, where
/// s_n = |sum_{k=0}^n phi(k) (1/f)^(k) f^(n-k)|; boundedness is the
/// convolution-sum claim at desk scale. n_start = 1.
struct LemmaSumReport {
  std::size_t n_start = 1;
  std::vector<double> values;
};

LemmaSumReport lemma_sum_check(const SpaceModel& space, const CoeffSeries& f,
                               std::size_t n_max);

enum class Cyclicity { Cyclic, NotCyclic, Undetermined };

const char* to_string(Cyclicity c);

/// Divergence verdict on sum 1/w_k, which decides cyclicity for functions
/// analytic past the boundary with no zeros in the open disc.
struct CyclicityVerdict {
  Cyclicity status = Cyclicity::Undetermined;
  std::vector<std::size_t> partial_sum_indices;
  std::vector<double> partial_sums;  // phi at the reported indices
  std::pair<double, double> epsilon_limit_bounds{0.0, 0.0};
};

CyclicityVerdict cyclicity_verdict(const SpaceModel& space);

struct ProductEntry {
  std::size_t n = 0;
  double epsilon_n = 0.0;        // optimal error for the product fg
  double composite_error = 0.0;  // error achieved by p_n(f) q_n(g)
};

/// Compares the true optimal errors for fg against the products of the
/// factors' optimal approximants; optimality forces epsilon_n <= composite.
struct ProductReport {
  std::vector<ProductEntry> entries;
  bool optimal_le_composite = true;
};

ProductReport product_experiment(const SpaceModel& space, const CoeffSeries& f,
                                 const CoeffSeries& g, std::size_t n_max);

/// Optimal norms of f and of f(lambda z) side by side; identical in the
/// orthonormal case because the Gram systems are diagonally unitarily similar.
struct RotationReport {
  std::vector<double> epsilon_f;
  std::vector<double> epsilon_rotated;
};

RotationReport rotation_experiment(const SpaceModel& space, const CoeffSeries& f,
                                   Complex lambda, std::size_t n_max);

}  // namespace optapprox
