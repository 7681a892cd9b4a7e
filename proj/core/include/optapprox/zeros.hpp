#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "optapprox/series.hpp"
#include "optapprox/space.hpp"

namespace optapprox {

/// Radial region inner <= |z| <= outer. outer may be +infinity.
struct Annulus {
  double inner = 0.0;
  double outer = 0.0;
  bool degenerate = false;  // inner == outer

  bool contains_modulus(double r, double tol = 1e-8) const {
    return r >= inner - tol && r <= outer + tol;
  }
};

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;   // clustered; multiplicities sum to the degree
  double residual_max = 0.0; // max |p(root)| over cluster representatives
  bool converged = true;     // false when the iteration hit the sweep cap
  int sweeps_used = 0;

  std::size_t total_multiplicity() const;
};

inline constexpr std::uint64_t kDefaultRootSeed = 1;

/// All complex roots by simultaneous Aberth-Ehrlich iteration from
/// perturbed-circle starts, polished by Newton steps. Clusters within 1e-7
/// merge with summed multiplicity. Deterministic for a fixed seed.
RootSet find_roots(const CoeffSeries& p, std::uint64_t seed = kDefaultRootSeed);

/// Zero region [min a_k/a_{k+1}, max a_k/a_{k+1}] for strictly positive real
/// coefficients.
Annulus enestrom_annulus(const CoeffSeries& p);

/// Region containing the zeros of the closed-form approximant for 1 - z:
/// the bounds m <= 1/(|z|-1) <= M with m, M the min/max over k < n of
/// w_{k+1} sum_{j=k+2}^{n+1} 1/w_j, mapped to [1 + 1/M, 1 + 1/m].
Annulus pstar_region(const SpaceModel& space, std::size_t n);

/// Region containing the zeros of p_n*(z)(1-z) - 1: consecutive weight
/// ratios [min w_{k+1}/w_k, max w_{k+1}/w_k] over 0 <= k <= n, the ratio
/// range of the degree-(n+1) residual's coefficients.
Annulus residual_zero_region(const SpaceModel& space, std::size_t n);

/// Split f = g(z) prod_k (1 - conj(lambda_k) z) with |lambda_k| = 1 and g
/// zero-free on the closed disc. Rejects roots inside the open disc.
struct BoundaryFactorization {
  CoeffSeries outer_part;          // g
  std::vector<Complex> boundary;   // lambda_k, repeated per multiplicity
};

BoundaryFactorization factor_boundary_zeros(const CoeffSeries& f,
                                            std::uint64_t seed = kDefaultRootSeed);

}  // namespace optapprox
