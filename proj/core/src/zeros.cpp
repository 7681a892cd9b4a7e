#include "optapprox/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace optapprox {

namespace {

constexpr double kTrueZero = 1e-300;
constexpr double kClusterTol = 1e-7;
constexpr double kBoundaryBand = 1e-8;
constexpr int kMaxSweeps = 500;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// uniform in [0, 1); raw bit mapping keeps runs identical across platforms
double unit_double(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

struct EvalPair {
  Complex value;
  Complex derivative;
};

EvalPair horner(const std::vector<Complex>& c, Complex z) {
  Complex p(0.0, 0.0), dp(0.0, 0.0);
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

// sum |c_k| |z|^k, the scale against which |p(z)| counts as numerically zero
double coeff_scale_at(const std::vector<Complex>& c, double r) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + std::abs(c[k]);
  return acc;
}

std::vector<Root> cluster_roots(std::vector<Complex> points) {
  std::vector<Root> out;
  std::vector<bool> used(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (used[i]) continue;
    // grow the cluster transitively
    std::vector<std::size_t> members{i};
    used[i] = true;
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (used[j]) continue;
        if (std::abs(points[members[m]] - points[j]) <= kClusterTol) {
          used[j] = true;
          members.push_back(j);
        }
      }
    }
    Complex mean(0.0, 0.0);
    for (std::size_t m : members) mean += points[m];
    mean /= static_cast<double>(members.size());
    out.push_back({mean, static_cast<int>(members.size())});
  }
  return out;
}

// divide f by (1 - conj(lambda) z); the caller guarantees 1/conj(lambda)
// is (numerically) a root so the remainder is dropped
CoeffSeries deflate_boundary_factor(const CoeffSeries& f, Complex lambda) {
  const Complex lbar = std::conj(lambda);
  std::vector<Complex> q(f.size() - 1);
  Complex carry(0.0, 0.0);
  for (std::size_t k = 0; k + 1 < f.size(); ++k) {
    carry = f.coeff(k) + lbar * carry;
    q[k] = carry;
  }
  return CoeffSeries(std::move(q));
}

}  // namespace

std::size_t RootSet::total_multiplicity() const {
  std::size_t total = 0;
  for (const Root& r : roots) total += static_cast<std::size_t>(r.multiplicity);
  return total;
}

RootSet find_roots(const CoeffSeries& p, std::uint64_t seed) {
  if (p.is_zero() || p.degree() == 0) {
    throw DegreeZeroError("root finding needs degree >= 1");
  }

  const std::vector<Complex>& full = p.coeffs();
  std::size_t origin_mult = 0;
  while (std::abs(full[origin_mult]) < kTrueZero) ++origin_mult;
  std::vector<Complex> c(full.begin() + static_cast<std::ptrdiff_t>(origin_mult),
                         full.end());
  const std::size_t d = c.size() - 1;

  RootSet out;
  std::vector<Complex> iterates;
  if (d >= 1) {
    // starting circle at the root-modulus scale, symmetry broken by a fixed
    // angular offset plus seeded jitter
    double r0 = std::pow(std::abs(c[0] / c[d]), 1.0 / static_cast<double>(d));
    if (!std::isfinite(r0) || r0 == 0.0) r0 = 1.0;
    std::uint64_t state = seed ^ 0x517cc1b727220a95ULL;
    iterates.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      const double theta =
          2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) /
              static_cast<double>(d) +
          0.7 + 0.1 * (unit_double(state) - 0.5);
      const double rad = r0 * (1.0 + 0.05 * (unit_double(state) - 0.5));
      iterates[j] = Complex(rad * std::cos(theta), rad * std::sin(theta));
    }

    std::vector<bool> settled(d, false);
    bool all_settled = false;
    int sweep = 0;
    for (; sweep < kMaxSweeps && !all_settled; ++sweep) {
      all_settled = true;
      for (std::size_t j = 0; j < d; ++j) {
        if (settled[j]) continue;
        const EvalPair ev = horner(c, iterates[j]);
        const double scale = coeff_scale_at(c, std::abs(iterates[j]));
        if (std::abs(ev.value) <= 8.0 * std::numeric_limits<double>::epsilon() * scale) {
          settled[j] = true;
          continue;
        }
        Complex newton;
        if (ev.derivative == Complex(0.0, 0.0)) {
          // nudge off a critical point
          newton = Complex(kClusterTol, kClusterTol);
        } else {
          newton = ev.value / ev.derivative;
        }
        Complex repulsion(0.0, 0.0);
        for (std::size_t k = 0; k < d; ++k) {
          if (k != j) repulsion += 1.0 / (iterates[j] - iterates[k]);
        }
        const Complex denom = 1.0 - newton * repulsion;
        const Complex step = denom == Complex(0.0, 0.0) ? newton : newton / denom;
        iterates[j] -= step;
        if (std::abs(step) > 1e-15 * (1.0 + std::abs(iterates[j]))) {
          all_settled = false;
        } else {
          settled[j] = true;
        }
      }
    }
    out.sweeps_used = sweep;
    out.converged = all_settled;

    // Newton polish; keep a step only when it actually reduces |p|
    for (std::size_t j = 0; j < d; ++j) {
      for (int it = 0; it < 3; ++it) {
        const EvalPair ev = horner(c, iterates[j]);
        if (ev.derivative == Complex(0.0, 0.0)) break;
        const Complex candidate = iterates[j] - ev.value / ev.derivative;
        if (std::abs(horner(c, candidate).value) < std::abs(ev.value)) {
          iterates[j] = candidate;
        } else {
          break;
        }
      }
    }
  } else {
    out.converged = true;
  }

  for (std::size_t k = 0; k < origin_mult; ++k) iterates.push_back(Complex(0.0, 0.0));
  out.roots = cluster_roots(std::move(iterates));
  for (const Root& r : out.roots) {
    out.residual_max =
        std::max(out.residual_max, std::abs(evaluate(p, r.value)));
  }
  return out;
}

Annulus enestrom_annulus(const CoeffSeries& p) {
  if (p.is_zero() || p.degree() == 0) {
    throw DegreeZeroError("the coefficient-ratio bound needs degree >= 1");
  }
  for (const Complex& ck : p.coeffs()) {
    if (!(ck.real() > 0.0) || std::abs(ck.imag()) >= 1e-14) {
      throw NotPositiveCoefficientsError(
          "all coefficients must be strictly positive reals");
    }
  }
  Annulus a;
  a.inner = std::numeric_limits<double>::infinity();
  a.outer = 0.0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    const double ratio = p.coeffs()[k].real() / p.coeffs()[k + 1].real();
    a.inner = std::min(a.inner, ratio);
    a.outer = std::max(a.outer, ratio);
  }
  a.degenerate = a.inner == a.outer;
  return a;
}

Annulus pstar_region(const SpaceModel& space, std::size_t n) {
  if (n < 1) {
    throw InvalidArgumentError("the approximant zero region needs n >= 1");
  }
  // tail_sum(k) = sum_{j=k+2}^{n+1} 1/w_j
  double tail_sum = 0.0;
  std::vector<double> tails(n);  // k = 0..n-1
  for (std::size_t k = n; k-- > 0;) {
    tail_sum += 1.0 / space.weight(k + 2);
    tails[k] = tail_sum;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double v = space.weight(k + 1) * tails[k];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  Annulus a;
  a.inner = 1.0 + 1.0 / hi;
  a.outer = 1.0 + 1.0 / lo;
  a.degenerate = a.inner == a.outer;
  return a;
}

Annulus residual_zero_region(const SpaceModel& space, std::size_t n) {
  if (n < 1) {
    throw InvalidArgumentError("the residual zero region needs n >= 1");
  }
  Annulus a;
  a.inner = std::numeric_limits<double>::infinity();
  a.outer = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double ratio = space.weight(k + 1) / space.weight(k);
    a.inner = std::min(a.inner, ratio);
    a.outer = std::max(a.outer, ratio);
  }
  a.degenerate = a.inner == a.outer;
  return a;
}

BoundaryFactorization factor_boundary_zeros(const CoeffSeries& f,
                                            std::uint64_t seed) {
  if (f.is_zero()) {
    throw ZeroFunctionError("cannot factor the zero function");
  }
  BoundaryFactorization result;
  if (f.degree() == 0) {
    result.outer_part = f;
    return result;
  }

  const RootSet roots = find_roots(f, seed);
  for (const Root& r : roots.roots) {
    const double mod = std::abs(r.value);
    if (mod < 1.0 - kBoundaryBand) {
      throw RootInOpenDiscError(
          "root at modulus " + std::to_string(mod) +
          " lies inside the open disc; such a function cannot be cyclic");
    }
  }

  CoeffSeries g = f;
  for (const Root& r : roots.roots) {
    if (std::abs(std::abs(r.value) - 1.0) > kBoundaryBand) continue;
    const Complex lambda = r.value / std::abs(r.value);
    for (int m = 0; m < r.multiplicity; ++m) {
      result.boundary.push_back(lambda);
      g = deflate_boundary_factor(g, lambda);
    }
  }
  result.outer_part = g;
  return result;
}

}  // namespace optapprox
