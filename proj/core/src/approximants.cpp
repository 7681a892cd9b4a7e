#include "optapprox/approximants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace optapprox {

namespace {

constexpr double kCrossCheckTol = 1e-8;

double quadform_epsilon(const SpaceModel& space, const GramSystem& sys,
                        const std::vector<Complex>& a) {
  // ||p f - 1||^2 = ||1||^2 - Re(a^H b) once M a = b.
  Complex dot(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) dot += std::conj(a[i]) * sys.rhs[i];
  const double e2 = space.weight(0) - dot.real();
  return std::sqrt(std::max(e2, 0.0));
}

ApproximationResult make_result(const SpaceModel& space, const CoeffSeries& f,
                                const GramSystem& sys, const GramSolution& sol,
                                std::size_t n, double cond) {
  ApproximationResult res;
  res.n = n;
  res.p_star = CoeffSeries(sol.a);
  res.method = Method::LinearSystem;
  res.cond_estimate = cond;
  res.truncation_degree_used = sys.truncation_degree_used;

  const CoeffSeries residual =
      subtract(multiply(res.p_star, f), CoeffSeries::one());
  res.epsilon_n = std::sqrt(space.norm_squared(residual));
  res.epsilon_lower = res.epsilon_n;
  res.epsilon_upper = res.epsilon_n;
  res.epsilon_quadform = quadform_epsilon(space, sys, sol.a);
  res.conditioning_flag =
      sol.ill_conditioned ||
      std::abs(res.epsilon_n - res.epsilon_quadform) > kCrossCheckTol;
  return res;
}

}  // namespace

ApproximationResult optimal_approximant(const SpaceModel& space,
                                        const CoeffSeries& f, std::size_t n) {
  const GramSystem sys = assemble(space, f, n);
  const GramSolution sol = solve(sys);
  return make_result(space, f, sys, sol, n, sys.cond_estimate);
}

std::vector<ApproximationResult> approximant_sweep(const SpaceModel& space,
                                                   const CoeffSeries& f,
                                                   std::size_t n_max) {
  const GramSystem sys = assemble(space, f, n_max);
  HermitianCholesky chol(sys);
  std::vector<ApproximationResult> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    chol.extend(n + 1);
    const GramSolution sol =
        chol.solve(std::span<const Complex>(sys.rhs.data(), n + 1));
    out.push_back(make_result(space, f, sys, sol, n, chol.cond_estimate()));
  }
  return out;
}

ApproximationResult closed_form_one_minus_z(const SpaceModel& space,
                                            std::size_t n) {
  std::vector<double> phis(n + 2);
  double acc = 0.0;
  for (std::size_t k = 0; k <= n + 1; ++k) {
    acc += 1.0 / space.weight(k);
    phis[k] = acc;
  }
  const double phi_top = phis[n + 1];
  std::vector<Complex> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[k] = Complex(1.0 - phis[k] / phi_top, 0.0);
  }

  ApproximationResult res;
  res.n = n;
  res.p_star = CoeffSeries(std::move(coeffs));
  res.method = Method::ClosedForm;
  res.cond_estimate = 1.0;
  res.truncation_degree_used = 1;
  res.epsilon_lower = std::sqrt(space.c1() / phi_top);
  res.epsilon_upper = std::sqrt(space.c2() / phi_top);
  if (space.orthonormal()) {
    res.epsilon_n = 1.0 / std::sqrt(phi_top);
    res.epsilon_quadform = res.epsilon_n;
  } else {
    res.epsilon_n = std::numeric_limits<double>::quiet_NaN();
    res.epsilon_quadform = res.epsilon_n;
  }
  return res;
}

std::vector<double> optimal_norm_sequence(const SpaceModel& space,
                                          const CoeffSeries& f,
                                          std::size_t n_max) {
  std::vector<double> out;
  out.reserve(n_max + 1);
  for (const ApproximationResult& r : approximant_sweep(space, f, n_max)) {
    out.push_back(r.epsilon_n);
  }
  return out;
}

double phi(const SpaceModel& space, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k <= n; ++k) acc += 1.0 / space.weight(k);
  return acc;
}

double zeta_sum(double alpha) {
  if (!(alpha > 1.0)) {
    throw InvalidArgumentError("zeta_sum requires alpha > 1");
  }
  // Direct summation below N, then the Euler-Maclaurin tail
  //   sum_{m>=N} m^-a = N^{1-a}/(a-1) + N^-a/2 + a N^{-a-1}/12 - ...
  // whose truncation error is below the first omitted term.
  constexpr double kN = 10000.0;
  double s = 0.0;
  for (double m = kN - 1.0; m >= 1.0; m -= 1.0) s += std::pow(m, -alpha);
  const double tail = std::pow(kN, 1.0 - alpha) / (alpha - 1.0) +
                      0.5 * std::pow(kN, -alpha) +
                      alpha / 12.0 * std::pow(kN, -alpha - 1.0);
  return s + tail;
}

RateReport rate_check(const SpaceModel& space, const CoeffSeries& f,
                      std::size_t n_max) {
  RateReport report;
  report.entries.reserve(n_max + 1);
  const std::vector<ApproximationResult> sweep =
      approximant_sweep(space, f, n_max);
  double phi_acc = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    phi_acc += 1.0 / space.weight(n);
    RateEntry e;
    e.n = n;
    e.epsilon_n = sweep[n].epsilon_n;
    e.phi_n = phi_acc;
    e.product_eps2_phi = e.epsilon_n * e.epsilon_n * e.phi_n;
    e.wiener_norm_pf = wiener_norm(multiply(sweep[n].p_star, f));
    report.entries.push_back(e);
  }
  for (const RateEntry& e : report.entries) {
    report.empirical_C = std::max(report.empirical_C, e.product_eps2_phi);
  }
  // No-blow-up flags: the max over the later degrees must not exceed twice
  // the max over the first fifth.
  const std::size_t split = std::max<std::size_t>(1, n_max / 5);
  double head_prod = 0.0, tail_prod = 0.0, head_wien = 0.0, tail_wien = 0.0;
  for (const RateEntry& e : report.entries) {
    if (e.n <= split) {
      head_prod = std::max(head_prod, e.product_eps2_phi);
      head_wien = std::max(head_wien, e.wiener_norm_pf);
    }
    if (e.n >= split) {
      tail_prod = std::max(tail_prod, e.product_eps2_phi);
      tail_wien = std::max(tail_wien, e.wiener_norm_pf);
    }
  }
  report.product_bounded = tail_prod <= 2.0 * head_prod + 1e-12;
  report.wiener_bounded = tail_wien <= 2.0 * head_wien + 1e-12;
  return report;
}

LemmaSumReport lemma_sum_check(const SpaceModel& space, const CoeffSeries& f,
                               std::size_t n_max) {
  if (f.is_zero() || std::abs(f.coeff(0)) == 0.0) {
    throw ZeroAtOriginError("the convolution-sum check requires f(0) != 0");
  }
  LemmaSumReport report;
  if (n_max < report.n_start) return report;
  const CoeffSeries recip = reciprocal_taylor(f, n_max + 1);
  std::vector<double> phis(n_max + 1);
  double acc = 0.0;
  for (std::size_t k = 0; k <= n_max; ++k) {
    acc += 1.0 / space.weight(k);
    phis[k] = acc;
  }
  const std::size_t d = f.degree();
  report.values.reserve(n_max);
  for (std::size_t n = report.n_start; n <= n_max; ++n) {
    Complex s(0.0, 0.0);
    // f^(n-k) vanishes unless n - k <= deg f
    const std::size_t k_lo = n > d ? n - d : 0;
    for (std::size_t k = k_lo; k <= n; ++k) {
      s += phis[k] * recip.coeff(k) * f.coeff(n - k);
    }
    report.values.push_back(std::abs(s) * space.weight(n));
  }
  return report;
}

const char* to_string(Cyclicity c) {
  switch (c) {
    case Cyclicity::Cyclic: return "Cyclic";
    case Cyclicity::NotCyclic: return "NotCyclic";
    case Cyclicity::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

namespace {

// phi at log-spaced indices up to limit, for reporting.
void fill_partial_sums(const SpaceModel& space, std::size_t limit,
                       CyclicityVerdict& verdict) {
  double acc = 0.0;
  std::size_t next = 1;
  for (std::size_t k = 0; k <= limit; ++k) {
    acc += 1.0 / space.weight(k);
    if (k + 1 == next || k == limit) {
      verdict.partial_sum_indices.push_back(k);
      verdict.partial_sums.push_back(acc);
      while (next <= k + 1) next *= 10;
    }
  }
}

}  // namespace

CyclicityVerdict cyclicity_verdict(const SpaceModel& space) {
  const WeightSequence& w = space.weights();
  CyclicityVerdict verdict;

  const auto classify_power = [&](double alpha, double margin) {
    if (alpha <= 1.0 - margin) return Cyclicity::Cyclic;
    if (alpha >= 1.0 + margin) return Cyclicity::NotCyclic;
    return Cyclicity::Undetermined;
  };

  if (w.parametric()) {
    const double alpha = w.alpha();
    fill_partial_sums(space, 10000, verdict);
    if (alpha <= 1.0) {
      verdict.status = Cyclicity::Cyclic;
      verdict.epsilon_limit_bounds = {0.0, 0.0};
    } else {
      verdict.status = Cyclicity::NotCyclic;
      const double total = zeta_sum(alpha);
      verdict.epsilon_limit_bounds = {std::sqrt(space.c1() / total),
                                      std::sqrt(space.c2() / total)};
    }
    return verdict;
  }

  // Table weights: partial sums always; a certified classification only for
  // a power tail whose fitted exponent clears the critical value by the
  // honesty margin.
  const std::size_t table_top = w.table_size() - 1;
  fill_partial_sums(space, table_top, verdict);
  const double phi_table = verdict.partial_sums.back();

  if (w.tail() == WeightSequence::Tail::Forbidden) {
    verdict.status = Cyclicity::Undetermined;
    verdict.epsilon_limit_bounds = {0.0, std::sqrt(space.c2() / phi_table)};
    return verdict;
  }

  constexpr double kMargin = 0.1;
  const double alpha_hat = w.fitted_alpha();
  verdict.status = classify_power(alpha_hat, kMargin);
  if (verdict.status == Cyclicity::Cyclic) {
    verdict.epsilon_limit_bounds = {0.0, 0.0};
  } else if (verdict.status == Cyclicity::NotCyclic) {
    // total = table part + extrapolated power tail sum_{k>=size} 1/(C (k+1)^a)
    const double from = static_cast<double>(w.table_size()) + 1.0;
    const double tail = (std::pow(from, 1.0 - alpha_hat) / (alpha_hat - 1.0) +
                         0.5 * std::pow(from, -alpha_hat) +
                         alpha_hat / 12.0 * std::pow(from, -alpha_hat - 1.0)) /
                        w.fitted_scale();
    const double total = phi_table + tail;
    verdict.epsilon_limit_bounds = {std::sqrt(space.c1() / total),
                                    std::sqrt(space.c2() / total)};
  } else {
    verdict.epsilon_limit_bounds = {0.0, std::sqrt(space.c2() / phi_table)};
  }
  return verdict;
}

ProductReport product_experiment(const SpaceModel& space, const CoeffSeries& f,
                                 const CoeffSeries& g, std::size_t n_max) {
  const CoeffSeries fg = multiply(f, g);
  const std::vector<ApproximationResult> sweep_f = approximant_sweep(space, f, n_max);
  const std::vector<ApproximationResult> sweep_g = approximant_sweep(space, g, n_max);
  const std::vector<ApproximationResult> sweep_fg = approximant_sweep(space, fg, n_max);

  ProductReport report;
  report.entries.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    ProductEntry e;
    e.n = n;
    e.epsilon_n = sweep_fg[n].epsilon_n;
    const CoeffSeries composite =
        multiply(multiply(sweep_f[n].p_star, sweep_g[n].p_star), fg);
    e.composite_error =
        std::sqrt(space.norm_squared(subtract(composite, CoeffSeries::one())));
    if (e.epsilon_n > e.composite_error + 1e-12) {
      report.optimal_le_composite = false;
    }
    report.entries.push_back(e);
  }
  return report;
}

RotationReport rotation_experiment(const SpaceModel& space, const CoeffSeries& f,
                                   Complex lambda, std::size_t n_max) {
  const CoeffSeries rotated = rotate(f, lambda);
  RotationReport report;
  report.epsilon_f = optimal_norm_sequence(space, f, n_max);
  report.epsilon_rotated = optimal_norm_sequence(space, rotated, n_max);
  return report;
}

}  // namespace optapprox
