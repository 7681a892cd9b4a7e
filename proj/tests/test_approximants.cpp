#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "optapprox/approximants.hpp"
#include "optapprox/io.hpp"
#include "optapprox/series.hpp"
#include "optapprox/space.hpp"
#include "support/oracle.hpp"

using namespace optapprox;

namespace {

SpaceModel dirichlet(double alpha) {
  return SpaceModel(WeightSequence::dirichlet(alpha));
}

CoeffSeries make(std::initializer_list<double> reals) {
  std::vector<Complex> c;
  for (double r : reals) c.emplace_back(r, 0.0);
  return CoeffSeries(std::move(c));
}

const CoeffSeries kOneMinusZ = make({1, -1});

}  // namespace

TEST_CASE("optimal approximant examples") {
  const ApproximationResult hardy = optimal_approximant(dirichlet(0.0), kOneMinusZ, 1);
  CHECK(std::abs(hardy.p_star.coeff(0) - Complex(2.0 / 3.0, 0.0)) < 1e-12);
  CHECK(std::abs(hardy.p_star.coeff(1) - Complex(1.0 / 3.0, 0.0)) < 1e-12);
  CHECK(hardy.epsilon_n == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(hardy.method == Method::LinearSystem);
  CHECK_FALSE(hardy.conditioning_flag);

  const ApproximationResult d1 = optimal_approximant(dirichlet(1.0), kOneMinusZ, 0);
  CHECK(std::abs(d1.p_star.coeff(0) - Complex(1.0 / 3.0, 0.0)) < 1e-14);
  CHECK(d1.epsilon_n == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));

  const ApproximationResult constant = optimal_approximant(dirichlet(2.0), CoeffSeries::one(), 7);
  CHECK(constant.p_star.size() == 1);
  CHECK(std::abs(constant.p_star.coeff(0) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(constant.epsilon_n == 0.0);
}

TEST_CASE("epsilon is recomputed from the residual and cross-checked") {
  oracle::Rng rng(7);
  for (double alpha : {-1.0, 0.0, 1.0}) {
    const SpaceModel space = dirichlet(alpha);
    for (int trial = 0; trial < 8; ++trial) {
      const CoeffSeries f = oracle::random_outer_poly(rng, rng.index(4) + 1);
      const ApproximationResult res = optimal_approximant(space, f, rng.index(20));
      const double recomputed = std::sqrt(
          space.norm_squared(subtract(multiply(res.p_star, f), CoeffSeries::one())));
      CHECK(std::abs(res.epsilon_n - recomputed) < 1e-12);
      CHECK(std::abs(res.epsilon_n - res.epsilon_quadform) < 1e-9);
      CHECK_FALSE(res.conditioning_flag);
    }
  }
}

TEST_CASE("closed form examples") {
  const ApproximationResult hardy = closed_form_one_minus_z(dirichlet(0.0), 1);
  CHECK(hardy.method == Method::ClosedForm);
  CHECK(std::abs(hardy.p_star.coeff(0) - Complex(2.0 / 3.0, 0.0)) < 1e-15);
  CHECK(std::abs(hardy.p_star.coeff(1) - Complex(1.0 / 3.0, 0.0)) < 1e-15);
  CHECK(hardy.epsilon_n == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  const ApproximationResult d1 = closed_form_one_minus_z(dirichlet(1.0), 0);
  CHECK(std::abs(d1.p_star.coeff(0) - Complex(1.0 / 3.0, 0.0)) < 1e-15);
  CHECK(d1.epsilon_n == doctest::Approx(1.0 / std::sqrt(1.5)).epsilon(1e-15));

  // 1/w_k = k+1, so phi(1) = 1 + 2 = 3
  const ApproximationResult bergman = closed_form_one_minus_z(dirichlet(-1.0), 0);
  CHECK(bergman.epsilon_n == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  // a forbidden tail shorter than n + 2 weights
  const SpaceModel tiny(WeightSequence::table({1.0, 1.0}));
  CHECK_THROWS_AS(closed_form_one_minus_z(tiny, 1), optapprox::Error);
}

TEST_CASE("closed form in a non-orthonormal space reports bounds only") {
  const SpaceModel riesz(WeightSequence::dirichlet(0.0), 0.25, 4.0);
  const ApproximationResult res = closed_form_one_minus_z(riesz, 1);
  CHECK(std::isnan(res.epsilon_n));
  CHECK(res.epsilon_lower == doctest::Approx(std::sqrt(0.25 / 3.0)));
  CHECK(res.epsilon_upper == doctest::Approx(std::sqrt(4.0 / 3.0)));
  // the polynomial itself does not depend on the Riesz constants
  CHECK(std::abs(res.p_star.coeff(0) - Complex(2.0 / 3.0, 0.0)) < 1e-15);
}

TEST_CASE("closed-form coefficients are real positive and strictly decreasing") {
  for (double alpha : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    const ApproximationResult res = closed_form_one_minus_z(dirichlet(alpha), 20);
    double prev = 1.0;
    for (std::size_t k = 0; k <= 20; ++k) {
      const Complex c = res.p_star.coeff(k);
      CHECK(c.imag() == 0.0);
      CHECK(c.real() > 0.0);
      CHECK(c.real() < prev);
      prev = c.real();
    }
  }
}

TEST_CASE("solver matches the closed form across spaces and degrees") {
  for (double alpha : {-1.0, 0.0, 1.0, 2.0}) {
    const SpaceModel space = dirichlet(alpha);
    const std::vector<ApproximationResult> sweep = approximant_sweep(space, kOneMinusZ, 60);
    for (std::size_t n = 0; n <= 60; n += 3) {
      const ApproximationResult closed = closed_form_one_minus_z(space, n);
      for (std::size_t k = 0; k <= n; ++k) {
        const double expected = closed.p_star.coeff(k).real();
        CHECK(std::abs(sweep[n].p_star.coeff(k) - expected) <= 1e-8 * std::abs(expected));
      }
      CHECK(std::abs(sweep[n].epsilon_n - closed.epsilon_n) <= 1e-10 * closed.epsilon_n);
    }
  }
}

TEST_CASE("norm sequences") {
  const std::vector<double> hardy = optimal_norm_sequence(dirichlet(0.0), kOneMinusZ, 2);
  CHECK(hardy[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(hardy[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(hardy[2] == doctest::Approx(0.5).epsilon(1e-12));

  for (double eps : optimal_norm_sequence(dirichlet(1.0), CoeffSeries::one(), 5)) {
    CHECK(eps == 0.0);
  }

  // alpha = 2: epsilon_200 approaches (pi^2/6)^{-1/2}
  const std::vector<double> d2 = optimal_norm_sequence(dirichlet(2.0), kOneMinusZ, 200);
  const double limit = 1.0 / std::sqrt(std::numbers::pi * std::numbers::pi / 6.0);
  CHECK(std::abs(d2[200] - limit) < 0.005);

  for (std::size_t n = 1; n < d2.size(); ++n) {
    CHECK(d2[n] <= d2[n - 1] + 1e-12);
  }
}

TEST_CASE("phi partial sums") {
  CHECK(phi(dirichlet(0.0), 9) == 10.0);
  CHECK(phi(dirichlet(1.0), 1) == 1.5);
  CHECK(phi(dirichlet(3.0), 0) == 1.0);
  const SpaceModel table(WeightSequence::table({2.0, 4.0}));
  CHECK(phi(table, 1) == 0.75);
  CHECK_THROWS_AS(phi(table, 5), optapprox::Error);
}

TEST_CASE("zeta by summation") {
  CHECK(zeta_sum(2.0) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0)
                             .epsilon(1e-14));
  CHECK(zeta_sum(4.0) ==
        doctest::Approx(std::pow(std::numbers::pi, 4) / 90.0).epsilon(1e-14));
  CHECK(zeta_sum(1.5) == doctest::Approx(2.6123753486854883).epsilon(1e-13));
  CHECK_THROWS_AS(zeta_sum(1.0), optapprox::Error);
}

TEST_CASE("sandwich identity for 1 - z") {
  for (double alpha : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    const SpaceModel space = dirichlet(alpha);
    for (std::size_t n : {0UL, 1UL, 7UL, 40UL}) {
      const double eps = closed_form_one_minus_z(space, n).epsilon_n;
      CHECK(eps * eps * phi(space, n + 1) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("rate check for 1 - z is exactly telescoping") {
  const SpaceModel space = dirichlet(0.0);
  const RateReport report = rate_check(space, kOneMinusZ, 50);
  for (const RateEntry& e : report.entries) {
    // the identity uses phi(n+1); the reported product uses phi(n)
    const double product_next = e.epsilon_n * e.epsilon_n * phi(space, e.n + 1);
    CHECK(product_next == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(e.product_eps2_phi <= 1.0 + 1e-10);
  }
  CHECK(report.product_bounded);
  CHECK(report.wiener_bounded);
  // Wiener norms of p_n (1-z) stay near 2
  for (const RateEntry& e : report.entries) {
    CHECK(e.wiener_norm_pf <= 2.0 + 1e-9);
  }
}

TEST_CASE("rate check for a double boundary zero stays bounded at desk scale") {
  const RateReport report = rate_check(dirichlet(0.0), make({1, 0, -1}), 120);
  CHECK(report.product_bounded);
  CHECK(report.wiener_bounded);
  CHECK(report.empirical_C > 0.0);
  const RateReport trivial = rate_check(dirichlet(0.0), CoeffSeries::one(), 10);
  for (const RateEntry& e : trivial.entries) {
    CHECK(e.epsilon_n == 0.0);
    CHECK(e.product_eps2_phi == 0.0);
  }
}

TEST_CASE("lemma sums telescope for 1 - z") {
  for (double alpha : {0.0, 1.0}) {
    const LemmaSumReport report = lemma_sum_check(dirichlet(alpha), kOneMinusZ, 60);
    CHECK(report.n_start == 1);
    REQUIRE(report.values.size() == 60);
    for (double v : report.values) {
      CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("lemma sums stay bounded for 1 - z^2") {
  const LemmaSumReport report = lemma_sum_check(dirichlet(0.0), make({1, 0, -1}), 100);
  const double head = *std::max_element(report.values.begin(), report.values.begin() + 20);
  const double all = *std::max_element(report.values.begin(), report.values.end());
  CHECK(all <= 2.0 * head + 1e-12);
  CHECK_THROWS_AS(lemma_sum_check(dirichlet(0.0), make({0, 1}), 10), optapprox::Error);
}

TEST_CASE("cyclicity verdicts") {
  for (double alpha : {-1.0, 0.0, 0.5, 1.0}) {
    const CyclicityVerdict v = cyclicity_verdict(dirichlet(alpha));
    CHECK(v.status == Cyclicity::Cyclic);
    CHECK(v.epsilon_limit_bounds.first == 0.0);
    CHECK(v.epsilon_limit_bounds.second == 0.0);
    CHECK_FALSE(v.partial_sums.empty());
  }
  for (double alpha : {1.5, 2.0, 3.0}) {
    const CyclicityVerdict v = cyclicity_verdict(dirichlet(alpha));
    CHECK(v.status == Cyclicity::NotCyclic);
    CHECK(v.epsilon_limit_bounds.first ==
          doctest::Approx(1.0 / std::sqrt(zeta_sum(alpha))).epsilon(1e-14));
  }
  const CyclicityVerdict d2 = cyclicity_verdict(dirichlet(2.0));
  const double limit = 1.0 / std::sqrt(std::numbers::pi * std::numbers::pi / 6.0);
  CHECK(std::abs(d2.epsilon_limit_bounds.first - limit) < 1e-9);

  // partial sums are increasing
  for (std::size_t i = 1; i < d2.partial_sums.size(); ++i) {
    CHECK(d2.partial_sums[i] > d2.partial_sums[i - 1]);
  }
}

TEST_CASE("cyclicity for tables") {
  std::vector<double> fifty(50, 1.0);
  const CyclicityVerdict forbidden = cyclicity_verdict(
      SpaceModel(WeightSequence::table(fifty, WeightSequence::Tail::Forbidden)));
  CHECK(forbidden.status == Cyclicity::Undetermined);
  CHECK(forbidden.partial_sums.back() == doctest::Approx(50.0));
  CHECK(forbidden.epsilon_limit_bounds.second ==
        doctest::Approx(1.0 / std::sqrt(50.0)));

  const auto power_table = [](double alpha) {
    std::vector<double> vals;
    for (std::size_t n = 0; n < 60; ++n) vals.push_back(std::pow(n + 1.0, alpha));
    return SpaceModel(WeightSequence::table(vals, WeightSequence::Tail::PowerExtrapolate));
  };
  CHECK(cyclicity_verdict(power_table(0.5)).status == Cyclicity::Cyclic);
  CHECK(cyclicity_verdict(power_table(2.0)).status == Cyclicity::NotCyclic);
  // inside the honesty margin around the critical exponent
  CHECK(cyclicity_verdict(power_table(1.05)).status == Cyclicity::Undetermined);

  // the certified not-cyclic bound should sit near the parametric value
  const CyclicityVerdict t2 = cyclicity_verdict(power_table(2.0));
  const double limit = 1.0 / std::sqrt(std::numbers::pi * std::numbers::pi / 6.0);
  CHECK(std::abs(t2.epsilon_limit_bounds.first - limit) < 1e-3);
}

TEST_CASE("product experiment") {
  const ProductReport trivial =
      product_experiment(dirichlet(0.0), CoeffSeries::one(), CoeffSeries::one(), 8);
  for (const ProductEntry& e : trivial.entries) {
    CHECK(e.epsilon_n == 0.0);
    CHECK(e.composite_error == 0.0);
  }

  const ProductReport hardy =
      product_experiment(dirichlet(0.0), kOneMinusZ, make({1, 1}), 60);
  CHECK(hardy.optimal_le_composite);
  CHECK(hardy.entries.back().epsilon_n < 0.2);
  CHECK(hardy.entries.back().composite_error < 0.4);
  for (const ProductEntry& e : hardy.entries) {
    CHECK(e.epsilon_n <= e.composite_error + 1e-12);
  }

  // non-cyclic space: the optimal error for (1-z)^2 stays bounded away from
  // zero; the composite comparison flag is not asserted here because the
  // composite polynomial has degree 2n and may beat the degree-n optimum
  const ProductReport d2 =
      product_experiment(dirichlet(2.0), kOneMinusZ, kOneMinusZ, 60);
  CHECK(d2.entries.back().epsilon_n > 0.5);
  CHECK(d2.entries.back().composite_error > 0.5);
}

TEST_CASE("rotation experiment") {
  const RotationReport identity =
      rotation_experiment(dirichlet(1.0), kOneMinusZ, Complex(1.0, 0.0), 20);
  for (std::size_t n = 0; n < identity.epsilon_f.size(); ++n) {
    CHECK(identity.epsilon_f[n] == identity.epsilon_rotated[n]);
  }

  const RotationReport flip =
      rotation_experiment(dirichlet(0.0), kOneMinusZ, Complex(-1.0, 0.0), 30);
  for (std::size_t n = 0; n <= 30; ++n) {
    CHECK(flip.epsilon_f[n] ==
          doctest::Approx(1.0 / std::sqrt(static_cast<double>(n) + 2.0)).epsilon(1e-12));
    CHECK(std::abs(flip.epsilon_f[n] - flip.epsilon_rotated[n]) < 1e-10);
  }

  const RotationReport quarter =
      rotation_experiment(dirichlet(1.0), kOneMinusZ, Complex(0.0, 1.0), 25);
  for (std::size_t n = 0; n <= 25; ++n) {
    CHECK(std::abs(quarter.epsilon_f[n] - quarter.epsilon_rotated[n]) < 1e-10);
  }
}

TEST_CASE("functions with no zeros on the closed disc decay geometrically") {
  const std::vector<double> eps = optimal_norm_sequence(dirichlet(0.0), make({2, -1}), 40);
  // fit log eps_n ~ log A + n log r over the stable range
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t n = 5; n <= 35; ++n) {
    const double x = static_cast<double>(n);
    const double y = std::log(eps[n]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  const double slope = (sxy - sx * sy / count) / (sxx - sx * sx / count);
  const double r = std::exp(slope);
  CHECK(r < 0.9);
  CHECK(r > 0.0);
  // and the fitted bound A r^n actually dominates
  const double log_a = sy / count - slope * sx / count;
  for (std::size_t n = 5; n <= 35; ++n) {
    CHECK(eps[n] <= 1.5 * std::exp(log_a + slope * static_cast<double>(n)));
  }
}

TEST_CASE("report serialization carries the pinned field names") {
  const RateReport rates = rate_check(dirichlet(0.0), kOneMinusZ, 3);
  const std::string json = rate_report_to_json(rates);
  for (const char* field : {"\"n\"", "\"epsilon_n\"", "\"phi_n\"",
                            "\"product_eps2_phi\"", "\"wiener_norm_pf\"",
                            "\"empirical_C\""}) {
    CHECK(json.find(field) != std::string::npos);
  }
  const std::string csv = rate_report_to_csv(rates);
  CHECK(csv.rfind("n,epsilon_n,phi_n,product_eps2_phi,wiener_norm_pf\n", 0) == 0);
}
