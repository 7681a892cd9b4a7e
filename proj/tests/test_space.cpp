#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "optapprox/series.hpp"
#include "optapprox/space.hpp"
#include "support/oracle.hpp"

using optapprox::CoeffSeries;
using optapprox::Complex;
using optapprox::SpaceModel;
using optapprox::WeightSequence;

namespace {

SpaceModel dirichlet(double alpha) {
  return SpaceModel(WeightSequence::dirichlet(alpha));
}

CoeffSeries make(std::initializer_list<double> reals) {
  std::vector<Complex> c;
  for (double r : reals) c.emplace_back(r, 0.0);
  return CoeffSeries(std::move(c));
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "optapprox_test_weights_" + std::to_string(counter++) + ".csv";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parametric weights") {
  CHECK(dirichlet(1.0).weight(3) == 4.0);
  CHECK(dirichlet(0.0).weight(17) == 1.0);
  CHECK(dirichlet(-1.0).weight(4) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("table weights and tails") {
  const WeightSequence forbidden =
      WeightSequence::table({1.0, 2.0, 3.0}, WeightSequence::Tail::Forbidden);
  CHECK(forbidden(2) == 3.0);
  CHECK_THROWS_AS(forbidden(3), optapprox::Error);

  // exact power-law table: the fit must recover the exponent
  std::vector<double> vals;
  for (std::size_t n = 0; n < 40; ++n) vals.push_back(std::pow(n + 1.0, 0.5));
  const WeightSequence power =
      WeightSequence::table(vals, WeightSequence::Tail::PowerExtrapolate);
  CHECK(power.fitted_alpha() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(power(100) == doctest::Approx(std::pow(101.0, 0.5)).epsilon(1e-9));

  CHECK_THROWS_AS(WeightSequence::table({}), optapprox::Error);
  CHECK_THROWS_AS(WeightSequence::table({1.0, -2.0}), optapprox::Error);
  // ratio 8 breaks the default band [1/4, 4]
  CHECK_THROWS_AS(WeightSequence::table({1.0, 8.0}), optapprox::Error);
  CHECK_NOTHROW(WeightSequence::table({1.0, 8.0}, WeightSequence::Tail::Forbidden, 10.0));
}

TEST_CASE("table csv loading") {
  TempFile good("1.0\n2.0\n\n3.5\n");
  const WeightSequence w = WeightSequence::table_from_csv(good.path);
  CHECK(w.table_size() == 3);
  CHECK(w(2) == 3.5);

  TempFile bad("1.0\n-1.0\n");
  CHECK_THROWS_AS(WeightSequence::table_from_csv(bad.path), optapprox::Error);
  TempFile junk("1.0\nabc\n");
  CHECK_THROWS_AS(WeightSequence::table_from_csv(junk.path), optapprox::Error);
  CHECK_THROWS_AS(WeightSequence::table_from_csv("no_such_file.csv"), optapprox::Error);
}

TEST_CASE("norm and inner product examples") {
  const CoeffSeries one_minus_z = make({1, -1});
  CHECK(dirichlet(0.0).norm_squared(one_minus_z) == 2.0);
  CHECK(dirichlet(1.0).norm_squared(one_minus_z) == 3.0);
  CHECK(dirichlet(0.7).norm_squared(CoeffSeries()) == 0.0);

  // <z(1-z), 1-z> in the Hardy space
  const Complex ip = dirichlet(0.0).inner_product(make({0, 1, -1}), one_minus_z);
  CHECK(ip == Complex(-1.0, 0.0));
  CHECK(dirichlet(2.0).inner_product(make({3, 1}), CoeffSeries()) == Complex(0.0, 0.0));
  CHECK(dirichlet(1.0).inner_product(one_minus_z, one_minus_z) == Complex(3.0, 0.0));
}

TEST_CASE("non-orthonormal spaces only hand out bounds") {
  const SpaceModel riesz(WeightSequence::dirichlet(0.0), 0.5, 2.0);
  const CoeffSeries f = make({1, -1});
  CHECK_THROWS_AS(riesz.norm_squared(f), optapprox::Error);
  CHECK_THROWS_AS(riesz.inner_product(f, f), optapprox::Error);
  const auto [lo, hi] = riesz.norm_squared_bounds(f);
  CHECK(lo == 1.0);
  CHECK(hi == 4.0);
  CHECK_THROWS_AS(SpaceModel(WeightSequence::dirichlet(0.0), 2.0, 1.0),
                  optapprox::Error);
}

TEST_CASE("kernel values") {
  const Complex half(0.5, 0.0);
  CHECK(dirichlet(0.0).kernel_value(half, half).real() ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(dirichlet(0.0).kernel_value(half, half).imag() == 0.0);

  // only the k = 0 term survives at lambda = 0
  CHECK(dirichlet(-2.0).kernel_value(Complex(0.0, 0.0), Complex(0.9, 0.05)) ==
        Complex(1.0, 0.0));

  // sum (k+1) q^k = (1-q)^-2
  CHECK(dirichlet(-1.0).kernel_value(half, half).real() ==
        doctest::Approx(16.0 / 9.0).epsilon(1e-12));

  CHECK_THROWS_AS(dirichlet(0.0).kernel_value(Complex(1.0, 0.0), half),
                  optapprox::Error);
  CHECK_THROWS_AS(dirichlet(0.0).kernel_value(half, Complex(0.0, 1.2)),
                  optapprox::Error);

  // a forbidden tail cannot bound the kernel remainder
  const SpaceModel table_space(
      WeightSequence::table({1.0, 1.0, 1.0}, WeightSequence::Tail::Forbidden));
  CHECK_THROWS_AS(table_space.kernel_value(half, half), optapprox::Error);

  // power tails extrapolate fine
  std::vector<double> vals;
  for (std::size_t n = 0; n < 30; ++n) vals.push_back(1.0);
  const SpaceModel flat_table(
      WeightSequence::table(vals, WeightSequence::Tail::PowerExtrapolate));
  CHECK(flat_table.kernel_value(half, half).real() ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-11));

  // an impossible tolerance within a tiny max_index cannot converge
  optapprox::TruncationPolicy cramped{.max_index = 3, .tail_tol = 1e-14};
  const SpaceModel cramped_space(WeightSequence::dirichlet(0.0), 1.0, 1.0, cramped);
  CHECK_THROWS_AS(cramped_space.kernel_value(Complex(0.9, 0.0), Complex(0.9, 0.0)),
                  optapprox::Error);
}

TEST_CASE("shift norm bounds") {
  const auto [h_lo, h_hi] = dirichlet(0.0).shift_norm_bounds(5, 100);
  CHECK(h_lo == 1.0);
  CHECK(h_hi == 1.0);

  const auto [d_lo, d_hi] = dirichlet(1.0).shift_norm_bounds(1, 100);
  CHECK(d_lo == 2.0);
  CHECK(d_hi == 2.0);

  // spectral radius estimate: sup w_{n+k}/w_n = k+1 at n = 0, so the k-th
  // root of the norm bound decreases toward 1
  const auto [b10, u10] = dirichlet(1.0).shift_norm_bounds(10, 100);
  CHECK(u10 == doctest::Approx(11.0).epsilon(1e-14));
  CHECK(std::pow(u10, 1.0 / 20.0) == doctest::Approx(1.1274).epsilon(1e-4));
  double prev = 2.0;
  for (std::size_t k = 1; k <= 60; k += 5) {
    const auto [lo, hi] = dirichlet(1.0).shift_norm_bounds(k, 200);
    const double estimate = std::pow(hi, 1.0 / (2.0 * static_cast<double>(k)));
    CHECK(estimate <= prev + 1e-12);
    prev = estimate;
  }
  CHECK(prev < 1.05);

  CHECK_THROWS_AS(dirichlet(1.0).shift_norm_bounds(5, 2), optapprox::Error);
  const SpaceModel riesz(WeightSequence::dirichlet(1.0), 1.0, 2.0);
  const auto [r_lo, r_hi] = riesz.shift_norm_bounds(1, 10);
  CHECK(r_lo == 1.0);
  CHECK(r_hi == 4.0);

  const SpaceModel short_table(WeightSequence::table({1.0, 2.0}));
  CHECK_THROWS_AS(short_table.shift_norm_bounds(1, 5), optapprox::Error);
}

TEST_CASE("weight ratios are monotone toward one") {
  for (double alpha : {-1.5, -1.0, 0.0, 0.5, 1.0, 2.0}) {
    const SpaceModel space = dirichlet(alpha);
    double prev_gap = std::abs(space.weight(1) / space.weight(0) - 1.0);
    for (std::size_t n = 1; n < 200; ++n) {
      const double ratio = space.weight(n + 1) / space.weight(n);
      if (alpha >= 0.0) {
        CHECK(ratio >= 1.0);
      } else {
        CHECK(ratio <= 1.0);
      }
      const double gap = std::abs(ratio - 1.0);
      CHECK(gap <= prev_gap + 1e-15);
      prev_gap = gap;
    }
    CHECK(prev_gap < 0.02);
  }
}

TEST_CASE("reproducing property on random data") {
  oracle::Rng rng(4242);
  for (double alpha : {-1.0, 0.0, 1.0}) {
    const SpaceModel space = dirichlet(alpha);
    for (int trial = 0; trial < 100; ++trial) {
      const CoeffSeries f = oracle::random_series(rng, rng.index(20) + 1);
      const Complex lambda = rng.disc(0.9);
      const CoeffSeries kernel = space.kernel_series(lambda, f.degree());
      const Complex via_kernel = space.inner_product(f, kernel);
      const Complex direct = evaluate(f, lambda);
      CHECK(std::abs(via_kernel - direct) < 1e-10);
    }
  }
}

TEST_CASE("inner product structure on random data") {
  oracle::Rng rng(555);
  const SpaceModel space = dirichlet(1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const CoeffSeries f = oracle::random_series(rng, rng.index(15) + 1);
    const CoeffSeries g = oracle::random_series(rng, rng.index(15) + 1);
    const Complex fg = space.inner_product(f, g);
    const Complex gf = space.inner_product(g, f);
    CHECK(std::abs(fg - std::conj(gf)) < 1e-13);

    const Complex ff = space.inner_product(f, f);
    CHECK(std::abs(ff.imag()) == 0.0);
    CHECK(ff.real() >= 0.0);
    CHECK(ff.real() == doctest::Approx(space.norm_squared(f)).epsilon(1e-15));
  }
}
