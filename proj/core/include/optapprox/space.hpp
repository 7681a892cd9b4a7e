#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "optapprox/errors.hpp"
#include "optapprox/series.hpp"

namespace optapprox {

/// Strictly positive weights w_n defining a weighted Hardy space on the disc.
///
/// Either parametric, w_n = (n+1)^alpha, or a finite table. A table either
/// forbids access past its end or extends by a power law w_n = C (n+1)^a with
/// (C, a) fitted to the last ten entries by log-log least squares.
class WeightSequence {
 public:
  enum class Kind { DirichletAlpha, Table };
  enum class Tail { PowerExtrapolate, Forbidden };

  static WeightSequence dirichlet(double alpha);
  static WeightSequence table(std::vector<double> values,
                              Tail tail = Tail::Forbidden,
                              double max_ratio = 4.0);
  /// One positive decimal per line, index implicit from 0. Rejects
  /// non-positive or non-finite entries.
  static WeightSequence table_from_csv(const std::string& path,
                                       Tail tail = Tail::Forbidden,
                                       double max_ratio = 4.0);

  Kind kind() const noexcept { return kind_; }
  Tail tail() const noexcept { return tail_; }
  bool parametric() const noexcept { return kind_ == Kind::DirichletAlpha; }

  /// Dirichlet exponent; only for the parametric kind.
  double alpha() const;
  /// Fitted tail exponent of a table; only for Kind::Table.
  double fitted_alpha() const;
  double fitted_scale() const;
  std::size_t table_size() const noexcept { return values_.size(); }

  /// True when every index is accessible (parametric, or power tail).
  bool unbounded_access() const noexcept {
    return parametric() || tail_ == Tail::PowerExtrapolate;
  }
  /// Largest accessible index plus one; SIZE_MAX when unbounded.
  std::size_t accessible_limit() const noexcept;

  /// The weight w_n. Throws TailForbidden past a Forbidden-tail table.
  double operator()(std::size_t n) const;

  /// sup_{k >= m} w_k / w_{k+1}; feeds geometric tail bounds for kernel
  /// truncation. Throws TailForbidden for Forbidden-tail tables.
  double ratio_sup_from(std::size_t m) const;

 private:
  WeightSequence() = default;

  Kind kind_ = Kind::DirichletAlpha;
  Tail tail_ = Tail::Forbidden;
  double alpha_ = 0.0;  // Dirichlet exponent or fitted tail exponent
  double scale_ = 1.0;  // fitted tail scale C
  std::vector<double> values_;
  std::vector<double> suffix_ratio_max_;  // suffix max of w_k / w_{k+1} on the table
};

struct TruncationPolicy {
  std::size_t max_index = 100000;
  double tail_tol = 1e-12;
};

/// A weight sequence together with Riesz constants and a truncation policy.
///
/// Exact norms and inner products are offered only in the orthonormal case
/// c1 = c2 = 1; otherwise the space hands out two-sided bounds. All values
/// are immutable after construction and every operation is a pure function.
class SpaceModel {
 public:
  explicit SpaceModel(WeightSequence weights, double c1 = 1.0, double c2 = 1.0,
                      TruncationPolicy truncation = {});

  const WeightSequence& weights() const noexcept { return weights_; }
  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }
  const TruncationPolicy& truncation() const noexcept { return truncation_; }
  bool orthonormal() const noexcept { return c1_ == 1.0 && c2_ == 1.0; }

  double weight(std::size_t n) const { return weights_(n); }

  /// sum_k w_k |f_k|^2. Orthonormal case only.
  double norm_squared(const CoeffSeries& f) const;

  /// (c1 * s, c2 * s) with s the coordinate sum; valid for any Riesz basis.
  std::pair<double, double> norm_squared_bounds(const CoeffSeries& f) const;

  /// sum_k w_k f_k conj(g_k); linear in f, conjugate-symmetric. Orthonormal
  /// case only.
  Complex inner_product(const CoeffSeries& f, const CoeffSeries& g) const;

  /// Reproducing kernel value sum_k conj(lambda)^k z^k / w_k, truncated so
  /// the geometric tail remainder stays below the policy's tail_tol.
  Complex kernel_value(Complex lambda, Complex z) const;

  /// Coefficients conj(lambda)^k / w_k for k <= degree.
  CoeffSeries kernel_series(Complex lambda, std::size_t degree) const;

  /// Two-sided bound on ||S^k||^2 over the computable horizon:
  /// (c1/c2) sup_{n<=horizon} w_{n+k}/w_n and (c2/c1) times the same sup.
  std::pair<double, double> shift_norm_bounds(std::size_t k,
                                              std::size_t horizon) const;

 private:
  void require_orthonormal(const char* op) const;

  WeightSequence weights_;
  double c1_ = 1.0;
  double c2_ = 1.0;
  TruncationPolicy truncation_;
};

}  // namespace optapprox
