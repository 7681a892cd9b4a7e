#include "optapprox/space.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

namespace optapprox {

namespace {

// Log-log least squares fit w_i ~ C (i+1)^a over the last ten table entries.
std::pair<double, double> fit_power_tail(const std::vector<double>& values) {
  const std::size_t m = std::min<std::size_t>(values.size(), 10);
  const std::size_t first = values.size() - m;
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = first; i < values.size(); ++i) {
    sx += std::log(static_cast<double>(i + 1));
    sy += std::log(values[i]);
  }
  const double mx = sx / static_cast<double>(m);
  const double my = sy / static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = first; i < values.size(); ++i) {
    const double dx = std::log(static_cast<double>(i + 1)) - mx;
    const double dy = std::log(values[i]) - my;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  const double alpha = sxx > 0.0 ? sxy / sxx : 0.0;
  const double scale = std::exp(my - alpha * mx);
  return {alpha, scale};
}

}  // namespace

WeightSequence WeightSequence::dirichlet(double alpha) {
  if (!std::isfinite(alpha)) {
    throw InvalidArgumentError("dirichlet exponent must be finite");
  }
  WeightSequence w;
  w.kind_ = Kind::DirichletAlpha;
  w.alpha_ = alpha;
  return w;
}

WeightSequence WeightSequence::table(std::vector<double> values, Tail tail,
                                     double max_ratio) {
  if (values.empty()) {
    throw InvalidArgumentError("weight table must not be empty");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] <= 0.0) {
      throw InvalidArgumentError("weight table entry " + std::to_string(i) +
                                 " is not a positive finite number");
    }
  }
  // Empirical ratio check: consecutive ratios must stay inside [1/R, R].
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double r = values[i + 1] / values[i];
    if (r > max_ratio || r < 1.0 / max_ratio) {
      throw InvalidArgumentError(
          "weight ratio w_" + std::to_string(i + 1) + "/w_" + std::to_string(i) +
          " = " + std::to_string(r) + " outside [1/" + std::to_string(max_ratio) +
          ", " + std::to_string(max_ratio) + "]");
    }
  }
  WeightSequence w;
  w.kind_ = Kind::Table;
  w.tail_ = tail;
  w.values_ = std::move(values);
  const auto [alpha, scale] = fit_power_tail(w.values_);
  w.alpha_ = alpha;
  w.scale_ = scale;
  if (!w.values_.empty()) {
    w.suffix_ratio_max_.assign(w.values_.size(), 0.0);
    // suffix_ratio_max_[k] = max_{k <= j < size-1} w_j / w_{j+1}
    double running = 0.0;
    for (std::size_t j = w.values_.size(); j-- > 0;) {
      if (j + 1 < w.values_.size()) {
        running = std::max(running, w.values_[j] / w.values_[j + 1]);
      }
      w.suffix_ratio_max_[j] = running;
    }
  }
  return w;
}

WeightSequence WeightSequence::table_from_csv(const std::string& path, Tail tail,
                                              double max_ratio) {
  std::ifstream in(path);
  if (!in) {
    throw SpecParseError("cannot open weight table '" + path + "'");
  }
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // tolerate trailing carriage returns and blank lines
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    std::istringstream ss(line);
    double v = 0.0;
    char extra = 0;
    if (!(ss >> v) || (ss >> extra)) {
      throw SpecParseError(path + ":" + std::to_string(lineno) +
                           ": not a single decimal value");
    }
    if (!std::isfinite(v) || v <= 0.0) {
      throw SpecParseError(path + ":" + std::to_string(lineno) +
                           ": weights must be positive finite numbers");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw SpecParseError(path + ": empty weight table");
  }
  return table(std::move(values), tail, max_ratio);
}

double WeightSequence::alpha() const {
  if (!parametric()) {
    throw InvalidArgumentError("alpha() is only defined for parametric weights");
  }
  return alpha_;
}

double WeightSequence::fitted_alpha() const {
  if (parametric()) {
    throw InvalidArgumentError("fitted_alpha() is only defined for table weights");
  }
  return alpha_;
}

double WeightSequence::fitted_scale() const {
  if (parametric()) {
    throw InvalidArgumentError("fitted_scale() is only defined for table weights");
  }
  return scale_;
}

std::size_t WeightSequence::accessible_limit() const noexcept {
  if (unbounded_access()) return std::numeric_limits<std::size_t>::max();
  return values_.size();
}

double WeightSequence::operator()(std::size_t n) const {
  if (kind_ == Kind::DirichletAlpha) {
    return std::pow(static_cast<double>(n + 1), alpha_);
  }
  if (n < values_.size()) return values_[n];
  if (tail_ == Tail::Forbidden) {
    throw TailForbiddenError("weight index " + std::to_string(n) +
                             " beyond table of size " +
                             std::to_string(values_.size()));
  }
  return scale_ * std::pow(static_cast<double>(n + 1), alpha_);
}

double WeightSequence::ratio_sup_from(std::size_t m) const {
  // For w_k = C (k+1)^a the ratio w_k / w_{k+1} = ((k+1)/(k+2))^a is < 1 and
  // increasing toward 1 when a >= 0, and > 1 decreasing toward 1 when a < 0,
  // where its sup over k >= m sits at k = m.
  const auto parametric_sup = [](double a, std::size_t from) {
    if (a >= 0.0) return 1.0;
    return std::pow(static_cast<double>(from + 1) / static_cast<double>(from + 2), a);
  };
  if (kind_ == Kind::DirichletAlpha) return parametric_sup(alpha_, m);
  if (tail_ == Tail::Forbidden) {
    throw TailForbiddenError("tail ratio bound unavailable for a forbidden tail");
  }
  double sup = 0.0;
  const std::size_t size = values_.size();
  if (m + 1 < size) sup = suffix_ratio_max_[m];
  if (m < size) {
    // junction: last table weight against the first extrapolated one
    const double junction = values_[size - 1] / operator()(size);
    sup = std::max(sup, junction);
  }
  sup = std::max(sup, parametric_sup(alpha_, std::max(m, size)));
  return sup;
}

SpaceModel::SpaceModel(WeightSequence weights, double c1, double c2,
                       TruncationPolicy truncation)
    : weights_(std::move(weights)), c1_(c1), c2_(c2), truncation_(truncation) {
  if (!(c1_ > 0.0) || !(c2_ > 0.0) || c1_ > c2_) {
    throw InvalidArgumentError("Riesz constants must satisfy 0 < c1 <= c2");
  }
  if (truncation_.max_index == 0 || !(truncation_.tail_tol > 0.0)) {
    throw InvalidArgumentError("truncation policy needs max_index > 0 and tail_tol > 0");
  }
}

void SpaceModel::require_orthonormal(const char* op) const {
  if (!orthonormal()) {
    throw NotOrthonormalError(std::string(op) +
                              " requires the orthonormal case c1 = c2 = 1; "
                              "use the bound variants instead");
  }
}

double SpaceModel::norm_squared(const CoeffSeries& f) const {
  require_orthonormal("norm_squared");
  double s = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    s += weight(k) * std::norm(f.coeffs()[k]);
  }
  return s;
}

std::pair<double, double> SpaceModel::norm_squared_bounds(const CoeffSeries& f) const {
  double s = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    s += weight(k) * std::norm(f.coeffs()[k]);
  }
  return {c1_ * s, c2_ * s};
}

Complex SpaceModel::inner_product(const CoeffSeries& f, const CoeffSeries& g) const {
  require_orthonormal("inner_product");
  Complex s(0.0, 0.0);
  const std::size_t upto = std::min(f.size(), g.size());
  for (std::size_t k = 0; k < upto; ++k) {
    // product before the real scaling keeps the diagonal exactly real
    s += (f.coeffs()[k] * std::conj(g.coeffs()[k])) * weight(k);
  }
  return s;
}

Complex SpaceModel::kernel_value(Complex lambda, Complex z) const {
  if (std::abs(lambda) >= 1.0 || std::abs(z) >= 1.0) {
    throw OutsideDiscError("kernel arguments must lie in the open unit disc");
  }
  if (!weights_.unbounded_access()) {
    throw TailForbiddenError(
        "kernel evaluation needs weights at every index; the table tail is forbidden");
  }
  const Complex base = std::conj(lambda) * z;
  const double q = std::abs(base);
  Complex sum(0.0, 0.0);
  Complex cum(1.0, 0.0);
  double qcum = 1.0;
  for (std::size_t k = 0; k <= truncation_.max_index; ++k) {
    sum += cum / weight(k);
    // Remainder after truncating at k: the terms t_j = base^j / w_j for j > k
    // satisfy |t_{j+1}| <= rhat |t_j| with rhat = q sup_{j>k} w_j / w_{j+1},
    // so |tail| <= |t_{k+1}| / (1 - rhat) once rhat < 1.
    const double tnext = qcum * q / weight(k + 1);
    const double rhat = q * weights_.ratio_sup_from(k + 1);
    if (rhat < 1.0 && tnext / (1.0 - rhat) < truncation_.tail_tol) {
      return sum;
    }
    cum *= base;
    qcum *= q;
  }
  throw TailNotConvergentError(
      "kernel tail bound not met within max_index = " +
      std::to_string(truncation_.max_index));
}

CoeffSeries SpaceModel::kernel_series(Complex lambda, std::size_t degree) const {
  std::vector<Complex> out(degree + 1);
  Complex cum(1.0, 0.0);
  const Complex conj_lambda = std::conj(lambda);
  for (std::size_t k = 0; k <= degree; ++k) {
    out[k] = cum / weight(k);
    cum *= conj_lambda;
  }
  return CoeffSeries(std::move(out));
}

std::pair<double, double> SpaceModel::shift_norm_bounds(std::size_t k,
                                                        std::size_t horizon) const {
  if (k == 0) {
    throw InvalidArgumentError("shift power k must be positive");
  }
  if (horizon < k) {
    throw InvalidArgumentError("horizon must be at least k");
  }
  double sup = 0.0;
  for (std::size_t n = 0; n <= horizon; ++n) {
    sup = std::max(sup, weight(n + k) / weight(n));
  }
  return {(c1_ / c2_) * sup, (c2_ / c1_) * sup};
}

}  // namespace optapprox
