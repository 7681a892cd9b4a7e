#include "optapprox/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace optapprox {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// keeps -0.0 out of artifacts
double clean_zero(double x) { return x == 0.0 ? 0.0 : x; }

Json pair_json(const Complex& c) {
  return Json::array({clean_zero(c.real()), clean_zero(c.imag())});
}

Json series_json(const CoeffSeries& f) {
  Json arr = Json::array();
  for (const Complex& c : f.coeffs()) arr.push_back(pair_json(c));
  return arr;
}

Json annulus_json(const Annulus& a) {
  return Json{{"inner", a.inner}, {"outer", a.outer}, {"degenerate", a.degenerate}};
}

Json rootset_json(const RootSet& r) {
  Json roots = Json::array();
  for (const Root& root : r.roots) {
    roots.push_back(Json{{"re", clean_zero(root.value.real())},
                         {"im", clean_zero(root.value.imag())},
                         {"multiplicity", root.multiplicity}});
  }
  return Json{{"roots", std::move(roots)},
              {"residual_max", r.residual_max},
              {"converged", r.converged},
              {"sweeps_used", r.sweeps_used}};
}

std::string dump(Json j) { return j.dump(); }

Complex complex_from_json(const Json& v, const char* what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw SpecParseError(std::string(what) + ": expected a [re, im] pair");
  }
  return Complex(v[0].get<double>(), v[1].get<double>());
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) return "0";  // also normalizes -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string series_to_json(const CoeffSeries& f) { return dump(series_json(f)); }

CoeffSeries series_from_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array()) {
    throw SpecParseError("series JSON must be an array of [re, im] pairs");
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const Json& v : j) coeffs.push_back(complex_from_json(v, "series"));
  return CoeffSeries(std::move(coeffs));
}

std::string series_to_csv(const CoeffSeries& f) {
  std::string out = "re,im\n";
  for (const Complex& c : f.coeffs()) {
    out += format_double(c.real());
    out += ',';
    out += format_double(c.imag());
    out += '\n';
  }
  return out;
}

CoeffSeries series_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Complex> coeffs;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == "re,im") continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw SpecParseError("series CSV line " + std::to_string(lineno) +
                           ": expected 're,im'");
    }
    double re = 0.0, im = 0.0;
    const char* b1 = line.data();
    const char* e1 = line.data() + comma;
    const char* b2 = line.data() + comma + 1;
    const char* e2 = line.data() + line.size();
    const auto r1 = std::from_chars(b1, e1, re);
    const auto r2 = std::from_chars(b2, e2, im);
    if (r1.ec != std::errc() || r1.ptr != e1 || r2.ec != std::errc() || r2.ptr != e2) {
      throw SpecParseError("series CSV line " + std::to_string(lineno) +
                           ": malformed number");
    }
    coeffs.emplace_back(re, im);
  }
  return CoeffSeries(std::move(coeffs));
}

std::string annulus_to_json(const Annulus& a) {
  Json j{{"schema_version", kSchemaVersion}};
  j.update(annulus_json(a));
  return dump(j);
}

std::string annulus_to_csv(const Annulus& a) {
  return "inner,outer,degenerate\n" + format_double(a.inner) + ',' +
         format_double(a.outer) + ',' + (a.degenerate ? "1" : "0") + "\n";
}

std::string rootset_to_json(const RootSet& r) {
  Json j{{"schema_version", kSchemaVersion}};
  j.update(rootset_json(r));
  return dump(j);
}

std::string rootset_to_csv(const RootSet& r) {
  std::string out = "re,im,multiplicity\n";
  for (const Root& root : r.roots) {
    out += format_double(root.value.real());
    out += ',';
    out += format_double(root.value.imag());
    out += ',';
    out += std::to_string(root.multiplicity);
    out += '\n';
  }
  return out;
}

std::string regions_to_json(std::size_t n, const Annulus& pstar_region,
                            const Annulus& residual_region,
                            const RootSet& pstar_roots,
                            const RootSet& residual_roots) {
  return dump(Json{{"schema_version", kSchemaVersion},
                   {"n", n},
                   {"pstar_region", annulus_json(pstar_region)},
                   {"residual_zero_region", annulus_json(residual_region)},
                   {"pstar_roots", rootset_json(pstar_roots)},
                   {"residual_roots", rootset_json(residual_roots)}});
}

std::string regions_to_csv(std::size_t n, const Annulus& pstar_region,
                           const Annulus& residual_region,
                           const RootSet& pstar_roots,
                           const RootSet& residual_roots) {
  std::string out = "kind,a,b,c\n";
  const auto annulus_row = [&out](const char* kind, const Annulus& a) {
    out += kind;
    out += ',';
    out += format_double(a.inner);
    out += ',';
    out += format_double(a.outer);
    out += ',';
    out += a.degenerate ? "1" : "0";
    out += '\n';
  };
  const auto root_rows = [&out, n](const char* kind, const RootSet& r) {
    (void)n;
    for (const Root& root : r.roots) {
      out += kind;
      out += ',';
      out += format_double(root.value.real());
      out += ',';
      out += format_double(root.value.imag());
      out += ',';
      out += std::to_string(root.multiplicity);
      out += '\n';
    }
  };
  annulus_row("pstar_region", pstar_region);
  annulus_row("residual_zero_region", residual_region);
  root_rows("pstar_root", pstar_roots);
  root_rows("residual_root", residual_roots);
  return out;
}

std::string kernel_grid_to_json(const std::vector<KernelSample>& samples) {
  Json rows = Json::array();
  for (const KernelSample& s : samples) {
    rows.push_back(Json{{"re_z", clean_zero(s.z.real())},
                        {"im_z", clean_zero(s.z.imag())},
                        {"re_k", clean_zero(s.value.real())},
                        {"im_k", clean_zero(s.value.imag())}});
  }
  return dump(Json{{"schema_version", kSchemaVersion}, {"rows", std::move(rows)}});
}

std::string kernel_grid_to_csv(const std::vector<KernelSample>& samples) {
  std::string out = "re_z,im_z,re_k,im_k\n";
  for (const KernelSample& s : samples) {
    out += format_double(s.z.real());
    out += ',';
    out += format_double(s.z.imag());
    out += ',';
    out += format_double(s.value.real());
    out += ',';
    out += format_double(s.value.imag());
    out += '\n';
  }
  return out;
}

std::string approximation_to_json(const ApproximationResult& r) {
  Json j{{"schema_version", kSchemaVersion},
         {"n", r.n},
         {"method", r.method == Method::LinearSystem ? "LinearSystem" : "ClosedForm"},
         {"p_star", series_json(r.p_star)}};
  if (!std::isnan(r.epsilon_n)) j["epsilon_n"] = r.epsilon_n;
  j["epsilon_lower"] = r.epsilon_lower;
  j["epsilon_upper"] = r.epsilon_upper;
  if (!std::isnan(r.epsilon_quadform)) j["epsilon_quadform"] = r.epsilon_quadform;
  j["cond_estimate"] = r.cond_estimate;
  j["truncation_degree_used"] = r.truncation_degree_used;
  j["conditioning_flag"] = r.conditioning_flag;
  return dump(j);
}

std::string norms_to_json(const std::vector<double>& eps) {
  Json rows = Json::array();
  for (std::size_t n = 0; n < eps.size(); ++n) {
    rows.push_back(Json{{"n", n}, {"epsilon_n", eps[n]}});
  }
  return dump(Json{{"schema_version", kSchemaVersion}, {"rows", std::move(rows)}});
}

std::string norms_to_csv(const std::vector<double>& eps) {
  std::string out = "n,epsilon_n\n";
  for (std::size_t n = 0; n < eps.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += format_double(eps[n]);
    out += '\n';
  }
  return out;
}

std::string rate_report_to_json(const RateReport& r) {
  Json rows = Json::array();
  for (const RateEntry& e : r.entries) {
    rows.push_back(Json{{"n", e.n},
                        {"epsilon_n", e.epsilon_n},
                        {"phi_n", e.phi_n},
                        {"product_eps2_phi", e.product_eps2_phi},
                        {"wiener_norm_pf", e.wiener_norm_pf}});
  }
  return dump(Json{{"schema_version", kSchemaVersion},
                   {"rows", std::move(rows)},
                   {"empirical_C", r.empirical_C},
                   {"product_bounded", r.product_bounded},
                   {"wiener_bounded", r.wiener_bounded}});
}

std::string rate_report_to_csv(const RateReport& r) {
  std::string out = "n,epsilon_n,phi_n,product_eps2_phi,wiener_norm_pf\n";
  for (const RateEntry& e : r.entries) {
    out += std::to_string(e.n);
    out += ',';
    out += format_double(e.epsilon_n);
    out += ',';
    out += format_double(e.phi_n);
    out += ',';
    out += format_double(e.product_eps2_phi);
    out += ',';
    out += format_double(e.wiener_norm_pf);
    out += '\n';
  }
  return out;
}

std::string lemma_sum_to_json(const LemmaSumReport& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    rows.push_back(Json{{"n", r.n_start + i}, {"s_n_w_n", r.values[i]}});
  }
  return dump(Json{{"schema_version", kSchemaVersion}, {"rows", std::move(rows)}});
}

std::string lemma_sum_to_csv(const LemmaSumReport& r) {
  std::string out = "n,s_n_w_n\n";
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    out += std::to_string(r.n_start + i);
    out += ',';
    out += format_double(r.values[i]);
    out += '\n';
  }
  return out;
}

std::string cyclicity_to_json(const CyclicityVerdict& v) {
  Json j{{"schema_version", kSchemaVersion}, {"status", to_string(v.status)}};
  if (v.status == Cyclicity::Cyclic) {
    j["epsilon"] = 0.0;
  } else if (v.status == Cyclicity::NotCyclic) {
    j["epsilon"] = v.epsilon_limit_bounds.first;
  }
  j["epsilon_limit_bounds"] =
      Json::array({v.epsilon_limit_bounds.first, v.epsilon_limit_bounds.second});
  j["partial_sum_indices"] = v.partial_sum_indices;
  j["partial_sums"] = v.partial_sums;
  return dump(j);
}

std::string cyclicity_to_csv(const CyclicityVerdict& v) {
  std::string out = "status,epsilon_lower,epsilon_upper\n";
  out += to_string(v.status);
  out += ',';
  out += format_double(v.epsilon_limit_bounds.first);
  out += ',';
  out += format_double(v.epsilon_limit_bounds.second);
  out += '\n';
  return out;
}

std::string product_report_to_json(const ProductReport& r) {
  Json rows = Json::array();
  for (const ProductEntry& e : r.entries) {
    rows.push_back(Json{{"n", e.n},
                        {"epsilon_n", e.epsilon_n},
                        {"composite_error", e.composite_error}});
  }
  return dump(Json{{"schema_version", kSchemaVersion},
                   {"rows", std::move(rows)},
                   {"optimal_le_composite", r.optimal_le_composite}});
}

std::string product_report_to_csv(const ProductReport& r) {
  std::string out = "n,epsilon_n,composite_error\n";
  for (const ProductEntry& e : r.entries) {
    out += std::to_string(e.n);
    out += ',';
    out += format_double(e.epsilon_n);
    out += ',';
    out += format_double(e.composite_error);
    out += '\n';
  }
  return out;
}

std::string rotation_report_to_json(const RotationReport& r) {
  Json rows = Json::array();
  for (std::size_t n = 0; n < r.epsilon_f.size(); ++n) {
    rows.push_back(Json{{"n", n},
                        {"epsilon_f", r.epsilon_f[n]},
                        {"epsilon_rotated", r.epsilon_rotated[n]}});
  }
  return dump(Json{{"schema_version", kSchemaVersion}, {"rows", std::move(rows)}});
}

std::string rotation_report_to_csv(const RotationReport& r) {
  std::string out = "n,epsilon_f,epsilon_rotated\n";
  for (std::size_t n = 0; n < r.epsilon_f.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += format_double(r.epsilon_f[n]);
    out += ',';
    out += format_double(r.epsilon_rotated[n]);
    out += '\n';
  }
  return out;
}

std::string gram_dump_json(const GramSystem& sys, const GramSolution& sol) {
  Json matrix = Json::array();
  for (const Complex& m : sys.matrix) matrix.push_back(pair_json(m));
  Json rhs = Json::array();
  for (const Complex& b : sys.rhs) rhs.push_back(pair_json(b));
  Json a = Json::array();
  for (const Complex& x : sol.a) a.push_back(pair_json(x));
  return dump(Json{{"schema_version", kSchemaVersion},
                   {"n", sys.degree},
                   {"matrix", std::move(matrix)},
                   {"rhs", std::move(rhs)},
                   {"a", std::move(a)},
                   {"residual_inf", sol.residual_inf},
                   {"refinement_steps", sol.refinement_steps},
                   {"cond_estimate", sys.cond_estimate},
                   {"truncation_degree_used", sys.truncation_degree_used}});
}

}  // namespace optapprox
