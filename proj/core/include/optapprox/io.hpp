#pragma once

#include <string>
#include <vector>

#include "optapprox/approximants.hpp"
#include "optapprox/gram.hpp"
#include "optapprox/series.hpp"
#include "optapprox/zeros.hpp"

namespace optapprox {

/// Shortest decimal that round-trips the exact double.
std::string format_double(double x);

/// Series wire format: JSON array of [re, im] pairs.
std::string series_to_json(const CoeffSeries& f);
CoeffSeries series_from_json(const std::string& text);

/// CSV alternative: header "re,im", one coefficient per row.
std::string series_to_csv(const CoeffSeries& f);
CoeffSeries series_from_csv(const std::string& text);

std::string annulus_to_json(const Annulus& a);
std::string annulus_to_csv(const Annulus& a);
std::string rootset_to_json(const RootSet& r);
std::string rootset_to_csv(const RootSet& r);

/// Combined artifact for the two zero-region bounds with the actual roots of
/// p_n* and p_n*(1-z) - 1, so plots can overlay them.
std::string regions_to_json(std::size_t n, const Annulus& pstar_region,
                            const Annulus& residual_region,
                            const RootSet& pstar_roots,
                            const RootSet& residual_roots);
std::string regions_to_csv(std::size_t n, const Annulus& pstar_region,
                           const Annulus& residual_region,
                           const RootSet& pstar_roots,
                           const RootSet& residual_roots);

struct KernelSample {
  Complex z;
  Complex value;
};
std::string kernel_grid_to_json(const std::vector<KernelSample>& samples);
std::string kernel_grid_to_csv(const std::vector<KernelSample>& samples);

std::string approximation_to_json(const ApproximationResult& r);

std::string norms_to_json(const std::vector<double>& eps);
std::string norms_to_csv(const std::vector<double>& eps);

std::string rate_report_to_json(const RateReport& r);
std::string rate_report_to_csv(const RateReport& r);

std::string lemma_sum_to_json(const LemmaSumReport& r);
std::string lemma_sum_to_csv(const LemmaSumReport& r);

std::string cyclicity_to_json(const CyclicityVerdict& v);
std::string cyclicity_to_csv(const CyclicityVerdict& v);

std::string product_report_to_json(const ProductReport& r);
std::string product_report_to_csv(const ProductReport& r);

std::string rotation_report_to_json(const RotationReport& r);
std::string rotation_report_to_csv(const RotationReport& r);

/// Debug dump of a solved system: matrix row-major as [re, im] pairs.
std::string gram_dump_json(const GramSystem& sys, const GramSolution& sol);

}  // namespace optapprox
