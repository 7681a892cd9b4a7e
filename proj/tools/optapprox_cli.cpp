// Command line front end: parses space/function specifications, dispatches to
// the library, and emits JSON or CSV artifacts to stdout or a file.
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "optapprox/approximants.hpp"
#include "optapprox/errors.hpp"
#include "optapprox/gram.hpp"
#include "optapprox/io.hpp"
#include "optapprox/parsing.hpp"
#include "optapprox/series.hpp"
#include "optapprox/space.hpp"
#include "optapprox/zeros.hpp"

namespace {

using namespace optapprox;

struct Options {
  std::string space_spec;
  std::string function_spec;
  std::string second_function_spec;
  std::string lambda_spec;
  std::string output;  // "", "json", or "csv"
  std::string out_path;
  std::string dump_system_path;
  std::uint64_t seed = kDefaultRootSeed;
  std::size_t n = 0;
  std::size_t n_max = 0;
  double rmax = 0.9;
  std::size_t nr = 10;
  std::size_t ntheta = 8;
};

SpaceModel make_space(const std::string& spec) {
  WeightSequence weights = parse_space_spec(spec);
  TruncationPolicy policy;
  if (const char* env = std::getenv("OPTAPPROX_MAX_INDEX")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw InvalidArgumentError(
          "OPTAPPROX_MAX_INDEX must be a positive integer");
    }
    policy.max_index = static_cast<std::size_t>(v);
  }
  return SpaceModel(std::move(weights), 1.0, 1.0, policy);
}

bool want_csv(const std::string& output, bool default_csv) {
  if (output.empty()) return default_csv;
  return output == "csv";
}

void emit(std::string artifact, const std::string& out_path) {
  if (!artifact.empty() && artifact.back() != '\n') artifact += '\n';
  if (out_path.empty()) {
    std::cout << artifact;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw InvalidArgumentError("cannot open output file '" + out_path + "'");
  }
  file << artifact;
  if (!file) {
    throw InvalidArgumentError("failed writing output file '" + out_path + "'");
  }
}

int run_approximant(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const CoeffSeries f = parse_function_spec(opt.function_spec);
  const ApproximationResult res = optimal_approximant(space, f, opt.n);
  if (!opt.dump_system_path.empty()) {
    const GramSystem sys = assemble(space, f, opt.n);
    emit(gram_dump_json(sys, solve(sys)), opt.dump_system_path);
  }
  emit(want_csv(opt.output, false) ? series_to_csv(res.p_star)
                                   : approximation_to_json(res),
       opt.out_path);
  return 0;
}

int run_norms(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const CoeffSeries f = parse_function_spec(opt.function_spec);
  const std::vector<double> eps = optimal_norm_sequence(space, f, opt.n_max);
  emit(want_csv(opt.output, true) ? norms_to_csv(eps) : norms_to_json(eps),
       opt.out_path);
  return 0;
}

int run_closedform(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const ApproximationResult res = closed_form_one_minus_z(space, opt.n);
  emit(want_csv(opt.output, false) ? series_to_csv(res.p_star)
                                   : approximation_to_json(res),
       opt.out_path);
  return 0;
}

int run_cyclicity(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const CyclicityVerdict verdict = cyclicity_verdict(space);
  emit(want_csv(opt.output, false) ? cyclicity_to_csv(verdict)
                                   : cyclicity_to_json(verdict),
       opt.out_path);
  return 0;
}

int run_rates(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const CoeffSeries f = parse_function_spec(opt.function_spec);
  const RateReport report = rate_check(space, f, opt.n_max);
  emit(want_csv(opt.output, true) ? rate_report_to_csv(report)
                                  : rate_report_to_json(report),
       opt.out_path);
  return 0;
}

int run_lemmasum(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const CoeffSeries f = parse_function_spec(opt.function_spec);
  const LemmaSumReport report = lemma_sum_check(space, f, opt.n_max);
  emit(want_csv(opt.output, true) ? lemma_sum_to_csv(report)
                                  : lemma_sum_to_json(report),
       opt.out_path);
  return 0;
}

int run_enestrom(const Options& opt) {
  const CoeffSeries f = parse_function_spec(opt.function_spec);
  const Annulus annulus = enestrom_annulus(f);
  emit(want_csv(opt.output, false) ? annulus_to_csv(annulus)
                                   : annulus_to_json(annulus),
       opt.out_path);
  return 0;
}

int run_roots(const Options& opt) {
  const CoeffSeries f = parse_function_spec(opt.function_spec);
  const RootSet roots = find_roots(f, opt.seed);
  emit(want_csv(opt.output, false) ? rootset_to_csv(roots)
                                   : rootset_to_json(roots),
       opt.out_path);
  if (!roots.converged) {
    std::cerr << "error: NoConvergence: root iteration hit the sweep cap; "
                 "best iterates were emitted\n";
    return 3;
  }
  return 0;
}

int run_regions(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const Annulus pstar = pstar_region(space, opt.n);
  const Annulus residual = residual_zero_region(space, opt.n);
  const ApproximationResult closed = closed_form_one_minus_z(space, opt.n);
  const CoeffSeries residual_poly = subtract(
      multiply(closed.p_star, CoeffSeries({Complex(1.0, 0.0), Complex(-1.0, 0.0)})),
      CoeffSeries::one());
  const RootSet pstar_roots = find_roots(closed.p_star, opt.seed);
  const RootSet residual_roots = find_roots(residual_poly, opt.seed);
  emit(want_csv(opt.output, false)
           ? regions_to_csv(opt.n, pstar, residual, pstar_roots, residual_roots)
           : regions_to_json(opt.n, pstar, residual, pstar_roots, residual_roots),
       opt.out_path);
  if (!pstar_roots.converged || !residual_roots.converged) {
    std::cerr << "error: NoConvergence: root iteration hit the sweep cap\n";
    return 3;
  }
  return 0;
}

int run_product(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const CoeffSeries f = parse_function_spec(opt.function_spec);
  const CoeffSeries g = parse_function_spec(opt.second_function_spec);
  const ProductReport report = product_experiment(space, f, g, opt.n_max);
  emit(want_csv(opt.output, true) ? product_report_to_csv(report)
                                  : product_report_to_json(report),
       opt.out_path);
  return 0;
}

int run_rotate(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const CoeffSeries f = parse_function_spec(opt.function_spec);
  const Complex lambda = parse_complex(opt.lambda_spec);
  const RotationReport report = rotation_experiment(space, f, lambda, opt.n_max);
  emit(want_csv(opt.output, true) ? rotation_report_to_csv(report)
                                  : rotation_report_to_json(report),
       opt.out_path);
  return 0;
}

int run_kernel(const Options& opt) {
  const SpaceModel space = make_space(opt.space_spec);
  const Complex lambda = parse_complex(opt.lambda_spec);
  if (opt.nr < 1 || opt.ntheta < 1 || !(opt.rmax > 0.0) || opt.rmax >= 1.0) {
    throw InvalidArgumentError("kernel grid needs nr, ntheta >= 1 and 0 < rmax < 1");
  }
  std::vector<KernelSample> samples;
  samples.reserve(opt.nr * opt.ntheta);
  for (std::size_t i = 0; i < opt.nr; ++i) {
    const double r = opt.rmax * static_cast<double>(i) /
                     static_cast<double>(opt.nr > 1 ? opt.nr - 1 : 1);
    for (std::size_t j = 0; j < opt.ntheta; ++j) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(opt.ntheta);
      const Complex z(r * std::cos(theta), r * std::sin(theta));
      samples.push_back({z, space.kernel_value(lambda, z)});
      if (r == 0.0) break;  // one sample at the origin
    }
  }
  emit(want_csv(opt.output, true) ? kernel_grid_to_csv(samples)
                                  : kernel_grid_to_json(samples),
       opt.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Optimal polynomial approximants to 1/f, optimal norms, cyclicity "
      "diagnostics, decay rates, and zero-location bounds in weighted Hardy "
      "spaces on the unit disc."};
  app.require_subcommand(1);

  Options opt;

  const auto add_space = [&opt](CLI::App* cmd) {
    cmd->add_option("--space", opt.space_spec,
                    "space spec: dirichlet:alpha=<real> | table:<path>[,tail=power]")
        ->required();
  };
  const auto add_f = [&opt](CLI::App* cmd) {
    cmd->add_option("--f", opt.function_spec,
                    "function spec: coeffs:[c0,c1,...] | factors:(1-z)(1+z)")
        ->required();
  };
  const auto add_out = [&opt](CLI::App* cmd) {
    cmd->add_option("--output", opt.output, "artifact format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("-o,--out", opt.out_path, "write the artifact to this path");
  };
  const auto add_n = [&opt](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "approximant degree")->required();
  };
  const auto add_nmax = [&opt](CLI::App* cmd) {
    cmd->add_option("--n-max", opt.n_max, "largest degree in the sweep")->required();
  };
  const auto add_seed = [&opt](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "root-finder perturbation seed");
  };

  CLI::App* approximant = app.add_subcommand(
      "approximant", "solve the Gram system for the degree-n optimal approximant");
  add_space(approximant);
  add_f(approximant);
  add_n(approximant);
  add_out(approximant);
  approximant->add_option("--dump-system", opt.dump_system_path,
                          "also write the assembled system and solution as JSON");

  CLI::App* norms = app.add_subcommand("norms", "optimal norm sequence e_0..e_nmax");
  add_space(norms);
  add_f(norms);
  add_nmax(norms);
  add_out(norms);

  CLI::App* closedform = app.add_subcommand(
      "closedform", "closed-form approximant and norm for f(z) = 1-z");
  add_space(closedform);
  add_n(closedform);
  add_out(closedform);

  CLI::App* cyclicity = app.add_subcommand(
      "cyclicity", "divergence verdict on sum 1/w_k with epsilon limit bounds");
  add_space(cyclicity);
  add_out(cyclicity);

  CLI::App* rates = app.add_subcommand(
      "rates", "decay-rate diagnostics e_n^2 phi(n) and Wiener norms");
  add_space(rates);
  add_f(rates);
  add_nmax(rates);
  add_out(rates);

  CLI::App* lemmasum = app.add_subcommand(
      "lemmasum", "weighted convolution sums s_n w_n of phi, 1/f and f");
  add_space(lemmasum);
  add_f(lemmasum);
  add_nmax(lemmasum);
  add_out(lemmasum);

  CLI::App* enestrom = app.add_subcommand(
      "enestrom", "coefficient-ratio annulus for positive-coefficient polynomials");
  add_f(enestrom);
  add_out(enestrom);

  CLI::App* roots = app.add_subcommand("roots", "all complex roots of a polynomial");
  add_f(roots);
  add_seed(roots);
  add_out(roots);

  CLI::App* regions = app.add_subcommand(
      "regions", "zero-region bounds for f(z) = 1-z overlaid with actual roots");
  add_space(regions);
  add_n(regions);
  add_seed(regions);
  add_out(regions);

  CLI::App* product = app.add_subcommand(
      "product", "optimal errors for fg against composite approximants");
  add_space(product);
  add_f(product);
  product->add_option("--g", opt.second_function_spec, "second factor")->required();
  add_nmax(product);
  add_out(product);

  CLI::App* rotate_cmd = app.add_subcommand(
      "rotate", "optimal norms of f and of f(lambda z) side by side");
  add_space(rotate_cmd);
  add_f(rotate_cmd);
  rotate_cmd->add_option("--lambda", opt.lambda_spec, "unimodular rotation")->required();
  add_nmax(rotate_cmd);
  add_out(rotate_cmd);

  CLI::App* kernel = app.add_subcommand(
      "kernel", "reproducing kernel values on a polar grid of z");
  add_space(kernel);
  kernel->add_option("--lambda", opt.lambda_spec, "kernel base point")->required();
  kernel->add_option("--rmax", opt.rmax, "largest grid radius (default 0.9)");
  kernel->add_option("--nr", opt.nr, "radial grid count (default 10)");
  kernel->add_option("--ntheta", opt.ntheta, "angular grid count (default 8)");
  add_out(kernel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(approximant)) return run_approximant(opt);
    if (app.got_subcommand(norms)) return run_norms(opt);
    if (app.got_subcommand(closedform)) return run_closedform(opt);
    if (app.got_subcommand(cyclicity)) return run_cyclicity(opt);
    if (app.got_subcommand(rates)) return run_rates(opt);
    if (app.got_subcommand(lemmasum)) return run_lemmasum(opt);
    if (app.got_subcommand(enestrom)) return run_enestrom(opt);
    if (app.got_subcommand(roots)) return run_roots(opt);
    if (app.got_subcommand(regions)) return run_regions(opt);
    if (app.got_subcommand(product)) return run_product(opt);
    if (app.got_subcommand(rotate_cmd)) return run_rotate(opt);
    if (app.got_subcommand(kernel)) return run_kernel(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.code_name() << ": " << e.what() << "\n";
    return e.numerical_failure() ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
