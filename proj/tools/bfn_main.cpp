// bfn: p-biased Fourier analysis of Boolean functions.
//
// Subcommands:
//   spectrum  biased Fourier coefficients of a function
//   approx    optimal k-junta or linear Boolean approximation
//   noise     mismatch / noise sensitivity under a correlated input pair
//   sweep     quantities over a grid of P(X=+1) values, as CSV
//   oracle    brute-force cross-checks of the closed forms
//
// Exit codes: 0 success, 1 I/O failure or failed oracle check, 2 invalid
// arguments or infeasible model.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfn/approx.hpp"
#include "bfn/boolean_function.hpp"
#include "bfn/joint.hpp"
#include "bfn/oracle.hpp"
#include "bfn/report_io.hpp"
#include "bfn/spectrum.hpp"

namespace {

struct CliError {
  int code;
  std::string message;
};

bfn::BooleanFunction resolve_function(const std::string& fn_spec,
                                      const std::string& fn_file) {
  if (fn_spec.empty() == fn_file.empty())
    throw CliError{2, "exactly one of --fn and --fn-file is required"};
  if (!fn_spec.empty()) return bfn::builtin_from_spec(fn_spec);
  std::ifstream in(fn_file);
  if (!in) throw CliError{1, "cannot open truth-table file '" + fn_file + "'"};
  std::stringstream buf;
  buf << in.rdbuf();
  return bfn::parse_truth_table(buf.str());
}

bfn::Bias bias_from_p_one(double p_one) {
  if (!(p_one > 0.0 && p_one < 1.0))
    throw CliError{2, "bias out of range: --p-one must be in (0,1)"};
  return bfn::Bias::from_p_one(p_one);
}

// Writes to --out or stdout; missing trailing newline is added.
void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CliError{1, "cannot open output file '" + out_path + "'"};
  out << content;
  if (content.empty() || content.back() != '\n') out << '\n';
  if (!out) throw CliError{1, "write failed for '" + out_path + "'"};
}

struct CommonArgs {
  std::string fn_spec;
  std::string fn_file;
  std::string out_path;
  std::string format = "csv";
  double p_one = 0.5;
};

void add_function_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--fn", a.fn_spec,
                  "builtin function spec, e.g. or:5, maj:5, parity:1,3:5, "
                  "threshold:5:2, tribes:2:3, constant:+1:5");
  cmd->add_option("--fn-file", a.fn_file, "truth-table file (n=<arity> header)");
}

int run_spectrum(const CommonArgs& a) {
  bfn::BooleanFunction f = resolve_function(a.fn_spec, a.fn_file);
  bfn::BiasedSpectrum spec = bfn::transform(f, bias_from_p_one(a.p_one));
  if (a.format == "json")
    write_output(a.out_path, bfn::spectrum_to_json(spec).dump(2));
  else
    write_output(a.out_path, bfn::spectrum_to_csv(spec));
  return 0;
}

int run_approx(const CommonArgs& a, const std::string& cls, std::optional<int> k) {
  bfn::BooleanFunction f = resolve_function(a.fn_spec, a.fn_file);
  bfn::Bias bias = bias_from_p_one(a.p_one);
  bfn::ApproximationReport report = [&] {
    if (cls == "junta") {
      if (!k) throw CliError{2, "--k is required for --class junta"};
      return bfn::best_k_junta(f, *k, bias);
    }
    return bfn::best_linear(f, bias);
  }();
  if (a.format == "json")
    write_output(a.out_path, bfn::report_to_json(report).dump(2));
  else
    write_output(a.out_path, bfn::report_to_csv(report));
  return 0;
}

int run_noise(const CommonArgs& a, double q_one, double rho, bool mc,
              std::size_t samples, std::uint64_t seed) {
  bfn::BooleanFunction f = resolve_function(a.fn_spec, a.fn_file);
  if (!(a.p_one > 0.0 && a.p_one < 1.0) || !(q_one > 0.0 && q_one < 1.0))
    throw CliError{2, "--p-one and --q-one must be in (0,1)"};
  bfn::JointInputModel model = bfn::make_joint(1.0 - a.p_one, 1.0 - q_one, rho);
  const double cross = bfn::cross_expectation(f, f, model);
  nlohmann::json j = {{"p", model.p()},
                      {"q", model.q()},
                      {"rho", model.rho()},
                      {"cross_expectation", cross},
                      {"mismatch_probability", (1.0 - cross) / 2.0}};
  if (mc) {
    auto est = bfn::oracle::mc_mismatch(f, f, model, {seed, samples});
    j["mc_estimate"] = est.estimate;
    j["mc_std_error"] = est.std_error;
  }
  write_output(a.out_path, j.dump(2));
  return 0;
}

// Fixed sweep column order; only requested quantities appear, linear_degree
// always accompanies linear_mismatch.
int run_sweep(const CommonArgs& a, const std::vector<std::string>& quantities,
              double start, double stop, double step, std::optional<int> k,
              std::optional<double> q_one, std::optional<double> rho) {
  bfn::BooleanFunction f = resolve_function(a.fn_spec, a.fn_file);
  if (!(step > 0.0)) throw CliError{2, "--step must be > 0"};
  if (!(start > 0.0 && stop < 1.0 && start <= stop))
    throw CliError{2, "sweep grid must lie strictly inside (0,1)"};

  bool want_junta = false, want_lower = false, want_upper = false;
  bool want_linear = false, want_ns = false;
  for (const std::string& q : quantities) {
    if (q == "junta_mismatch") want_junta = true;
    else if (q == "junta_lower_bound") want_lower = true;
    else if (q == "junta_upper_bound") want_upper = true;
    else if (q == "linear_mismatch") want_linear = true;
    else if (q == "noise_sensitivity") want_ns = true;
    else throw CliError{2, "unknown sweep quantity '" + q + "'"};
  }
  if (quantities.empty()) throw CliError{2, "--quantities must not be empty"};
  const bool any_junta = want_junta || want_lower || want_upper;
  if (any_junta && !k) throw CliError{2, "--k is required for junta quantities"};
  if (want_ns && (!q_one || !rho))
    throw CliError{2, "--q-one and --rho are required for noise_sensitivity"};

  std::string csv = "p_one";
  if (want_junta) csv += ",junta_mismatch";
  if (want_lower) csv += ",junta_lower_bound";
  if (want_upper) csv += ",junta_upper_bound";
  if (want_linear) csv += ",linear_mismatch,linear_degree";
  if (want_ns) csv += ",noise_sensitivity";
  csv += '\n';

  const long count = std::lround(std::floor((stop - start) / step + 1e-9)) + 1;
  for (long i = 0; i < count; ++i) {
    const double p_one = start + i * step;
    bfn::Bias bias = bias_from_p_one(p_one);
    csv += bfn::fmt_g9(p_one);
    if (any_junta) {
      bfn::ApproximationReport r = bfn::best_k_junta(f, *k, bias);
      if (want_junta) csv += ',' + bfn::fmt_g9(r.mismatch);
      if (want_lower) csv += ',' + bfn::fmt_g9(r.bound_lower);
      if (want_upper) csv += ',' + bfn::fmt_g9(r.bound_upper);
    }
    if (want_linear) {
      bfn::ApproximationReport r = bfn::best_linear(f, bias);
      csv += ',' + bfn::fmt_g9(r.mismatch);
      csv += ',' + std::to_string(bfn::popcount(r.support));
    }
    if (want_ns) {
      bfn::JointInputModel m = bfn::make_joint(bias.p(), 1.0 - *q_one, *rho);
      csv += ',' + bfn::fmt_g9(bfn::noise_sensitivity(f, m));
    }
    csv += '\n';
  }
  write_output(a.out_path, csv);
  return 0;
}

// Cross-checks the closed forms against the brute-force oracles for one
// function and bias. Prints one line per check; exit 1 on disagreement.
int run_oracle(const CommonArgs& a, std::optional<int> k, double q_one, double rho,
               std::size_t samples, std::uint64_t seed) {
  bfn::BooleanFunction f = resolve_function(a.fn_spec, a.fn_file);
  bfn::Bias bias = bias_from_p_one(a.p_one);
  const int n = f.arity();
  bool ok = true;
  auto check = [&](const std::string& name, double got, double want, double tol) {
    const bool pass = std::abs(got - want) <= tol;
    ok = ok && pass;
    std::cout << (pass ? "ok:   " : "FAIL: ") << name << " closed=" << bfn::fmt_g9(got)
              << " oracle=" << bfn::fmt_g9(want) << "\n";
  };

  if (k && *k <= 4 && n <= 8) {
    auto r = bfn::best_k_junta(f, *k, bias);
    auto o = bfn::oracle::enum_best_junta(f, *k, bias);
    check("best_k_junta", r.mismatch, o.mismatch, 1e-9);
  }
  if (n <= 16) {
    auto r = bfn::best_linear(f, bias);
    auto o = bfn::oracle::enum_best_linear(f, bias);
    check("best_linear", r.mismatch, o.mismatch, 1e-9);
  }
  bfn::JointInputModel model = bfn::make_joint(bias.p(), 1.0 - q_one, rho);
  const double closed = bfn::noise_sensitivity(f, model);
  if (n <= 12)
    check("noise_sensitivity/enum", closed,
          bfn::oracle::enum_mismatch(f, f, model), 1e-9);
  auto est = bfn::oracle::mc_mismatch(f, f, model, {seed, samples});
  check("noise_sensitivity/mc", closed, est.estimate,
        3.0 * est.std_error + 1e-12);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-biased Fourier analysis of Boolean functions"};
  app.require_subcommand(1);

  CommonArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "biased Fourier coefficients");
  add_function_flags(spectrum, spectrum_args);
  spectrum->add_option("--p-one", spectrum_args.p_one, "P(X=+1)");
  spectrum->add_option("--format", spectrum_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_option("--out", spectrum_args.out_path, "output path (default stdout)");

  CommonArgs approx_args;
  std::string approx_class;
  std::optional<int> approx_k;
  auto* approx = app.add_subcommand("approx", "optimal approximation");
  add_function_flags(approx, approx_args);
  approx->add_option("--class", approx_class, "junta|linear")
      ->required()
      ->check(CLI::IsMember({"junta", "linear"}));
  approx->add_option("--k", approx_k, "junta size (required for --class junta)");
  approx->add_option("--p-one", approx_args.p_one, "P(X=+1)");
  approx->add_option("--format", approx_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  approx->add_option("--out", approx_args.out_path, "output path (default stdout)");

  CommonArgs noise_args;
  double noise_q_one = 0.5, noise_rho = 0.0;
  bool noise_mc = false;
  std::size_t noise_samples = 1'000'000;
  std::uint64_t noise_seed = 0;
  auto* noise = app.add_subcommand("noise", "noise sensitivity");
  add_function_flags(noise, noise_args);
  noise->add_option("--p-one", noise_args.p_one, "P(X=+1)");
  noise->add_option("--q-one", noise_q_one, "P(Y=+1)");
  noise->add_option("--rho", noise_rho, "correlation coefficient")->required();
  noise->add_flag("--mc", noise_mc, "also run the Monte Carlo estimator");
  noise->add_option("--samples", noise_samples, "Monte Carlo sample count");
  noise->add_option("--seed", noise_seed, "Monte Carlo seed");
  noise->add_option("--out", noise_args.out_path, "output path (default stdout)");

  CommonArgs sweep_args;
  std::vector<std::string> sweep_quantities;
  double sweep_start = 0.01, sweep_stop = 0.99, sweep_step = 0.005;
  std::optional<int> sweep_k;
  std::optional<double> sweep_q_one, sweep_rho;
  auto* sweep = app.add_subcommand("sweep", "grid sweep over P(X=+1), CSV output");
  add_function_flags(sweep, sweep_args);
  sweep->add_option("--quantities", sweep_quantities,
                    "comma-separated subset of junta_mismatch,junta_lower_bound,"
                    "junta_upper_bound,linear_mismatch,noise_sensitivity")
      ->required()
      ->delimiter(',');
  sweep->add_option("--start", sweep_start, "grid start (default 0.01)");
  sweep->add_option("--stop", sweep_stop, "grid stop (default 0.99)");
  sweep->add_option("--step", sweep_step, "grid step (default 0.005)");
  sweep->add_option("--k", sweep_k, "junta size");
  sweep->add_option("--q-one", sweep_q_one, "P(Y=+1) for noise_sensitivity");
  sweep->add_option("--rho", sweep_rho, "correlation for noise_sensitivity");
  sweep->add_option("--out", sweep_args.out_path, "output path (default stdout)");

  CommonArgs oracle_args;
  std::optional<int> oracle_k;
  double oracle_q_one = 0.5, oracle_rho = 0.5;
  std::size_t oracle_samples = 1'000'000;
  std::uint64_t oracle_seed = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  add_function_flags(oracle, oracle_args);
  oracle->add_option("--p-one", oracle_args.p_one, "P(X=+1)");
  oracle->add_option("--k", oracle_k, "junta size for the junta check");
  oracle->add_option("--q-one", oracle_q_one, "P(Y=+1) for the noise checks");
  oracle->add_option("--rho", oracle_rho, "correlation for the noise checks");
  oracle->add_option("--samples", oracle_samples, "Monte Carlo sample count");
  oracle->add_option("--seed", oracle_seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
    if (spectrum->parsed()) return run_spectrum(spectrum_args);
    if (approx->parsed()) return run_approx(approx_args, approx_class, approx_k);
    if (noise->parsed())
      return run_noise(noise_args, noise_q_one, noise_rho, noise_mc, noise_samples,
                       noise_seed);
    if (sweep->parsed())
      return run_sweep(sweep_args, sweep_quantities, sweep_start, sweep_stop,
                       sweep_step, sweep_k, sweep_q_one, sweep_rho);
    if (oracle->parsed())
      return run_oracle(oracle_args, oracle_k, oracle_q_one, oracle_rho,
                        oracle_samples, oracle_seed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const bfn::infeasible_model_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bfn::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
