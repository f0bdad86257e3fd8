// Convergence tables and adaptive step-size traces from the command line.
//
//   symdefect local    --problem nls-soliton --scheme strang --tau-max 0.015625 --levels 6
//   symdefect global   --problem rosen-zener --scheme magnus4 --variant hermite --t-end 1
//   symdefect adaptive --problem nls-two-soliton --scheme emb43aks --tol 1e-10 --t-end 5

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "symdefect/control/registry.hpp"
#include "symdefect/study/csv.hpp"
#include "symdefect/study/study.hpp"

namespace {

struct Options {
  std::string problem = "nls-soliton";
  std::string scheme = "strang";
  std::string defect = "symmetrized";
  std::string variant = "hermite";
  double tau_max = 1.0 / 64.0;
  int levels = 6;
  double t_end = 0.125;
  double tol = 1e-10;
  double tau_init = 1e-2;
  double tau_min = 1e-8;
  double ref_tol = 1e-12;
  std::string out;
  std::string format = "table";
};

template <typename Rows>
void emit(const Options& opt, const Rows& rows) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) throw std::runtime_error("cannot open '" + opt.out + "' for writing");
    os = &file;
  }
  if (opt.format == "csv") {
    symdefect::study::write_csv(*os, rows);
  } else {
    *os << symdefect::study::format_table(rows);
  }
}

void add_common(CLI::App* app, Options& opt) {
  app->add_option("--problem", opt.problem, "problem name")
      ->check(CLI::IsMember(symdefect::control::problem_names()));
  app->add_option("--scheme", opt.scheme, "integrator")
      ->check(CLI::IsMember(symdefect::control::scheme_names()));
  app->add_option("--defect", opt.defect, "defect kind")
      ->check(CLI::IsMember({"classical", "symmetrized"}));
  app->add_option("--variant", opt.variant, "Frechet term approximation (cf4, magnus4)")
      ->check(CLI::IsMember({"taylor", "hermite"}));
  app->add_option("--out", opt.out, "output file (default stdout)");
  app->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "table"}));
}

}  // namespace

int main(int argc, char** argv) {
  namespace sd = symdefect;
  CLI::App app{"symdefect: defect-based error estimation for self-adjoint integrators"};
  app.require_subcommand(1);
  Options opt;

  auto* local = app.add_subcommand("local", "local error and estimator deviation on a dyadic ladder");
  add_common(local, opt);
  local->add_option("--tau-max", opt.tau_max, "largest step size")->check(CLI::PositiveNumber);
  local->add_option("--levels", opt.levels, "number of halvings")->check(CLI::PositiveNumber);
  local->add_option("--ref-tol", opt.ref_tol, "reference solver tolerance");

  auto* global = app.add_subcommand("global", "global error of basic and corrected scheme");
  add_common(global, opt);
  global->add_option("--tau-max", opt.tau_max, "largest step size")->check(CLI::PositiveNumber);
  global->add_option("--levels", opt.levels, "number of halvings")->check(CLI::PositiveNumber);
  global->add_option("--t-end", opt.t_end, "final time")->check(CLI::PositiveNumber);
  global->add_option("--ref-tol", opt.ref_tol, "reference solver tolerance");

  auto* adaptive = app.add_subcommand("adaptive", "adaptive integration, step-size trace");
  add_common(adaptive, opt);
  adaptive->add_option("--tol", opt.tol, "local error tolerance")->check(CLI::PositiveNumber);
  adaptive->add_option("--t-end", opt.t_end, "final time")->check(CLI::PositiveNumber);
  adaptive->add_option("--tau-init", opt.tau_init, "first trial step")->check(CLI::PositiveNumber);
  adaptive->add_option("--tau-min", opt.tau_min, "smallest admissible step")
      ->check(CLI::PositiveNumber);
  adaptive->add_option("--tau-max", opt.tau_max, "largest admissible step")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto setup = sd::control::make_problem(opt.problem);
    const auto method = sd::control::make_method(setup, opt.scheme,
                                                 sd::defect::parse_defect_kind(opt.defect),
                                                 sd::defect::parse_exp_variant(opt.variant));
    sd::study::StudyOptions so;
    so.reference.tol = opt.ref_tol;

    if (local->parsed()) {
      const auto rows = sd::study::run_local_study(
          setup, method, sd::study::dyadic_ladder(opt.tau_max, opt.levels), setup.initial_state,
          setup.t0, so);
      emit(opt, rows);
      return sd::study::any_failed(rows) ? 2 : 0;
    }
    if (global->parsed()) {
      const auto rows = sd::study::run_global_study(
          setup, method, sd::study::dyadic_ladder(opt.tau_max, opt.levels), setup.initial_state,
          setup.t0, setup.t0 + opt.t_end, so);
      emit(opt, rows);
      return sd::study::any_failed(rows) ? 2 : 0;
    }
    sd::control::AdaptiveConfig cfg;
    cfg.tol = opt.tol;
    cfg.tau_init = opt.tau_init;
    cfg.tau_min = opt.tau_min;
    cfg.tau_max = adaptive->count("--tau-max") ? opt.tau_max : std::max(opt.t_end, opt.tau_init);
    const auto res = sd::study::run_adaptive(setup, method, cfg, setup.t0 + opt.t_end);
    emit(opt, res.trace);
    if (!res.ok()) {
      std::cerr << "adaptive run stopped at t = " << res.t_final << ": "
                << sd::control::to_string(res.status) << " (" << res.message << ")\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
