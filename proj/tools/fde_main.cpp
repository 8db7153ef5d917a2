#include "fde/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

const std::map<std::string, fde::SchemeKind> scheme_tokens{
    {"flawed", fde::SchemeKind::flawed_local},
    {"pi-rect", fde::SchemeKind::pi_rect_explicit},
    {"pi-trap", fde::SchemeKind::pi_trap_implicit},
    {"abm", fde::SchemeKind::abm},
    {"short-memory", fde::SchemeKind::short_memory},
};

const std::map<std::string, fde::BootstrapRule> bootstrap_tokens{
    {"pi-trap", fde::BootstrapRule::pi_trap_one_step},
    {"pi-rect", fde::BootstrapRule::pi_rect_one_step},
};

void add_problem_flags(CLI::App* cmd, fde::RunSpec& spec) {
  cmd->set_help_flag("--help", "print help");  // frees -h for the step size
  cmd->add_option("--alpha", spec.alpha, "fractional order, 0 < alpha <= 1");
  cmd->add_option("--lambda", spec.lambda, "coefficient of the linear right-hand side");
  cmd->add_option("--y0", spec.y0, "initial value");
  cmd->add_option("--h", spec.h, "step size");
  cmd->add_option("--t-max", spec.t_max, "end of the integration interval");
  cmd->add_option("--output", spec.output_path, "output CSV path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers and divergence studies for linear Caputo fractional ODEs"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  fde::RunSpec spec;
  std::string fig_name;
  double reproduce_t_max = 4.0;
  std::string reproduce_output;
  std::vector<double> h_list;
  std::vector<std::string> window_tokens{"4", "16", "64", "full"};

  auto* solve = app.add_subcommand("solve", "integrate one configuration, write per-node CSV");
  add_problem_flags(solve, spec);
  solve->add_option("--scheme", spec.scheme, "time-stepping scheme")
      ->transform(CLI::CheckedTransformer(scheme_tokens, CLI::ignore_case));
  solve->add_option("--bootstrap", spec.bootstrap, "first-step rule of the flawed scheme")
      ->transform(CLI::CheckedTransformer(bootstrap_tokens, CLI::ignore_case));
  solve->add_option("--memory-window", spec.memory_window,
                    "window length in nodes for short-memory (0 = full)");

  auto* reproduce =
      app.add_subcommand("reproduce", "flawed-vs-exact comparison data (fig1) or its error (fig2)");
  reproduce->set_help_flag("--help", "print help");
  reproduce->add_option("figure", fig_name, "fig1 or fig2")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2"}));
  reproduce->add_option("--output", reproduce_output, "output CSV path");
  reproduce->add_option("--t-max", reproduce_t_max,
                        "integration horizon (default 4; the instability needs ~8 to overwhelm the solution)");

  auto* convergence =
      app.add_subcommand("convergence", "error-vs-step-size table under step halving");
  add_problem_flags(convergence, spec);
  convergence->add_option("--scheme", spec.scheme, "time-stepping scheme")
      ->transform(CLI::CheckedTransformer(scheme_tokens, CLI::ignore_case));
  convergence->add_option("--bootstrap", spec.bootstrap, "first-step rule of the flawed scheme")
      ->transform(CLI::CheckedTransformer(bootstrap_tokens, CLI::ignore_case));
  convergence
      ->add_option("--h-list", h_list, "strictly halving step sizes, comma separated")
      ->delimiter(',')
      ->expected(2, 16);

  auto* memory = app.add_subcommand("short-memory-study",
                                    "rectangular rule accuracy vs memory window");
  add_problem_flags(memory, spec);
  memory->add_option("--windows", window_tokens, "window lengths in nodes, 'full' allowed")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fde::exit_usage;
  }

  if (solve->parsed()) {
    return fde::cmd_solve(spec);
  }
  if (reproduce->parsed()) {
    return fde::cmd_reproduce(fig_name == "fig1" ? fde::Figure::fig1 : fde::Figure::fig2,
                              reproduce_output, reproduce_t_max);
  }
  if (convergence->parsed()) {
    if (h_list.empty()) {
      h_list = {spec.h, spec.h / 2.0, spec.h / 4.0, spec.h / 8.0};
    }
    return fde::cmd_convergence(h_list, spec);
  }
  if (memory->parsed()) {
    std::vector<long> windows;
    for (const std::string& tok : window_tokens) {
      if (tok == "full") {
        windows.push_back(0);
        continue;
      }
      try {
        const long w = std::stol(tok);
        if (w < 1) throw std::invalid_argument(tok);
        windows.push_back(w);
      } catch (const std::exception&) {
        std::cerr << "error: bad window token '" << tok << "'\n";
        return fde::exit_usage;
      }
    }
    return fde::cmd_short_memory_study(windows, spec);
  }
  return fde::exit_usage;
}
