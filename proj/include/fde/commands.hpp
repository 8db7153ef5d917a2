#pragma once

#include "fde/schemes.hpp"

#include <string>
#include <vector>

namespace fde {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;     // bad arguments or I/O failure
inline constexpr int exit_diverged = 2;  // run completed but diverged

// One solver run of the linear test problem, fully determined by its
// fields; no hidden state, no randomness.
struct RunSpec {
  double alpha = 0.8;
  double lambda = -2.0;
  double y0 = 2.0;
  double h = 0.0625;
  double t_max = 4.0;
  SchemeKind scheme = SchemeKind::pi_trap_implicit;
  BootstrapRule bootstrap = BootstrapRule::pi_trap_one_step;
  long memory_window = 0;  // 0 = full history
  std::string output_path;
};

enum class Figure { fig1, fig2 };

// Writes `n,t,y_numeric,y_exact,abs_error`, one row per node. Returns
// exit_diverged when the run diverged (the file is still written up to the
// truncation point).
int cmd_solve(const RunSpec& spec);

// Comparison data for the two-point scheme on the standard configuration
// (alpha=0.8, lambda=-2, y0=2, h=2^-4). fig1 -> `t,y_exact,y_flawed`,
// fig2 -> `t,abs_error`.
int cmd_reproduce(Figure fig, const std::string& output_path, double t_max = 4.0);

// Error-vs-step-size table `h,max_error,final_error,eoc` for spec.scheme;
// h_list must halve strictly.
int cmd_convergence(const std::vector<double>& h_list, const RunSpec& spec);

// Sliding-window study `L,max_error,final_error` for the rectangular rule;
// window 0 stands for the full history and sorts last.
int cmd_short_memory_study(const std::vector<long>& windows, const RunSpec& spec);

}  // namespace fde
