#pragma once

#include "fde/problem.hpp"

#include <vector>

namespace fde {

enum class SchemeKind {
  flawed_local,      // two-point scheme with one global linear interpolant
  pi_rect_explicit,  // product integration, piecewise constant
  pi_trap_implicit,  // product integration, piecewise linear, implicit
  abm,               // rectangular predictor + one trapezoidal correction
  short_memory       // pi_rect_explicit restricted to a sliding window
};

enum class BootstrapRule { pi_trap_one_step, pi_rect_one_step };

struct SchemeConfig {
  SchemeKind kind = SchemeKind::pi_trap_implicit;
  BootstrapRule bootstrap = BootstrapRule::pi_trap_one_step;  // flawed_local only
  long memory_window = 0;      // short_memory only; 0 means full history
  double newton_tol = 1e-12;   // implicit schemes only
  int newton_max_iter = 50;
};

// Product-integration quadrature weights of order alpha.
//   b_k = ((k+1)^a - k^a) / Gamma(a+1)                      (rectangular)
//   a_0 = 1 / Gamma(a+2)
//   a_k = ((k+1)^(a+1) - 2k^(a+1) + (k-1)^(a+1)) / Gamma(a+2), k >= 1
//   a_tilde_0 = (n^(a+1) - (n-a)(n+1)^a) / Gamma(a+2)       (t_0 weight,
//               depends on the step index n the weights were built for)
// b is strictly decreasing for 0 < a < 1; a is strictly decreasing from
// k = 1 on (a_0 is the weight of the newest node and may be smaller than
// a_1: at a = 1 the classical trapezoid weights are 1/2, 1, 1, ...).
struct ConvolutionWeights {
  double alpha = 0.0;
  std::vector<double> a;
  double a_tilde_0 = 0.0;
  std::vector<double> b;
};

ConvolutionWeights pi_rect_weights(double alpha, long n);
ConvolutionWeights pi_trap_weights(double alpha, long n);

// One step of the two-point local scheme: both history integrals of the
// increment identity are evaluated with a single linear interpolant of f
// through (t_{n-1}, t_n), extended over the whole of [0, t_{n+1}]:
//
//   y_{n+1} = y_n
//     + f_n/(h G(a)) * { 2h t_{n+1}^a/(a(a+1)) - t_{n-1} t_{n+1}^a/(a+1)
//                        - h t_n^a/a + t_n^(a+1)/(a+1) }
//     + f_{n-1}/(h G(a)) * { t_{n+1}^(a+1)/(a+1) - h t_{n+1}^a/a
//                            - t_n^(a+1)/(a+1) }
//
// with t_k = k*h. Defined for n >= 1. At a = 1 this reduces to the two-step
// Adams-Bashforth step y_n + h(3/2 f_n - 1/2 f_{n-1}).
double flawed_step(double alpha, double h, long n, double f_nm1, double f_n,
                   double y_n);

// y_1 comes from one step of the configured bootstrap rule, later values
// from flawed_step with computed history. Overflow to non-finite values
// ends the run early: the trajectory is truncated at the last finite entry
// and flagged diverged.
Trajectory solve_flawed(const FdeProblem&, const UniformGrid&, const SchemeConfig&);

// config.kind selects pi_rect_explicit, pi_trap_implicit or abm. History
// sums are direct O(N^2) convolutions.
Trajectory solve_pi(const FdeProblem&, const UniformGrid&, const SchemeConfig&);

// pi_rect_explicit with the convolution restricted to the memory_window
// most recent nodes (the y0 term is always kept). A window covering the
// whole grid is bit-identical to solve_pi.
Trajectory solve_short_memory(const FdeProblem&, const UniformGrid&, const SchemeConfig&);

// Dispatch on config.kind.
Trajectory solve(const FdeProblem&, const UniformGrid&, const SchemeConfig&);

}  // namespace fde
