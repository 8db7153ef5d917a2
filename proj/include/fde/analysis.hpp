#pragma once

#include "fde/mittag_leffler.hpp"
#include "fde/problem.hpp"
#include "fde/schemes.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fde {

struct ErrorReport {
  UniformGrid grid;
  std::vector<double> abs_errors;  // one entry per available numeric node
  double max_error = 0.0;          // over finite entries
  double final_error = 0.0;        // at the last available node
  bool diverged = false;
};

// Data for the h^(3+a) error bound under examination: M bounds |f| along
// the exact solution.
struct ClaimedBound {
  double alpha = 0.0;
  double h = 0.0;
  double M = 0.0;
};

struct RefutationReport {
  bool violation_found = false;
  long first_violation_index = -1;
  double first_violation_ratio = 0.0;  // error / bound at that index
  long max_ratio_index = -1;
  double max_ratio = 0.0;
  ClaimedBound bound;
};

// values[n] = y0 * E_alpha(lambda * t_n^alpha)
Trajectory exact_solution(const LinearTestProblem&, const UniformGrid&);

// Pointwise absolute differences. diverged is set when the numeric run was
// truncated, any entry is non-finite, or the final error exceeds ten times
// the exact solution's magnitude.
ErrorReport error_report(const Trajectory& numeric, const Trajectory& exact);

// log2(err_coarse / err_fine) for a halved step; both errors must be > 0.
double eoc(double err_coarse, double err_fine);

// One-step defect of the scheme selected by the config when fed exact
// history values: |y(t_{n+1}) - step(y(t_0)..y(t_n))|, n >= 1.
double local_truncation(const SchemeConfig&, const LinearTestProblem&,
                        const UniformGrid&, long n);

// Ordinary least-squares slope of log(vals) against log(ts) over the window
// [first, first+count); count >= 3, windowed data strictly positive.
double fit_growth_exponent(std::span<const double> ts, std::span<const double> vals,
                           std::size_t first, std::size_t count);

// h^(3+a) * M * ((n+1)^a + n^a) / (12 Gamma(a+1))
double claimed_bound_value(const ClaimedBound&, long n);

// Runs the two-point scheme against the exact solution and searches for the
// first index whose realized error exceeds claimed_bound_value. M is taken
// as max_n |f(t_n, y(t_n))|. No violation found is reported, not thrown.
RefutationReport refute_theorem(const LinearTestProblem&, double h, double t_max);

}  // namespace fde
