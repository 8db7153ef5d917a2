#include "fde/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fde {

namespace {

// Exact nodal values y(t_j) = y0 E_a(lambda t_j^a) for j = 0..m.
std::vector<double> exact_nodes(const LinearTestProblem& p, const UniformGrid& g,
                                long m) {
  MlParams mp;
  mp.alpha = p.alpha;
  std::vector<double> ys(static_cast<std::size_t>(m) + 1);
  for (long j = 0; j <= m; ++j) {
    const double t = g.node(j);
    ys[static_cast<std::size_t>(j)] = p.y0 * ml(p.lambda * std::pow(t, p.alpha), mp);
  }
  return ys;
}

}  // namespace

Trajectory exact_solution(const LinearTestProblem& p, const UniformGrid& g) {
  validate(p);
  validate(g);
  Trajectory out;
  out.grid = g;
  out.kind = TrajectoryKind::exact;
  out.values = exact_nodes(p, g, g.n_steps);
  return out;
}

ErrorReport error_report(const Trajectory& numeric, const Trajectory& exact) {
  if (numeric.grid.h != exact.grid.h || numeric.grid.n_steps != exact.grid.n_steps) {
    throw std::invalid_argument("error_report: trajectories live on different grids");
  }
  if (exact.values.size() != static_cast<std::size_t>(exact.grid.node_count())) {
    throw std::invalid_argument("error_report: exact trajectory is incomplete");
  }
  if (numeric.values.empty() || numeric.values.size() > exact.values.size()) {
    throw std::invalid_argument("error_report: numeric trajectory has bad length");
  }

  ErrorReport rep;
  rep.grid = numeric.grid;
  rep.abs_errors.resize(numeric.values.size());
  bool any_nonfinite = false;
  for (std::size_t i = 0; i < numeric.values.size(); ++i) {
    const double e = std::abs(numeric.values[i] - exact.values[i]);
    rep.abs_errors[i] = e;
    if (std::isfinite(e)) {
      rep.max_error = std::max(rep.max_error, e);
    } else {
      any_nonfinite = true;
    }
  }
  rep.final_error = rep.abs_errors.back();

  double exact_mag = 0.0;
  for (double v : exact.values) {
    if (std::isfinite(v)) exact_mag = std::max(exact_mag, std::abs(v));
  }
  rep.diverged = numeric.diverged || any_nonfinite ||
                 (std::isfinite(rep.final_error) && rep.final_error > 10.0 * exact_mag);
  return rep;
}

double eoc(double err_coarse, double err_fine) {
  if (!(err_coarse > 0.0) || !(err_fine > 0.0) || !std::isfinite(err_coarse) ||
      !std::isfinite(err_fine)) {
    throw std::invalid_argument("eoc: both errors must be finite and > 0");
  }
  return std::log2(err_coarse / err_fine);
}

double local_truncation(const SchemeConfig& cfg, const LinearTestProblem& p,
                        const UniformGrid& g, long n) {
  validate(p);
  validate(g);
  if (n < 1 || n >= g.n_steps) {
    throw std::invalid_argument("local_truncation: need 1 <= n < n_steps");
  }

  const std::vector<double> yx = exact_nodes(p, g, n + 1);
  std::vector<double> fx(yx.size());
  for (std::size_t j = 0; j < yx.size(); ++j) fx[j] = p.lambda * yx[j];

  const double ha = std::pow(g.h, p.alpha);
  double predicted = 0.0;
  switch (cfg.kind) {
    case SchemeKind::flawed_local:
      predicted = flawed_step(p.alpha, g.h, n, fx[static_cast<std::size_t>(n - 1)],
                              fx[static_cast<std::size_t>(n)],
                              yx[static_cast<std::size_t>(n)]);
      break;
    case SchemeKind::pi_rect_explicit:
    case SchemeKind::short_memory: {
      const ConvolutionWeights w = pi_rect_weights(p.alpha, n);
      const long j0 = (cfg.kind == SchemeKind::short_memory && cfg.memory_window > 0)
                          ? std::max(0L, n - cfg.memory_window + 1)
                          : 0L;
      double conv = 0.0;
      for (long j = j0; j <= n; ++j) {
        conv += w.b[static_cast<std::size_t>(n - j)] * fx[static_cast<std::size_t>(j)];
      }
      predicted = p.y0 + ha * conv;
      break;
    }
    case SchemeKind::pi_trap_implicit:
    case SchemeKind::abm: {
      const ConvolutionWeights w = pi_trap_weights(p.alpha, n);
      double hist = w.a_tilde_0 * fx[0];
      for (long j = 1; j <= n; ++j) {
        hist += w.a[static_cast<std::size_t>(n + 1 - j)] * fx[static_cast<std::size_t>(j)];
      }
      const double G = p.y0 + ha * hist;
      const double c = ha * w.a[0];
      if (cfg.kind == SchemeKind::pi_trap_implicit) {
        // rhs is linear, so the implicit equation solves in closed form
        predicted = G / (1.0 - c * p.lambda);
      } else {
        const ConvolutionWeights wb = pi_rect_weights(p.alpha, n);
        double conv = 0.0;
        for (long j = 0; j <= n; ++j) {
          conv += wb.b[static_cast<std::size_t>(n - j)] * fx[static_cast<std::size_t>(j)];
        }
        const double y_pred = p.y0 + ha * conv;
        predicted = G + c * (p.lambda * y_pred);
      }
      break;
    }
  }
  return std::abs(yx[static_cast<std::size_t>(n + 1)] - predicted);
}

double fit_growth_exponent(std::span<const double> ts, std::span<const double> vals,
                           std::size_t first, std::size_t count) {
  if (ts.size() != vals.size()) {
    throw std::invalid_argument("fit_growth_exponent: ts and vals differ in length");
  }
  if (count < 3 || first + count > ts.size()) {
    throw std::invalid_argument("fit_growth_exponent: window must hold >= 3 points");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = first; i < first + count; ++i) {
    if (!(ts[i] > 0.0) || !(vals[i] > 0.0) || !std::isfinite(ts[i]) ||
        !std::isfinite(vals[i])) {
      throw std::invalid_argument(
          "fit_growth_exponent: windowed data must be finite and > 0");
    }
    const double x = std::log(ts[i]);
    const double y = std::log(vals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(count);
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) {
    throw std::invalid_argument("fit_growth_exponent: degenerate abscissae");
  }
  return (m * sxy - sx * sy) / denom;
}

double claimed_bound_value(const ClaimedBound& cb, long n) {
  if (!(cb.alpha > 0.0) || cb.alpha > 1.0 || !(cb.h > 0.0) || !(cb.M >= 0.0) ||
      !std::isfinite(cb.M)) {
    throw std::invalid_argument("claimed_bound_value: bad bound data");
  }
  if (n < 0) throw std::invalid_argument("claimed_bound_value: n must be >= 0");
  const double nd = static_cast<double>(n);
  return std::pow(cb.h, 3.0 + cb.alpha) * cb.M *
         (std::pow(nd + 1.0, cb.alpha) + std::pow(nd, cb.alpha)) /
         (12.0 * gamma(cb.alpha + 1.0));
}

RefutationReport refute_theorem(const LinearTestProblem& p, double h, double t_max) {
  validate(p);
  const UniformGrid g = make_grid(h, t_max);

  SchemeConfig cfg;
  cfg.kind = SchemeKind::flawed_local;
  const Trajectory numeric = solve_flawed(p.to_problem(), g, cfg);
  const Trajectory exact = exact_solution(p, g);
  const ErrorReport rep = error_report(numeric, exact);

  double M = 0.0;
  for (long j = 0; j <= g.n_steps; ++j) {
    M = std::max(M, std::abs(p.lambda * exact.values[static_cast<std::size_t>(j)]));
  }

  RefutationReport out;
  out.bound = ClaimedBound{p.alpha, h, M};
  for (std::size_t i = 0; i < rep.abs_errors.size(); ++i) {
    const double e = rep.abs_errors[i];
    if (!std::isfinite(e)) break;
    const double bound = claimed_bound_value(out.bound, static_cast<long>(i));
    if (e > bound) {
      const double ratio = bound > 0.0 ? e / bound
                                       : std::numeric_limits<double>::infinity();
      if (!out.violation_found) {
        out.violation_found = true;
        out.first_violation_index = static_cast<long>(i);
        out.first_violation_ratio = ratio;
      }
      if (ratio > out.max_ratio) {
        out.max_ratio = ratio;
        out.max_ratio_index = static_cast<long>(i);
      }
    }
  }
  return out;
}

}  // namespace fde
