#include "fde/schemes.hpp"

#include "fde/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fde {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("weights: alpha must satisfy 0 < alpha <= 1");
  }
}

// Weight evaluation is done in long double: the second differences in the
// trapezoidal weights cancel ~7 digits by k ~ 4000, which double precision
// cannot spare but 64-bit mantissas can.
std::vector<double> rect_weight_vector(double alpha, long n) {
  const long double la = static_cast<long double>(alpha);
  const long double g = std::tgamma(la + 1.0L);
  std::vector<double> b(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    const long double lk = static_cast<long double>(k);
    b[static_cast<std::size_t>(k)] =
        static_cast<double>((std::pow(lk + 1.0L, la) - std::pow(lk, la)) / g);
  }
  return b;
}

std::vector<double> trap_weight_vector(double alpha, long n) {
  const long double la = static_cast<long double>(alpha);
  const long double g = std::tgamma(la + 2.0L);
  std::vector<double> a(static_cast<std::size_t>(n) + 1);
  a[0] = static_cast<double>(1.0L / g);
  for (long k = 1; k <= n; ++k) {
    const long double lk = static_cast<long double>(k);
    a[static_cast<std::size_t>(k)] = static_cast<double>(
        (std::pow(lk + 1.0L, la + 1.0L) - 2.0L * std::pow(lk, la + 1.0L) +
         std::pow(lk - 1.0L, la + 1.0L)) /
        g);
  }
  return a;
}

double trap_initial_weight(double alpha, long n) {
  const long double la = static_cast<long double>(alpha);
  const long double g = std::tgamma(la + 2.0L);
  const long double ln = static_cast<long double>(n);
  return static_cast<double>(
      (std::pow(ln, la + 1.0L) - (ln - la) * std::pow(ln + 1.0L, la)) / g);
}

// Solves y = G + c*f(t, y) for a scalar y: plain fixed-point steps while the
// residual shrinks, secant steps on y - G - c*f(t,y) once it stops shrinking.
double solve_implicit(const Rhs& f, double t, double G, double c, double y_init,
                      double tol, int max_iter, long step_index) {
  double y = y_init;
  double prev_y = 0.0;
  double prev_r = 0.0;
  bool have_prev = false;
  bool use_secant = false;
  for (int it = 0; it < max_iter; ++it) {
    const double r = G + c * f(t, y) - y;
    if (std::abs(r) <= tol * (1.0 + std::abs(y))) return y;

    double y_next;
    if (use_secant || (have_prev && std::abs(r) >= std::abs(prev_r))) {
      use_secant = true;
      const double dr = r - prev_r;
      y_next = (have_prev && dr != 0.0) ? y - r * (y - prev_y) / (r - prev_r)
                                        : y + r;
    } else {
      y_next = y + r;
    }
    prev_y = y;
    prev_r = r;
    have_prev = true;
    y = y_next;
  }
  throw std::runtime_error("implicit update did not converge at step " +
                           std::to_string(step_index));
}

void check_config_common(const SchemeConfig& cfg) {
  if (!(cfg.newton_tol > 0.0)) {
    throw std::invalid_argument("config: newton_tol must be > 0");
  }
  if (cfg.newton_max_iter < 1) {
    throw std::invalid_argument("config: newton_max_iter must be >= 1");
  }
  if (cfg.memory_window < 0) {
    throw std::invalid_argument("config: memory_window must be >= 0");
  }
}

// Explicit rectangular rule; window > 0 restricts the convolution to the
// `window` most recent nodes. The accumulation order is independent of the
// window so a covering window reproduces the full rule bit for bit.
Trajectory rect_solve(const FdeProblem& p, const UniformGrid& g, long window) {
  const long N = g.n_steps;
  const double ha = std::pow(g.h, p.alpha);
  const std::vector<double> b = rect_weight_vector(p.alpha, N);

  Trajectory out;
  out.grid = g;
  out.kind = TrajectoryKind::numeric;
  out.values.reserve(static_cast<std::size_t>(N) + 1);
  out.values.push_back(p.y0);

  std::vector<double> fs;
  fs.reserve(static_cast<std::size_t>(N) + 1);
  fs.push_back(p.rhs(0.0, p.y0));

  for (long n = 0; n < N; ++n) {
    const long j0 = window > 0 ? std::max(0L, n - window + 1) : 0L;
    double conv = 0.0;
    for (long j = j0; j <= n; ++j) {
      conv += b[static_cast<std::size_t>(n - j)] * fs[static_cast<std::size_t>(j)];
    }
    const double y = p.y0 + ha * conv;
    out.values.push_back(y);
    fs.push_back(p.rhs(g.node(n + 1), y));
  }
  return out;
}

Trajectory trap_solve(const FdeProblem& p, const UniformGrid& g,
                      const SchemeConfig& cfg) {
  const long N = g.n_steps;
  const double ha = std::pow(g.h, p.alpha);
  const std::vector<double> a = trap_weight_vector(p.alpha, N + 1);

  Trajectory out;
  out.grid = g;
  out.kind = TrajectoryKind::numeric;
  out.values.push_back(p.y0);

  std::vector<double> fs{p.rhs(0.0, p.y0)};
  for (long n = 0; n < N; ++n) {
    double hist = trap_initial_weight(p.alpha, n) * fs[0];
    for (long j = 1; j <= n; ++j) {
      hist += a[static_cast<std::size_t>(n + 1 - j)] * fs[static_cast<std::size_t>(j)];
    }
    const double G = p.y0 + ha * hist;
    const double c = ha * a[0];
    const double t_next = g.node(n + 1);
    const double y = solve_implicit(p.rhs, t_next, G, c, out.values.back(),
                                    cfg.newton_tol, cfg.newton_max_iter, n + 1);
    out.values.push_back(y);
    fs.push_back(p.rhs(t_next, y));
  }
  return out;
}

Trajectory abm_solve(const FdeProblem& p, const UniformGrid& g) {
  const long N = g.n_steps;
  const double ha = std::pow(g.h, p.alpha);
  const std::vector<double> b = rect_weight_vector(p.alpha, N);
  const std::vector<double> a = trap_weight_vector(p.alpha, N + 1);

  Trajectory out;
  out.grid = g;
  out.kind = TrajectoryKind::numeric;
  out.values.push_back(p.y0);

  std::vector<double> fs{p.rhs(0.0, p.y0)};
  for (long n = 0; n < N; ++n) {
    double pred_conv = 0.0;
    for (long j = 0; j <= n; ++j) {
      pred_conv += b[static_cast<std::size_t>(n - j)] * fs[static_cast<std::size_t>(j)];
    }
    const double t_next = g.node(n + 1);
    const double y_pred = p.y0 + ha * pred_conv;

    double hist = trap_initial_weight(p.alpha, n) * fs[0];
    for (long j = 1; j <= n; ++j) {
      hist += a[static_cast<std::size_t>(n + 1 - j)] * fs[static_cast<std::size_t>(j)];
    }
    const double y = p.y0 + ha * (hist + a[0] * p.rhs(t_next, y_pred));
    out.values.push_back(y);
    fs.push_back(p.rhs(t_next, y));
  }
  return out;
}

// One bootstrap step for the two-point scheme.
double first_step(const FdeProblem& p, const UniformGrid& g,
                  const SchemeConfig& cfg) {
  const double ha = std::pow(g.h, p.alpha);
  const double f0 = p.rhs(0.0, p.y0);
  if (cfg.bootstrap == BootstrapRule::pi_rect_one_step) {
    const double b0 = rect_weight_vector(p.alpha, 0)[0];
    return p.y0 + ha * b0 * f0;
  }
  const double a0 = trap_weight_vector(p.alpha, 0)[0];
  const double G = p.y0 + ha * trap_initial_weight(p.alpha, 0) * f0;
  return solve_implicit(p.rhs, g.node(1), G, ha * a0, p.y0, cfg.newton_tol,
                        cfg.newton_max_iter, 1);
}

}  // namespace

ConvolutionWeights pi_rect_weights(double alpha, long n) {
  check_alpha(alpha);
  if (n < 0) throw std::invalid_argument("pi_rect_weights: n must be >= 0");
  ConvolutionWeights w;
  w.alpha = alpha;
  w.b = rect_weight_vector(alpha, n);
  return w;
}

ConvolutionWeights pi_trap_weights(double alpha, long n) {
  check_alpha(alpha);
  if (n < 0) throw std::invalid_argument("pi_trap_weights: n must be >= 0");
  ConvolutionWeights w;
  w.alpha = alpha;
  w.a = trap_weight_vector(alpha, n);
  w.a_tilde_0 = trap_initial_weight(alpha, n);
  return w;
}

double flawed_step(double alpha, double h, long n, double f_nm1, double f_n,
                   double y_n) {
  check_alpha(alpha);
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("flawed_step: h must be finite and > 0");
  }
  if (n < 1) {
    throw std::invalid_argument("flawed_step: n must be >= 1 (t_{n-1} appears)");
  }
  const double tn = static_cast<double>(n) * h;
  const double tnp1 = static_cast<double>(n + 1) * h;
  const double tnm1 = static_cast<double>(n - 1) * h;
  const double hg = h * gamma(alpha);

  const double brace_n = 2.0 * h * std::pow(tnp1, alpha) / (alpha * (alpha + 1.0)) -
                         tnm1 * std::pow(tnp1, alpha) / (alpha + 1.0) -
                         h * std::pow(tn, alpha) / alpha +
                         std::pow(tn, alpha + 1.0) / (alpha + 1.0);
  const double brace_nm1 = std::pow(tnp1, alpha + 1.0) / (alpha + 1.0) -
                           h * std::pow(tnp1, alpha) / alpha -
                           std::pow(tn, alpha + 1.0) / (alpha + 1.0);
  return y_n + f_n / hg * brace_n + f_nm1 / hg * brace_nm1;
}

Trajectory solve_flawed(const FdeProblem& p, const UniformGrid& g,
                        const SchemeConfig& cfg) {
  validate(p);
  validate(g);
  check_config_common(cfg);
  if (cfg.kind != SchemeKind::flawed_local) {
    throw std::invalid_argument("solve_flawed: config.kind must be flawed_local");
  }
  if (g.n_steps < 2) {
    throw std::invalid_argument("solve_flawed: need at least 2 steps");
  }

  Trajectory out;
  out.grid = g;
  out.kind = TrajectoryKind::numeric;
  out.values.push_back(p.y0);

  const double y1 = first_step(p, g, cfg);
  if (!std::isfinite(y1)) {
    out.diverged = true;
    return out;
  }
  out.values.push_back(y1);

  double f_prev = p.rhs(0.0, p.y0);
  double f_curr = p.rhs(g.node(1), y1);
  for (long n = 1; n < g.n_steps; ++n) {
    const double y_next =
        flawed_step(p.alpha, g.h, n, f_prev, f_curr, out.values.back());
    if (!std::isfinite(y_next)) {
      out.diverged = true;
      return out;
    }
    out.values.push_back(y_next);
    f_prev = f_curr;
    f_curr = p.rhs(g.node(n + 1), y_next);
  }
  return out;
}

Trajectory solve_pi(const FdeProblem& p, const UniformGrid& g,
                    const SchemeConfig& cfg) {
  validate(p);
  validate(g);
  check_config_common(cfg);
  switch (cfg.kind) {
    case SchemeKind::pi_rect_explicit:
      return rect_solve(p, g, 0);
    case SchemeKind::pi_trap_implicit:
      return trap_solve(p, g, cfg);
    case SchemeKind::abm:
      return abm_solve(p, g);
    default:
      throw std::invalid_argument(
          "solve_pi: config.kind must be pi_rect_explicit, pi_trap_implicit or abm");
  }
}

Trajectory solve_short_memory(const FdeProblem& p, const UniformGrid& g,
                              const SchemeConfig& cfg) {
  validate(p);
  validate(g);
  check_config_common(cfg);
  if (cfg.kind != SchemeKind::short_memory) {
    throw std::invalid_argument("solve_short_memory: config.kind must be short_memory");
  }
  return rect_solve(p, g, cfg.memory_window);
}

Trajectory solve(const FdeProblem& p, const UniformGrid& g,
                 const SchemeConfig& cfg) {
  switch (cfg.kind) {
    case SchemeKind::flawed_local:
      return solve_flawed(p, g, cfg);
    case SchemeKind::short_memory:
      return solve_short_memory(p, g, cfg);
    default:
      return solve_pi(p, g, cfg);
  }
}

}  // namespace fde
