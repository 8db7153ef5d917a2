#include "fde/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fde {

FdeProblem LinearTestProblem::to_problem() const {
  FdeProblem p;
  p.alpha = alpha;
  p.y0 = y0;
  const double lam = lambda;
  p.rhs = [lam](double, double y) { return lam * y; };
  p.label = "linear(lambda=" + std::to_string(lambda) + ")";
  return p;
}

UniformGrid make_grid(double h, double t_max) {
  if (!std::isfinite(h) || !std::isfinite(t_max) || h <= 0.0) {
    throw std::invalid_argument("make_grid: h and t_max must be finite, h > 0");
  }
  if (t_max < h) {
    throw std::invalid_argument("make_grid: t_max must be >= h");
  }
  UniformGrid g;
  g.h = h;
  g.n_steps = static_cast<long>(std::floor(t_max / h + 1e-9));
  return g;
}

void validate(const FdeProblem& p) {
  if (!(p.alpha > 0.0) || p.alpha > 1.0) {
    throw std::invalid_argument("problem: alpha must satisfy 0 < alpha <= 1");
  }
  if (!p.rhs) {
    throw std::invalid_argument("problem: rhs is not set");
  }
  if (!std::isfinite(p.y0)) {
    throw std::invalid_argument("problem: y0 must be finite");
  }
}

void validate(const LinearTestProblem& p) {
  if (!(p.alpha > 0.0) || p.alpha > 1.0) {
    throw std::invalid_argument("problem: alpha must satisfy 0 < alpha <= 1");
  }
  if (!std::isfinite(p.lambda) || !std::isfinite(p.y0)) {
    throw std::invalid_argument("problem: lambda and y0 must be finite");
  }
}

void validate(const UniformGrid& g) {
  if (!std::isfinite(g.h) || g.h <= 0.0 || g.n_steps < 1) {
    throw std::invalid_argument("grid: need finite h > 0 and n_steps >= 1");
  }
}

}  // namespace fde
