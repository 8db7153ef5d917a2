#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fde {

using Rhs = std::function<double(double t, double y)>;

// Caputo initial value problem D^alpha y = f(t, y), y(0) = y0.
// The fractional case is 0 < alpha < 1; alpha = 1 is also accepted so the
// classical reductions of the schemes can be exercised.
struct FdeProblem {
  double alpha = 0.8;
  Rhs rhs;
  double y0 = 0.0;
  std::string label;
};

// D^alpha y = lambda * y, y(0) = y0; the one problem with a closed-form
// solution used throughout the studies.
struct LinearTestProblem {
  double alpha = 0.8;
  double lambda = -2.0;
  double y0 = 2.0;

  FdeProblem to_problem() const;
};

// Uniform grid t_n = n*h for n = 0..n_steps. Nodes are always computed as
// the product n*h, never by repeated addition, so they are bit-reproducible.
struct UniformGrid {
  double h = 0.0;
  long n_steps = 0;

  double node(long n) const { return static_cast<double>(n) * h; }
  long node_count() const { return n_steps + 1; }
};

// n_steps = floor(t_max/h + 1e-9); the slack absorbs binary representation
// of decimal step sizes.
UniformGrid make_grid(double h, double t_max);

enum class TrajectoryKind { numeric, exact };

// values holds grid.n_steps + 1 entries unless the producing run overflowed,
// in which case `diverged` is set and values stops at the last finite entry.
struct Trajectory {
  UniformGrid grid;
  std::vector<double> values;
  TrajectoryKind kind = TrajectoryKind::numeric;
  bool diverged = false;
};

void validate(const FdeProblem& p);
void validate(const LinearTestProblem& p);
void validate(const UniformGrid& g);

}  // namespace fde
