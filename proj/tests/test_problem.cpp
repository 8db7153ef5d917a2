#include "fde/problem.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using fde::make_grid;

TEST_CASE("make_grid: node counts") {
  CHECK(make_grid(0.0625, 4.0).n_steps == 64);
  CHECK(make_grid(0.5, 0.5).n_steps == 1);
  CHECK(make_grid(0.1, 1.0).n_steps == 10);  // 1.0/0.1 lands on 9.999...
  CHECK(make_grid(0.03125, 4.0).n_steps == 128);
}

TEST_CASE("make_grid: argument validation") {
  CHECK_THROWS_AS(make_grid(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(-0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.5, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(std::numeric_limits<double>::quiet_NaN(), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.1, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("grid nodes are exact products") {
  const auto g = make_grid(0.0625, 4.0);
  CHECK(g.node(0) == 0.0);
  CHECK(g.node(1) == 0.0625);
  CHECK(g.node(64) == 4.0);  // 64 * 2^-4 is exact in binary
  for (long n = 0; n <= g.n_steps; ++n) {
    CHECK(g.node(n) == static_cast<double>(n) * 0.0625);
  }
}

TEST_CASE("linear problem converts to the general form") {
  fde::LinearTestProblem lp{0.8, -2.0, 2.0};
  const fde::FdeProblem p = lp.to_problem();
  CHECK(p.alpha == 0.8);
  CHECK(p.y0 == 2.0);
  CHECK(p.rhs(0.3, 1.5) == -3.0);
  CHECK(p.rhs(7.0, 0.0) == 0.0);
}

TEST_CASE("problem validation accepts alpha = 1, rejects the rest") {
  fde::LinearTestProblem lp{1.0, -2.0, 2.0};
  CHECK_NOTHROW(fde::validate(lp));
  lp.alpha = 0.0;
  CHECK_THROWS_AS(fde::validate(lp), std::invalid_argument);
  lp.alpha = 1.2;
  CHECK_THROWS_AS(fde::validate(lp), std::invalid_argument);
  lp.alpha = 0.8;
  lp.y0 = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(fde::validate(lp), std::invalid_argument);

  fde::FdeProblem p;
  p.alpha = 0.5;
  p.y0 = 1.0;
  CHECK_THROWS_AS(fde::validate(p), std::invalid_argument);  // rhs unset
}
