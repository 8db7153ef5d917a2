#pragma once

// Test-only tanh-sinh quadrature on (a, b). Double-exponential node decay
// tames integrable endpoint singularities such as u^(alpha - 1), so the
// product-integration weights can be checked against direct numerical
// integration without reusing any of their closed forms. Node positions are
// formed from exp-based endpoint distances, which keeps arguments next to
// the endpoints fully accurate; put the singular point at an endpoint whose
// coordinate is exact (u = 0 works best).

#include <cmath>

namespace testsupport {

template <typename F>
double tanh_sinh(F f, double a, double b, double u_max = 6.0) {
  const double half = 0.5 * (b - a);
  const double step = 1.0 / 128.0;
  const double pi_half = 1.5707963267948966;

  double sum = 0.0;
  const int kmax = static_cast<int>(u_max / step);
  for (int k = -kmax; k <= kmax; ++k) {
    const double u = k * step;
    const double s = pi_half * std::sinh(u);
    const double e = std::exp(-2.0 * std::fabs(s));
    const double dist = half * 2.0 * e / (1.0 + e);          // to nearest endpoint
    const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));  // 1 / cosh(s)^2
    const double w = pi_half * std::cosh(u) * sech2;
    const double arg = (k >= 0) ? b - dist : a + dist;
    if (arg <= a || arg >= b) continue;  // underflowed to an endpoint
    const double v = f(arg);
    if (std::isfinite(v)) sum += w * v;
  }
  return sum * half * step;
}

}  // namespace testsupport
