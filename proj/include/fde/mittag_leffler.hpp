#pragma once

namespace fde {

// Evaluation controls for ml(). series_tol is the absolute stagnation
// tolerance of the power series (three consecutive terms below it stop the
// summation); max_terms caps the series length.
struct MlParams {
  double alpha = 0.8;       // 0 < alpha <= 1
  double series_tol = 1e-15;
  int max_terms = 2000;     // small alpha needs ~(|z|^(1/alpha) + 40)/alpha terms
};

// Gamma(x), x > 0. Arguments <= 0 or non-finite are rejected.
double gamma(double x);

// One-parameter Mittag-Leffler function E_alpha(z) on the real line,
// intended for z in [-50, 10].
//
// Power series sum z^k / Gamma(alpha k + 1) with terms formed in log space
// and accumulated in compensated long double. For z <= -10 -- and for the
// small-alpha arguments whose alternating series would cancel beyond
// long-double headroom, |z|^(1/alpha) > 22 -- the asymptotic expansion
// -sum_{k>=1} z^{-k} / Gamma(1 - alpha k) is used instead, truncated at its
// smallest surviving term. Its absolute error is about the first omitted
// term: ~1e-8 at z = -10 for alpha = 0.8, shrinking like
// exp(-|z|^(1/alpha)) further out, but up to ~5e-6 near the switch as
// alpha -> 1.
//
// Throws on invalid parameters and when the power series fails to stagnate
// within max_terms.
double ml(double z, const MlParams& params);
double ml(double z, double alpha);

}  // namespace fde
