#pragma once

#include <span>
#include <vector>

namespace radspec::specfun {

/// Physicists' Hermite polynomial H_n(x) by upward recurrence.
double hermite_eval(int n, double x);

/// All n real zeros of H_n, ascending. Brackets come from the interlacing
/// zeros of H_{n-1}; each root is refined by bisection and the list is
/// symmetrized about 0.
std::vector<double> hermite_zeros(int n);

/// Generalized Laguerre polynomial L_n^{(b)}(z), b > -1.
double laguerre_eval(int n, double b, double z);

/// ln Gamma(x) for x > 0 (Lanczos approximation, reflection below 1/2).
double log_gamma(double x);

/// Integral of uniformly sampled values with spacing h. Composite Simpson;
/// when the sample count is even the last interval falls back to trapezoid.
/// Requires at least 3 samples.
double integrate_samples(std::span<const double> values, double h);

/// Same, but takes the abscissae and checks they are uniform.
double integrate_samples(std::span<const double> x, std::span<const double> y);

} // namespace radspec::specfun
