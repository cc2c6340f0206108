#pragma once

#include <radspec/potential.hpp>

#include <functional>

namespace radspec {

/// Closed-form bound state, normalized to unit probability on [0, inf).
struct EigenPair {
    int n;
    double energy;
    std::function<double(double)> u; ///< normalized radial function u_n(r)
    double u0;                       ///< u_n(0)
    double du0;                      ///< u_n'(0)
    double norm_constant;            ///< half-line constant actually applied
    double norm_constant_full_line;  ///< closed-form full-line constant, for reference
    double mass;
    double hbar;
    double r_outer; ///< outer classical turning point at this energy
    double u_max;   ///< max |u| over the sampling window
};

struct OriginReport {
    double u0;
    double du0;
    double delta_strength; ///< hbar^2 sqrt(pi)/m * u0
};

namespace analytic {

/// (n + 1/2) hbar omega - depth.
double shifted_harmonic_level(const ShiftedHarmonic& model, double hbar, int n);

EigenPair shifted_harmonic_eigenpair(const ShiftedHarmonic& model, double hbar, int n);

/// Number of bound levels of the Morse well (0 when the well is too shallow).
int morse_bound_count(const Morse& model, double hbar);

/// (n + 1/2) hbar omega - (n + 1/2)^2 hbar^2 omega^2 / (4 depth) - depth with
/// omega = a sqrt(2 depth / mass). Throws no_bound_state past the last level.
double morse_level(const Morse& model, double hbar, int n);

EigenPair morse_eigenpair(const Morse& model, double hbar, int n);

/// Dispatch over any model with a closed-form spectrum. The linear-plus-
/// harmonic family maps exactly onto the shifted parabola first.
double level(const PotentialModel& model, double hbar, int n);
EigenPair eigenpair(const PotentialModel& model, double hbar, int n);

/// Origin data of a bound state plus the strength of the delta source its
/// full-space reading would need.
OriginReport origin_report(const EigenPair& pair);

double delta_strength(double u0, double hbar, double mass);

} // namespace analytic
} // namespace radspec
