#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace radspec {

/// V(r) = 1/2 m w^2 (r - r_eq)^2 - depth
struct ShiftedHarmonic {
    double mass;
    double omega;
    double r_eq;
    double depth;
};

/// V(r) = depth (e^{-2a(r-r_eq)} - 2 e^{-a(r-r_eq)})
struct Morse {
    double mass;
    double depth;
    double a;
    double r_eq;
};

/// V(r) = 1/2 m w^2 r^2
struct CenteredHarmonic {
    double mass;
    double omega;
};

/// V(r) = 1/2 m w^2 r^2 - force * r
struct HarmonicPlusLinear {
    double mass;
    double omega;
    double force;
};

/// V(r) = sum_j coeffs[j] r^j, for the power-series machinery.
struct TaylorPotential {
    double mass;
    std::vector<double> coeffs;
};

using PotentialModel =
    std::variant<ShiftedHarmonic, Morse, CenteredHarmonic, HarmonicPlusLinear, TaylorPotential>;

struct TurningPoints {
    double inner;
    double outer;
};

namespace potential {

/// Throws domain_error when a parameter is out of range (mass/omega/a <= 0,
/// depth < 0, r_eq < 0, empty coefficient list).
void validate(const PotentialModel& model);

double mass_of(const PotentialModel& model);

/// Short hyphenated tag, e.g. "shifted-harmonic" or "morse".
std::string model_name(const PotentialModel& model);

/// Plain potential value; defined for r < 0 as the analytic continuation.
double evaluate(const PotentialModel& model, double r);

/// V(r) + l(l+1) hbar^2 / (2 m r^2). Throws singularity_error at r = 0 with
/// ell > 0.
double effective_potential(const PotentialModel& model, int ell, double hbar, double r);

/// Second-order expansion about the minimum, as a ShiftedHarmonic. Morse maps
/// to omega = a sqrt(2 depth / mass); the harmonic-plus-linear model maps
/// exactly (completing the square). TaylorPotential is unsupported.
ShiftedHarmonic parabolic_fit(const PotentialModel& model);

/// Coefficients v_0..v_order of V about r = 0. Exact for every model; the
/// Morse exponentials are expanded termwise, not differenced.
std::vector<double> taylor_at_origin(const PotentialModel& model, int order);

/// Classical turning points at the given energy, inner clamped to 0 when the
/// mathematical root is negative. Energy below the minimum throws
/// no_classical_region; at the minimum both points degenerate to it.
TurningPoints turning_points(const PotentialModel& model, double energy);

/// Same, without clamping: turning points of the analytic continuation on the
/// whole line (for full-line grids). Throws unsupported_model when the
/// continuation fails to rise above the energy on the left.
TurningPoints turning_points_continued(const PotentialModel& model, double energy);

double minimum_location(const PotentialModel& model);
double minimum_value(const PotentialModel& model);

/// Energy the potential approaches as r -> infinity, when finite (Morse -> 0).
std::optional<double> dissociation_limit(const PotentialModel& model);

} // namespace potential
} // namespace radspec
