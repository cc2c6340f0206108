#pragma once

#include <radspec/analytic.hpp>
#include <radspec/potential.hpp>

#include <string>
#include <utility>
#include <vector>

namespace radspec {

/// Power-series solution u(r) = r^lambda sum_k coeffs[k] r^k of the radial
/// equation about the origin.
struct SeriesSolution {
    int ell;
    int lambda;
    double energy;
    std::vector<double> coeffs; ///< a_0 .. a_K
};

/// One distributional term: coeff * r^ell Y_ell^mu Delta^p delta.
struct DeltaTerm {
    int p;
    double coeff;
};

/// The delta-source content of a series solution read as a full-space
/// function. Empty means the function is annihilated by no source at all.
struct DeltaExpansion {
    int ell;
    int lambda;
    std::vector<DeltaTerm> terms; ///< ascending in p, zero coefficients dropped
    bool empty() const { return terms.empty(); }
};

namespace frobenius {

/// Indicial exponents of the radial equation: (ell + 1, -ell).
std::pair<int, int> indicial_roots(int ell);

/// Recursive coefficients a_1..a_order given a_0, for the branch selected by
/// lambda (must be one of the indicial roots). v_taylor holds the potential
/// coefficients about the origin. On the lambda = -ell branch the recursion
/// hits a resonant index; a vanishing right side leaves that coefficient free
/// (set to 0), anything else throws log_resonance.
SeriesSolution series_coefficients(const std::vector<double>& v_taylor, double mass, double hbar,
                                   int ell, int lambda, double energy, double a0, int order = 24);

/// Partial sum r^lambda sum a_k r^k.
double evaluate(const SeriesSolution& sol, double r);

/// True when the dropped tail at r is below rel * |a_0|.
bool tail_within(const SeriesSolution& sol, double r, double rel = 1e-12);

/// Weight (1 - 2 ell) / (4 p + 1).
double delta_coupling_b(int ell, int p);

/// Weight -(4p + 1) pi^{3/2} / (2^{2p-1} p! Gamma(p + 3/2)); p = 0 gives -4 pi.
double delta_coupling_c(int p);

/// Delta-source expansion of the series solution. The lambda = ell + 1 branch
/// is always empty; the lambda = -ell branch collects one term per even k
/// with a_k != 0.
DeltaExpansion q_delta(const SeriesSolution& sol);

/// True iff q_delta(sol) is empty.
bool is_H_eigenfunction(const SeriesSolution& sol);

/// q_delta scaled by -hbar^2 / (2 mass): the residual left over when the
/// kinetic operator acts on the full-space reading of the solution.
DeltaExpansion h_action_residual(const SeriesSolution& sol, double hbar, double mass);

/// ell = 0 only: total delta coefficient after multiplying in Y_0^0.
double collapse_y00(const DeltaExpansion& expansion);

/// Max pointwise residual of the radial equation over a 500-point grid
/// spanning the classical region and a margin beyond, scaled by max |u|.
/// Second derivatives come from 5-point central differences.
double hd_residual_numeric(const EigenPair& pair, const PotentialModel& model, int ell,
                           double hbar);

/// Canonical one-line rendering, e.g. "Q = (-12.566...) * r^0 Y00 * delta".
std::string render(const DeltaExpansion& expansion);

} // namespace frobenius
} // namespace radspec
