#pragma once

#include <radspec/analytic.hpp>
#include <radspec/numerov.hpp>
#include <radspec/parallel.hpp>
#include <radspec/potential.hpp>

#include <functional>
#include <string>
#include <vector>

namespace radspec {

/// Whether a level belongs to the strict Hamiltonian (u_n(0) = 0 within
/// tolerance) or only to the extended operator.
enum class LevelClass { h_and_hd, hd_only };

const char* to_string(LevelClass cls);

/// One level of a spectrum source: energy plus origin data for classification.
struct LevelData {
    double energy;
    double u0;
    double u_max;
};

/// Anything that can produce levels 0, 1, 2, ...: an analytic spectrum or the
/// shooting solver under a fixed boundary condition. level(n) throws
/// no_bound_state past the last bound level.
struct LevelSource {
    std::string label;
    std::string criterion; ///< which discreteness rule picks the levels
    std::function<LevelData(int)> level;
};

struct SpectrumRow {
    int n;
    double e_ref;
    double e_approx;
    double abs_dev; ///< |e_ref - e_approx|, formed exactly from the two fields
    double u0_approx;
    LevelClass cls;
};

struct SpectrumReport {
    std::string reference_label;
    std::string approx_label;
    std::string criterion; ///< inherited from the approximate source
    double tol = 1e-9;
    bool truncated = false; ///< a source ran out of levels before count
    std::vector<SpectrumRow> rows;
};

/// One boundary-condition comparison at a fixed well offset.
struct SweepRow {
    double r_m;
    double beta_r_m;
    double e_dirichlet;
    double e_full_line;
    double gap;         ///< |e_dirichlet - e_full_line|
    double u0_abs;      ///< analytic |u_n(0)| at this offset
    std::string error;  ///< empty on success; failed rows keep NaN values
};

namespace compare {

/// Separates exact origin zeros from small exponential tails by seven orders
/// of magnitude (the closest tail in play is about e^{-4.5} of the maximum).
inline constexpr double kClassifyTol = 1e-9;

LevelSource analytic_source(const PotentialModel& model, double hbar);

LevelSource numerov_source(const PotentialModel& model, int ell, double hbar,
                           BoundaryCondition bc, const SolverOptions& options = {});

/// Level-by-level deviation table between two sources. Rows are independent
/// and run in parallel under Exec::parallel; the report is flagged truncated
/// when either source runs out of levels before count.
SpectrumReport compare_spectra(const LevelSource& reference, const LevelSource& approx,
                               int count, double tol = kClassifyTol,
                               Exec exec = Exec::parallel);

/// Classification of the first count levels of a closed-form model.
std::vector<LevelClass> classify_levels(const PotentialModel& model, double hbar, int count,
                                        double tol = kClassifyTol);

/// Linear-term strength that places the well offset beta * r_m on the chosen
/// nonnegative zero of H_degree (zeros indexed ascending from 0), so that
/// level n = degree acquires u_n(0) = 0.
double hermite_zero_tuning(double mass, double omega, double hbar, int degree, int zero_index);

/// Dirichlet-versus-full-line energy gap as the well retreats from the
/// origin. Rows are solved independently (in parallel under Exec::parallel);
/// a row that fails records the error and leaves the sweep running.
std::vector<SweepRow> bc_sensitivity_sweep(const ShiftedHarmonic& base, double hbar, int n,
                                           const std::vector<double>& r_m_values,
                                           const SolverOptions& options = {},
                                           Exec exec = Exec::parallel);

} // namespace compare
} // namespace radspec
