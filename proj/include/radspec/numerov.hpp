#pragma once

#include <radspec/parallel.hpp>
#include <radspec/potential.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace radspec {

/// Uniform grid; r_start may be negative in full-line mode.
struct RadialGrid {
    double r_start = 0.0;
    double r_end = 0.0;
    double h = 0.0;
    std::size_t count = 0;

    double r(std::size_t i) const { return r_start + h * static_cast<double>(i); }
};

enum class BoundaryCondition {
    dirichlet_origin, ///< u(0) = 0
    neumann_origin,   ///< u'(0) = 0, u(0) free (ell = 0 only)
    full_line,        ///< integrate from r_start < 0 with a decaying start
};

/// "dirichlet", "neumann" or "full-line".
const char* to_string(BoundaryCondition bc);

struct SolverOptions {
    /// Approximate step; the default is (grid span)/4000. The value is kept
    /// exactly and the grid is extended past the requested end to land on a
    /// whole number of steps.
    std::optional<double> step;
    double match_tol = 1e-10;
    int max_iterations = 200;
    double pad_widths = 8.0; ///< forbidden-region padding in classical widths
};

struct ShootingResult {
    int n = 0;          ///< interior node count
    double energy = 0.0;
    std::vector<double> u; ///< samples, normalized to unit L2 norm
    RadialGrid grid;
    BoundaryCondition bc = BoundaryCondition::dirichlet_origin;
    double u0 = 0.0;    ///< u at r = 0
    double du0 = 0.0;   ///< du/dr at r = 0
    int iterations = 0; ///< integration sweeps consumed by the search
};

namespace numerov {

/// Fourth-order integration of u'' = q(r) u across the grid, seeded by the
/// first two samples. Whenever a value exceeds 1e250 the filled prefix is
/// rescaled in place, so sweeps through steep forbidden regions stay finite;
/// the shape is preserved but the absolute scale then differs from the seed.
std::vector<double> numerov_integrate(const std::function<double(double)>& q,
                                      const RadialGrid& grid, double y0, double y1);

/// Grid sized from the classical region at e_hi: r_end is the outer turning
/// point plus pad_widths classical widths; full-line grids start the same
/// margin left of the inner turning point of the continued potential and
/// always contain r = 0 as a sample.
RadialGrid make_grid(const PotentialModel& model, int ell, double hbar, double e_hi,
                     BoundaryCondition bc, const SolverOptions& options = {});

/// Level n inside [e_lo, e_hi]. Outward node counts at the ends must satisfy
/// N(e_lo) <= n < N(e_hi) or a bracket_error reports what was seen. Bisection
/// on node counts isolates the level, then a safeguarded secant drives the
/// outward/inward derivative mismatch at the outer turning point below
/// match_tol. ell > 0 requires dirichlet_origin.
ShootingResult eigenvalue_search(const PotentialModel& model, int ell, double hbar,
                                 BoundaryCondition bc, int n, double e_lo, double e_hi,
                                 const SolverOptions& options = {});

/// Automatic bracket for level n: scan upward from just above the potential
/// minimum in half-quantum steps of the parabolic fit until the node count
/// passes n. Wells with a finite dissociation limit cap the scan there and
/// throw no_bound_state when the well holds no level n.
std::pair<double, double> bracket_level(const PotentialModel& model, int ell, double hbar,
                                        BoundaryCondition bc, int n,
                                        const SolverOptions& options = {});

/// bracket_level followed by eigenvalue_search.
ShootingResult solve_level(const PotentialModel& model, int ell, double hbar,
                           BoundaryCondition bc, int n, const SolverOptions& options = {});

/// Levels 0..n_max. Rows are independent solves; Exec::parallel distributes
/// them across OpenMP threads, Exec::serial runs the same code in order.
std::vector<ShootingResult> solve_levels(const PotentialModel& model, int ell, double hbar,
                                         BoundaryCondition bc, int n_max,
                                         const SolverOptions& options = {},
                                         Exec exec = Exec::parallel);

/// Origin boundary form u1(0) u2'(0) - u2(0) u1'(0) from the stored origin
/// values. Full-line results have no boundary at r = 0 and are rejected with
/// a domain_error; read their samples at r = 0 instead.
double wronskian_limit(const ShootingResult& res1, const ShootingResult& res2);

} // namespace numerov
} // namespace radspec
