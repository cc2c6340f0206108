#include <radspec/compare.hpp>

#include <radspec/errors.hpp>
#include <radspec/specfun.hpp>

#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace radspec {

const char* to_string(LevelClass cls) {
    return cls == LevelClass::h_and_hd ? "H-and-Hd" : "Hd-only";
}

namespace compare {

namespace {

LevelClass classify_origin(double u0, double u_max, double tol) {
    return std::abs(u0) < tol * u_max ? LevelClass::h_and_hd : LevelClass::hd_only;
}

} // namespace

LevelSource analytic_source(const PotentialModel& model, double hbar) {
    potential::validate(model);
    if (!(hbar > 0.0)) throw domain_error("hbar must be positive");
    LevelSource source;
    source.label = "analytic " + potential::model_name(model);
    source.criterion = "analytic full-line";
    source.level = [model, hbar](int n) {
        EigenPair pair = analytic::eigenpair(model, hbar, n);
        return LevelData{pair.energy, pair.u0, pair.u_max};
    };
    return source;
}

LevelSource numerov_source(const PotentialModel& model, int ell, double hbar,
                           BoundaryCondition bc, const SolverOptions& options) {
    potential::validate(model);
    if (!(hbar > 0.0)) throw domain_error("hbar must be positive");
    LevelSource source;
    source.label = "numerov " + potential::model_name(model);
    source.criterion = to_string(bc);
    source.level = [model, ell, hbar, bc, options](int n) {
        ShootingResult res = numerov::solve_level(model, ell, hbar, bc, n, options);
        double u_max = 0.0;
        for (double v : res.u) u_max = std::max(u_max, std::abs(v));
        return LevelData{res.energy, res.u0, u_max};
    };
    return source;
}

SpectrumReport compare_spectra(const LevelSource& reference, const LevelSource& approx,
                               int count, double tol, Exec exec) {
    if (count < 0) throw domain_error("level count must be nonnegative");
    if (!(tol > 0.0)) throw domain_error("classification tolerance must be positive");
    if (!reference.level || !approx.level) throw domain_error("level source has no callback");

    SpectrumReport report;
    report.reference_label = reference.label;
    report.approx_label = approx.label;
    report.criterion = approx.criterion;
    report.tol = tol;

    std::vector<std::optional<SpectrumRow>> slots(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(count));
    const bool par = exec == Exec::parallel;
    (void)par;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (par)
#endif
    for (int n = 0; n < count; ++n) {
        try {
            LevelData ref = reference.level(n);
            LevelData app = approx.level(n);
            slots[n] = SpectrumRow{n,       ref.energy,
                                   app.energy, std::abs(ref.energy - app.energy),
                                   app.u0,  classify_origin(app.u0, app.u_max, tol)};
        } catch (const no_bound_state&) {
            // slot stays empty: the report truncates here
        } catch (...) {
            failures[n] = std::current_exception();
        }
    }

    // Rows past the first exhausted level do not exist; failures there are moot.
    int keep = count;
    for (int n = 0; n < count; ++n) {
        if (!slots[n] && !failures[n]) {
            keep = n;
            break;
        }
    }
    for (int n = 0; n < keep; ++n) {
        if (failures[n]) std::rethrow_exception(failures[n]);
    }
    report.truncated = keep < count;
    report.rows.reserve(static_cast<std::size_t>(keep));
    for (int n = 0; n < keep; ++n) report.rows.push_back(*slots[n]);
    return report;
}

std::vector<LevelClass> classify_levels(const PotentialModel& model, double hbar, int count,
                                        double tol) {
    if (count < 0) throw domain_error("level count must be nonnegative");
    if (!(tol > 0.0)) throw domain_error("classification tolerance must be positive");
    std::vector<LevelClass> classes;
    classes.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        EigenPair pair = analytic::eigenpair(model, hbar, n);
        classes.push_back(classify_origin(pair.u0, pair.u_max, tol));
    }
    return classes;
}

double hermite_zero_tuning(double mass, double omega, double hbar, int degree, int zero_index) {
    if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0))
        throw domain_error("mass, omega and hbar must be positive");
    if (degree < 1) throw domain_error("Hermite degree must be at least 1");
    if (zero_index < 0) throw domain_error("zero index must be nonnegative");

    std::vector<double> nonneg;
    for (double z : specfun::hermite_zeros(degree))
        if (z >= 0.0) nonneg.push_back(z); // zeros come back ascending
    if (static_cast<std::size_t>(zero_index) >= nonneg.size())
        throw domain_error("H_" + std::to_string(degree) + " has only " +
                           std::to_string(nonneg.size()) + " nonnegative zeros");

    double beta = std::sqrt(mass * omega / hbar);
    return mass * omega * omega * nonneg[static_cast<std::size_t>(zero_index)] / beta;
}

std::vector<SweepRow> bc_sensitivity_sweep(const ShiftedHarmonic& base, double hbar, int n,
                                           const std::vector<double>& r_m_values,
                                           const SolverOptions& options, Exec exec) {
    if (!(hbar > 0.0)) throw domain_error("hbar must be positive");
    if (n < 0) throw domain_error("level index must be nonnegative");
    if (r_m_values.empty()) throw domain_error("r_m sweep needs at least one value");
    for (std::size_t i = 0; i < r_m_values.size(); ++i) {
        if (!(r_m_values[i] >= 0.0)) throw domain_error("r_m values must be nonnegative");
        if (i > 0 && !(r_m_values[i] > r_m_values[i - 1]))
            throw domain_error("r_m values must be strictly ascending");
    }
    {
        ShiftedHarmonic probe = base;
        probe.r_eq = r_m_values.front();
        potential::validate(PotentialModel{probe});
    }

    const double beta = std::sqrt(base.mass * base.omega / hbar);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<SweepRow> rows(r_m_values.size());
    const bool par = exec == Exec::parallel;
    (void)par;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (par)
#endif
    for (int i = 0; i < static_cast<int>(r_m_values.size()); ++i) {
        ShiftedHarmonic model = base;
        model.r_eq = r_m_values[i];
        PotentialModel pm{model};

        SweepRow row;
        row.r_m = model.r_eq;
        row.beta_r_m = beta * model.r_eq;
        row.e_dirichlet = row.e_full_line = row.gap = row.u0_abs = nan;
        try {
            ShootingResult dir = numerov::solve_level(pm, 0, hbar,
                                                      BoundaryCondition::dirichlet_origin, n,
                                                      options);
            ShootingResult full = numerov::solve_level(pm, 0, hbar, BoundaryCondition::full_line,
                                                       n, options);
            row.e_dirichlet = dir.energy;
            row.e_full_line = full.energy;
            row.gap = std::abs(dir.energy - full.energy);
            row.u0_abs = std::abs(analytic::eigenpair(pm, hbar, n).u0);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows[i] = std::move(row);
    }
    return rows;
}

} // namespace compare
} // namespace radspec
