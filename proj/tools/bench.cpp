// Serial-versus-parallel benchmark for the batched solvers.
//
// Each workload below distributes independent rows (one shooting solve per
// row) across OpenMP threads. The serial path runs the identical code in
// order, so the two must agree bitwise; the benchmark verifies that while
// timing both. Build without OpenMP and the parallel column simply repeats
// the serial path.
//
// Usage: radspec-bench [reps]   (default 3, best time of reps is reported)

#include <radspec/compare.hpp>
#include <radspec/numerov.hpp>
#include <radspec/potential.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

struct BenchResult {
    double serial_s = 0.0;
    double parallel_s = 0.0;
    double max_dev = 0.0; // largest |serial - parallel| over all row fields
};

// Best-of-reps timing of fn(exec); fn returns the flattened numeric row
// fields so the two policies can be compared field by field.
template <typename Fn>
BenchResult time_policies(int reps, Fn&& fn) {
    BenchResult out;
    std::vector<double> ref, par;
    out.serial_s = 1e300;
    out.parallel_s = 1e300;
    for (int rep = 0; rep < reps; ++rep) {
        double t0 = now_seconds();
        ref = fn(radspec::Exec::serial);
        double t1 = now_seconds();
        par = fn(radspec::Exec::parallel);
        double t2 = now_seconds();
        out.serial_s = std::min(out.serial_s, t1 - t0);
        out.parallel_s = std::min(out.parallel_s, t2 - t1);
    }
    if (ref.size() != par.size()) {
        out.max_dev = 1e300;
        return out;
    }
    for (std::size_t i = 0; i < ref.size(); ++i) {
        double a = ref[i];
        double b = par[i];
        if (std::isnan(a) && std::isnan(b)) continue;
        out.max_dev = std::max(out.max_dev, std::fabs(a - b));
    }
    return out;
}

void print_row(const char* name, int rows, const BenchResult& r) {
    double speedup = r.parallel_s > 0.0 ? r.serial_s / r.parallel_s : 0.0;
    std::printf("%-24s %5d %12.4f %12.4f %9.2fx %11.3e  %s\n", name, rows,
                r.serial_s * 1e3, r.parallel_s * 1e3, speedup, r.max_dev,
                r.max_dev == 0.0 ? "bitwise" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int reps = 3;
    if (argc > 1) {
        reps = std::atoi(argv[1]);
        if (reps < 1) {
            std::fprintf(stderr, "usage: %s [reps >= 1]\n", argv[0]);
            return 1;
        }
    }

#ifdef _OPENMP
    std::printf("OpenMP threads: %d, reps: %d (best time shown)\n",
                omp_get_max_threads(), reps);
#else
    std::printf("OpenMP off (serial build), reps: %d (best time shown)\n", reps);
#endif
    std::printf("%-24s %5s %12s %12s %9s %11s\n", "workload", "rows",
                "serial [ms]", "parallel[ms]", "speedup", "max |dev|");

    bool ok = true;

    {
        // Ten Dirichlet levels of the centered harmonic well.
        radspec::CenteredHarmonic model{1.0, 1.0};
        const int n_max = 9;
        auto res = time_policies(reps, [&](radspec::Exec exec) {
            auto levels = radspec::numerov::solve_levels(
                model, 0, 1.0, radspec::BoundaryCondition::dirichlet_origin, n_max, {},
                exec);
            std::vector<double> flat;
            for (const auto& lvl : levels) {
                flat.push_back(lvl.energy);
                flat.push_back(lvl.u0);
                flat.push_back(lvl.du0);
            }
            return flat;
        });
        print_row("solve_levels", n_max + 1, res);
        ok = ok && res.max_dev == 0.0;
    }

    {
        // Boundary-condition gap sweep: eleven offsets, two solves each.
        radspec::ShiftedHarmonic base{1.0, 1.0, 0.0, 0.0};
        std::vector<double> r_m;
        for (int i = 0; i <= 10; ++i) r_m.push_back(0.5 * i);
        auto res = time_policies(reps, [&](radspec::Exec exec) {
            auto rows = radspec::compare::bc_sensitivity_sweep(base, 1.0, 0, r_m, {}, exec);
            std::vector<double> flat;
            for (const auto& row : rows) {
                flat.push_back(row.e_dirichlet);
                flat.push_back(row.e_full_line);
                flat.push_back(row.gap);
                flat.push_back(row.u0_abs);
            }
            return flat;
        });
        print_row("bc_sensitivity_sweep", static_cast<int>(r_m.size()), res);
        ok = ok && res.max_dev == 0.0;
    }

    {
        // Shooting solver against the closed-form ladder, eight levels.
        radspec::CenteredHarmonic model{1.0, 1.0};
        auto reference = radspec::compare::analytic_source(model, 1.0);
        auto approx = radspec::compare::numerov_source(
            model, 0, 1.0, radspec::BoundaryCondition::full_line);
        const int count = 8;
        auto res = time_policies(reps, [&](radspec::Exec exec) {
            auto report =
                radspec::compare::compare_spectra(reference, approx, count, 1e-6, exec);
            std::vector<double> flat;
            for (const auto& row : report.rows) {
                flat.push_back(row.e_approx);
                flat.push_back(row.abs_dev);
                flat.push_back(row.u0_approx);
            }
            return flat;
        });
        print_row("compare_spectra", count, res);
        ok = ok && res.max_dev == 0.0;
    }

    if (!ok) {
        std::fprintf(stderr, "serial and parallel results differ\n");
        return 1;
    }
    return 0;
}
