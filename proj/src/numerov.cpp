#include <radspec/numerov.hpp>

#include <radspec/errors.hpp>
#include <radspec/frobenius.hpp>
#include <radspec/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <string>
#include <utility>

namespace radspec {

const char* to_string(BoundaryCondition bc) {
    switch (bc) {
    case BoundaryCondition::dirichlet_origin:
        return "dirichlet";
    case BoundaryCondition::neumann_origin:
        return "neumann";
    case BoundaryCondition::full_line:
        return "full-line";
    }
    return "full-line";
}

} // namespace radspec

namespace radspec::numerov {
namespace {

constexpr double kRescaleLimit = 1e250;
constexpr double kSeedTiny = 1e-12;

void check_grid(const RadialGrid& grid) {
    if (!(grid.h > 0.0)) throw domain_error("grid step must be positive");
    if (grid.count < 64) throw domain_error("grid needs at least 64 samples");
    if (!(grid.r_end > grid.r_start)) throw domain_error("grid span must be positive");
    double span = grid.r_end - grid.r_start;
    double implied = grid.h * static_cast<double>(grid.count - 1);
    if (std::abs(implied - span) > 1e-3 * grid.h)
        throw domain_error("grid count does not match span and step");
}

// y[0], y[1] seeded; fills y[2..last]. t_of(i) = h^2 q(r_i) / 12.
template <class T>
void sweep_forward(const T& t_of, std::vector<double>& y, std::size_t last) {
    double t_prev = t_of(0);
    double t_cur = t_of(1);
    for (std::size_t i = 1; i < last; ++i) {
        double t_next = t_of(i + 1);
        double denom = 1.0 - t_next;
        if (denom == 0.0) throw solver_error("integration step too large for this potential");
        y[i + 1] = ((2.0 + 10.0 * t_cur) * y[i] - (1.0 - t_prev) * y[i - 1]) / denom;
        if (std::abs(y[i + 1]) > kRescaleLimit) {
            double f = 1.0 / std::abs(y[i + 1]);
            for (std::size_t j = 0; j <= i + 1; ++j) y[j] *= f;
        }
        if (!std::isfinite(y[i + 1])) throw solver_error("outward sweep diverged");
        t_prev = t_cur;
        t_cur = t_next;
    }
}

// y[count-1], y[count-2] seeded; fills y[count-3..first].
template <class T>
void sweep_backward(const T& t_of, std::vector<double>& y, std::size_t first) {
    std::size_t count = y.size();
    double t_prev = t_of(count - 1);
    double t_cur = t_of(count - 2);
    for (std::size_t i = count - 2; i > first; --i) {
        double t_next = t_of(i - 1);
        double denom = 1.0 - t_next;
        if (denom == 0.0) throw solver_error("integration step too large for this potential");
        y[i - 1] = ((2.0 + 10.0 * t_cur) * y[i] - (1.0 - t_prev) * y[i + 1]) / denom;
        if (std::abs(y[i - 1]) > kRescaleLimit) {
            double f = 1.0 / std::abs(y[i - 1]);
            for (std::size_t j = i - 1; j < count; ++j) y[j] *= f;
        }
        if (!std::isfinite(y[i - 1])) throw solver_error("inward sweep diverged");
        t_prev = t_cur;
        t_cur = t_next;
    }
}

// Sign changes across the nonzero samples. Exact zeros (seeded endpoints,
// underflowed forbidden-region tails) separate nothing by themselves.
int count_sign_changes(const std::vector<double>& y) {
    int nodes = 0;
    double last = 0.0;
    for (double v : y) {
        if (v == 0.0) continue;
        if (last != 0.0 && std::signbit(v) != std::signbit(last)) ++nodes;
        last = v;
    }
    return nodes;
}

double central5(const std::vector<double>& y, std::size_t i, double h) {
    return (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * h);
}

double forward5(const std::vector<double>& y, double h) {
    return (-25.0 * y[0] + 48.0 * y[1] - 36.0 * y[2] + 16.0 * y[3] - 3.0 * y[4]) / (12.0 * h);
}

void check_problem(const PotentialModel& model, int ell, double hbar, BoundaryCondition bc) {
    potential::validate(model);
    if (!(hbar > 0.0)) throw domain_error("hbar must be positive");
    if (ell < 0) throw domain_error("ell must be nonnegative");
    if (ell > 0 && bc != BoundaryCondition::dirichlet_origin)
        throw domain_error("ell > 0 admits only the vanishing-origin condition");
}

// Shared state for repeated sweeps at varying energy on one fixed grid.
struct Engine {
    const PotentialModel& model;
    int ell;
    double hbar;
    BoundaryCondition bc;
    RadialGrid grid;
    double mass;
    double c; // 2 m / hbar^2
    std::vector<double> base; // c * V_eff(r_i)
    std::vector<double> vtay; // origin expansion, for the flat-start seed
    mutable int sweeps = 0;

    Engine(const PotentialModel& m, int l, double hb, BoundaryCondition b, const RadialGrid& g)
        : model(m), ell(l), hbar(hb), bc(b), grid(g) {
        mass = potential::mass_of(model);
        c = 2.0 * mass / (hbar * hbar);
        base.resize(grid.count);
        for (std::size_t i = 0; i < grid.count; ++i) {
            double r = grid.r(i);
            if (ell > 0 && i == 0) {
                // u(0) = 0 multiplies this entry out of the recurrence
                base[i] = 0.0;
                continue;
            }
            base[i] = c * potential::effective_potential(model, ell, hbar, r);
        }
        if (bc == BoundaryCondition::neumann_origin)
            vtay = potential::taylor_at_origin(model, 2);
    }

    double t_at(std::size_t i, double e) const {
        return grid.h * grid.h / 12.0 * (base[i] - c * e);
    }

    void outward(double e, std::vector<double>& y, std::size_t last) const {
        y.assign(grid.count, 0.0);
        switch (bc) {
        case BoundaryCondition::dirichlet_origin:
            y[0] = 0.0;
            y[1] = std::pow(grid.h, ell + 1);
            break;
        case BoundaryCondition::neumann_origin: {
            auto series = frobenius::series_coefficients(vtay, mass, hbar, 0, 0, e, 1.0, 4);
            y[0] = 1.0;
            y[1] = frobenius::evaluate(series, grid.h);
            break;
        }
        case BoundaryCondition::full_line:
            y[0] = 0.0;
            y[1] = kSeedTiny;
            break;
        }
        sweep_forward([&](std::size_t i) { return t_at(i, e); }, y, last);
        ++sweeps;
    }

    void inward(double e, std::vector<double>& y, std::size_t first) const {
        y.assign(grid.count, 0.0);
        y[grid.count - 1] = 0.0;
        y[grid.count - 2] = kSeedTiny;
        sweep_backward([&](std::size_t i) { return t_at(i, e); }, y, first);
        ++sweeps;
    }

    int nodes_at(double e, std::vector<double>& buf) const {
        outward(e, buf, grid.count - 1);
        return count_sign_changes(buf);
    }
};

} // namespace

std::vector<double> numerov_integrate(const std::function<double(double)>& q,
                                      const RadialGrid& grid, double y0, double y1) {
    check_grid(grid);
    if (y0 == 0.0 && y1 == 0.0) throw domain_error("seed samples must not both vanish");
    std::vector<double> y(grid.count, 0.0);
    y[0] = y0;
    y[1] = y1;
    double h2 = grid.h * grid.h / 12.0;
    auto t_of = [&](std::size_t i) {
        double t = h2 * q(grid.r(i));
        if (!std::isfinite(t)) throw domain_error("q is not finite on the grid");
        return t;
    };
    sweep_forward(t_of, y, grid.count - 1);
    return y;
}

RadialGrid make_grid(const PotentialModel& model, int ell, double hbar, double e_hi,
                     BoundaryCondition bc, const SolverOptions& options) {
    check_problem(model, ell, hbar, bc);
    if (!(options.pad_widths > 0.0)) throw domain_error("pad_widths must be positive");

    auto fit = potential::parabolic_fit(model);
    double width = std::sqrt(hbar / (fit.mass * fit.omega));
    auto tp = (bc == BoundaryCondition::full_line)
                  ? potential::turning_points_continued(model, e_hi)
                  : potential::turning_points(model, e_hi);
    double pad = options.pad_widths * width;
    double r_end_raw = tp.outer + pad;
    double r_start_raw = (bc == BoundaryCondition::full_line) ? tp.inner - pad : 0.0;
    double span_raw = r_end_raw - r_start_raw;
    if (!(span_raw > 0.0)) throw domain_error("degenerate integration domain");

    double h = options.step.value_or(span_raw / 4000.0);
    if (!(h > 0.0)) throw domain_error("step must be positive");
    if (h > span_raw / 63.0) throw domain_error("step too coarse for the integration domain");
    if (span_raw / h > 4.0e6) throw domain_error("step too fine for the integration domain");

    RadialGrid grid;
    grid.h = h;
    if (bc == BoundaryCondition::full_line) {
        // keep the origin on the grid with room for a centered stencil
        auto i0 = static_cast<std::size_t>(std::max<double>(2.0, std::ceil(-r_start_raw / h)));
        auto n_up = static_cast<std::size_t>(std::max<double>(2.0, std::ceil(r_end_raw / h)));
        if ((i0 + n_up) % 2 != 0) ++n_up; // odd sample count for the quadrature
        while (i0 + n_up + 1 < 65) n_up += 2;
        grid.r_start = -static_cast<double>(i0) * h;
        grid.r_end = static_cast<double>(n_up) * h;
        grid.count = i0 + n_up + 1;
    } else {
        auto count = static_cast<std::size_t>(std::ceil(span_raw / h)) + 1;
        if (count % 2 == 0) ++count;
        count = std::max<std::size_t>(count, 65);
        grid.r_start = 0.0;
        grid.r_end = static_cast<double>(count - 1) * h;
        grid.count = count;
    }
    return grid;
}

ShootingResult eigenvalue_search(const PotentialModel& model, int ell, double hbar,
                                 BoundaryCondition bc, int n, double e_lo, double e_hi,
                                 const SolverOptions& options) {
    check_problem(model, ell, hbar, bc);
    if (n < 0) throw domain_error("level index must be nonnegative");
    if (!(e_lo < e_hi)) throw domain_error("energy bracket is empty");

    RadialGrid grid = make_grid(model, ell, hbar, e_hi, bc, options);
    Engine eng(model, ell, hbar, bc, grid);
    if (bc == BoundaryCondition::full_line && eng.base[0] - eng.c * e_hi <= 0.0)
        throw unsupported_model("potential is not confining left of the origin at this energy");

    std::vector<double> out_buf, in_buf;

    // stage 1: node-count bisection takes the bracket to a single level
    double lo = e_lo, hi = e_hi;
    int n_lo = eng.nodes_at(lo, out_buf);
    int n_hi = eng.nodes_at(hi, out_buf);
    if (n_lo > n || n_hi <= n)
        throw bracket_error("bracket holds node counts " + std::to_string(n_lo) + ".." +
                                std::to_string(n_hi) + ", cannot isolate level " +
                                std::to_string(n),
                            n_lo, n_hi);
    int guard = 0;
    while (!(n_lo == n && n_hi == n + 1)) {
        if (++guard > 240) throw solver_error("node bisection failed to isolate the level");
        double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi))
            throw solver_error("bracket collapsed before isolating the level");
        int nm = eng.nodes_at(mid, out_buf);
        if (nm > n) {
            hi = mid;
            n_hi = nm;
        } else {
            lo = mid;
            n_lo = nm;
        }
    }

    // matching index: outer turning point near the isolated level
    double r_turn;
    try {
        auto tp = (bc == BoundaryCondition::full_line)
                      ? potential::turning_points_continued(model, 0.5 * (lo + hi))
                      : potential::turning_points(model, 0.5 * (lo + hi));
        r_turn = tp.outer;
    } catch (const domain_error&) {
        auto tp = (bc == BoundaryCondition::full_line)
                      ? potential::turning_points_continued(model, e_hi)
                      : potential::turning_points(model, e_hi);
        r_turn = tp.outer;
    }
    auto im = static_cast<std::ptrdiff_t>(std::llround((r_turn - grid.r_start) / grid.h));
    std::size_t i_match = static_cast<std::size_t>(
        std::clamp<std::ptrdiff_t>(im, 2, static_cast<std::ptrdiff_t>(grid.count) - 3));

    auto mismatch = [&](double e) {
        eng.outward(e, out_buf, i_match + 2);
        eng.inward(e, in_buf, i_match - 2);
        double duo = central5(out_buf, i_match, grid.h);
        double dui = central5(in_buf, i_match, grid.h);
        double a = duo * in_buf[i_match];
        double b = dui * out_buf[i_match];
        double den = std::max(std::abs(a), std::abs(b));
        return den > 0.0 ? (a - b) / den : a - b;
    };

    // stage 2: safeguarded secant on the derivative mismatch
    double w_lo = mismatch(lo), w_hi = mismatch(hi);
    guard = 0;
    while (w_lo != 0.0 && w_hi != 0.0 && std::signbit(w_lo) == std::signbit(w_hi)) {
        if (++guard > 240) throw solver_error("mismatch does not change sign across the level");
        double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi))
            throw solver_error("bracket collapsed without a mismatch sign change");
        if (eng.nodes_at(mid, out_buf) > n) {
            hi = mid;
            w_hi = mismatch(mid);
        } else {
            lo = mid;
            w_lo = mismatch(mid);
        }
    }

    double e_best, w_best;
    if (w_lo == 0.0) {
        e_best = lo;
        w_best = 0.0;
    } else if (w_hi == 0.0) {
        e_best = hi;
        w_best = 0.0;
    } else {
        double a = lo, b = hi, wa = w_lo, wb = w_hi;
        double prev_e = a, prev_w = wa, cur_e = b, cur_w = wb;
        if (std::abs(wa) < std::abs(wb)) {
            e_best = a;
            w_best = wa;
        } else {
            e_best = b;
            w_best = wb;
        }
        for (int it = 0; it < options.max_iterations; ++it) {
            double cand = 0.5 * (a + b);
            double dw = cur_w - prev_w;
            if (it % 4 != 3 && dw != 0.0 && std::isfinite(dw)) {
                double sec = cur_e - cur_w * (cur_e - prev_e) / dw;
                if (sec > a && sec < b) cand = sec;
            }
            if (!(cand > a && cand < b)) break; // down to adjacent doubles
            double wc = mismatch(cand);
            if (std::abs(wc) < std::abs(w_best)) {
                w_best = wc;
                e_best = cand;
            }
            if (wc == 0.0) break;
            if (std::signbit(wc) == std::signbit(wa)) {
                a = cand;
                wa = wc;
            } else {
                b = cand;
                wb = wc;
            }
            prev_e = cur_e;
            prev_w = cur_w;
            cur_e = cand;
            cur_w = wc;
            double eps = std::numeric_limits<double>::epsilon();
            if (b - a <= 4.0 * eps * std::max({std::abs(a), std::abs(b), 1.0})) break;
        }
    }
    if (!(std::abs(w_best) <= options.match_tol))
        throw solver_error("derivative matching stalled at mismatch " + std::to_string(w_best));

    // final sweeps and assembly
    eng.outward(e_best, out_buf, grid.count - 1);
    eng.inward(e_best, in_buf, i_match - 2);
    double uo = out_buf[i_match];
    double ui = in_buf[i_match];
    if (uo == 0.0 || ui == 0.0) throw solver_error("matching point fell on a node");
    double s_in = uo / ui;
    std::vector<double> u(grid.count);
    for (std::size_t i = 0; i <= i_match; ++i) u[i] = out_buf[i];
    for (std::size_t i = i_match + 1; i < grid.count; ++i) u[i] = in_buf[i] * s_in;

    double umax = 0.0;
    for (double v : u) umax = std::max(umax, std::abs(v));
    if (!(umax > 0.0)) throw solver_error("assembled solution vanished");
    for (double& v : u) v /= umax;

    std::vector<double> sq(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) sq[i] = u[i] * u[i];
    double norm2 = specfun::integrate_samples(sq, grid.h);
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw solver_error("normalization failed");
    double scale = 1.0 / std::sqrt(norm2);
    for (double v : u) {
        if (std::abs(v) > 1e-3) {
            if (v < 0.0) scale = -scale;
            break;
        }
    }
    for (double& v : u) v *= scale;

    int nodes = count_sign_changes(u);
    if (nodes != n)
        throw solver_error("assembled solution has " + std::to_string(nodes) +
                           " nodes, expected " + std::to_string(n));

    ShootingResult res;
    res.n = n;
    res.energy = e_best;
    res.grid = grid;
    res.bc = bc;
    res.iterations = eng.sweeps;
    if (bc == BoundaryCondition::full_line) {
        auto i0 = static_cast<std::size_t>(std::llround(-grid.r_start / grid.h));
        res.u0 = u[i0];
        res.du0 = central5(u, i0, grid.h);
    } else {
        res.u0 = u[0];
        res.du0 = forward5(u, grid.h);
    }
    res.u = std::move(u);
    return res;
}

std::pair<double, double> bracket_level(const PotentialModel& model, int ell, double hbar,
                                        BoundaryCondition bc, int n,
                                        const SolverOptions& options) {
    check_problem(model, ell, hbar, bc);
    if (n < 0) throw domain_error("level index must be nonnegative");

    double vmin = potential::minimum_value(model);
    double e_lo = vmin + 1e-9 * (1.0 + std::abs(vmin));
    auto fit = potential::parabolic_fit(model);
    double step = 0.5 * hbar * fit.omega;
    auto cap = potential::dissociation_limit(model);
    double cap_e = 0.0;
    if (cap) {
        cap_e = *cap - 1e-9 * (1.0 + std::abs(*cap));
        if (cap_e <= e_lo) throw no_bound_state("well is too shallow for any level", -1);
    }

    double best_lo = e_lo;
    std::vector<double> buf;
    for (int k = 1; k <= 100000; ++k) {
        double cand = e_lo + step * static_cast<double>(k);
        bool last = false;
        if (cap && cand >= cap_e) {
            cand = cap_e;
            last = true;
        }
        RadialGrid grid = make_grid(model, ell, hbar, cand, bc, options);
        Engine eng(model, ell, hbar, bc, grid);
        if (bc == BoundaryCondition::full_line && eng.base[0] - eng.c * cand <= 0.0)
            throw unsupported_model(
                "potential is not confining left of the origin at this energy");
        int nodes = eng.nodes_at(cand, buf);
        if (nodes > n) return {best_lo, cand};
        best_lo = cand;
        if (last)
            throw no_bound_state("well holds no level " + std::to_string(n) +
                                     " under this condition",
                                 nodes - 1);
    }
    throw solver_error("bracket scan failed to pass the requested level");
}

ShootingResult solve_level(const PotentialModel& model, int ell, double hbar,
                           BoundaryCondition bc, int n, const SolverOptions& options) {
    auto [e_lo, e_hi] = bracket_level(model, ell, hbar, bc, n, options);
    return eigenvalue_search(model, ell, hbar, bc, n, e_lo, e_hi, options);
}

std::vector<ShootingResult> solve_levels(const PotentialModel& model, int ell, double hbar,
                                         BoundaryCondition bc, int n_max,
                                         const SolverOptions& options, Exec exec) {
    if (n_max < 0) throw domain_error("n_max must be nonnegative");
    std::vector<ShootingResult> out(static_cast<std::size_t>(n_max) + 1);
    std::vector<std::exception_ptr> errs(out.size());
    bool par = (exec == Exec::parallel);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (par)
#endif
    for (int i = 0; i <= n_max; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = solve_level(model, ell, hbar, bc, i, options);
        } catch (...) {
            errs[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    (void)par;
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

double wronskian_limit(const ShootingResult& res1, const ShootingResult& res2) {
    if (res1.bc == BoundaryCondition::full_line || res2.bc == BoundaryCondition::full_line)
        throw domain_error("full-line solutions have no boundary at the origin");
    return res1.u0 * res2.du0 - res2.u0 * res1.du0;
}

} // namespace radspec::numerov
