#include <radspec/frobenius.hpp>

#include <radspec/errors.hpp>
#include <radspec/specfun.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>

namespace radspec::frobenius {

namespace {

constexpr double kPi = std::numbers::pi;

double fd_second(const std::function<double(double)>& f, double r, double h) {
    return (-f(r - 2.0 * h) + 16.0 * f(r - h) - 30.0 * f(r) + 16.0 * f(r + h) - f(r + 2.0 * h)) /
           (12.0 * h * h);
}

std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::pair<int, int> indicial_roots(int ell) {
    if (ell < 0) throw domain_error("indicial_roots: ell must be nonnegative");
    return {ell + 1, -ell};
}

SeriesSolution series_coefficients(const std::vector<double>& v_taylor, double mass, double hbar,
                                   int ell, int lambda, double energy, double a0, int order) {
    if (ell < 0) throw domain_error("series_coefficients: ell must be nonnegative");
    if (lambda != ell + 1 && lambda != -ell) {
        throw domain_error("series_coefficients: lambda must be an indicial root");
    }
    if (!(mass > 0.0) || !(hbar > 0.0)) {
        throw domain_error("series_coefficients: mass and hbar must be positive");
    }
    if (a0 == 0.0) throw domain_error("series_coefficients: a0 must be nonzero");
    if (order < 0) throw domain_error("series_coefficients: order must be nonnegative");

    // u'' = w(r) u with w = (2m/hbar^2)(V_eff - E); the centrifugal part is
    // carried by the indicial structure, so w holds only the smooth part
    double scale = 2.0 * mass / (hbar * hbar);
    std::vector<double> w(v_taylor.size());
    for (std::size_t j = 0; j < v_taylor.size(); ++j) w[j] = scale * v_taylor[j];
    if (w.empty()) w.push_back(0.0);
    w[0] -= scale * energy;

    SeriesSolution sol;
    sol.ell = ell;
    sol.lambda = lambda;
    sol.energy = energy;
    sol.coeffs.assign(static_cast<std::size_t>(order) + 1, 0.0);
    sol.coeffs[0] = a0;

    for (int k = 1; k <= order; ++k) {
        double rhs = 0.0;
        double rhs_scale = 0.0;
        for (int j = 0; j <= k - 2 && j < static_cast<int>(w.size()); ++j) {
            double term = w[j] * sol.coeffs[k - 2 - j];
            rhs += term;
            rhs_scale += std::abs(term);
        }
        double denom = static_cast<double>(k + lambda) * (k + lambda - 1) -
                       static_cast<double>(ell) * (ell + 1);
        if (denom == 0.0) {
            // resonant index k = 2 ell + 1 of the lambda = -ell branch
            if (std::abs(rhs) > 1e-10 * (rhs_scale + std::abs(a0))) {
                throw log_resonance(
                    "series_coefficients: resonant index forces a logarithmic term", ell, rhs);
            }
            sol.coeffs[k] = 0.0; // the free coefficient, fixed by convention
        } else {
            sol.coeffs[k] = rhs / denom;
        }
    }
    return sol;
}

double evaluate(const SeriesSolution& sol, double r) {
    double acc = 0.0;
    for (auto it = sol.coeffs.rbegin(); it != sol.coeffs.rend(); ++it) acc = acc * r + *it;
    if (sol.lambda == 0) return acc;
    return acc * std::pow(r, sol.lambda);
}

bool tail_within(const SeriesSolution& sol, double r, double rel) {
    if (sol.coeffs.empty()) return true;
    double k = static_cast<double>(sol.coeffs.size() - 1);
    return std::abs(sol.coeffs.back()) * std::pow(std::abs(r), k) <=
           rel * std::abs(sol.coeffs.front());
}

double delta_coupling_b(int ell, int p) {
    if (ell < 0 || p < 0) throw domain_error("delta_coupling_b: indices must be nonnegative");
    return (1.0 - 2.0 * ell) / (4.0 * p + 1.0);
}

double delta_coupling_c(int p) {
    if (p < 0) throw domain_error("delta_coupling_c: p must be nonnegative");
    double log_factorial = specfun::log_gamma(p + 1.0);
    double log_gamma_half = specfun::log_gamma(p + 1.5);
    double magnitude = std::exp(1.5 * std::log(kPi) - (2.0 * p - 1.0) * std::log(2.0) -
                                log_factorial - log_gamma_half);
    return -(4.0 * p + 1.0) * magnitude;
}

DeltaExpansion q_delta(const SeriesSolution& sol) {
    DeltaExpansion expansion;
    expansion.ell = sol.ell;
    expansion.lambda = sol.lambda;
    int k_max = std::max(0, -sol.lambda);
    for (int k = k_max; k >= 0; --k) {
        if (k >= static_cast<int>(sol.coeffs.size())) continue;
        int twice_p = sol.ell - sol.lambda - k;
        if (twice_p < 0 || twice_p % 2 != 0) continue;
        int p = twice_p / 2;
        double a_k = sol.coeffs[k];
        if (a_k == 0.0) continue;
        double coeff = a_k * delta_coupling_b(sol.ell, p) * delta_coupling_c(p);
        expansion.terms.push_back({p, coeff});
    }
    return expansion;
}

bool is_H_eigenfunction(const SeriesSolution& sol) {
    return q_delta(sol).empty();
}

DeltaExpansion h_action_residual(const SeriesSolution& sol, double hbar, double mass) {
    if (!(mass > 0.0) || !(hbar > 0.0)) {
        throw domain_error("h_action_residual: mass and hbar must be positive");
    }
    DeltaExpansion expansion = q_delta(sol);
    double factor = -hbar * hbar / (2.0 * mass);
    for (auto& term : expansion.terms) term.coeff *= factor;
    return expansion;
}

double collapse_y00(const DeltaExpansion& expansion) {
    if (expansion.ell != 0) {
        throw domain_error("collapse_y00: defined only for ell = 0 expansions");
    }
    double y00 = 1.0 / std::sqrt(4.0 * kPi);
    double acc = 0.0;
    for (const auto& term : expansion.terms) {
        if (term.p != 0) {
            throw domain_error("collapse_y00: higher Laplacian orders do not reduce to delta");
        }
        acc += term.coeff * y00;
    }
    return acc;
}

double hd_residual_numeric(const EigenPair& pair, const PotentialModel& model, int ell,
                           double hbar) {
    if (!(hbar > 0.0)) throw domain_error("hd_residual_numeric: hbar must be positive");
    double r_hi = pair.r_outer;
    double pad;
    try {
        auto fit = potential::parabolic_fit(model);
        pad = 2.0 * std::sqrt(hbar / (fit.mass * fit.omega));
    } catch (const unsupported_model&) {
        pad = std::max(1.0, 0.25 * r_hi);
    }
    r_hi += pad;

    const int points = 500;
    double h_fd = r_hi / 5000.0;
    double r_lo = 4.0 * h_fd;
    double kinetic = -hbar * hbar / (2.0 * pair.mass);

    double u_scale = 0.0;
    for (int i = 0; i < points; ++i) {
        double r = r_lo + (r_hi - r_lo) * i / (points - 1);
        u_scale = std::max(u_scale, std::abs(pair.u(r)));
    }
    if (u_scale == 0.0) throw domain_error("hd_residual_numeric: function vanishes on the grid");

    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        double r = r_lo + (r_hi - r_lo) * i / (points - 1);
        double second = fd_second(pair.u, r, h_fd);
        double veff = potential::effective_potential(model, ell, hbar, r);
        double residual = kinetic * second + (veff - pair.energy) * pair.u(r);
        worst = std::max(worst, std::abs(residual));
    }
    return worst / u_scale;
}

std::string render(const DeltaExpansion& expansion) {
    if (expansion.terms.empty()) return "Q = 0";
    std::string out = "Q = ";
    bool first = true;
    for (const auto& term : expansion.terms) {
        if (!first) out += " + ";
        first = false;
        out += "(" + format17(term.coeff) + ") * r^" + std::to_string(expansion.ell);
        out += (expansion.ell == 0) ? " Y00" : " Y" + std::to_string(expansion.ell) + "mu";
        out += " * ";
        if (term.p == 0) {
            out += "delta";
        } else {
            out += "Delta^" + std::to_string(term.p) + " delta";
        }
    }
    return out;
}

} // namespace radspec::frobenius
