#include <radspec/analytic.hpp>

#include <radspec/errors.hpp>
#include <radspec/specfun.hpp>

#include <cmath>
#include <numbers>

namespace radspec::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

void check_args(double hbar, int n) {
    if (!(hbar > 0.0)) throw domain_error("analytic: hbar must be positive");
    if (n < 0) throw domain_error("analytic: level index must be nonnegative");
}

/// Half-line norm of an unnormalized bound-state function: quadrature over
/// [0, r_end], where r_end starts 8 classical widths past the outer turning
/// point and is pushed further until the sampled tail is negligible.
struct QuadratureNorm {
    double inv_constant; // sqrt of the integral
    double r_end;
    double u_abs_max; // of the unnormalized function
};

QuadratureNorm half_line_norm(const std::function<double(double)>& u_raw, double r_outer,
                              double width) {
    double r_end = r_outer + 8.0 * width;
    double umax = 0.0;
    for (int pass = 0;; ++pass) {
        umax = 0.0;
        int coarse = 2049;
        for (int i = 0; i < coarse; ++i) {
            umax = std::max(umax, std::abs(u_raw(r_end * i / (coarse - 1))));
        }
        if (std::abs(u_raw(r_end)) <= 1e-9 * umax) break;
        if (pass >= 400) throw solver_error("half_line_norm: tail fails to decay");
        r_end += 4.0 * width;
    }

    double previous = 0.0;
    for (int count = 4097;; count = 2 * count - 1) {
        std::vector<double> samples(count);
        double h = r_end / (count - 1);
        for (int i = 0; i < count; ++i) {
            double v = u_raw(i * h);
            samples[i] = v * v;
        }
        double integral = specfun::integrate_samples(samples, h);
        if (previous != 0.0 && std::abs(integral - previous) <= 1e-11 * integral) {
            return {std::sqrt(integral), r_end, umax};
        }
        previous = integral;
        if (count > (1 << 20)) return {std::sqrt(integral), r_end, umax};
    }
}

double harmonic_full_line_constant(double beta, int n) {
    double ln = 0.5 * (std::log(beta) - n * std::log(2.0) - specfun::log_gamma(n + 1.0) -
                       0.5 * std::log(kPi));
    return std::exp(ln);
}

double morse_full_line_constant(double a, double b, int n) {
    double ln = 0.5 * (std::log(a) + specfun::log_gamma(n + 1.0) + std::log(b) -
                       specfun::log_gamma(n + b + 1.0));
    return std::exp(ln);
}

// e^{-z/2} z^{b/2}, overflow-safe
double morse_envelope(double z, double b) {
    if (z <= 0.0) return 0.0;
    return std::exp(-0.5 * z + 0.5 * b * std::log(z));
}

} // namespace

double shifted_harmonic_level(const ShiftedHarmonic& model, double hbar, int n) {
    check_args(hbar, n);
    potential::validate(model);
    return (n + 0.5) * hbar * model.omega - model.depth;
}

EigenPair shifted_harmonic_eigenpair(const ShiftedHarmonic& model, double hbar, int n) {
    double energy = shifted_harmonic_level(model, hbar, n);
    double beta = std::sqrt(model.mass * model.omega / hbar);
    double r_eq = model.r_eq;

    auto u_raw = [beta, r_eq, n](double r) {
        double w = beta * (r - r_eq);
        return std::exp(-0.5 * w * w) * specfun::hermite_eval(n, w);
    };

    double r_outer = r_eq + std::sqrt((2.0 * n + 1.0) * hbar / (model.mass * model.omega));
    auto norm = half_line_norm(u_raw, r_outer, 1.0 / beta);
    double constant = 1.0 / norm.inv_constant;

    double w0 = -beta * r_eq;
    double gauss = std::exp(-0.5 * w0 * w0);
    double h_n = specfun::hermite_eval(n, w0);
    double u0 = constant * gauss * h_n;
    double dh = (n > 0) ? 2.0 * n * specfun::hermite_eval(n - 1, w0) : 0.0;
    double du0 = constant * beta * gauss * (-w0 * h_n + dh);

    EigenPair pair;
    pair.n = n;
    pair.energy = energy;
    pair.u = [constant, u_raw](double r) { return constant * u_raw(r); };
    pair.u0 = u0;
    pair.du0 = du0;
    pair.norm_constant = constant;
    pair.norm_constant_full_line = harmonic_full_line_constant(beta, n);
    pair.mass = model.mass;
    pair.hbar = hbar;
    pair.r_outer = r_outer;
    pair.u_max = constant * norm.u_abs_max;
    return pair;
}

int morse_bound_count(const Morse& model, double hbar) {
    if (!(hbar > 0.0)) throw domain_error("analytic: hbar must be positive");
    potential::validate(model);
    double d = std::sqrt(2.0 * model.mass * model.depth) / (model.a * hbar);
    if (d <= 0.5) return 0;
    // bound iff b = 2d - 1 - 2n > 0 strictly
    return static_cast<int>(std::ceil(d - 0.5));
}

double morse_level(const Morse& model, double hbar, int n) {
    check_args(hbar, n);
    int count = morse_bound_count(model, hbar);
    if (n >= count) {
        throw no_bound_state("morse_level: level index past the last bound state", count - 1);
    }
    double omega = model.a * std::sqrt(2.0 * model.depth / model.mass);
    double q = (n + 0.5) * hbar * omega;
    return q - q * q / (4.0 * model.depth) - model.depth;
}

EigenPair morse_eigenpair(const Morse& model, double hbar, int n) {
    double energy = morse_level(model, hbar, n);
    double d = std::sqrt(2.0 * model.mass * model.depth) / (model.a * hbar);
    double b = 2.0 * d - 1.0 - 2.0 * n;
    double a = model.a;
    double r_eq = model.r_eq;

    auto u_raw = [a, r_eq, d, b, n](double r) {
        double z = 2.0 * d * std::exp(-a * (r - r_eq));
        return morse_envelope(z, b) * specfun::laguerre_eval(n, b, z);
    };

    // outer turning point: x^2 - 2x = E/depth with x = e^{-a(r - r_eq)}
    double x_outer = 1.0 - std::sqrt(1.0 + energy / model.depth);
    double r_outer = r_eq - std::log(x_outer) / a;
    double omega_fit = a * std::sqrt(2.0 * model.depth / model.mass);
    double width = std::sqrt(hbar / (model.mass * omega_fit));
    auto norm = half_line_norm(u_raw, r_outer, width);
    double constant = 1.0 / norm.inv_constant;

    double z0 = 2.0 * d * std::exp(a * r_eq);
    double lag = specfun::laguerre_eval(n, b, z0);
    double u0 = constant * morse_envelope(z0, b) * lag;
    double dlag = (n > 0) ? specfun::laguerre_eval(n - 1, b + 1.0, z0) : 0.0;
    double du0 = constant * a * morse_envelope(z0, b) * (0.5 * (z0 - b) * lag + z0 * dlag);

    EigenPair pair;
    pair.n = n;
    pair.energy = energy;
    pair.u = [constant, u_raw](double r) { return constant * u_raw(r); };
    pair.u0 = u0;
    pair.du0 = du0;
    pair.norm_constant = constant;
    pair.norm_constant_full_line = morse_full_line_constant(a, b, n);
    pair.mass = model.mass;
    pair.hbar = hbar;
    pair.r_outer = r_outer;
    pair.u_max = constant * norm.u_abs_max;
    return pair;
}

double level(const PotentialModel& model, double hbar, int n) {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ShiftedHarmonic>) {
                return shifted_harmonic_level(m, hbar, n);
            } else if constexpr (std::is_same_v<T, Morse>) {
                return morse_level(m, hbar, n);
            } else if constexpr (std::is_same_v<T, CenteredHarmonic> ||
                                 std::is_same_v<T, HarmonicPlusLinear>) {
                return shifted_harmonic_level(potential::parabolic_fit(m), hbar, n);
            } else {
                throw unsupported_model("analytic: power-series model has no closed-form levels");
            }
        },
        model);
}

EigenPair eigenpair(const PotentialModel& model, double hbar, int n) {
    return std::visit(
        [&](const auto& m) -> EigenPair {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ShiftedHarmonic>) {
                return shifted_harmonic_eigenpair(m, hbar, n);
            } else if constexpr (std::is_same_v<T, Morse>) {
                return morse_eigenpair(m, hbar, n);
            } else if constexpr (std::is_same_v<T, CenteredHarmonic> ||
                                 std::is_same_v<T, HarmonicPlusLinear>) {
                return shifted_harmonic_eigenpair(potential::parabolic_fit(m), hbar, n);
            } else {
                throw unsupported_model("analytic: power-series model has no closed-form states");
            }
        },
        model);
}

OriginReport origin_report(const EigenPair& pair) {
    return {pair.u0, pair.du0, delta_strength(pair.u0, pair.hbar, pair.mass)};
}

double delta_strength(double u0, double hbar, double mass) {
    if (!(hbar > 0.0) || !(mass > 0.0)) {
        throw domain_error("delta_strength: hbar and mass must be positive");
    }
    return hbar * hbar * std::sqrt(kPi) / mass * u0;
}

} // namespace radspec::analytic
