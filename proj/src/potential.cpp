#include <radspec/potential.hpp>

#include <radspec/errors.hpp>

#include <cmath>
#include <limits>

namespace radspec::potential {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw domain_error(what);
}

double bisect_crossing(const PotentialModel& model, double energy, double lo, double hi) {
    // V - E changes sign on [lo, hi]
    double flo = evaluate(model, lo) - energy;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = evaluate(model, mid) - energy;
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double length_scale(const PotentialModel& model) {
    double rm = minimum_location(model);
    return std::max(1.0, std::abs(rm));
}

TurningPoints turning_points_impl(const PotentialModel& model, double energy, bool clamp) {
    validate(model);
    double rm = minimum_location(model);
    double vmin = minimum_value(model);
    if (energy < vmin) {
        throw no_classical_region("turning_points: energy below the potential minimum");
    }
    if (energy == vmin) return {rm, rm};
    if (auto lim = dissociation_limit(model); lim && energy >= *lim) {
        throw no_classical_region("turning_points: no outer turning point at this energy");
    }

    double step = 0.5 * length_scale(model);

    double left = rm - step;
    for (int it = 0;; ++it) {
        if (evaluate(model, left) > energy) break;
        if (it > 120) {
            throw unsupported_model("turning_points: potential does not rise on the left");
        }
        left = rm - 2.0 * (rm - left);
    }
    double inner = bisect_crossing(model, energy, left, rm);

    double right = rm + step;
    for (int it = 0;; ++it) {
        if (evaluate(model, right) > energy) break;
        if (it > 120) {
            throw no_classical_region("turning_points: potential does not rise on the right");
        }
        right = rm + (right - rm) * 2.0;
    }
    double outer = bisect_crossing(model, energy, rm, right);

    if (clamp && inner < 0.0) inner = 0.0;
    return {inner, outer};
}

} // namespace

void validate(const PotentialModel& model) {
    std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            require(m.mass > 0.0 && std::isfinite(m.mass), "potential: mass must be positive");
            if constexpr (std::is_same_v<T, ShiftedHarmonic>) {
                require(m.omega > 0.0, "potential: omega must be positive");
                require(m.r_eq >= 0.0, "potential: r_eq must be nonnegative");
                require(m.depth >= 0.0, "potential: depth must be nonnegative");
            } else if constexpr (std::is_same_v<T, Morse>) {
                require(m.depth > 0.0, "potential: depth must be positive");
                require(m.a > 0.0, "potential: a must be positive");
                require(m.r_eq >= 0.0, "potential: r_eq must be nonnegative");
            } else if constexpr (std::is_same_v<T, CenteredHarmonic>) {
                require(m.omega > 0.0, "potential: omega must be positive");
            } else if constexpr (std::is_same_v<T, HarmonicPlusLinear>) {
                require(m.omega > 0.0, "potential: omega must be positive");
                require(m.force >= 0.0, "potential: force must be nonnegative");
            } else {
                require(!m.coeffs.empty(), "potential: empty coefficient list");
            }
        },
        model);
}

double mass_of(const PotentialModel& model) {
    return std::visit([](const auto& m) { return m.mass; }, model);
}

std::string model_name(const PotentialModel& model) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ShiftedHarmonic>) return "shifted-harmonic";
            if constexpr (std::is_same_v<T, Morse>) return "morse";
            if constexpr (std::is_same_v<T, CenteredHarmonic>) return "centered-harmonic";
            if constexpr (std::is_same_v<T, HarmonicPlusLinear>) return "harmonic-plus-linear";
            if constexpr (std::is_same_v<T, TaylorPotential>) return "taylor";
        },
        model);
}

double evaluate(const PotentialModel& model, double r) {
    return std::visit(
        [r](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ShiftedHarmonic>) {
                double d = r - m.r_eq;
                return 0.5 * m.mass * m.omega * m.omega * d * d - m.depth;
            } else if constexpr (std::is_same_v<T, Morse>) {
                double x = std::exp(-m.a * (r - m.r_eq));
                return m.depth * (x * x - 2.0 * x);
            } else if constexpr (std::is_same_v<T, CenteredHarmonic>) {
                return 0.5 * m.mass * m.omega * m.omega * r * r;
            } else if constexpr (std::is_same_v<T, HarmonicPlusLinear>) {
                return 0.5 * m.mass * m.omega * m.omega * r * r - m.force * r;
            } else {
                double acc = 0.0;
                for (auto it = m.coeffs.rbegin(); it != m.coeffs.rend(); ++it) {
                    acc = acc * r + *it;
                }
                return acc;
            }
        },
        model);
}

double effective_potential(const PotentialModel& model, int ell, double hbar, double r) {
    if (ell < 0) throw domain_error("effective_potential: ell must be nonnegative");
    if (!(hbar > 0.0)) throw domain_error("effective_potential: hbar must be positive");
    double v = evaluate(model, r);
    if (ell == 0) return v;
    if (r == 0.0) {
        throw singularity_error("effective_potential: centrifugal term diverges at r = 0");
    }
    double m = mass_of(model);
    return v + ell * (ell + 1.0) * hbar * hbar / (2.0 * m * r * r);
}

ShiftedHarmonic parabolic_fit(const PotentialModel& model) {
    validate(model);
    return std::visit(
        [](const auto& m) -> ShiftedHarmonic {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ShiftedHarmonic>) {
                return m;
            } else if constexpr (std::is_same_v<T, Morse>) {
                return {m.mass, m.a * std::sqrt(2.0 * m.depth / m.mass), m.r_eq, m.depth};
            } else if constexpr (std::is_same_v<T, CenteredHarmonic>) {
                return {m.mass, m.omega, 0.0, 0.0};
            } else if constexpr (std::is_same_v<T, HarmonicPlusLinear>) {
                double w2 = m.mass * m.omega * m.omega;
                return {m.mass, m.omega, m.force / w2, m.force * m.force / (2.0 * w2)};
            } else {
                throw unsupported_model("parabolic_fit: power-series model has no located minimum");
            }
        },
        model);
}

std::vector<double> taylor_at_origin(const PotentialModel& model, int order) {
    if (order < 0) throw domain_error("taylor_at_origin: order must be nonnegative");
    validate(model);
    std::vector<double> v(static_cast<std::size_t>(order) + 1, 0.0);
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ShiftedHarmonic>) {
                double k = 0.5 * m.mass * m.omega * m.omega;
                v[0] = k * m.r_eq * m.r_eq - m.depth;
                if (order >= 1) v[1] = -2.0 * k * m.r_eq;
                if (order >= 2) v[2] = k;
            } else if constexpr (std::is_same_v<T, Morse>) {
                // expand each exponential termwise: exact coefficients
                double c2 = m.depth * std::exp(2.0 * m.a * m.r_eq);
                double c1 = -2.0 * m.depth * std::exp(m.a * m.r_eq);
                double t2 = 1.0, t1 = 1.0;
                for (int j = 0; j <= order; ++j) {
                    v[j] = c2 * t2 + c1 * t1;
                    t2 *= -2.0 * m.a / (j + 1.0);
                    t1 *= -m.a / (j + 1.0);
                }
            } else if constexpr (std::is_same_v<T, CenteredHarmonic>) {
                if (order >= 2) v[2] = 0.5 * m.mass * m.omega * m.omega;
            } else if constexpr (std::is_same_v<T, HarmonicPlusLinear>) {
                if (order >= 1) v[1] = -m.force;
                if (order >= 2) v[2] = 0.5 * m.mass * m.omega * m.omega;
            } else {
                for (std::size_t j = 0; j < v.size() && j < m.coeffs.size(); ++j) {
                    v[j] = m.coeffs[j];
                }
            }
        },
        model);
    return v;
}

TurningPoints turning_points(const PotentialModel& model, double energy) {
    return turning_points_impl(model, energy, true);
}

TurningPoints turning_points_continued(const PotentialModel& model, double energy) {
    return turning_points_impl(model, energy, false);
}

double minimum_location(const PotentialModel& model) {
    return std::visit(
        [](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ShiftedHarmonic>) {
                return m.r_eq;
            } else if constexpr (std::is_same_v<T, Morse>) {
                return m.r_eq;
            } else if constexpr (std::is_same_v<T, CenteredHarmonic>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, HarmonicPlusLinear>) {
                return m.force / (m.mass * m.omega * m.omega);
            } else {
                throw unsupported_model("minimum_location: power-series model has no located minimum");
            }
        },
        model);
}

double minimum_value(const PotentialModel& model) {
    return evaluate(model, minimum_location(model));
}

std::optional<double> dissociation_limit(const PotentialModel& model) {
    if (std::holds_alternative<Morse>(model)) return 0.0;
    return std::nullopt;
}

} // namespace radspec::potential
