#include <radspec/specfun.hpp>

#include <radspec/errors.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>

namespace radspec::specfun {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double bisect_zero(int n, double lo, double hi) {
    double flo = hermite_eval(n, lo);
    double fhi = hermite_eval(n, hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = hermite_eval(n, mid);
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

} // namespace

double hermite_eval(int n, double x) {
    if (n < 0) throw domain_error("hermite_eval: order must be nonnegative");
    if (n == 0) return 1.0;
    double hkm1 = 1.0;
    double hk = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        double hkp1 = 2.0 * x * hk - 2.0 * k * hkm1;
        hkm1 = hk;
        hk = hkp1;
    }
    return hk;
}

std::vector<double> hermite_zeros(int n) {
    if (n < 0) throw domain_error("hermite_zeros: order must be nonnegative");
    std::vector<double> zeros;
    if (n == 0) return zeros;
    zeros = {0.0};
    for (int k = 2; k <= n; ++k) {
        // zeros of H_{k-1} interlace those of H_k; pad with an outer bound
        double bound = std::sqrt(2.0 * k + 2.0);
        std::vector<double> brackets;
        brackets.push_back(-bound);
        brackets.insert(brackets.end(), zeros.begin(), zeros.end());
        brackets.push_back(bound);
        std::vector<double> next(k);
        for (int i = 0; i < k; ++i) {
            next[i] = bisect_zero(k, brackets[i], brackets[i + 1]);
        }
        zeros = std::move(next);
    }
    // enforce exact symmetry about the origin
    int n2 = n / 2;
    for (int i = 0; i < n2; ++i) {
        double v = 0.5 * (zeros[i] - zeros[n - 1 - i]);
        zeros[i] = v;
        zeros[n - 1 - i] = -v;
    }
    if (n % 2 == 1) zeros[n2] = 0.0;
    return zeros;
}

double laguerre_eval(int n, double b, double z) {
    if (n < 0) throw domain_error("laguerre_eval: order must be nonnegative");
    if (b <= -1.0) throw domain_error("laguerre_eval: parameter must exceed -1");
    if (n == 0) return 1.0;
    double lkm1 = 1.0;
    double lk = 1.0 + b - z;
    for (int k = 1; k < n; ++k) {
        double lkp1 = ((2.0 * k + 1.0 + b - z) * lk - (k + b) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw domain_error("log_gamma: argument must be positive");
    if (x < 0.5) {
        // reflection keeps the Lanczos sum in its accurate range
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

double integrate_samples(std::span<const double> values, double h) {
    std::size_t n = values.size();
    if (n < 3) throw domain_error("integrate_samples: need at least 3 samples");
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw domain_error("integrate_samples: spacing must be positive and finite");
    }
    std::size_t simpson_end = (n % 2 == 1) ? n : n - 1;
    double acc = values[0] + values[simpson_end - 1];
    for (std::size_t i = 1; i + 1 < simpson_end; ++i) {
        acc += values[i] * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    double result = acc * h / 3.0;
    if (n % 2 == 0) result += 0.5 * h * (values[n - 2] + values[n - 1]);
    return result;
}

double integrate_samples(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw domain_error("integrate_samples: abscissae and values differ in length");
    }
    if (x.size() < 3) throw domain_error("integrate_samples: need at least 3 samples");
    double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    if (!(h > 0.0)) throw domain_error("integrate_samples: abscissae must increase");
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (std::abs((x[i + 1] - x[i]) - h) > 1e-9 * std::abs(h)) {
            throw domain_error("integrate_samples: abscissae are not uniform");
        }
    }
    return integrate_samples(y, h);
}

} // namespace radspec::specfun
