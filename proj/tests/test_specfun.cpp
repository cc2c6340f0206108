#include <doctest.h>

#include <radspec/errors.hpp>
#include <radspec/specfun.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace radspec;
using namespace radspec::specfun;

TEST_CASE("hermite_eval low orders") {
    CHECK(hermite_eval(0, 1.7) == 1.0);
    CHECK(hermite_eval(1, 1.7) == doctest::Approx(3.4).epsilon(1e-15));
    CHECK(hermite_eval(2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(hermite_eval(3, 0.5) == doctest::Approx(-5.0).epsilon(1e-15));
    // H_4 = 16x^4 - 48x^2 + 12
    CHECK(hermite_eval(4, 2.0) == doctest::Approx(76.0).epsilon(1e-15));
}

TEST_CASE("hermite_eval origin values are exact") {
    // H_{2p}(0) = (-1)^p (2p)!/p!, integer arithmetic stays exact in double
    double expected = 1.0;
    for (int p = 0; p <= 10; ++p) {
        CHECK(hermite_eval(2 * p, 0.0) == expected);
        CHECK(hermite_eval(2 * p + 1, 0.0) == 0.0);
        expected *= -2.0 * (2 * p + 1);
    }
}

TEST_CASE("hermite_eval parity") {
    std::mt19937 rng(911);
    std::uniform_real_distribution<double> xs(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = trial % 31;
        double x = xs(rng);
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(hermite_eval(n, -x) == doctest::Approx(sign * hermite_eval(n, x)).epsilon(1e-12));
    }
}

TEST_CASE("hermite_zeros closed forms") {
    auto z1 = hermite_zeros(1);
    REQUIRE(z1.size() == 1);
    CHECK(z1[0] == 0.0);

    auto z2 = hermite_zeros(2);
    REQUIRE(z2.size() == 2);
    CHECK(z2[0] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-14));
    CHECK(z2[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

    auto z3 = hermite_zeros(3);
    REQUIRE(z3.size() == 3);
    CHECK(z3[0] == doctest::Approx(-1.224744871391589).epsilon(1e-14));
    CHECK(z3[1] == 0.0);
    CHECK(z3[2] == doctest::Approx(1.224744871391589).epsilon(1e-14));

    auto z4 = hermite_zeros(4);
    REQUIRE(z4.size() == 4);
    CHECK(z4[1] == doctest::Approx(-0.5246476232752905).epsilon(1e-14));
    CHECK(z4[3] == doctest::Approx(1.6506801238857844).epsilon(1e-14));

    auto z5 = hermite_zeros(5);
    REQUIRE(z5.size() == 5);
    CHECK(z5[2] == 0.0);
    CHECK(z5[3] == doctest::Approx(0.9585724646138185).epsilon(1e-14));
    CHECK(z5[4] == doctest::Approx(2.0201828704560856).epsilon(1e-14));
}

TEST_CASE("hermite_zeros are sign changes and residuals are tiny") {
    for (int n : {2, 3, 5, 8, 13, 20}) {
        auto zs = hermite_zeros(n);
        REQUIRE(static_cast<int>(zs.size()) == n);
        double scale = 1.0;
        for (int i = 0; i + 1 < n; ++i) {
            CHECK(zs[i] < zs[i + 1]);
        }
        for (double z : zs) {
            double eps = 1e-7 * (1.0 + std::abs(z));
            CHECK(hermite_eval(n, z - eps) * hermite_eval(n, z + eps) < 0.0);
            scale = std::max({scale, std::abs(hermite_eval(n, z - eps)),
                              std::abs(hermite_eval(n, z + eps))});
        }
        for (double z : zs) {
            // scale ~ |H'| * 1e-7, residual ~ |H'| * few ulps, so the ratio
            // bottoms out near 4e-10; 1e-8 still pins z to ~1e-15
            CHECK(std::abs(hermite_eval(n, z)) < 1e-8 * scale);
        }
        // symmetry of the set
        for (int i = 0; i < n; ++i) {
            CHECK(zs[i] == -zs[n - 1 - i]);
        }
    }
}

TEST_CASE("laguerre_eval low orders") {
    CHECK(laguerre_eval(0, 3.2, 1.1) == 1.0);
    CHECK(laguerre_eval(1, 7.0, 0.3) == doctest::Approx(7.7).epsilon(1e-15));
    // L_2^{(b)}(z) = (b+1)(b+2)/2 - (b+2) z + z^2/2
    CHECK(laguerre_eval(2, 1.5, 0.8) == doctest::Approx(1.895).epsilon(1e-14));
}

TEST_CASE("laguerre at z=0 matches the gamma ratio") {
    std::mt19937 rng(4021);
    std::uniform_real_distribution<double> bs(-0.9, 12.0);
    for (int trial = 0; trial < 100; ++trial) {
        int n = trial % 9;
        double b = bs(rng);
        double lhs = laguerre_eval(n, b, 0.0);
        double lg = log_gamma(n + b + 1.0) - log_gamma(b + 1.0);
        double rhs = std::exp(lg);
        for (int k = 1; k <= n; ++k) rhs /= k;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("log_gamma spot values") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-14);
    CHECK(std::abs(log_gamma(2.0)) < 1e-14);
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
    CHECK(log_gamma(1.5) == doctest::Approx(-0.12078223763524522).epsilon(1e-13));
}

TEST_CASE("log_gamma against libm over [0.5, 200]") {
    for (double x = 0.5; x <= 200.0; x += 0.37) {
        CHECK(std::abs(log_gamma(x) - std::lgamma(x)) < 1e-12);
    }
    // below 1/2 the reflection path is used
    for (double x : {0.05, 0.17, 0.33, 0.49}) {
        CHECK(std::abs(log_gamma(x) - std::lgamma(x)) < 1e-12);
    }
}

TEST_CASE("log_gamma rejects nonpositive arguments") {
    CHECK_THROWS_AS(log_gamma(0.0), radspec::domain_error);
    CHECK_THROWS_AS(log_gamma(-3.0), radspec::domain_error);
}

TEST_CASE("integrate_samples is exact for cubics") {
    // f(x) = x^3 - 2x^2 + 3x - 1 on [0,2], 5 samples; exact integral 8/3
    std::vector<double> y;
    for (int i = 0; i <= 4; ++i) {
        double x = 0.5 * i;
        y.push_back(((x - 2.0) * x + 3.0) * x - 1.0);
    }
    CHECK(integrate_samples(y, 0.5) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));

    // x^2 on [0,1], 3 samples
    std::vector<double> q = {0.0, 0.25, 1.0};
    CHECK(integrate_samples(q, 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("integrate_samples on sine converges at fourth order") {
    auto sample = [](int count) {
        std::vector<double> y(count);
        double h = std::numbers::pi / (count - 1);
        for (int i = 0; i < count; ++i) y[i] = std::sin(i * h);
        return y;
    };
    double h101 = std::numbers::pi / 100.0;
    double e101 = integrate_samples(sample(101), h101) - 2.0;
    CHECK(e101 == doctest::Approx(1.0824503959e-08).epsilon(1e-3));
    double h201 = std::numbers::pi / 200.0;
    double e201 = integrate_samples(sample(201), h201) - 2.0;
    CHECK(std::abs(e201) < std::abs(e101) / 14.0);
}

TEST_CASE("integrate_samples even count falls back to trapezoid on last interval") {
    // x^3 on [0,3] with 4 samples: Simpson over [0,2] gives 4, trapezoid over
    // [2,3] gives 17.5
    std::vector<double> y = {0.0, 1.0, 8.0, 27.0};
    CHECK(integrate_samples(y, 1.0) == doctest::Approx(21.5).epsilon(1e-15));
}

TEST_CASE("integrate_samples input checks") {
    std::vector<double> two = {1.0, 2.0};
    CHECK_THROWS_AS(integrate_samples(two, 0.1), radspec::domain_error);
    std::vector<double> y = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(integrate_samples(y, 0.0), radspec::domain_error);
    CHECK_THROWS_AS(integrate_samples(y, -1.0), radspec::domain_error);

    std::vector<double> bad_x = {0.0, 0.1, 0.3};
    CHECK_THROWS_AS(integrate_samples(bad_x, y), radspec::domain_error);
    std::vector<double> good_x = {0.0, 0.1, 0.2};
    CHECK(integrate_samples(good_x, y) == doctest::Approx(0.4).epsilon(1e-14));
}
