#include <doctest.h>

#include <radspec/errors.hpp>
#include <radspec/frobenius.hpp>
#include <radspec/potential.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace radspec;
namespace fr = radspec::frobenius;
namespace pot = radspec::potential;

namespace {

constexpr double kPi = std::numbers::pi;

// independent route to the Laplacian weight via double factorials
double coupling_c_reference(int p) {
    double fact = 1.0, dfact = 1.0;
    for (int i = 2; i <= p; ++i) fact *= i;
    for (int i = 3; i <= 2 * p + 1; i += 2) dfact *= i;
    return -(4.0 * p + 1.0) * kPi * std::pow(2.0, 2.0 - p) / (fact * dfact);
}

} // namespace

TEST_CASE("indicial roots") {
    for (int ell = 0; ell <= 5; ++ell) {
        auto [up, down] = fr::indicial_roots(ell);
        CHECK(up == ell + 1);
        CHECK(down == -ell);
    }
    CHECK_THROWS_AS(fr::indicial_roots(-1), radspec::domain_error);
}

TEST_CASE("series for the centered harmonic ground state, flat branch") {
    auto v = pot::taylor_at_origin(CenteredHarmonic{1.0, 1.0}, 2);
    auto sol = fr::series_coefficients(v, 1.0, 1.0, 0, 0, 0.5, 1.0, 24);
    REQUIRE(sol.coeffs.size() == 25);
    CHECK(sol.coeffs[0] == 1.0);
    CHECK(sol.coeffs[1] == 0.0);
    CHECK(sol.coeffs[2] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(sol.coeffs[3] == 0.0);
    CHECK(sol.coeffs[4] == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(sol.coeffs[6] == doctest::Approx(-1.0 / 48.0).epsilon(1e-14));
    // odd coefficients vanish for an even potential
    for (int k = 1; k < 25; k += 2) CHECK(sol.coeffs[k] == 0.0);
    // partial sum reproduces exp(-r^2/2)
    CHECK(fr::evaluate(sol, 0.05) == doctest::Approx(std::exp(-0.5 * 0.05 * 0.05)).epsilon(1e-12));
    CHECK(fr::tail_within(sol, 0.05));
}

TEST_CASE("series on the growing branch matches r exp(-r^2/2)") {
    auto v = pot::taylor_at_origin(CenteredHarmonic{1.0, 1.0}, 2);
    auto sol = fr::series_coefficients(v, 1.0, 1.0, 0, 1, 1.5, 1.0, 24);
    CHECK(sol.coeffs[1] == 0.0);
    CHECK(sol.coeffs[2] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(sol.coeffs[4] == doctest::Approx(0.125).epsilon(1e-15));
    double r = 0.1;
    CHECK(fr::evaluate(sol, r) ==
          doctest::Approx(r * std::exp(-0.5 * r * r)).epsilon(1e-12));
}

TEST_CASE("resonant index throws when the potential has a linear term") {
    auto v = pot::taylor_at_origin(ShiftedHarmonic{1.0, 1.0, 2.0, 0.0}, 4);
    try {
        fr::series_coefficients(v, 1.0, 1.0, 1, -1, 0.5, 1.0, 12);
        FAIL("expected log_resonance");
    } catch (const radspec::log_resonance& e) {
        CHECK(e.ell == 1);
        CHECK(e.residual == doctest::Approx(-4.0).epsilon(1e-14));
    }
}

TEST_CASE("resonant index passes for an even potential") {
    auto v = pot::taylor_at_origin(CenteredHarmonic{1.0, 1.0}, 2);
    auto sol = fr::series_coefficients(v, 1.0, 1.0, 1, -1, 0.5, 1.0, 12);
    CHECK(sol.coeffs[3] == 0.0); // the free resonant coefficient
    // a2 = w0 a0 / D2 with w0 = 2(0 - E) = -1 and D2 = (1)(0) - 2 = -2
    CHECK(sol.coeffs[2] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("series argument validation") {
    std::vector<double> v = {0.0, 0.0, 0.5};
    CHECK_THROWS_AS(fr::series_coefficients(v, 1.0, 1.0, 1, 0, 0.5, 1.0, 8),
                    radspec::domain_error);
    CHECK_THROWS_AS(fr::series_coefficients(v, 1.0, 1.0, 0, 0, 0.5, 0.0, 8),
                    radspec::domain_error);
    CHECK_THROWS_AS(fr::series_coefficients(v, -1.0, 1.0, 0, 0, 0.5, 1.0, 8),
                    radspec::domain_error);
}

TEST_CASE("laplacian weights") {
    CHECK(fr::delta_coupling_c(0) == doctest::Approx(-4.0 * kPi).epsilon(1e-14));
    CHECK(fr::delta_coupling_c(1) == doctest::Approx(-10.0 * kPi / 3.0).epsilon(1e-13));
    for (int p = 0; p <= 6; ++p) {
        CHECK(fr::delta_coupling_c(p) == doctest::Approx(coupling_c_reference(p)).epsilon(1e-12));
    }
    CHECK(fr::delta_coupling_b(0, 0) == 1.0);
    CHECK(fr::delta_coupling_b(1, 1) == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(fr::delta_coupling_b(2, 1) == doctest::Approx(-0.6).epsilon(1e-15));
}

TEST_CASE("q_delta for the flat s-wave branch is a single delta") {
    SeriesSolution sol{0, 0, 0.5, {1.0, 0.0, -0.5}};
    auto q = fr::q_delta(sol);
    REQUIRE(q.terms.size() == 1);
    CHECK(q.terms[0].p == 0);
    CHECK(q.terms[0].coeff == doctest::Approx(-4.0 * kPi).epsilon(1e-13));
    CHECK(fr::collapse_y00(q) == doctest::Approx(-std::sqrt(4.0 * kPi)).epsilon(1e-13));
    CHECK_FALSE(fr::is_H_eigenfunction(sol));
}

TEST_CASE("q_delta on the growing branch is always empty") {
    for (int ell = 0; ell <= 5; ++ell) {
        SeriesSolution sol{ell, ell + 1, 1.0, {1.0, 0.3, -0.2, 0.05}};
        CHECK(fr::q_delta(sol).empty());
        CHECK(fr::is_H_eigenfunction(sol));
    }
}

TEST_CASE("q_delta for ell=1 keeps only the even offset") {
    SeriesSolution sol{1, -1, 0.5, {1.0, 0.7}};
    auto q = fr::q_delta(sol);
    REQUIRE(q.terms.size() == 1);
    CHECK(q.terms[0].p == 1);
    CHECK(q.terms[0].coeff == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-13));
}

TEST_CASE("q_delta drops vanishing coefficients") {
    SeriesSolution sol{2, -2, 0.5, {1.0, 0.0, 0.0}};
    auto q = fr::q_delta(sol);
    REQUIRE(q.terms.size() == 1);
    CHECK(q.terms[0].p == 2);

    SeriesSolution sol2{2, -2, 0.5, {1.0, 0.0, 0.5}};
    auto q2 = fr::q_delta(sol2);
    REQUIRE(q2.terms.size() == 2);
    CHECK(q2.terms[0].p == 1);
    CHECK(q2.terms[0].coeff == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(q2.terms[1].p == 2);
}

TEST_CASE("kinetic scaling of the delta source") {
    SeriesSolution sol{0, 0, 0.5, {1.0}};
    auto r = fr::h_action_residual(sol, 1.0, 1.0);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].coeff == doctest::Approx(2.0 * kPi).epsilon(1e-13));
    CHECK(fr::collapse_y00(r) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));

    // term-by-term agreement with the unscaled expansion, random shapes
    std::mt19937 rng(20250819);
    std::uniform_real_distribution<double> as(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        int ell = trial % 6;
        int lambda = (trial % 2 == 0) ? -ell : ell + 1;
        std::vector<double> coeffs(static_cast<std::size_t>(ell) + 2);
        for (double& c : coeffs) c = as(rng);
        if (coeffs[0] == 0.0) coeffs[0] = 1.0;
        SeriesSolution s{ell, lambda, as(rng), coeffs};
        double hbar = 0.5 + std::abs(as(rng));
        double mass = 0.5 + std::abs(as(rng));
        auto plain = fr::q_delta(s);
        auto scaled = fr::h_action_residual(s, hbar, mass);
        REQUIRE(plain.terms.size() == scaled.terms.size());
        for (std::size_t i = 0; i < plain.terms.size(); ++i) {
            CHECK(scaled.terms[i].p == plain.terms[i].p);
            CHECK(scaled.terms[i].coeff ==
                  doctest::Approx(-hbar * hbar / (2.0 * mass) * plain.terms[i].coeff)
                      .epsilon(1e-14));
        }
    }
}

TEST_CASE("rendering") {
    CHECK(fr::render(DeltaExpansion{0, 1, {}}) == "Q = 0");
    SeriesSolution sol{0, 0, 0.5, {1.0}};
    auto q = fr::q_delta(sol);
    auto text = fr::render(q);
    CHECK(text.find("r^0 Y00 * delta") != std::string::npos);
    CHECK(text.substr(0, 5) == "Q = (");

    SeriesSolution sol2{1, -1, 0.5, {1.0, 0.7}};
    auto text2 = fr::render(fr::q_delta(sol2));
    CHECK(text2.find("Y1mu") != std::string::npos);
    CHECK(text2.find("Delta^1 delta") != std::string::npos);
}
