#include <doctest.h>

#include <radspec/errors.hpp>
#include <radspec/potential.hpp>

#include <cmath>
#include <limits>
#include <random>

using namespace radspec;
namespace pot = radspec::potential;

TEST_CASE("evaluate closed forms") {
    PotentialModel sh = ShiftedHarmonic{1.0, 2.0, 1.5, 3.0};
    CHECK(pot::evaluate(sh, 1.5) == -3.0);
    CHECK(pot::evaluate(sh, 2.5) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(pot::evaluate(sh, 0.0) == doctest::Approx(1.5).epsilon(1e-15));

    PotentialModel mo = Morse{1.0, 8.0, 1.0, 3.0};
    CHECK(pot::evaluate(mo, 3.0) == doctest::Approx(-8.0).epsilon(1e-15));
    CHECK(pot::evaluate(mo, 3.0 + std::log(2.0)) == doctest::Approx(-6.0).epsilon(1e-14));
    CHECK(pot::evaluate(mo, 60.0) == doctest::Approx(0.0).epsilon(1e-15));

    PotentialModel ch = CenteredHarmonic{1.0, 1.0};
    CHECK(pot::evaluate(ch, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(pot::evaluate(ch, -2.0) == pot::evaluate(ch, 2.0));

    PotentialModel hl = HarmonicPlusLinear{1.0, 1.0, 0.5};
    CHECK(pot::evaluate(hl, 2.0) == doctest::Approx(1.0).epsilon(1e-15));

    PotentialModel tp = TaylorPotential{1.0, {1.0, 0.0, 0.25}};
    CHECK(pot::evaluate(tp, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(pot::evaluate(tp, -2.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(pot::validate(ShiftedHarmonic{-1.0, 1.0, 0.0, 0.0}), radspec::domain_error);
    CHECK_THROWS_AS(pot::validate(ShiftedHarmonic{1.0, 0.0, 0.0, 0.0}), radspec::domain_error);
    CHECK_THROWS_AS(pot::validate(Morse{1.0, 8.0, -1.0, 3.0}), radspec::domain_error);
    CHECK_THROWS_AS(pot::validate(Morse{1.0, -8.0, 1.0, 3.0}), radspec::domain_error);
    CHECK_THROWS_AS(pot::validate(ShiftedHarmonic{1.0, 1.0, -0.5, 0.0}), radspec::domain_error);
    CHECK_THROWS_AS(pot::validate(TaylorPotential{1.0, {}}), radspec::domain_error);
    CHECK_NOTHROW(pot::validate(CenteredHarmonic{2.0, 0.5}));
}

TEST_CASE("effective_potential adds the centrifugal term") {
    PotentialModel ch = CenteredHarmonic{1.0, 1.0};
    CHECK(pot::effective_potential(ch, 0, 1.0, 0.5) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(pot::effective_potential(ch, 1, 1.0, 0.5) == doctest::Approx(4.125).epsilon(1e-15));
    CHECK(pot::effective_potential(ch, 2, 2.0, 0.5) ==
          doctest::Approx(0.125 + 6.0 * 4.0 / (2.0 * 0.25)).epsilon(1e-15));
    CHECK(pot::effective_potential(ch, 0, 1.0, 0.0) == 0.0);
    CHECK_THROWS_AS(pot::effective_potential(ch, 1, 1.0, 0.0), radspec::singularity_error);
    CHECK_THROWS_AS(pot::effective_potential(ch, -1, 1.0, 0.5), radspec::domain_error);
}

TEST_CASE("parabolic_fit maps each family onto the shifted parabola") {
    auto fit = pot::parabolic_fit(Morse{1.0, 8.0, 1.0, 3.0});
    CHECK(fit.omega == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(fit.r_eq == 3.0);
    CHECK(fit.depth == 8.0);
    CHECK(fit.mass == 1.0);

    auto same = pot::parabolic_fit(ShiftedHarmonic{2.0, 3.0, 1.0, 0.5});
    CHECK(same.omega == 3.0);
    CHECK(same.r_eq == 1.0);
    CHECK(same.depth == 0.5);

    auto centered = pot::parabolic_fit(CenteredHarmonic{1.5, 2.5});
    CHECK(centered.omega == 2.5);
    CHECK(centered.r_eq == 0.0);
    CHECK(centered.depth == 0.0);

    double c = 1.0 / std::sqrt(2.0);
    auto lin = pot::parabolic_fit(HarmonicPlusLinear{1.0, 1.0, c});
    CHECK(lin.r_eq == doctest::Approx(c).epsilon(1e-15));
    CHECK(lin.depth == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(lin.omega == 1.0);

    CHECK_THROWS_AS(pot::parabolic_fit(TaylorPotential{1.0, {0.0, 1.0}}),
                    radspec::unsupported_model);
}

TEST_CASE("harmonic-plus-linear equals its completed square everywhere") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> rs(-5.0, 5.0);
    PotentialModel hl = HarmonicPlusLinear{1.3, 0.8, 0.9};
    PotentialModel sq = pot::parabolic_fit(hl);
    for (int i = 0; i < 300; ++i) {
        double r = rs(rng);
        CHECK(pot::evaluate(hl, r) ==
              doctest::Approx(pot::evaluate(sq, r)).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("parabolic_fit agrees with Morse to second order near the minimum") {
    PotentialModel mo = Morse{1.0, 8.0, 1.0, 3.0};
    PotentialModel fit = pot::parabolic_fit(mo);
    for (double d : {0.01, -0.01, 0.005, -0.005}) {
        double diff = std::abs(pot::evaluate(mo, 3.0 + d) - pot::evaluate(fit, 3.0 + d));
        // cubic remainder: |diff| <= ~a^3 depth |d|^3 with margin
        CHECK(diff < 2.0 * 8.0 * std::abs(d * d * d));
    }
}

TEST_CASE("taylor_at_origin closed forms") {
    auto sh = pot::taylor_at_origin(ShiftedHarmonic{1.0, 2.0, 1.5, 3.0}, 4);
    REQUIRE(sh.size() == 5);
    CHECK(sh[0] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(sh[1] == doctest::Approx(-6.0).epsilon(1e-15));
    CHECK(sh[2] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sh[3] == 0.0);
    CHECK(sh[4] == 0.0);

    auto ch = pot::taylor_at_origin(CenteredHarmonic{1.0, 1.0}, 2);
    CHECK(ch[0] == 0.0);
    CHECK(ch[1] == 0.0);
    CHECK(ch[2] == doctest::Approx(0.5).epsilon(1e-15));

    auto hl = pot::taylor_at_origin(HarmonicPlusLinear{1.0, 1.0, 0.5}, 3);
    CHECK(hl[0] == 0.0);
    CHECK(hl[1] == -0.5);
    CHECK(hl[2] == 0.5);
    CHECK(hl[3] == 0.0);

    auto tp = pot::taylor_at_origin(TaylorPotential{1.0, {1.0, 2.0, 3.0}}, 4);
    REQUIRE(tp.size() == 5);
    CHECK(tp[2] == 3.0);
    CHECK(tp[4] == 0.0);
    auto tp2 = pot::taylor_at_origin(TaylorPotential{1.0, {1.0, 2.0, 3.0}}, 1);
    REQUIRE(tp2.size() == 2);
    CHECK(tp2[1] == 2.0);
}

TEST_CASE("taylor_at_origin for Morse matches derivatives and the function") {
    Morse mo{1.0, 8.0, 1.0, 3.0};
    auto v = pot::taylor_at_origin(mo, 8);
    double e2 = std::exp(2.0 * 3.0);
    double e1 = std::exp(3.0);
    CHECK(v[0] == doctest::Approx(8.0 * (e2 - 2.0 * e1)).epsilon(1e-14));
    CHECK(v[1] == doctest::Approx(8.0 * (-2.0 * e2 + 2.0 * e1)).epsilon(1e-14));
    CHECK(v[2] == doctest::Approx(8.0 * (2.0 * e2 - e1)).epsilon(1e-14));

    // partial sums converge to evaluate() near the origin
    PotentialModel m = mo;
    for (double r : {0.01, 0.05, -0.02}) {
        double p = 0.0, rp = 1.0;
        for (double c : v) {
            p += c * rp;
            rp *= r;
        }
        double rem = std::abs(pot::evaluate(m, r) - p);
        // truncation bound plus a roundoff floor set by the O(3e3) coefficients
        double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(v[0]);
        CHECK(rem < 1e3 * std::pow(std::abs(r), 9) + floor);
    }
}

TEST_CASE("turning_points brackets the classical region") {
    PotentialModel sh = ShiftedHarmonic{1.0, 1.0, 5.0, 0.0};
    auto tp = pot::turning_points(sh, 0.5);
    CHECK(tp.inner == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(tp.outer == doctest::Approx(6.0).epsilon(1e-10));

    PotentialModel ch = CenteredHarmonic{1.0, 1.0};
    auto tc = pot::turning_points(ch, 0.5);
    CHECK(tc.inner == 0.0);
    CHECK(tc.outer == doctest::Approx(1.0).epsilon(1e-10));

    PotentialModel mo = Morse{1.0, 8.0, 1.0, 3.0};
    auto tm = pot::turning_points(mo, -6.0);
    CHECK(tm.inner == doctest::Approx(3.0 - std::log(1.5)).epsilon(1e-10));
    CHECK(tm.outer == doctest::Approx(3.0 + std::log(2.0)).epsilon(1e-10));

    auto degenerate = pot::turning_points(mo, -8.0);
    CHECK(degenerate.inner == 3.0);
    CHECK(degenerate.outer == 3.0);

    CHECK_THROWS_AS(pot::turning_points(mo, -9.0), radspec::no_classical_region);
    CHECK_THROWS_AS(pot::turning_points(mo, 0.5), radspec::no_classical_region);
}

TEST_CASE("turning_points_continued keeps the negative root") {
    PotentialModel ch = CenteredHarmonic{1.0, 1.0};
    auto tc = pot::turning_points_continued(ch, 0.5);
    CHECK(tc.inner == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(tc.outer == doctest::Approx(1.0).epsilon(1e-10));

    PotentialModel sh = ShiftedHarmonic{1.0, 1.0, 2.0, 0.0};
    auto ts = pot::turning_points_continued(sh, 4.5);
    CHECK(ts.inner == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(ts.outer == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("minimum location and value") {
    CHECK(pot::minimum_location(Morse{1.0, 8.0, 1.0, 3.0}) == 3.0);
    CHECK(pot::minimum_value(Morse{1.0, 8.0, 1.0, 3.0}) == doctest::Approx(-8.0).epsilon(1e-15));
    CHECK(pot::minimum_location(CenteredHarmonic{1.0, 1.0}) == 0.0);
    CHECK(pot::minimum_location(HarmonicPlusLinear{1.0, 2.0, 2.0}) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pot::minimum_value(ShiftedHarmonic{1.0, 1.0, 2.0, 1.5}) == -1.5);
    CHECK_THROWS_AS(pot::minimum_location(TaylorPotential{1.0, {0.0, 1.0}}),
                    radspec::unsupported_model);
}

TEST_CASE("dissociation limit") {
    CHECK(pot::dissociation_limit(Morse{1.0, 8.0, 1.0, 3.0}).value() == 0.0);
    CHECK_FALSE(pot::dissociation_limit(CenteredHarmonic{1.0, 1.0}).has_value());
    CHECK_FALSE(pot::dissociation_limit(ShiftedHarmonic{1.0, 1.0, 1.0, 1.0}).has_value());
}
