#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "billiards/melnikov.hpp"

using namespace billiards;
using namespace billiards::melnikov;
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

namespace {
const FourierSeries cos_phi(0.0, {1.0}, {});
const FourierSeries cos_2phi(0.0, {0.0, 1.0}, {});
const FourierSeries sin_3phi(0.0, {}, {0.0, 0.0, 1.0});
const FourierSeries zero_series(0.0, {}, {});
}  // namespace

TEST_CASE("constant profile gives the constant potential 2 lambda n c") {
    const double a = 2.0, b = 1.0, c = 0.8;
    const FourierSeries constant(c, {}, {});
    for (int n : {3, 4}) {
        const caustics::CausticParams p = caustics::resonant_lambda(a, b, 1, n);
        for (double phi : {0.0, 1.0, 2.7}) {
            CHECK(melnikov_ellipse(a, b, p, 1, n, constant, phi) ==
                  doctest::Approx(2.0 * p.lambda * n * c).epsilon(1e-12));
        }
        const PotentialProfile prof = ellipse_profile(a, b, 1, n, constant);
        CHECK(prof.amplitude < 1e-12);
    }
}

TEST_CASE("even period with odd-harmonic profile is constant") {
    const PotentialProfile prof = ellipse_profile(2.0, 1.0, 1, 4, cos_phi);
    CHECK(prof.amplitude < 1e-10);
}

TEST_CASE("odd period with nonconstant profile oscillates") {
    const PotentialProfile prof = ellipse_profile(2.0, 1.0, 1, 3, cos_phi);
    CHECK(prof.amplitude > 1e-3);
}

TEST_CASE("the two ellipse routes agree (generating function vs tangency sum)") {
    const double a = 2.0, b = 1.0;
    const struct { int m, n; const FourierSeries* mu1; } cases[] = {
        {1, 3, &cos_phi}, {1, 4, &cos_2phi}, {2, 5, &sin_3phi},
        {1, 5, &cos_2phi}, {3, 7, &cos_phi},
    };
    for (const auto& cs : cases) {
        const caustics::CausticParams p = caustics::resonant_lambda(a, b, cs.m, cs.n);
        for (int i = 0; i < 64; ++i) {
            const double phi = two_pi * i / 64.0;
            const double le = melnikov_ellipse(a, b, p, cs.m, cs.n, *cs.mu1, phi);
            const double lt = melnikov_twist(a, b, p, cs.m, cs.n, *cs.mu1, phi);
            CHECK(std::abs(le - lt) <= 1e-9);
        }
    }
}

TEST_CASE("zero profile gives zero twist potential") {
    CHECK(melnikov_twist(2.0, 1.0, 1, 3, zero_series, 0.4) ==
          doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("circle limit: both ellipse routes reduce to the circle formula") {
    const double r0 = 1.0;
    const struct { int m, n; const FourierSeries* prof; } cases[] = {
        {1, 3, &cos_phi}, {1, 4, &cos_2phi}, {2, 5, &sin_3phi},
    };
    for (const auto& cs : cases) {
        const caustics::CausticParams p = caustics::resonant_lambda(r0, r0, cs.m, cs.n);
        for (double theta : {0.0, 0.7, 1.9, 4.0}) {
            const double lc = melnikov_circle(r0, cs.m, cs.n, *cs.prof, theta);
            CHECK(std::abs(melnikov_ellipse(r0, r0, p, cs.m, cs.n, *cs.prof, theta) - lc) <= 1e-9);
            CHECK(std::abs(melnikov_twist(r0, r0, p, cs.m, cs.n, *cs.prof, theta) - lc) <= 1e-9);
        }
    }
}

TEST_CASE("circle harmonics outside nZ cancel identically") {
    const double r0 = 1.0;
    for (int n : {3, 4, 5}) {
        for (int l = 1; l <= 3 * n; ++l) {
            if (l % n == 0) continue;
            std::vector<double> cs(l, 0.0);
            cs[l - 1] = 1.0;
            const FourierSeries r1(0.0, cs, {});
            for (double theta : {0.0, 0.9, 2.2}) {
                CHECK(std::abs(melnikov_circle(r0, 1, n, r1, theta)) < 1e-12);
            }
        }
    }
}

TEST_CASE("circle harmonic of order n survives with factor n") {
    const double r0 = 1.0;
    for (int n : {3, 4}) {
        std::vector<double> cs(n, 0.0);
        cs[n - 1] = 1.0;
        const FourierSeries r1(0.0, cs, {});
        for (double theta : {0.1, 1.3, 3.0}) {
            const double expected =
                2.0 * n * r0 * std::sin(pi / n) * std::cos(n * theta);
            CHECK(melnikov_circle(r0, 1, n, r1, theta) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
        CHECK(circle_profile(r0, 1, n, r1).amplitude > 1e-3);
    }
    const FourierSeries constant(0.4, {}, {});
    CHECK(circle_profile(r0, 1, 3, constant).amplitude < 1e-13);
}

TEST_CASE("potential is independent of which polygon vertex starts the sum") {
    const double a = 2.0, b = 1.0;
    const caustics::CausticParams p = caustics::resonant_lambda(a, b, 2, 5);
    const caustics::PonceletPolygon poly = caustics::poncelet_polygon(a, b, p, 2, 5, 0.6);
    const double ref = melnikov_ellipse(a, b, p, 2, 5, cos_2phi, poly.phi[0]);
    for (int j = 1; j < 5; ++j) {
        CHECK(melnikov_ellipse(a, b, p, 2, 5, cos_2phi, poly.phi[j]) ==
              doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("even period potential has period pi") {
    const double a = 2.0, b = 1.0;
    const caustics::CausticParams p = caustics::resonant_lambda(a, b, 1, 4);
    for (double phi : {0.0, 0.5, 1.8}) {
        const double l1 = melnikov_ellipse(a, b, p, 1, 4, cos_2phi, phi);
        const double l2 = melnikov_ellipse(a, b, p, 1, 4, cos_2phi, phi + pi);
        CHECK(std::abs(l1 - l2) <= 1e-10);
    }
}

TEST_CASE("profile fit reproduces the potential between grid points") {
    const PotentialProfile prof = ellipse_profile(2.0, 1.0, 1, 3, cos_phi);
    const caustics::CausticParams p = caustics::resonant_lambda(2.0, 1.0, 1, 3);
    for (double phi : {0.111, 1.234, 2.222, 5.0}) {
        const double direct = melnikov_ellipse(2.0, 1.0, p, 1, 3, cos_phi, phi);
        CHECK(std::abs(prof.fit(phi) - direct) < 1e-10);
    }
}

TEST_CASE("classifier battery reproduces the structural predictions") {
    const double a = 2.0, b = 1.0;
    struct Case {
        int m, n;
        FourierSeries mu1;
        Constancy expected;
    };
    const Case cases[] = {
        {1, 3, FourierSeries(0.7, {}, {}), Constancy::Constant},
        {1, 3, cos_phi, Constancy::Nonconstant},
        {1, 3, cos_2phi, Constancy::Nonconstant},
        {1, 3, sin_3phi, Constancy::Nonconstant},
        {1, 4, cos_phi, Constancy::Constant},                       // odd harmonics only
        {1, 4, FourierSeries(0.0, {1.0, 0.0, 0.5}, {0.2}), Constancy::Constant},
        {1, 4, cos_2phi, Constancy::Nonconstant},
        {2, 5, cos_phi, Constancy::Nonconstant},
    };
    for (const auto& c : cases) {
        const ClassificationReport r = classify_ellipse(a, b, c.m, c.n, c.mu1);
        CHECK(r.verdict == c.expected);
        CHECK(r.predicted == c.expected);
        CHECK(r.agree);
    }
}

TEST_CASE("circle classifier matches the Fourier multiple-of-n rule") {
    const double r0 = 1.0;
    for (int n : {3, 4}) {
        for (int l = 1; l <= 3 * n; ++l) {
            std::vector<double> ss(l, 0.0);
            ss[l - 1] = 0.6;
            const FourierSeries r1(0.0, {}, ss);
            const ClassificationReport r = classify_circle(r0, 1, n, r1);
            const Constancy expected =
                (l % n == 0) ? Constancy::Nonconstant : Constancy::Constant;
            CHECK(r.verdict == expected);
            CHECK(r.predicted == expected);
            CHECK(r.agree);
        }
    }
}

TEST_CASE("explicitly coarse grids are rejected") {
    CHECK_THROWS_AS(ellipse_profile(2.0, 1.0, 1, 5, cos_2phi, 8),
                    std::invalid_argument);
    const FourierSeries high(0.0, std::vector<double>(10, 0.1), {});
    CHECK_THROWS_AS(ellipse_profile(2.0, 1.0, 1, 5, high, 64),
                    std::invalid_argument);
}
