#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "billiards/fourier.hpp"
#include "oracles.hpp"

using billiards::FourierSeries;
constexpr double pi = std::numbers::pi;

TEST_CASE("evaluation matches the defining sum") {
    const FourierSeries f(0.5, {1.0, 0.0, -0.25}, {0.0, 2.0});
    for (double x : {-2.0, 0.0, 0.7, 3.9}) {
        const double expected = 0.5 + std::cos(x) - 0.25 * std::cos(3.0 * x) +
                                2.0 * std::sin(2.0 * x);
        CHECK(f(x) == doctest::Approx(expected).epsilon(1e-15));
    }
    CHECK(f.degree() == 3);
}

TEST_CASE("evaluation is 2pi-periodic") {
    const FourierSeries f(0.1, {0.3, -0.2}, {0.4, 0.0});
    for (double x : {-1.0, 0.2, 2.5}) {
        CHECK(f(x + 2.0 * pi) == doctest::Approx(f(x)).epsilon(1e-14));
    }
}

TEST_CASE("derivative is exact term-by-term") {
    const FourierSeries f(1.5, {0.7, -0.3}, {0.2, 0.1});
    const FourierSeries df = f.derivative();
    CHECK(df.constant_term() == 0.0);
    for (double x : {-0.4, 0.9, 2.2}) {
        const auto eval = [&](double t) { return f(t); };
        const double fd = oracles::central_difference(eval, x, 1e-6);
        CHECK(df(x) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("structural predicates") {
    const FourierSeries constant(2.0, {}, {});
    CHECK(constant.is_constant());
    CHECK_FALSE(FourierSeries(0.0, {1.0}, {}).is_constant());

    // Odd harmonics only (plus zero constant) <=> pi-antiperiodic.
    const FourierSeries odd(0.0, {1.0, 0.0, 0.5}, {0.3, 0.0, 0.0});
    CHECK(odd.is_pi_antiperiodic());
    for (double x : {0.1, 1.3}) {
        CHECK(odd(x + pi) == doctest::Approx(-odd(x)).epsilon(1e-13));
    }
    CHECK_FALSE(FourierSeries(0.0, {0.0, 1.0}, {}).is_pi_antiperiodic());
    CHECK_FALSE(FourierSeries(1.0, {1.0}, {}).is_pi_antiperiodic());

    // Derivative of constant + odd harmonics is pi-antiperiodic.
    const FourierSeries mixed(3.0, {0.4, 0.0, -0.7}, {});
    CHECK(mixed.derivative().is_pi_antiperiodic());
    CHECK_FALSE(FourierSeries(0.0, {0.0, 1.0}, {}).derivative().is_pi_antiperiodic());

    const FourierSeries h(0.0, {0.0, 0.0, 0.0, 1.0}, {});  // cos(4x)
    CHECK(h.has_harmonic_multiple_of(4));
    CHECK(h.has_harmonic_multiple_of(2));
    CHECK_FALSE(h.has_harmonic_multiple_of(3));
    CHECK_FALSE(constant.has_harmonic_multiple_of(1));
}

TEST_CASE("fit recovers trigonometric polynomials exactly") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> cs(4), ss(4);
        for (auto& c : cs) c = coeff(rng);
        for (auto& s : ss) s = coeff(rng);
        const FourierSeries f(coeff(rng), cs, ss);

        const std::size_t N = 64;
        std::vector<double> samples(N);
        for (std::size_t i = 0; i < N; ++i) {
            samples[i] = f(2.0 * pi * static_cast<double>(i) / N);
        }
        const FourierSeries g = FourierSeries::fit(samples, 4);
        CHECK(g.constant_term() == doctest::Approx(f.constant_term()).epsilon(1e-13));
        for (std::size_t l = 0; l < 4; ++l) {
            CHECK(g.cos_coeffs()[l] == doctest::Approx(cs[l]).epsilon(1e-13));
            CHECK(g.sin_coeffs()[l] == doctest::Approx(ss[l]).epsilon(1e-13));
        }
    }
}

TEST_CASE("fit input validation") {
    CHECK_THROWS(FourierSeries::fit({}, 2));
    CHECK_THROWS(FourierSeries::fit(std::vector<double>(8, 1.0), 4));
}
