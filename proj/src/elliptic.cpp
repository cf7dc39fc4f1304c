#include "billiards/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace billiards::elliptic {

namespace {

constexpr double pi = std::numbers::pi;

// K diverges as k -> 1; the caustic families this library handles stay
// bounded away from that edge.
constexpr double max_modulus = 1.0 - 1e-9;

void check_modulus(double k) {
    if (!(k >= 0.0 && k < max_modulus)) {
        throw std::domain_error("elliptic: modulus k = " + std::to_string(k) +
                                " outside [0, 1 - 1e-9)");
    }
}

// F restricted to phi in roughly [-pi/2 - 0.2, pi/2 + 0.2] plus anything the
// ascending-angle recurrence can track; valid for all real phi.
//
// Arithmetic-geometric mean form of the descending Landen transformation
// (Abramowitz & Stegun 17.6): scale pair (a, b) converges quadratically while
// the angle roughly doubles via tan(phi_{n+1} - phi_n) = (b_n/a_n) tan phi_n,
// the branch chosen nearest 2 phi_n.  Then F = phi_N / (2^N a_N).
double incomplete_F_agm(double phi, double k) {
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    double ang = phi;
    double scale = 1.0;
    for (int i = 0; i < 40 && (a - b) > 1e-17 * a; ++i) {
        const double d0 = std::atan2(b * std::sin(ang), a * std::cos(ang));
        ang += d0 + pi * std::round((ang - d0) / pi);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        scale *= 2.0;
    }
    return ang / (scale * a);
}

}  // namespace

double complete_K(double k) {
    check_modulus(k);
    // Descending Landen product: K(k) = (1 + k1) K(k1) with
    // k1 = (1 - k') / (1 + k'), k' the complementary modulus.
    double kn = k;
    double prod = 1.0;
    for (int i = 0; i < 40 && kn > 1e-17; ++i) {
        const double kp = std::sqrt((1.0 - kn) * (1.0 + kn));
        kn = (1.0 - kp) / (1.0 + kp);
        prod *= 1.0 + kn;
    }
    return prod * (pi / 2.0);
}

double incomplete_F(double phi, double k) {
    check_modulus(k);
    // Reduce by F(phi + j*pi) = F(phi) + 2jK with phi - j*pi in [-pi/2, pi/2].
    const double j = std::round(phi / pi);
    const double r = phi - j * pi;
    double f = incomplete_F_agm(r, k);
    if (j != 0.0) f += 2.0 * j * complete_K(k);
    return f;
}

double am(double t, double k) {
    check_modulus(k);
    const double K = complete_K(k);
    // Reduce by am(t + 2jK) = am(t) + j*pi with t - 2jK in [-K, K].
    const double j = std::round(t / (2.0 * K));
    const double t0 = t - 2.0 * j * K;

    // Newton inversion of F(phi) = t0.  F' = (1 - k^2 sin^2 phi)^{-1/2} >= 1,
    // so steps never overshoot by more than the residual itself; a bisection
    // bracket on [-pi/2, pi/2] guards the tail.
    double lo = -pi / 2.0, hi = pi / 2.0;
    double phi = (pi / 2.0) * (t0 / K);
    for (int i = 0; i < 50; ++i) {
        const double g = incomplete_F_agm(phi, k) - t0;
        if (std::abs(g) <= 1e-13) return phi + j * pi;
        if (g > 0.0) hi = phi; else lo = phi;
        const double s = std::sin(phi);
        double next = phi - g * std::sqrt(1.0 - k * k * s * s);
        if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
        phi = next;
    }
    throw std::runtime_error("elliptic::am: Newton iteration did not converge");
}

double sn(double t, double k) { return std::sin(am(t, k)); }

double cn(double t, double k) { return std::cos(am(t, k)); }

}  // namespace billiards::elliptic
