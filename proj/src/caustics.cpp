#include "billiards/caustics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "billiards/elliptic.hpp"

namespace billiards::caustics {

namespace {

constexpr double pi = std::numbers::pi;

void check_axes(double a, double b) {
    if (!(a >= b && b > 0.0)) {
        throw std::domain_error("caustics: requires a >= b > 0");
    }
}

void check_resonance_order(int m, int n) {
    if (m < 1 || 2 * m >= n) {
        throw std::invalid_argument("caustics: need 1 <= m < n/2");
    }
    if (std::gcd(m, n) != 1) {
        throw std::invalid_argument("caustics: m and n must be coprime");
    }
}

double resonance_residual(const CausticParams& p, int m, int n) {
    return n * p.delta - 4.0 * p.K * m;
}

}  // namespace

CausticParams caustic_params(double a, double b, double lambda) {
    check_axes(a, b);
    if (!(lambda > 0.0 && lambda < b)) {
        throw std::domain_error("caustic_params: lambda must lie in (0, b)");
    }
    CausticParams p;
    p.lambda = lambda;
    p.k = std::sqrt((a * a - b * b) / (a * a - lambda * lambda));
    p.K = elliptic::complete_K(p.k);
    // theta* in (0, pi) with sin(theta*/2) = lambda/b; delta = 2 F(theta*/2, k).
    const double half_theta = std::asin(lambda / b);
    p.delta = 2.0 * elliptic::incomplete_F(half_theta, p.k);
    p.rho = p.delta / (4.0 * p.K);
    return p;
}

CausticParams resonant_lambda(double a, double b, int m, int n) {
    check_axes(a, b);
    check_resonance_order(m, n);
    // g(lambda) = n delta - 4 K m is continuous and strictly increasing
    // (rho increasing), negative near 0 and positive near b since n > 2m.
    double lo = 1e-9 * b;
    double hi = (1.0 - 1e-9) * b;
    auto g = [&](double lambda) {
        return resonance_residual(caustic_params(a, b, lambda), m, n);
    };
    if (!(g(lo) < 0.0 && g(hi) > 0.0)) {
        throw std::runtime_error("resonant_lambda: root not bracketed");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // interval at double resolution
        if (g(mid) < 0.0) lo = mid; else hi = mid;
        if (hi - lo < 1e-13 * b) break;
    }
    return caustic_params(a, b, 0.5 * (lo + hi));
}

PonceletPolygon poncelet_polygon(double a, double b, const CausticParams& params,
                                 int m, int n, double phi0) {
    check_axes(a, b);
    check_resonance_order(m, n);
    const double res = resonance_residual(params, m, n);
    if (std::abs(res) > 1e-9) {
        throw std::invalid_argument("poncelet_polygon: params are not (" +
                                    std::to_string(m) + ", " + std::to_string(n) +
                                    ")-resonant (residual " + std::to_string(res) + ")");
    }
    PonceletPolygon poly;
    poly.m = m;
    poly.n = n;
    poly.t0 = elliptic::incomplete_F(phi0, params.k);
    poly.t.reserve(n + 1);
    poly.phi.reserve(n + 1);
    poly.q.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double tj = poly.t0 + j * params.delta;
        const double phij = elliptic::am(tj, params.k);
        poly.t.push_back(tj);
        poly.phi.push_back(phij);
        poly.q.push_back({a * std::cos(phij), b * std::sin(phij)});
    }
    return poly;
}

PhasePoint caustic_phase_point(double a, double b, const CausticParams& params,
                               double phi) {
    check_axes(a, b);
    const double t0 = elliptic::incomplete_F(phi, params.k);
    const double phi1 = elliptic::am(t0 + params.delta, params.k);
    const Vec2 q0{a * std::cos(phi), b * std::sin(phi)};
    const Vec2 q1{a * std::cos(phi1), b * std::sin(phi1)};
    const Vec2 p = normalized(q1 - q0);
    const Vec2 tau = normalized(Vec2{-a * std::sin(phi), b * std::cos(phi)});
    const double c = std::clamp(dot(tau, p), -1.0, 1.0);
    return {phi, std::acos(c)};
}

double tangency_lambda(Vec2 q, Vec2 p, double a, double b) {
    check_axes(a, b);
    const double s = p.x * q.x / (a * a) + p.y * q.y / (b * b);
    if (s > 0.0) {
        throw std::domain_error("tangency_lambda: direction points outward");
    }
    return -a * b * s;
}

double tangency_invariant(Vec2 q_prev, Vec2 q, Vec2 q_next, double a, double b) {
    check_axes(a, b);
    const Vec2 in = q - q_prev;
    const Vec2 out = q_next - q;
    const double nin = norm(in), nout = norm(out);
    if (!(nin > 1e-12 && nout > 1e-12)) {
        throw std::domain_error("tangency_invariant: coincident impact points");
    }
    const Vec2 d{in.x / nin - out.x / nout, in.y / nin - out.y / nout};
    return a * b * (d.x * q.x / (a * a) + d.y * q.y / (b * b));
}

PhasePoint ellipse_step_closed_form(double a, double b, const PhasePoint& p) {
    check_axes(a, b);
    const Vec2 q{a * std::cos(p.phi), b * std::sin(p.phi)};
    const Vec2 tau = normalized(Vec2{-a * std::sin(p.phi), b * std::cos(p.phi)});
    const double ct = std::cos(p.theta), st = std::sin(p.theta);
    const Vec2 dir{tau.x * ct - tau.y * st, tau.x * st + tau.y * ct};
    const double lambda = tangency_lambda(q, dir, a, b);
    if (!(lambda > 0.0 && lambda < b)) {
        throw std::domain_error("ellipse_step_closed_form: chord has no confocal "
                                "elliptical caustic (lambda = " +
                                std::to_string(lambda) + ")");
    }
    const CausticParams cp = caustic_params(a, b, lambda);
    const double t = elliptic::incomplete_F(p.phi, cp.k);
    const double shift = (p.theta < pi / 2.0) ? cp.delta : 4.0 * cp.K - cp.delta;
    const double phi2 = elliptic::am(t + shift, cp.k);
    const Vec2 q2{a * std::cos(phi2), b * std::sin(phi2)};
    const Vec2 chord = normalized(q2 - q);
    const Vec2 tau2 = normalized(Vec2{-a * std::sin(phi2), b * std::cos(phi2)});
    const double c = std::clamp(dot(tau2, chord), -1.0, 1.0);
    return {phi2, std::acos(c)};
}

}  // namespace billiards::caustics
