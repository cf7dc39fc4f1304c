#include "billiards/billiard_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace billiards {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

void check_theta(double theta) {
    if (!(theta > 0.0 && theta < pi)) {
        throw std::domain_error("billiard step: theta must lie in (0, pi)");
    }
}

}  // namespace

double generating_h(const Table& table, double phi, double phi2) {
    const double diff = std::remainder(phi - phi2, two_pi);
    if (std::abs(diff) < 1e-12) {
        throw std::domain_error("generating_h: coincident boundary angles");
    }
    return norm(table.point(phi) - table.point(phi2));
}

PhasePoint step(const Table& table, const PhasePoint& p) {
    check_theta(p.theta);
    const Vec2 q = table.point(p.phi);
    const Vec2 tau = normalized(table.tangent(p.phi));
    const double ct = std::cos(p.theta), st = std::sin(p.theta);
    // Tangent rotated counterclockwise by theta points into the table.
    const Vec2 dir{tau.x * ct - tau.y * st, tau.x * st + tau.y * ct};

    // Signed offset of gamma(s) from the ray line.  By strict convexity it
    // has exactly one zero in (phi, phi + 2 pi): negative just after phi,
    // positive just before phi + 2 pi.
    auto offset = [&](double s) { return cross(dir, table.point(s) - q); };

    const int scan = 720;
    const double lo0 = p.phi + 1e-6;
    const double hi0 = p.phi + two_pi - 1e-6;
    if (offset(lo0) >= 0.0) {
        throw std::runtime_error("billiard step: failed to bracket the next impact "
                                 "(grazing ray or non-convex table)");
    }
    double lo = lo0;
    double hi = hi0;
    bool bracketed = false;
    for (int i = 1; i <= scan; ++i) {
        const double s = lo0 + (hi0 - lo0) * static_cast<double>(i) / scan;
        if (offset(s) >= 0.0) {
            hi = s;
            bracketed = true;
            break;
        }
        lo = s;
    }
    if (!bracketed) {
        throw std::runtime_error("billiard step: no sign change along the boundary "
                                 "(grazing ray or non-convex table)");
    }

    // Newton on the offset with bisection fallback inside [lo, hi].
    double s = 0.5 * (lo + hi);
    for (int i = 0; i < 100 && hi - lo > 1e-13; ++i) {
        const double fs = offset(s);
        if (fs > 0.0) hi = s;
        else          lo = s;
        const double ds = cross(dir, table.tangent(s));
        double next = (ds != 0.0) ? s - fs / ds : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == s) break;
        s = next;
    }

    const Vec2 q2 = table.point(s);
    const Vec2 chord = q2 - q;
    const double len = norm(chord);
    if (!(len > 0.0)) {
        throw std::runtime_error("billiard step: degenerate chord");
    }
    const Vec2 pdir{chord.x / len, chord.y / len};
    const Vec2 tau2 = normalized(table.tangent(s));
    const double c = std::clamp(dot(tau2, pdir), -1.0, 1.0);
    return {s, std::acos(c)};
}

OrbitEnd step_n(const Table& table, const PhasePoint& p, int n) {
    if (n < 1) throw std::invalid_argument("step_n: n must be positive");
    PhasePoint cur = p;
    for (int i = 0; i < n; ++i) cur = step(table, cur);
    const long w = static_cast<long>(std::floor(cur.phi / two_pi)) -
                   static_cast<long>(std::floor(p.phi / two_pi));
    return {cur, w};
}

ConjugatePoint to_conjugate(const Table& table, const PhasePoint& p) {
    check_theta(p.theta);
    return {p.phi, norm(table.tangent(p.phi)) * std::cos(p.theta)};
}

PhasePoint from_conjugate(const Table& table, const ConjugatePoint& c) {
    const double speed = norm(table.tangent(c.phi));
    if (!(std::abs(c.y) < speed)) {
        throw std::domain_error("from_conjugate: |y| must be below |gamma'(phi)|");
    }
    return {c.phi, std::acos(c.y / speed)};
}

ConjugatePoint step_conjugate(const Table& table, const ConjugatePoint& c) {
    return to_conjugate(table, step(table, from_conjugate(table, c)));
}

}  // namespace billiards
