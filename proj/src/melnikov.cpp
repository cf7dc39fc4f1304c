#include "billiards/melnikov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "billiards/tables.hpp"

namespace billiards::melnikov {

namespace {

constexpr double pi = std::numbers::pi;

std::size_t default_grid(std::size_t degree, int n) {
    return std::max<std::size_t>(256, 8 * degree * static_cast<std::size_t>(n));
}

void check_grid(std::size_t grid, std::size_t degree, int n) {
    const std::size_t min_grid =
        std::max<std::size_t>(16, 4 * degree * static_cast<std::size_t>(n));
    if (grid < min_grid) {
        throw std::invalid_argument("melnikov: grid too coarse for the profile");
    }
}

PotentialProfile build_profile(std::size_t grid_size,
                               const std::function<double(double)>& f) {
    PotentialProfile p;
    p.grid.resize(grid_size);
    p.values.resize(grid_size);
    double vmin = 0.0, vmax = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double phi = 2.0 * pi * static_cast<double>(i) /
                           static_cast<double>(grid_size);
        const double v = f(phi);
        p.grid[i] = phi;
        p.values[i] = v;
        sum += v;
        if (i == 0) { vmin = vmax = v; }
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    p.amplitude = vmax - vmin;
    p.mean = sum / static_cast<double>(grid_size);
    p.fit = FourierSeries::fit(p.values, grid_size / 2 - 1);
    return p;
}

}  // namespace

double melnikov_ellipse(double a, double b, const caustics::CausticParams& params,
                        int m, int n, const FourierSeries& mu1, double phi) {
    const caustics::PonceletPolygon poly =
        caustics::poncelet_polygon(a, b, params, m, n, phi);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += mu1(poly.phi[j]);
    return 2.0 * params.lambda * sum;
}

double melnikov_ellipse(double a, double b, int m, int n,
                        const FourierSeries& mu1, double phi) {
    return melnikov_ellipse(a, b, caustics::resonant_lambda(a, b, m, n), m, n,
                            mu1, phi);
}

double melnikov_twist(double a, double b, const caustics::CausticParams& params,
                      int m, int n, const FourierSeries& mu1, double phi) {
    const caustics::PonceletPolygon poly =
        caustics::poncelet_polygon(a, b, params, m, n, phi);
    const Ellipse base(a, b);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const Vec2 chord = poly.q[j + 1] - poly.q[j];
        const double h0 = norm(chord);
        const Vec2 dgamma1 = first_variation(base, mu1, poly.phi[j + 1]) -
                             first_variation(base, mu1, poly.phi[j]);
        sum += dot(chord, dgamma1) / h0;
    }
    return sum;
}

double melnikov_twist(double a, double b, int m, int n,
                      const FourierSeries& mu1, double phi) {
    return melnikov_twist(a, b, caustics::resonant_lambda(a, b, m, n), m, n,
                          mu1, phi);
}

double melnikov_circle(double r0, int m, int n, const FourierSeries& r1,
                       double theta) {
    if (n < 2) throw std::invalid_argument("melnikov_circle: need n >= 2");
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        sum += r1(theta + 2.0 * pi * m * j / static_cast<double>(n));
    }
    return 2.0 * r0 * std::sin(m * pi / static_cast<double>(n)) * sum;
}

PotentialProfile ellipse_profile(double a, double b, int m, int n,
                                 const FourierSeries& mu1,
                                 std::size_t grid_size) {
    if (grid_size == 0) grid_size = default_grid(mu1.degree(), n);
    check_grid(grid_size, mu1.degree(), n);
    const caustics::CausticParams params = caustics::resonant_lambda(a, b, m, n);
    return build_profile(grid_size, [&](double phi) {
        return melnikov_ellipse(a, b, params, m, n, mu1, phi);
    });
}

PotentialProfile circle_profile(double r0, int m, int n,
                                const FourierSeries& r1,
                                std::size_t grid_size) {
    if (grid_size == 0) grid_size = default_grid(r1.degree(), n);
    check_grid(grid_size, r1.degree(), n);
    return build_profile(grid_size, [&](double theta) {
        return melnikov_circle(r0, m, n, r1, theta);
    });
}

Constancy classify_constancy(const PotentialProfile& profile, double tol) {
    if (profile.grid.size() < 16) {
        throw std::invalid_argument("classify_constancy: grid too coarse");
    }
    const double scale = std::max(1.0, std::abs(profile.mean));
    return profile.amplitude > tol * scale ? Constancy::Nonconstant
                                           : Constancy::Constant;
}

ClassificationReport classify_ellipse(double a, double b, int m, int n,
                                      const FourierSeries& mu1, double tol,
                                      std::size_t grid_size) {
    const PotentialProfile profile = ellipse_profile(a, b, m, n, mu1, grid_size);
    ClassificationReport r;
    r.m = m;
    r.n = n;
    r.amplitude = profile.amplitude;
    r.mean = profile.mean;
    r.verdict = classify_constancy(profile, tol);
    const bool constant_predicted =
        (n % 2 == 1) ? mu1.is_constant()
                     : mu1.derivative().is_pi_antiperiodic();
    r.predicted = constant_predicted ? Constancy::Constant : Constancy::Nonconstant;
    r.agree = (r.verdict == r.predicted);
    return r;
}

ClassificationReport classify_circle(double r0, int m, int n,
                                     const FourierSeries& r1, double tol,
                                     std::size_t grid_size) {
    const PotentialProfile profile = circle_profile(r0, m, n, r1, grid_size);
    ClassificationReport r;
    r.m = m;
    r.n = n;
    r.amplitude = profile.amplitude;
    r.mean = profile.mean;
    r.verdict = classify_constancy(profile, tol);
    r.predicted = r1.has_harmonic_multiple_of(n) ? Constancy::Nonconstant
                                                 : Constancy::Constant;
    r.agree = (r.verdict == r.predicted);
    return r;
}

}  // namespace billiards::melnikov
