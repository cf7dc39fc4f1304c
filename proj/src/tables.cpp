#include "billiards/tables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace billiards {

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::size_t convexity_samples = 1024;

void require_convex(const Table& table, const char* what) {
    for (std::size_t i = 0; i < convexity_samples; ++i) {
        const double phi = 2.0 * pi * static_cast<double>(i) /
                           static_cast<double>(convexity_samples);
        const double kappa = signed_curvature(table, phi);
        if (!(kappa > 0.0)) {
            throw std::domain_error(std::string(what) +
                                    ": not strictly convex (curvature " +
                                    std::to_string(kappa) + " at phi = " +
                                    std::to_string(phi) + ")");
        }
    }
}

}  // namespace

double signed_curvature(const Table& table, double phi) {
    const Vec2 d1 = table.tangent(phi);
    const Vec2 d2 = table.second_derivative(phi);
    const double speed = norm(d1);
    return cross(d1, d2) / (speed * speed * speed);
}

Ellipse::Ellipse(double a, double b) : a_(a), b_(b) {
    if (!(a >= b && b > 0.0)) {
        throw std::domain_error("Ellipse: requires a >= b > 0");
    }
}

Vec2 Ellipse::point(double phi) const {
    return {a_ * std::cos(phi), b_ * std::sin(phi)};
}

Vec2 Ellipse::tangent(double phi) const {
    return {-a_ * std::sin(phi), b_ * std::cos(phi)};
}

Vec2 Ellipse::second_derivative(double phi) const {
    return {-a_ * std::cos(phi), -b_ * std::sin(phi)};
}

double Ellipse::semifocal() const {
    return std::sqrt((a_ - b_) * (a_ + b_));
}

PerturbedEllipse::PerturbedEllipse(Ellipse base, double eps, FourierSeries mu1)
    : base_(base), eps_(eps), mu1_(std::move(mu1)),
      mu1d_(mu1_.derivative()), mu1dd_(mu1d_.derivative()) {
    require_convex(*this, "PerturbedEllipse");
}

// With d = eps * mu1(phi) the curve is
//   x = (a cosh d + b sinh d) cos phi,  y = (b cosh d + a sinh d) sin phi,
// which uses cosh(mu0) = a/c, sinh(mu0) = b/c to avoid evaluating mu0
// itself; at eps = 0 this reproduces the base ellipse bit for bit.
Vec2 PerturbedEllipse::point(double phi) const {
    const double a = base_.a(), b = base_.b();
    const double d = eps_ * mu1_(phi);
    const double ch = std::cosh(d), sh = std::sinh(d);
    return {(a * ch + b * sh) * std::cos(phi), (b * ch + a * sh) * std::sin(phi)};
}

Vec2 PerturbedEllipse::tangent(double phi) const {
    const double a = base_.a(), b = base_.b();
    const double d = eps_ * mu1_(phi);
    const double dp = eps_ * mu1d_(phi);
    const double ch = std::cosh(d), sh = std::sinh(d);
    const double C = a * ch + b * sh;  // note C' = S dp, S' = C dp
    const double S = b * ch + a * sh;
    const double c = std::cos(phi), s = std::sin(phi);
    return {S * dp * c - C * s, C * dp * s + S * c};
}

Vec2 PerturbedEllipse::second_derivative(double phi) const {
    const double a = base_.a(), b = base_.b();
    const double d = eps_ * mu1_(phi);
    const double dp = eps_ * mu1d_(phi);
    const double dpp = eps_ * mu1dd_(phi);
    const double ch = std::cosh(d), sh = std::sinh(d);
    const double C = a * ch + b * sh;
    const double S = b * ch + a * sh;
    const double c = std::cos(phi), s = std::sin(phi);
    return {(C * dp * dp + S * dpp - C) * c - 2.0 * S * dp * s,
            (S * dp * dp + C * dpp - S) * s + 2.0 * C * dp * c};
}

Vec2 PerturbedEllipse::first_variation(double phi) const {
    return billiards::first_variation(base_, mu1_, phi);
}

Vec2 first_variation(const Ellipse& base, const FourierSeries& mu1, double phi) {
    const double m = mu1(phi);
    return {base.b() * m * std::cos(phi), base.a() * m * std::sin(phi)};
}

PerturbedCircle::PerturbedCircle(double r0, double eps, FourierSeries r1)
    : r0_(r0), eps_(eps), r1_(std::move(r1)),
      r1d_(r1_.derivative()), r1dd_(r1d_.derivative()) {
    if (!(r0 > 0.0)) throw std::domain_error("PerturbedCircle: requires r0 > 0");
    for (std::size_t i = 0; i < convexity_samples; ++i) {
        const double theta = 2.0 * pi * static_cast<double>(i) /
                             static_cast<double>(convexity_samples);
        if (!(r0_ * (1.0 + eps_ * r1_(theta)) > 0.0)) {
            throw std::domain_error("PerturbedCircle: radius not positive");
        }
    }
    require_convex(*this, "PerturbedCircle");
}

Vec2 PerturbedCircle::point(double theta) const {
    const double r = r0_ * (1.0 + eps_ * r1_(theta));
    return {r * std::cos(theta), r * std::sin(theta)};
}

Vec2 PerturbedCircle::tangent(double theta) const {
    const double r = r0_ * (1.0 + eps_ * r1_(theta));
    const double rp = r0_ * eps_ * r1d_(theta);
    const double c = std::cos(theta), s = std::sin(theta);
    return {rp * c - r * s, rp * s + r * c};
}

Vec2 PerturbedCircle::second_derivative(double theta) const {
    const double r = r0_ * (1.0 + eps_ * r1_(theta));
    const double rp = r0_ * eps_ * r1d_(theta);
    const double rpp = r0_ * eps_ * r1dd_(theta);
    const double c = std::cos(theta), s = std::sin(theta);
    return {(rpp - r) * c - 2.0 * rp * s, (rpp - r) * s + 2.0 * rp * c};
}

Mu1Projection cartesian_perturbation_to_mu1(
    const std::function<double(double, double)>& P1, double a, double b,
    std::size_t degree, std::size_t samples) {
    if (!(a >= b && b > 0.0)) {
        throw std::domain_error("cartesian_perturbation_to_mu1: requires a >= b > 0");
    }
    if (2 * degree + 1 > samples) {
        throw std::invalid_argument(
            "cartesian_perturbation_to_mu1: need samples >= 2*degree + 1");
    }
    // 2 (a^2 sin^2 + b^2 cos^2) mu1 + a b P1(a cos, b sin) = 0 solved for mu1
    // pointwise, then projected onto a trigonometric polynomial.
    std::vector<double> mu(samples), p1(samples), weight(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double phi = 2.0 * pi * static_cast<double>(i) /
                           static_cast<double>(samples);
        const double c = std::cos(phi), s = std::sin(phi);
        weight[i] = 2.0 * (a * a * s * s + b * b * c * c);
        p1[i] = P1(a * c, b * s);
        mu[i] = -a * b * p1[i] / weight[i];
    }
    Mu1Projection out;
    out.series = FourierSeries::fit(mu, degree);
    for (std::size_t i = 0; i < samples; ++i) {
        const double phi = 2.0 * pi * static_cast<double>(i) /
                           static_cast<double>(samples);
        const double res = weight[i] * out.series(phi) + a * b * p1[i];
        out.max_residual = std::max(out.max_residual, std::abs(res));
    }
    return out;
}

}  // namespace billiards
