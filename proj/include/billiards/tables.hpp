#ifndef BILLIARDS_TABLES_HPP
#define BILLIARDS_TABLES_HPP

#include <cstddef>
#include <functional>

#include "billiards/fourier.hpp"
#include "billiards/geometry.hpp"

namespace billiards {

/// A closed strictly convex boundary curve, parametrized counterclockwise
/// and 2 pi - periodic in the parameter.  Immutable after construction.
class Table {
public:
    virtual ~Table() = default;
    virtual Vec2 point(double phi) const = 0;
    virtual Vec2 tangent(double phi) const = 0;            // d point / d phi
    virtual Vec2 second_derivative(double phi) const = 0;  // d^2 point / d phi^2
};

/// cross(gamma', gamma'') / |gamma'|^3; positive everywhere for a
/// counterclockwise convex curve.
double signed_curvature(const Table& table, double phi);

/// x = a cos phi, y = b sin phi with a >= b > 0.  The parameter phi is the
/// angular coordinate of the confocal coordinate system, not arclength.
class Ellipse final : public Table {
public:
    Ellipse(double a, double b);
    Vec2 point(double phi) const override;
    Vec2 tangent(double phi) const override;
    Vec2 second_derivative(double phi) const override;

    double a() const { return a_; }
    double b() const { return b_; }
    /// Semifocal distance sqrt(a^2 - b^2).
    double semifocal() const;

private:
    double a_, b_;
};

/// Ellipse deformed in confocal coordinates: mu = mu0 + eps * mu1(phi) where
/// cosh(mu0) = a/c, sinh(mu0) = b/c.  The deformation is exactly linear in
/// eps.  Construction verifies strict convexity by curvature sampling and
/// fails loudly when |eps| is too large for the given profile.
class PerturbedEllipse final : public Table {
public:
    PerturbedEllipse(Ellipse base, double eps, FourierSeries mu1);

    Vec2 point(double phi) const override;
    Vec2 tangent(double phi) const override;
    Vec2 second_derivative(double phi) const override;

    /// d gamma / d eps at eps = 0:  a b mu1(phi) D^{-2} gamma0(phi),
    /// D = diag(a, b).
    Vec2 first_variation(double phi) const;

    const Ellipse& base() const { return base_; }
    double eps() const { return eps_; }
    const FourierSeries& mu1() const { return mu1_; }

private:
    Ellipse base_;
    double eps_;
    FourierSeries mu1_, mu1d_, mu1dd_;
};

/// First variation of the confocal deformation for a base ellipse:
/// a b mu1(phi) D^{-2} (a cos phi, b sin phi) = (b mu1 cos phi, a mu1 sin phi).
Vec2 first_variation(const Ellipse& base, const FourierSeries& mu1, double phi);

/// Circle deformed radially: r(theta) = r0 (1 + eps * r1(theta)).
/// Construction verifies positivity of r and strict convexity.
class PerturbedCircle final : public Table {
public:
    PerturbedCircle(double r0, double eps, FourierSeries r1);

    Vec2 point(double theta) const override;
    Vec2 tangent(double theta) const override;
    Vec2 second_derivative(double theta) const override;

    double r0() const { return r0_; }
    double eps() const { return eps_; }
    const FourierSeries& r1() const { return r1_; }

private:
    double r0_, eps_;
    FourierSeries r1_, r1d_, r1dd_;
};

/// Result of projecting a Cartesian first-order deformation
/// x^2/a^2 + y^2/b^2 + eps P1(x, y) = 1 onto a confocal profile mu1.
struct Mu1Projection {
    FourierSeries series;
    /// Max absolute residual of
    /// 2 (a^2 sin^2 phi + b^2 cos^2 phi) mu1(phi) + a b P1(a cos phi, b sin phi)
    /// over the sample angles; nonzero when the degree is too small.
    double max_residual = 0.0;
};

Mu1Projection cartesian_perturbation_to_mu1(
    const std::function<double(double, double)>& P1, double a, double b,
    std::size_t degree, std::size_t samples = 256);

}  // namespace billiards

#endif
