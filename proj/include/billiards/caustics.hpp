#ifndef BILLIARDS_CAUSTICS_HPP
#define BILLIARDS_CAUSTICS_HPP

#include <vector>

#include "billiards/billiard_map.hpp"
#include "billiards/geometry.hpp"

namespace billiards::caustics {

/// Confocal elliptical caustic
///   x^2 / (a^2 - lambda^2) + y^2 / (b^2 - lambda^2) = 1,  0 < lambda < b,
/// together with the parameters that make its tangent trajectories rigid in
/// the reparametrized angle t: modulus k, complete integral K, shift delta
/// (t advances by delta per bounce), and rotation number rho = delta / 4K.
struct CausticParams {
    double lambda = 0.0;
    double k = 0.0;
    double K = 0.0;
    double delta = 0.0;
    double rho = 0.0;
};

/// k^2 = (a^2 - b^2)/(a^2 - lambda^2) and delta = 2 F(asin(lambda/b), k);
/// see Chang & Friedberg, J. Math. Phys. 29 (1988).  Works for a = b (k = 0),
/// where delta reduces to the circle shift lambda = r0 sin(delta/2).
CausticParams caustic_params(double a, double b, double lambda);

/// The unique caustic with n * delta = 4 K m, i.e. rho = m/n.  Requires
/// gcd(m, n) = 1 and 1 <= m < n/2.  Solved by bisection; rho is strictly
/// increasing in lambda.
CausticParams resonant_lambda(double a, double b, int m, int n);

/// Closed n-gon inscribed in the ellipse and circumscribed about the caustic,
/// winding m times.  Arrays carry n + 1 entries; index n repeats index 0 up
/// to roundoff (closure).
struct PonceletPolygon {
    int m = 0, n = 0;
    double t0 = 0.0;
    std::vector<double> t;
    std::vector<double> phi;
    std::vector<Vec2> q;
};

/// Vertices t_j = t0 + j delta, phi_j = am(t_j), q_j = (a cos phi_j, b sin phi_j),
/// starting from boundary angle phi0.  The params must be (m, n)-resonant.
PonceletPolygon poncelet_polygon(double a, double b, const CausticParams& params,
                                 int m, int n, double phi0);

/// Billiard state at boundary angle phi launching tangent to the caustic in
/// the counterclockwise sense (theta < pi/2 branch); the direction is taken
/// from the next tangency point, exact by construction.
PhasePoint caustic_phase_point(double a, double b, const CausticParams& params,
                               double phi);

/// Caustic parameter of the confocal ellipse tangent to the line through
/// boundary point q with unit inward direction p:  -a b <p, D^{-2} q>,
/// D = diag(a, b).  Outward p is a domain error.  Values >= b indicate a
/// chord crossing between the foci (hyperbolic caustic).
double tangency_lambda(Vec2 q, Vec2 p, double a, double b);

/// a b <p_{j-1} - p_j, D^{-2} q_j> for three consecutive impacts, with
/// p the unit inward chord directions; equals 2 lambda along any orbit
/// tangent to the caustic C_lambda.
double tangency_invariant(Vec2 q_prev, Vec2 q, Vec2 q_next, double a, double b);

/// Exact-ellipse bounce through the rigid shift t -> t + delta (or
/// t -> t + 4K - delta on the clockwise branch theta > pi/2).  Only valid for
/// states whose chord is tangent to a confocal ellipse (lambda in (0, b));
/// serves as a closed-form cross-check of the generic root-finder.
PhasePoint ellipse_step_closed_form(double a, double b, const PhasePoint& p);

}  // namespace billiards::caustics

#endif
