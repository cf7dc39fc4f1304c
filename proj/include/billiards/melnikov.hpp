#ifndef BILLIARDS_MELNIKOV_HPP
#define BILLIARDS_MELNIKOV_HPP

#include <cstddef>
#include <vector>

#include "billiards/caustics.hpp"
#include "billiards/fourier.hpp"

namespace billiards::melnikov {

/// First-order potential of a resonant caustic under a boundary
/// perturbation, sampled over one period of the starting angle.  The
/// caustic breaks up at first order exactly when the potential is
/// nonconstant.
struct PotentialProfile {
    std::vector<double> grid;
    std::vector<double> values;
    double amplitude = 0.0;  // max - min over the grid
    double mean = 0.0;
    FourierSeries fit;       // truncated Fourier interpolation of the samples
};

/// Potential of the (m, n)-resonant caustic for the confocal perturbation
/// profile mu1:  2 lambda sum_{j=0}^{n-1} mu1(phi_j), with phi_j the
/// vertices of the Poncelet polygon through phi.
double melnikov_ellipse(double a, double b, const caustics::CausticParams& params,
                        int m, int n, const FourierSeries& mu1, double phi);
double melnikov_ellipse(double a, double b, int m, int n,
                        const FourierSeries& mu1, double phi);

/// The same potential computed from the generating-function route:
/// sum_{j=0}^{n-1} h1(phi_j, phi_{j+1}) where
/// h0 h1 = <gamma0(phi') - gamma0(phi), gamma1(phi') - gamma1(phi)>.
/// Independent of melnikov_ellipse except for the shared polygon.
double melnikov_twist(double a, double b, const caustics::CausticParams& params,
                      int m, int n, const FourierSeries& mu1, double phi);
double melnikov_twist(double a, double b, int m, int n,
                      const FourierSeries& mu1, double phi);

/// Circle counterpart for the radial profile r1:
/// 2 r0 sin(m pi / n) sum_{j=0}^{n-1} r1(theta + 2 pi m j / n).
double melnikov_circle(double r0, int m, int n, const FourierSeries& r1,
                       double theta);

/// grid_size == 0 selects max(256, 8 * degree * n) samples.
PotentialProfile ellipse_profile(double a, double b, int m, int n,
                                 const FourierSeries& mu1,
                                 std::size_t grid_size = 0);
PotentialProfile circle_profile(double r0, int m, int n,
                                const FourierSeries& r1,
                                std::size_t grid_size = 0);

enum class Constancy { Constant, Nonconstant };

/// Nonconstant iff amplitude > tol * max(1, |mean|).  The default tolerance
/// leaves many orders of magnitude between roundoff-constant profiles and
/// genuinely oscillating ones (all inputs are trigonometric polynomials).
Constancy classify_constancy(const PotentialProfile& profile, double tol = 1e-8);

struct ClassificationReport {
    int m = 0, n = 0;
    double amplitude = 0.0;
    double mean = 0.0;
    Constancy verdict = Constancy::Constant;
    /// Structural prediction: for the ellipse, constant iff mu1 constant
    /// (n odd) or mu1' pi-antiperiodic (n even); for the circle, nonconstant
    /// iff r1 has a nonzero harmonic of order in nZ \ {0}.
    Constancy predicted = Constancy::Constant;
    bool agree = false;
};

ClassificationReport classify_ellipse(double a, double b, int m, int n,
                                      const FourierSeries& mu1,
                                      double tol = 1e-8,
                                      std::size_t grid_size = 0);
ClassificationReport classify_circle(double r0, int m, int n,
                                     const FourierSeries& r1,
                                     double tol = 1e-8,
                                     std::size_t grid_size = 0);

}  // namespace billiards::melnikov

#endif
