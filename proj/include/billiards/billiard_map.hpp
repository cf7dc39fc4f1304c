#ifndef BILLIARDS_BILLIARD_MAP_HPP
#define BILLIARDS_BILLIARD_MAP_HPP

#include "billiards/tables.hpp"

namespace billiards {

/// Billiard state: boundary parameter phi (kept on the lift, any real) and
/// angle of incidence theta in (0, pi) measured from the tangent vector.
struct PhasePoint {
    double phi = 0.0;
    double theta = 0.0;
};

/// Conjugate coordinates (phi, y) with y = |gamma'(phi)| cos(theta); the
/// bounce map preserves area in these coordinates.
struct ConjugatePoint {
    double phi = 0.0;
    double y = 0.0;
};

/// Chord length h(phi, phi2) = |gamma(phi) - gamma(phi2)|; the generating
/// function of the bounce map.  Coincident angles (mod 2 pi) are rejected.
double generating_h(const Table& table, double phi, double phi2);

/// One bounce.  Returns phi' on the lift, phi' in (phi, phi + 2 pi).
/// Root-finder failures throw std::runtime_error; they are never silent.
PhasePoint step(const Table& table, const PhasePoint& p);

struct OrbitEnd {
    PhasePoint point;  // lifted phi
    long winding = 0;  // crossings of phi == 0 (mod 2 pi) accumulated by the orbit
};

/// n-fold composition of step with the lift winding
/// floor(phi_n / 2 pi) - floor(phi_0 / 2 pi); for a periodic orbit of type
/// (m, n) this is m for almost every start.
OrbitEnd step_n(const Table& table, const PhasePoint& p, int n);

ConjugatePoint to_conjugate(const Table& table, const PhasePoint& p);

/// Inverse of to_conjugate; |y| >= |gamma'(phi)| is a domain error.
PhasePoint from_conjugate(const Table& table, const ConjugatePoint& c);

/// One bounce in conjugate coordinates.
ConjugatePoint step_conjugate(const Table& table, const ConjugatePoint& c);

}  // namespace billiards

#endif
