#ifndef BILLIARDS_ELLIPTIC_HPP
#define BILLIARDS_ELLIPTIC_HPP

namespace billiards::elliptic {

/// Complete elliptic integral of the first kind K(k),
/// K(k) = \int_0^{pi/2} (1 - k^2 sin^2 t)^{-1/2} dt.
/// The modulus must satisfy 0 <= k < 1; values within 1e-9 of 1 are
/// rejected since K diverges there.
double complete_K(double k);

/// Incomplete elliptic integral of the first kind F(phi, k) for any real
/// phi, extended by the quasi-periodicity F(phi + pi, k) = F(phi, k) + 2K.
double incomplete_F(double phi, double k);

/// Jacobi amplitude am(t, k): the inverse of t = F(phi, k).
/// Satisfies am(t + 2K, k) = am(t, k) + pi.
double am(double t, double k);

/// Jacobi elliptic sine, sn(t, k) = sin(am(t, k)).
double sn(double t, double k);

/// Jacobi elliptic cosine, cn(t, k) = cos(am(t, k)).
double cn(double t, double k);

}  // namespace billiards::elliptic

#endif
