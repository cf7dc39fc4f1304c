#ifndef BILLIARDS_PERSISTENCE_HPP
#define BILLIARDS_PERSISTENCE_HPP

#include <memory>
#include <string>
#include <vector>

#include "billiards/billiard_map.hpp"
#include "billiards/melnikov.hpp"

namespace billiards::persistence {

/// A one-parameter family of tables, linear in eps, with its unperturbed
/// member an ellipse (possibly a circle).  Owns everything needed to build
/// the table at a given eps and the first-order potential of its resonant
/// caustics.
class TableFamily {
public:
    static TableFamily perturbed_ellipse(double a, double b, FourierSeries mu1);
    static TableFamily perturbed_circle(double r0, FourierSeries r1);

    std::unique_ptr<Table> table(double eps) const;
    const Ellipse& base() const { return base_; }
    const FourierSeries& profile() const { return profile_; }
    bool is_circle() const { return circle_; }

    melnikov::PotentialProfile melnikov_profile(int m, int n,
                                                std::size_t grid_size = 0) const;

private:
    TableFamily(Ellipse base, FourierSeries profile, bool circle);
    Ellipse base_;
    FourierSeries profile_;
    bool circle_;
};

/// One point of the two vertically-related graphs: the n-step return of
/// (phi, upsilon) lands on (phi + 2 pi m, upsilon_star).  At eps = 0 the
/// separation vanishes to solver tolerance; at first order it equals
/// eps * (d/dphi of the resonant-caustic potential).
struct TwoGraphSample {
    double phi = 0.0;
    double upsilon = 0.0;
    double upsilon_star = 0.0;
    double separation = 0.0;
};

struct SolveOptions {
    double g_tol = 1e-11;  // tolerance on the angular return residual
    int max_iter = 80;
};

/// Solve pi_1 f^n(phi, y) = phi + 2 pi m for y near y_guess by safeguarded
/// secant inside [y_guess - eta, y_guess + eta]; the bracket must straddle a
/// sign change or the solve reports failure (the perturbation may have left
/// the perturbative regime).
TwoGraphSample solve_upsilon(const Table& table, int m, int n, double phi,
                             double y_guess, double eta,
                             const SolveOptions& opt = {});

struct SeparationProfile {
    double eps = 0.0;
    std::vector<TwoGraphSample> samples;
    double mean_separation = 0.0;
};

/// Separation sampled on an equispaced phi grid at fixed eps.  The initial
/// momenta come from the unperturbed resonant caustic.
SeparationProfile separation_profile(const TableFamily& family, int m, int n,
                                     double eps, std::size_t grid_size = 128,
                                     const SolveOptions& opt = {});

struct ConsistencyReport {
    int m = 0, n = 0;
    std::vector<double> eps_list;
    /// Per eps: max over the grid of |separation/eps - L1'(phi)| with L1'
    /// differentiated term-by-term from the potential's Fourier fit.
    std::vector<double> sup_err;
    double fitted_order = 0.0;  // p in sup_err ~ C eps^p (log-log regression)
    bool monotone = false;
    std::string verdict;        // "consistent", "inconsistent" or "degenerate"
};

ConsistencyReport melnikov_consistency(const TableFamily& family, int m, int n,
                                       const std::vector<double>& eps_list,
                                       std::size_t grid_size = 128,
                                       const SolveOptions& opt = {});

}  // namespace billiards::persistence

#endif
