#include "billiards/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace billiards::persistence {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

struct ReturnValue {
    double g;   // lifted angular residual of the n-step return
    double y;   // momentum after the n-step return
};

ReturnValue n_step_return(const Table& table, int m, int n, double phi, double y) {
    PhasePoint p = from_conjugate(table, {phi, y});
    for (int i = 0; i < n; ++i) p = step(table, p);
    const ConjugatePoint out = to_conjugate(table, p);
    return {p.phi - phi - two_pi * m, out.y};
}

// Momentum of the counterclockwise caustic-tangent state at phi on the
// unperturbed ellipse.
double caustic_momentum(const Ellipse& base, const caustics::CausticParams& params,
                        double phi) {
    const PhasePoint p = caustics::caustic_phase_point(base.a(), base.b(), params, phi);
    return norm(base.tangent(phi)) * std::cos(p.theta);
}

}  // namespace

TableFamily::TableFamily(Ellipse base, FourierSeries profile, bool circle)
    : base_(base), profile_(std::move(profile)), circle_(circle) {}

TableFamily TableFamily::perturbed_ellipse(double a, double b, FourierSeries mu1) {
    return TableFamily(Ellipse(a, b), std::move(mu1), false);
}

TableFamily TableFamily::perturbed_circle(double r0, FourierSeries r1) {
    return TableFamily(Ellipse(r0, r0), std::move(r1), true);
}

std::unique_ptr<Table> TableFamily::table(double eps) const {
    if (circle_) {
        return std::make_unique<PerturbedCircle>(base_.a(), eps, profile_);
    }
    return std::make_unique<PerturbedEllipse>(base_, eps, profile_);
}

melnikov::PotentialProfile TableFamily::melnikov_profile(int m, int n,
                                                         std::size_t grid_size) const {
    if (circle_) {
        return melnikov::circle_profile(base_.a(), m, n, profile_, grid_size);
    }
    return melnikov::ellipse_profile(base_.a(), base_.b(), m, n, profile_, grid_size);
}

TwoGraphSample solve_upsilon(const Table& table, int m, int n, double phi,
                             double y_guess, double eta, const SolveOptions& opt) {
    auto eval = [&](double y) { return n_step_return(table, m, n, phi, y); };

    ReturnValue cur = eval(y_guess);
    double y_cur = y_guess;
    if (std::abs(cur.g) <= opt.g_tol) {
        return {phi, y_cur, cur.y, cur.y - y_cur};
    }

    double lo = y_guess - eta, hi = y_guess + eta;
    ReturnValue rlo = eval(lo), rhi = eval(hi);
    if (rlo.g * rhi.g > 0.0) {
        throw std::runtime_error(
            "solve_upsilon: no sign change of the return residual within the "
            "bracket; the resonant structure may be gone at this eps");
    }

    // Secant from (y_guess, previous endpoint), bisection whenever the
    // candidate escapes the bracket.
    double y_prev = (cur.g * rlo.g < 0.0) ? lo : hi;
    double g_prev = (cur.g * rlo.g < 0.0) ? rlo.g : rhi.g;
    for (int i = 0; i < opt.max_iter; ++i) {
        // Keep [lo, hi] a sign-change bracket.
        if (cur.g * rlo.g < 0.0) { hi = y_cur; rhi = cur; }
        else                     { lo = y_cur; rlo = cur; }

        double y_next;
        const double dg = cur.g - g_prev;
        if (dg != 0.0) {
            y_next = y_cur - cur.g * (y_cur - y_prev) / dg;
            if (!(y_next > lo && y_next < hi)) y_next = 0.5 * (lo + hi);
        } else {
            y_next = 0.5 * (lo + hi);
        }
        y_prev = y_cur;
        g_prev = cur.g;
        y_cur = y_next;
        cur = eval(y_cur);
        if (std::abs(cur.g) <= opt.g_tol) {
            return {phi, y_cur, cur.y, cur.y - y_cur};
        }
    }
    throw std::runtime_error("solve_upsilon: secant iteration did not converge");
}

SeparationProfile separation_profile(const TableFamily& family, int m, int n,
                                     double eps, std::size_t grid_size,
                                     const SolveOptions& opt) {
    if (grid_size < 16) {
        throw std::invalid_argument("separation_profile: grid too coarse");
    }
    const Ellipse& base = family.base();
    const double a = base.a(), b = base.b();
    const caustics::CausticParams resonant = caustics::resonant_lambda(a, b, m, n);

    // Bracket half-width from the momentum spacing of neighbouring caustics
    // on a lambda grid; a heuristic stand-in for the (unquantified) width in
    // which the perturbed root is unique.
    const double dl = b / 64.0;
    const double l_lo = std::max(resonant.lambda - dl, 0.5 * resonant.lambda);
    const double l_hi = std::min(resonant.lambda + dl, 0.5 * (resonant.lambda + b));
    const caustics::CausticParams below = caustics::caustic_params(a, b, l_lo);
    const caustics::CausticParams above = caustics::caustic_params(a, b, l_hi);

    const std::unique_ptr<Table> table = family.table(eps);

    SeparationProfile out;
    out.eps = eps;
    out.samples.reserve(grid_size);
    double sum = 0.0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double phi = two_pi * static_cast<double>(i) /
                           static_cast<double>(grid_size);
        const double y0 = caustic_momentum(base, resonant, phi);
        const double eta =
            0.2 * std::min(std::abs(caustic_momentum(base, below, phi) - y0),
                           std::abs(caustic_momentum(base, above, phi) - y0));
        const TwoGraphSample s = solve_upsilon(*table, m, n, phi, y0, eta, opt);
        sum += s.separation;
        out.samples.push_back(s);
    }
    out.mean_separation = sum / static_cast<double>(grid_size);
    return out;
}

ConsistencyReport melnikov_consistency(const TableFamily& family, int m, int n,
                                       const std::vector<double>& eps_list,
                                       std::size_t grid_size,
                                       const SolveOptions& opt) {
    if (eps_list.size() < 2) {
        throw std::invalid_argument("melnikov_consistency: need at least two eps values");
    }
    const melnikov::PotentialProfile potential = family.melnikov_profile(m, n);
    const FourierSeries l1_prime = potential.fit.derivative();

    ConsistencyReport report;
    report.m = m;
    report.n = n;
    report.eps_list = eps_list;
    for (double eps : eps_list) {
        if (eps == 0.0) {
            throw std::invalid_argument("melnikov_consistency: eps must be nonzero");
        }
        const SeparationProfile prof =
            separation_profile(family, m, n, eps, grid_size, opt);
        double sup = 0.0;
        for (const TwoGraphSample& s : prof.samples) {
            sup = std::max(sup, std::abs(s.separation / eps - l1_prime(s.phi)));
        }
        report.sup_err.push_back(sup);
    }

    report.monotone = true;
    for (std::size_t i = 1; i < report.sup_err.size(); ++i) {
        // eps_list is expected decreasing; so should be the errors.
        if (report.sup_err[i] > report.sup_err[i - 1]) report.monotone = false;
    }

    // Log-log least squares for the convergence order.
    const std::size_t N = eps_list.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    bool degenerate = false;
    for (std::size_t i = 0; i < N; ++i) {
        if (report.sup_err[i] < 1e-14) degenerate = true;
        const double x = std::log(std::abs(eps_list[i]));
        const double y = std::log(std::max(report.sup_err[i], 1e-300));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double denom = static_cast<double>(N) * sxx - sx * sx;
    report.fitted_order = (denom != 0.0) ? (static_cast<double>(N) * sxy - sx * sy) / denom : 0.0;

    if (degenerate) {
        report.verdict = "degenerate";
    } else if (report.fitted_order >= 0.7 && report.fitted_order <= 1.5 &&
               report.monotone) {
        report.verdict = "consistent";
    } else {
        report.verdict = "inconsistent";
    }
    return report;
}

}  // namespace billiards::persistence
