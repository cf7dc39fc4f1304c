// Command-line front end: resonance reports, Poncelet polygons, first-order
// potentials of resonant caustics, constancy classification, finite-eps
// persistence checks, and phase portraits.  All numeric output is printed
// with 17 significant digits so identical runs are byte-identical.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "billiards/billiard_map.hpp"
#include "billiards/caustics.hpp"
#include "billiards/melnikov.hpp"
#include "billiards/persistence.hpp"
#include "billiards/table_spec.hpp"

namespace {

using namespace billiards;

constexpr double pi = std::numbers::pi;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << content;
}

std::string verdict_name(melnikov::Constancy c) {
    return c == melnikov::Constancy::Constant ? "constant" : "nonconstant";
}

std::string run_resonant(double a, double b, int m, int n) {
    const caustics::CausticParams p = caustics::resonant_lambda(a, b, m, n);
    const double rho_residual =
        std::abs(p.rho - static_cast<double>(m) / static_cast<double>(n));
    std::ostringstream os;
    os << "{\"m\": " << m << ", \"n\": " << n
       << ", \"lambda\": " << fmt(p.lambda)
       << ", \"k\": " << fmt(p.k)
       << ", \"delta\": " << fmt(p.delta)
       << ", \"K\": " << fmt(p.K)
       << ", \"rho_residual\": " << fmt(rho_residual) << "}\n";
    return os.str();
}

std::string polygon_csv(const caustics::PonceletPolygon& poly) {
    std::ostringstream os;
    os << "j,t,phi,x,y\n";
    for (std::size_t j = 0; j < poly.t.size(); ++j) {
        os << j << ',' << fmt(poly.t[j]) << ',' << fmt(poly.phi[j]) << ','
           << fmt(poly.q[j].x) << ',' << fmt(poly.q[j].y) << '\n';
    }
    return os.str();
}

std::string polygon_svg(double a, double b, const caustics::CausticParams& params,
                        const caustics::PonceletPolygon& poly) {
    const double margin = 0.08 * a;
    const double w = 2.0 * (a + margin);
    const double h = 2.0 * (b + margin);
    auto X = [&](double x) { return x + a + margin; };
    auto Y = [&](double y) { return (b + margin) - y; };  // flip to SVG axes

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(w)
       << ' ' << fmt(h) << "\">\n";

    auto ellipse_path = [&](double sa, double sb, const char* style) {
        os << "<polyline fill=\"none\" " << style << " points=\"";
        const int N = 512;
        for (int i = 0; i <= N; ++i) {
            const double t = 2.0 * pi * i / N;
            os << fmt(X(sa * std::cos(t))) << ',' << fmt(Y(sb * std::sin(t)));
            if (i != N) os << ' ';
        }
        os << "\"/>\n";
    };
    ellipse_path(a, b, "stroke=\"black\" stroke-width=\"0.02\"");
    const double ca = std::sqrt(a * a - params.lambda * params.lambda);
    const double cb = std::sqrt(b * b - params.lambda * params.lambda);
    ellipse_path(ca, cb, "stroke=\"steelblue\" stroke-width=\"0.015\" stroke-dasharray=\"0.05,0.03\"");

    os << "<polyline fill=\"none\" stroke=\"firebrick\" stroke-width=\"0.02\" points=\"";
    for (std::size_t j = 0; j < poly.q.size(); ++j) {
        os << fmt(X(poly.q[j].x)) << ',' << fmt(Y(poly.q[j].y));
        if (j + 1 != poly.q.size()) os << ' ';
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

std::string profile_csv(const melnikov::PotentialProfile& profile) {
    std::ostringstream os;
    os << "phi,L1\n";
    for (std::size_t i = 0; i < profile.grid.size(); ++i) {
        os << fmt(profile.grid[i]) << ',' << fmt(profile.values[i]) << '\n';
    }
    return os.str();
}

std::string classification_json(const melnikov::ClassificationReport& r) {
    std::ostringstream os;
    os << "{\"m\": " << r.m << ", \"n\": " << r.n
       << ", \"amplitude\": " << fmt(r.amplitude)
       << ", \"mean\": " << fmt(r.mean)
       << ", \"verdict\": \"" << verdict_name(r.verdict) << "\""
       << ", \"predicted_verdict\": \"" << verdict_name(r.predicted) << "\""
       << ", \"agree\": " << (r.agree ? "true" : "false") << "}\n";
    return os.str();
}

melnikov::PotentialProfile spec_profile(const TableSpec& spec, int m, int n,
                                        std::size_t grid) {
    if (spec.type == TableSpec::Type::PerturbedCircle) {
        return melnikov::circle_profile(spec.r0, m, n, spec.profile, grid);
    }
    if (spec.type == TableSpec::Type::PerturbedEllipse) {
        return melnikov::ellipse_profile(spec.a, spec.b, m, n, spec.profile, grid);
    }
    throw std::invalid_argument("exact ellipse has no perturbation profile");
}

melnikov::ClassificationReport spec_classification(const TableSpec& spec, int m,
                                                   int n, double tol,
                                                   std::size_t grid) {
    if (spec.type == TableSpec::Type::PerturbedCircle) {
        return melnikov::classify_circle(spec.r0, m, n, spec.profile, tol, grid);
    }
    if (spec.type == TableSpec::Type::PerturbedEllipse) {
        return melnikov::classify_ellipse(spec.a, spec.b, m, n, spec.profile, tol, grid);
    }
    throw std::invalid_argument("exact ellipse has no perturbation profile");
}

std::string persistence_json(const persistence::ConsistencyReport& r) {
    std::ostringstream os;
    os << "{\"m\": " << r.m << ", \"n\": " << r.n << ", \"eps_list\": [";
    for (std::size_t i = 0; i < r.eps_list.size(); ++i) {
        os << (i ? ", " : "") << fmt(r.eps_list[i]);
    }
    os << "], \"sup_err_per_eps\": [";
    for (std::size_t i = 0; i < r.sup_err.size(); ++i) {
        os << (i ? ", " : "") << fmt(r.sup_err[i]);
    }
    os << "], \"fitted_order\": " << fmt(r.fitted_order)
       << ", \"verdict\": \"" << r.verdict << "\"}\n";
    return os.str();
}

std::string persistence_csv(const persistence::TableFamily& family, int m, int n,
                            const std::vector<double>& eps_list,
                            std::size_t grid) {
    const melnikov::PotentialProfile potential = family.melnikov_profile(m, n);
    const FourierSeries l1_prime = potential.fit.derivative();
    std::ostringstream os;
    os << "eps,phi,upsilon,upsilon_star,separation,eps_times_L1prime\n";
    for (double eps : eps_list) {
        const persistence::SeparationProfile prof =
            persistence::separation_profile(family, m, n, eps, grid);
        for (const persistence::TwoGraphSample& s : prof.samples) {
            os << fmt(eps) << ',' << fmt(s.phi) << ',' << fmt(s.upsilon) << ','
               << fmt(s.upsilon_star) << ',' << fmt(s.separation) << ','
               << fmt(eps * l1_prime(s.phi)) << '\n';
        }
    }
    return os.str();
}

std::string phase_portrait_csv(const Table& table, int orbits, int steps) {
    std::ostringstream os;
    os << "orbit,step,phi_lifted,theta,y,x,y_cartesian\n";
    for (int i = 0; i < orbits; ++i) {
        const double theta0 = pi * (i + 1) / static_cast<double>(orbits + 1);
        PhasePoint p{0.0, theta0};
        for (int s = 0; s <= steps; ++s) {
            const ConjugatePoint c = to_conjugate(table, p);
            const Vec2 q = table.point(p.phi);
            os << i << ',' << s << ',' << fmt(p.phi) << ',' << fmt(p.theta) << ','
               << fmt(c.y) << ',' << fmt(q.x) << ',' << fmt(q.y) << '\n';
            if (s != steps) p = step(table, p);
        }
    }
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Resonant caustics of elliptic billiards: construction, "
                 "first-order break-up analysis, and direct simulation"};
    app.require_subcommand(1);

    // Shared option storage.
    double a = 2.0, b = 1.0, phi0 = 0.0, tol = 1e-8;
    int m = 1, n = 3, orbits = 20, steps = 500;
    std::size_t grid = 0;
    std::string table_path, out_path, format;
    std::vector<double> eps_list;

    auto* resonant = app.add_subcommand("resonant", "Solve the (m, n)-resonant caustic");
    resonant->add_option("--a", a, "semimajor axis")->required();
    resonant->add_option("--b", b, "semiminor axis")->required();
    resonant->add_option("--m", m, "winding number")->required();
    resonant->add_option("--n", n, "period")->required();
    resonant->add_option("--format", format, "json");
    resonant->add_option("--out", out_path, "output file (default stdout)");

    auto* poncelet = app.add_subcommand("poncelet", "Poncelet polygon of a resonant caustic");
    poncelet->add_option("--a", a)->required();
    poncelet->add_option("--b", b)->required();
    poncelet->add_option("--m", m)->required();
    poncelet->add_option("--n", n)->required();
    poncelet->add_option("--phi0", phi0, "starting boundary angle");
    poncelet->add_option("--format", format, "csv or svg");
    poncelet->add_option("--out", out_path);

    auto* melnikov_cmd = app.add_subcommand("melnikov", "First-order potential profile");
    melnikov_cmd->add_option("--table", table_path, "table spec JSON")->required();
    melnikov_cmd->add_option("--m", m)->required();
    melnikov_cmd->add_option("--n", n)->required();
    melnikov_cmd->add_option("--grid", grid, "profile grid size");
    melnikov_cmd->add_option("--format", format, "csv");
    melnikov_cmd->add_option("--out", out_path);

    auto* classify = app.add_subcommand("classify", "Constancy verdict for the potential");
    classify->add_option("--table", table_path)->required();
    classify->add_option("--m", m)->required();
    classify->add_option("--n", n)->required();
    classify->add_option("--grid", grid);
    classify->add_option("--tol", tol, "relative constancy tolerance");
    classify->add_option("--format", format, "json");
    classify->add_option("--out", out_path);

    auto* persistence_cmd = app.add_subcommand(
        "persistence", "Finite-eps separation of the two return graphs");
    persistence_cmd->add_option("--table", table_path)->required();
    persistence_cmd->add_option("--m", m)->required();
    persistence_cmd->add_option("--n", n)->required();
    persistence_cmd->add_option("--eps", eps_list, "eps values (default 1e-3 5e-4 2.5e-4)")
        ->delimiter(',');
    persistence_cmd->add_option("--grid", grid, "phi grid size (default 128)");
    persistence_cmd->add_option("--format", format, "json (report) or csv (raw samples)");
    persistence_cmd->add_option("--out", out_path);

    auto* portrait = app.add_subcommand("phase-portrait", "Iterate orbits and dump them");
    portrait->add_option("--table", table_path)->required();
    portrait->add_option("--orbits", orbits, "number of starting angles");
    portrait->add_option("--steps", steps, "bounces per orbit");
    portrait->add_option("--format", format, "csv");
    portrait->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }

    auto require_format = [&](std::initializer_list<const char*> allowed,
                              const char* def) {
        if (format.empty()) format = def;
        for (const char* f : allowed) {
            if (format == f) return;
        }
        throw std::invalid_argument("unsupported --format \"" + format +
                                    "\" for this command");
    };

    if (resonant->parsed()) {
        require_format({"json"}, "json");
        write_output(out_path, run_resonant(a, b, m, n));
    } else if (poncelet->parsed()) {
        require_format({"csv", "svg"}, "csv");
        const caustics::CausticParams p = caustics::resonant_lambda(a, b, m, n);
        const caustics::PonceletPolygon poly =
            caustics::poncelet_polygon(a, b, p, m, n, phi0);
        write_output(out_path, format == "svg" ? polygon_svg(a, b, p, poly)
                                               : polygon_csv(poly));
    } else if (melnikov_cmd->parsed()) {
        require_format({"csv"}, "csv");
        const TableSpec spec = TableSpec::from_file(table_path);
        write_output(out_path, profile_csv(spec_profile(spec, m, n, grid)));
    } else if (classify->parsed()) {
        require_format({"json"}, "json");
        const TableSpec spec = TableSpec::from_file(table_path);
        write_output(out_path,
                     classification_json(spec_classification(spec, m, n, tol, grid)));
    } else if (persistence_cmd->parsed()) {
        require_format({"json", "csv"}, "json");
        if (eps_list.empty()) eps_list = {1e-3, 5e-4, 2.5e-4};
        if (grid == 0) grid = 128;
        const TableSpec spec = TableSpec::from_file(table_path);
        const persistence::TableFamily family = spec.make_family();
        if (format == "csv") {
            write_output(out_path, persistence_csv(family, m, n, eps_list, grid));
        } else {
            write_output(out_path, persistence_json(persistence::melnikov_consistency(
                                       family, m, n, eps_list, grid)));
        }
    } else if (portrait->parsed()) {
        require_format({"csv"}, "csv");
        if (orbits < 1 || steps < 1) {
            throw std::invalid_argument("phase-portrait: orbits and steps must be positive");
        }
        const TableSpec spec = TableSpec::from_file(table_path);
        const std::unique_ptr<Table> table = spec.make_table();
        write_output(out_path, phase_portrait_csv(*table, orbits, steps));
    }
    return 0;
}

void print_error(const std::string& message, int code) {
    std::string escaped;
    for (char c : message) {
        if (c == '"' || c == '\\') { escaped += '\\'; escaped += c; }
        else if (c == '\n') escaped += ' ';
        else escaped += c;
    }
    std::cerr << "{\"error\": \"" << escaped << "\", \"exit_code\": " << code
              << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        print_error(e.what(), 2);
        return 2;
    } catch (const std::invalid_argument& e) {
        print_error(e.what(), 2);
        return 2;
    } catch (const std::exception& e) {
        print_error(e.what(), 1);
        return 1;
    }
}
