#include "robinhex/bounds.hpp"

#include "robinhex/cheeger.hpp"
#include "robinhex/robin1d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace robinhex {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSandwichTol = 2e-3;

std::vector<Direction> sampled_directions(const ConvexPolygon& p) {
    std::vector<Direction> dirs;
    dirs.reserve(360 + p.size() + 1);
    for (int i = 0; i < 360; ++i) {
        const double a = kPi * i / 360.0;
        dirs.push_back(Direction{std::cos(a), std::sin(a)});
    }
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        dirs.push_back(Direction::of(b.y - a.y, a.x - b.x));
    }
    dirs.push_back(diameter(p).direction.perpendicular());
    return dirs;
}

bool leq_with_tol(double a, double b, double tol) {
    return a <= b + tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

double eig_upper(const ConvexPolygon& p, double beta) {
    if (beta == 0.0) throw std::invalid_argument("eig_upper: beta must be nonzero");
    return beta * perimeter(p) / area(p);
}

double eig_lower_sperb(const ConvexPolygon& p, double beta, double mu2) {
    if (!(beta > 0.0)) throw std::invalid_argument("eig_lower_sperb: beta must be positive");
    if (!(mu2 > 0.0)) throw std::invalid_argument("eig_lower_sperb: mu2 must be positive");
    return 1.0 / (1.0 / mu2 + area(p) / (beta * perimeter(p)));
}

double eig_lower_bossel(const ConvexPolygon& p, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("eig_lower_bossel: beta must be positive");
    return beta * cheeger_best(p, 1).constant - beta * beta;
}

double minimal_width(const ConvexPolygon& p) {
    double w = std::numeric_limits<double>::infinity();
    for (const auto& d : sampled_directions(p)) w = std::min(w, width(p, d));
    return w;
}

double eig_lower_width(const ConvexPolygon& p, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("eig_lower_width: beta must be positive");
    // lambda_1 >= w^-2 lambda_1(I, w beta) for every direction; the bound is
    // largest for the smallest width.
    const double w = minimal_width(p);
    return interval_eigenvalue(w * beta) / (w * w);
}

double tor_upper(const ConvexPolygon& p, double beta) {
    if (beta == 0.0) throw std::invalid_argument("tor_upper: beta must be nonzero");
    const double a = area(p);
    return beta * perimeter(p) / (a * a);
}

double tor_lower_keady(const ConvexPolygon& p, double beta, double sigma_inf) {
    if (!(beta > 0.0)) throw std::invalid_argument("tor_lower_keady: beta must be positive");
    if (!(sigma_inf > 0.0)) throw std::invalid_argument("tor_lower_keady: Sigma must be positive");
    const double a = area(p);
    return 1.0 / (sigma_inf + a * a / (beta * perimeter(p)));
}

double tor_lower_width(const ConvexPolygon& p, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("tor_lower_width: beta must be positive");
    double best = 0.0;
    for (const auto& d : sampled_directions(p)) {
        const double w = width(p, d);
        const double proj = width(p, d.perpendicular());
        const double bound = 1.0 / (interval_torsion(w * beta) * w * w * w * w * proj);
        best = std::max(best, bound);
    }
    return best;
}

double tor_lower_cheeger(const ConvexPolygon& p, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("tor_lower_cheeger: beta must be positive");
    return (beta * cheeger_best(p, 1).constant - beta * beta) / area(p);
}

BoundsReport bounds_report(const ConvexPolygon& p, double beta, double mesh_h,
                           const std::string& shape_id) {
    if (beta == 0.0) throw std::invalid_argument("bounds_report: beta must be nonzero");
    BoundsReport rep;
    rep.shape_id = shape_id;
    rep.beta = beta;
    rep.eig_upper = eig_upper(p, beta);
    rep.tor_upper = tor_upper(p, beta);
    rep.fem_eig = robin_eig(p, beta, mesh_h).extrapolated;

    auto flag = [&rep](bool ok, const std::string& what) {
        if (!ok) {
            rep.sandwich_ok = false;
            rep.violations.push_back(what);
        }
    };

    if (beta > 0.0) {
        rep.mu2 = neumann_mu2(p, mesh_h).extrapolated;
        rep.sigma_inf = sigma_infty(p, mesh_h).extrapolated;
        rep.fem_torsion_inv = 1.0 / robin_torsion(p, beta, mesh_h).extrapolated;

        rep.eig_lower_sperb = eig_lower_sperb(p, beta, *rep.mu2);
        rep.eig_lower_bossel = eig_lower_bossel(p, beta);
        rep.eig_lower_width = eig_lower_width(p, beta);
        rep.tor_lower_keady = tor_lower_keady(p, beta, *rep.sigma_inf);
        rep.tor_lower_width = tor_lower_width(p, beta);
        rep.tor_lower_cheeger = tor_lower_cheeger(p, beta);

        flag(leq_with_tol(*rep.eig_lower_sperb, rep.fem_eig, kSandwichTol), "sperb > fem_eig");
        flag(leq_with_tol(*rep.eig_lower_bossel, rep.fem_eig, kSandwichTol), "bossel > fem_eig");
        flag(leq_with_tol(*rep.eig_lower_width, rep.fem_eig, kSandwichTol), "width > fem_eig");
        flag(leq_with_tol(*rep.tor_lower_keady, *rep.fem_torsion_inv, kSandwichTol),
             "keady > fem_torsion");
        flag(leq_with_tol(*rep.tor_lower_width, *rep.fem_torsion_inv, kSandwichTol),
             "tor_width > fem_torsion");
        flag(leq_with_tol(*rep.tor_lower_cheeger, *rep.fem_torsion_inv, kSandwichTol),
             "tor_cheeger > fem_torsion");
        flag(leq_with_tol(*rep.fem_torsion_inv, rep.tor_upper, kSandwichTol),
             "fem_torsion > tor_upper");
    }
    flag(leq_with_tol(rep.fem_eig, rep.eig_upper, kSandwichTol), "fem_eig > eig_upper");
    return rep;
}

std::vector<AsymptoticRow> asymptotic_check(const ConvexPolygon& p, SpectralFunctional f,
                                            const std::vector<double>& betas, double mesh_h) {
    std::vector<AsymptoticRow> rows;
    rows.reserve(betas.size());
    const double a = area(p);
    const double per = perimeter(p);
    const double target = (f == SpectralFunctional::eigenvalue) ? per / a : per / (a * a);
    for (double beta : betas) {
        double value;
        if (f == SpectralFunctional::eigenvalue) {
            value = robin_eig(p, beta, mesh_h).extrapolated;
        } else {
            if (!(beta > 0.0))
                throw std::invalid_argument("asymptotic_check: torsion needs beta > 0");
            value = 1.0 / robin_torsion(p, beta, mesh_h).extrapolated;
        }
        const double ratio = value / beta;
        rows.push_back(AsymptoticRow{beta, ratio, target, std::abs(ratio - target)});
    }
    return rows;
}

}  // namespace robinhex
