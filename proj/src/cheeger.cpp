#include "robinhex/cheeger.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace robinhex {

namespace {

constexpr double kPi = std::numbers::pi;

struct PolygonData {
    double per;
    double ar;
    double lambda;
};

PolygonData measure(const ConvexPolygon& p) {
    return PolygonData{perimeter(p), area(p), lambda_sum(p)};
}

RoundedBody body_at_radius(const ConvexPolygon& p, double r) {
    auto core = inner_parallel_body(p, r);
    if (!core) throw std::runtime_error("cheeger: inner parallel body vanished at optimum");
    return RoundedBody::from_polygon(*core, r);
}

bool closed_form_valid(const ConvexPolygon& p, double r) {
    if (r > edge_retention_radius(p) + 1e-12) return false;
    auto core = inner_parallel_body(p, r);
    return core && core->size() == p.size();
}

}  // namespace

CheegerResult cheeger_closed_form(const ConvexPolygon& p, int exponent) {
    if (exponent != 1 && exponent != 2)
        throw std::invalid_argument("cheeger_closed_form: exponent must be 1 or 2");
    const auto [per, ar, lambda] = measure(p);
    const double lam = lambda - kPi;
    double r = 0.0, h = 0.0;
    if (exponent == 1) {
        const double disc = per * per - 4.0 * lam * ar;
        if (disc < 0.0)
            throw std::runtime_error("cheeger_closed_form: negative discriminant (p=1)");
        r = (per - std::sqrt(disc)) / (2.0 * lam);
        h = 1.0 / r;
    } else {
        const double disc = per * per - 3.0 * ar * lam;
        if (disc < 0.0)
            throw std::runtime_error("cheeger_closed_form: negative discriminant (p=2)");
        r = ar / (per + std::sqrt(disc));
        const double num = per - 2.0 * r * lam;
        const double den = ar - r * r * lam;
        h = num / (den * den);
    }
    CheegerResult out;
    out.exponent = exponent;
    out.radius = r;
    out.constant = h;
    out.set = body_at_radius(p, r);
    out.method = CheegerMethod::closed_form;
    out.valid_closed_form = closed_form_valid(p, r);
    return out;
}

double cheeger_profile(const ConvexPolygon& p, double r, int exponent) {
    if (exponent != 1 && exponent != 2)
        throw std::invalid_argument("cheeger_profile: exponent must be 1 or 2");
    if (r < 0.0 || r > edge_retention_radius(p) * (1.0 + 1e-12))
        throw std::domain_error("cheeger_profile: r outside [0, edge-retention radius]");
    const auto [per, ar, lambda] = measure(p);
    const double lam = lambda - kPi;
    const double num = per - 2.0 * r * lam;
    const double den = ar - r * r * lam;
    return (exponent == 1) ? num / den : num / (den * den);
}

namespace {

// Quotient of the rounded body at radius r, +inf once the core vanishes.
class OracleObjective {
public:
    OracleObjective(const ConvexPolygon& p, double exponent)
        : verts_(p.vertices()), exponent_(exponent) {}

    double operator()(double r) {
        if (!clip(r)) return std::numeric_limits<double>::infinity();
        double core_per = 0.0, core_area = 0.0;
        const std::size_t m = core_.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point& a = core_[i];
            const Point& b = core_[(i + 1) % m];
            core_per += std::hypot(b.x - a.x, b.y - a.y);
            core_area += a.x * b.y - a.y * b.x;
        }
        core_area *= 0.5;
        const double per = core_per + 2.0 * kPi * r;
        const double ar = core_area + r * core_per + kPi * r * r;
        return per / std::pow(ar, exponent_);
    }

    RoundedBody body(double r) {
        if (!clip(r)) throw std::runtime_error("cheeger_oracle: empty body at optimum");
        return RoundedBody{core_, r};
    }

private:
    bool clip(double r) {
        core_ = verts_;
        const std::size_t m = verts_.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point& a = verts_[i];
            const Point& b = verts_[(i + 1) % m];
            const double len = std::hypot(b.x - a.x, b.y - a.y);
            const double nx = (b.y - a.y) / len;
            const double ny = -(b.x - a.x) / len;
            const double c = nx * a.x + ny * a.y - r;
            scratch_.clear();
            const std::size_t q = core_.size();
            for (std::size_t j = 0; j < q; ++j) {
                const Point& s = core_[j];
                const Point& t = core_[(j + 1) % q];
                const double ds = nx * s.x + ny * s.y - c;
                const double dt = nx * t.x + ny * t.y - c;
                if (ds <= 0.0) scratch_.push_back(s);
                if ((ds < 0.0 && dt > 0.0) || (ds > 0.0 && dt < 0.0)) {
                    const double u = ds / (ds - dt);
                    scratch_.push_back(Point{s.x + u * (t.x - s.x), s.y + u * (t.y - s.y)});
                }
            }
            core_.swap(scratch_);
            if (core_.size() < 3) return false;
        }
        double a2 = 0.0;
        for (std::size_t j = 0; j < core_.size(); ++j) {
            const Point& s = core_[j];
            const Point& t = core_[(j + 1) % core_.size()];
            a2 += s.x * t.y - s.y * t.x;
        }
        return a2 >= 2e-14;
    }

    const std::vector<Point>& verts_;
    double exponent_;
    std::vector<Point> core_;
    std::vector<Point> scratch_;
};

}  // namespace

CheegerResult cheeger_oracle(const ConvexPolygon& p, double exponent, int grid) {
    if (!(exponent >= 1.0)) throw std::invalid_argument("cheeger_oracle: exponent must be >= 1");
    if (grid < 64) throw std::invalid_argument("cheeger_oracle: grid must be at least 64");
    OracleObjective q(p, exponent);
    const double r_hi = inradius(p) * (1.0 - 1e-12);
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double r = r_hi * (i + 0.5) / grid;
        const double v = q(r);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    // Golden section inside the bracketing grid interval.
    double a = r_hi * (std::max(0, best - 1) + 0.5) / grid;
    double b = r_hi * (std::min(grid - 1, best + 1) + 0.5) / grid;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = q(c), fd = q(d);
    const double tol = 1e-12 * std::max(1.0, r_hi);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = q(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = q(d);
        }
    }
    const double r = 0.5 * (a + b);
    CheegerResult out;
    out.exponent = static_cast<int>(std::lround(exponent));
    out.radius = r;
    out.constant = q(r);
    out.set = q.body(r);
    out.method = CheegerMethod::oracle;
    out.valid_closed_form = false;
    return out;
}

CheegerResult cheeger_best(const ConvexPolygon& p, int exponent, int grid) {
    CheegerResult closed = cheeger_closed_form(p, exponent);
    if (closed.valid_closed_form) return closed;
    return cheeger_oracle(p, exponent, grid);
}

double phi(double x, double y) {
    const double tol = 1e-9;
    if (!(x * x >= 4.0 * y - tol) || !(y >= kPi - tol))
        throw std::domain_error("phi: (x, y) outside the admissible region x^2 >= 4y >= 4*pi");
    const double s = std::sqrt(std::max(0.0, x * x - 3.0 * y + 3.0 * kPi));
    const double num = x - 2.0 * (y - kPi) / (s + x);
    const double den = 1.0 - (y - kPi) / ((s + x) * (s + x));
    return num / (den * den);
}

double zeta(double x) {
    if (!(x >= 2.0 * std::sqrt(kPi) - 1e-9))
        throw std::domain_error("zeta: x must be at least 2 sqrt(pi)");
    const double s = std::sqrt(x * x + 12.0 * kPi);
    const double n = s + 2.0 * x;
    return n * n * n / (16.0 * (x * (s + x) + 4.0 * kPi));
}

double gamma_n(int n) {
    if (n < 3) throw std::invalid_argument("gamma_n: n must be at least 3");
    const double t = n * std::tan(kPi / n);
    const double s = std::sqrt(t + 3.0 * kPi);
    const double num = 2.0 * std::sqrt(t) + s;
    return num * num * num / (8.0 * (t + std::sqrt(t) * s + kPi));
}

double fk_deficit(const ConvexPolygon& p, int grid) {
    const CheegerResult h2 = cheeger_oracle(p, 2.0, grid);
    const double a = area(p);
    return a * std::sqrt(a) * h2.constant - gamma_n(static_cast<int>(p.size()));
}

HexConstants hex_constants() {
    const ConvexPolygon hex = regular_ngon(6, 1.0);
    return HexConstants{cheeger_closed_form(hex, 1).constant,
                        cheeger_closed_form(hex, 2).constant};
}

}  // namespace robinhex
