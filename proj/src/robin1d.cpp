#include "robinhex/robin1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace robinhex {

namespace {

constexpr double kPi = std::numbers::pi;

// Root of t*tan(t/2) = alpha for t = sqrt(lambda) in (0, pi); monotone in t.
double positive_branch(double alpha) {
    double lo = 0.0, hi = kPi;
    for (int it = 0; it < 200; ++it) {
        const double t = 0.5 * (lo + hi);
        if (t * std::tan(0.5 * t) > alpha)
            hi = t;
        else
            lo = t;
    }
    const double t = 0.5 * (lo + hi);
    return t * t;
}

// Root of s*tanh(s/2) = -alpha for s = sqrt(mu); bracket grown geometrically.
double negative_branch(double alpha) {
    const double target = -alpha;
    double lo = 0.0;
    double hi = std::sqrt(std::max(4.0 * alpha * alpha, 10.0));
    while (hi * std::tanh(0.5 * hi) < target) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double s = 0.5 * (lo + hi);
        if (s * std::tanh(0.5 * s) > target)
            hi = s;
        else
            lo = s;
    }
    const double s = 0.5 * (lo + hi);
    return -s * s;
}

}  // namespace

double interval_eigenvalue(double alpha) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("interval_eigenvalue: alpha not finite");
    if (alpha == 0.0) return 0.0;
    return alpha > 0.0 ? positive_branch(alpha) : negative_branch(alpha);
}

double interval_eigenvalue_residual(double alpha, double lambda) {
    if (alpha == 0.0) return std::abs(lambda);
    if (alpha > 0.0) {
        const double s = std::sin(0.5 * std::sqrt(lambda));
        return std::abs(alpha * alpha / (lambda + alpha * alpha) - s * s);
    }
    const double s = std::sqrt(-lambda);
    return std::abs(s * std::tanh(0.5 * s) + alpha);
}

double interval_eigenvalue_scaled(double length, double beta) {
    if (!(length > 0.0)) throw std::invalid_argument("interval_eigenvalue_scaled: length <= 0");
    return interval_eigenvalue(length * beta) / (length * length);
}

double interval_torsion(double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("interval_torsion: alpha must be positive (free-boundary regime unsupported)");
    return 1.0 / 12.0 + 0.5 / alpha;
}

std::vector<double> small_width_eig_limit(double beta, const std::vector<double>& widths) {
    if (!(beta > 0.0)) throw std::invalid_argument("small_width_eig_limit: beta must be positive");
    std::vector<double> out;
    out.reserve(widths.size());
    for (double w : widths) {
        if (!(w > 0.0)) throw std::invalid_argument("small_width_eig_limit: widths must be positive");
        out.push_back(interval_eigenvalue(w * beta) / w);
    }
    return out;
}

}  // namespace robinhex
