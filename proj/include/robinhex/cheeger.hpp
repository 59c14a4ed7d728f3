#pragma once

#include "robinhex/geometry.hpp"

namespace robinhex {

enum class CheegerMethod { closed_form, oracle };

/// p-Cheeger constant of a convex polygon together with the optimal inner
/// rounded body. For closed-form results the reported constant is the value
/// of the corner-smoothing formula; it coincides with Per(set)/Area(set)^p
/// exactly when valid_closed_form is true (the rounding keeps every edge).
struct CheegerResult {
    int exponent = 1;            // p
    double radius = 0.0;         // r (p=1) or r2 (p=2)
    double constant = 0.0;       // h_p, units 1/length^(2p-1)
    RoundedBody set;
    CheegerMethod method = CheegerMethod::closed_form;
    bool valid_closed_form = false;
};

/// Corner-smoothing closed form. p=2: r2 = A / (P + sqrt(P^2 - 3A(L-pi))) and
/// h2 = (P - 2 r2 (L-pi)) / (A - r2^2 (L-pi))^2. p=1: r is the smaller root of
/// (L-pi) r^2 - P r + A = 0 and h = 1/r. L = lambda_sum(P).
CheegerResult cheeger_closed_form(const ConvexPolygon& p, int exponent);

/// f(r) = (P - 2r(L-pi)) / (A - r^2 (L-pi))^p, valid for 0 <= r up to the
/// edge-retention radius.
double cheeger_profile(const ConvexPolygon& p, double r, int exponent);

/// Brute-force minimization of Per(K_r)/Area(K_r)^p over r in (0, inradius),
/// K_r = inner_parallel_body(p, r) + disk(r): grid scan then golden section.
/// Fractional exponents are accepted (p >= 1).
CheegerResult cheeger_oracle(const ConvexPolygon& p, double exponent, int grid = 1024);

/// Closed form when its validity test passes, otherwise the oracle.
CheegerResult cheeger_best(const ConvexPolygon& p, int exponent, int grid = 1024);

/// Phi(x, y) with h2(P) |P|^(3/2) = Phi(I(P), Lambda(P)) on the admissible
/// region x^2 >= 4y >= 4*pi.
double phi(double x, double y);

/// zeta(x) = Phi(x, x^2/4), nondecreasing for x >= 2 sqrt(pi).
double zeta(double x);

/// Scale-invariant minimum |P|^(3/2) h2(P) over convex n-gons, attained by
/// the regular n-gon.
double gamma_n(int n);

/// |P|^(3/2) h2(P) - gamma(n) with h2 from the oracle; nonnegative up to
/// solver tolerance.
double fk_deficit(const ConvexPolygon& p, int grid = 1024);

struct HexConstants {
    double h1;  // Cheeger constant of the unit-area regular hexagon
    double h2;  // 2-Cheeger constant of the unit-area regular hexagon
};

HexConstants hex_constants();

}  // namespace robinhex
