#include "robinhex/cheeger.hpp"
#include "robinhex/random_polygon.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace robinhex;

namespace {

constexpr double kPi = std::numbers::pi;

ConvexPolygon unit_square() {
    return ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

}  // namespace

TEST_CASE("closed form on the unit square") {
    const auto sq = unit_square();

    const CheegerResult p1 = cheeger_closed_form(sq, 1);
    CHECK(p1.constant == doctest::Approx(2.0 + std::sqrt(kPi)).epsilon(1e-14));
    CHECK(p1.radius == doctest::Approx(0.265079452134309425).epsilon(1e-13));
    CHECK(p1.valid_closed_form);

    const CheegerResult p2 = cheeger_closed_form(sq, 2);
    CHECK(p2.radius == doctest::Approx(0.130480441255235450).epsilon(1e-13));
    CHECK(p2.constant == doctest::Approx(3.88882522113227319).epsilon(1e-13));
    CHECK(p2.valid_closed_form);
}

TEST_CASE("closed form on the unit-area hexagon") {
    const ConvexPolygon hex = regular_ngon(6, 1.0);
    CHECK(cheeger_closed_form(hex, 1).constant ==
          doctest::Approx(3.63366356910971523).epsilon(1e-13));
    CHECK(cheeger_closed_form(hex, 2).constant ==
          doctest::Approx(3.67844962254509886).epsilon(1e-13));
    // |dH|^2 - 4(Lambda - pi) = 4 pi exactly, so r = (P - 2 sqrt(pi)) / (2(Lambda - pi)).
    const double per = perimeter(hex);
    const double lam = lambda_sum(hex) - kPi;
    CHECK(per * per - 4.0 * lam == doctest::Approx(4.0 * kPi).epsilon(1e-12));
    CHECK(cheeger_closed_form(hex, 1).radius ==
          doctest::Approx((per - 2.0 * std::sqrt(kPi)) / (2.0 * lam)).epsilon(1e-13));
}

TEST_CASE("cheeger_profile") {
    const auto sq = unit_square();
    CHECK(cheeger_profile(sq, 0.0, 1) == doctest::Approx(4.0));
    CHECK(cheeger_profile(sq, 0.0, 2) == doctest::Approx(4.0));

    const CheegerResult p2 = cheeger_closed_form(sq, 2);
    CHECK(cheeger_profile(sq, p2.radius, 2) == doctest::Approx(p2.constant).epsilon(1e-12));

    // Local minimum of the profile at the closed-form radius.
    const CheegerResult p1 = cheeger_closed_form(sq, 1);
    const double h = p1.constant;
    CHECK(cheeger_profile(sq, p1.radius * 1.02, 1) >= h);
    CHECK(cheeger_profile(sq, p1.radius * 0.98, 1) >= h);

    CHECK_THROWS_AS(cheeger_profile(sq, 0.75, 1), std::domain_error);
    CHECK_THROWS_AS(cheeger_profile(sq, -0.1, 1), std::domain_error);
}

TEST_CASE("oracle agrees with the closed form") {
    const auto sq = unit_square();
    CHECK(cheeger_oracle(sq, 1.0).constant ==
          doctest::Approx(2.0 + std::sqrt(kPi)).epsilon(1e-10));
    CHECK(cheeger_oracle(sq, 2.0).constant ==
          doctest::Approx(3.88882522113227319).epsilon(1e-10));

    // All edges of a long rectangle survive to the inradius, so the closed
    // form stays exact.
    const ConvexPolygon rect = ConvexPolygon::from_vertices({{0, 0}, {10, 0}, {10, 1}, {0, 1}});
    const CheegerResult closed = cheeger_closed_form(rect, 1);
    CHECK(closed.valid_closed_form);
    CHECK(cheeger_oracle(rect, 1.0).constant ==
          doctest::Approx(closed.constant).epsilon(1e-10));
}

TEST_CASE("result set is consistent and contained") {
    const auto sq = unit_square();
    for (int p : {1, 2}) {
        const CheegerResult r = cheeger_closed_form(sq, p);
        const auto m = rounded_measures(r.set);
        CHECK(m.perimeter / std::pow(m.area, p) == doctest::Approx(r.constant).epsilon(1e-10));
        CHECK(contains_polygon(sq, polygonize(r.set, 16), 1e-9));

        const CheegerResult o = cheeger_oracle(sq, p);
        const auto mo = rounded_measures(o.set);
        CHECK(mo.perimeter / std::pow(mo.area, p) == doctest::Approx(o.constant).epsilon(1e-10));
    }
}

TEST_CASE("chamfered square invalidates the closed form") {
    // A small chamfer edge drops out of the inner parallel body well before
    // the formula radius; the true Cheeger set is the square's one.
    const ConvexPolygon cut =
        ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 0.9}, {0.9, 1}, {0, 1}});
    const CheegerResult closed = cheeger_closed_form(cut, 1);
    CHECK_FALSE(closed.valid_closed_form);
    CHECK(closed.radius > edge_retention_radius(cut));

    const CheegerResult oracle = cheeger_oracle(cut, 1.0);
    CHECK(oracle.constant == doctest::Approx(2.0 + std::sqrt(kPi)).epsilon(1e-9));
    CHECK(oracle.constant < closed.constant);

    CHECK(cheeger_best(cut, 1).method == CheegerMethod::oracle);
    CHECK(cheeger_best(unit_square(), 1).method == CheegerMethod::closed_form);
}

TEST_CASE("oracle vs closed form on regular and random polygons") {
    for (int n = 3; n <= 12; ++n) {
        const ConvexPolygon p = regular_ngon(n, 1.0);
        for (int e : {1, 2}) {
            const CheegerResult c = cheeger_closed_form(p, e);
            REQUIRE(c.valid_closed_form);
            const CheegerResult o = cheeger_oracle(p, e);
            CHECK(std::abs(c.constant - o.constant) / c.constant <= 1e-8);
        }
    }
    RandomPolygonGenerator gen(42);
    int valid_cases = 0;
    for (int i = 0; i < 20; ++i) {
        const ConvexPolygon p = gen.next(4, 9);
        for (int e : {1, 2}) {
            const CheegerResult c = cheeger_closed_form(p, e);
            if (!c.valid_closed_form) continue;
            ++valid_cases;
            const CheegerResult o = cheeger_oracle(p, e);
            CHECK(std::abs(c.constant - o.constant) / c.constant <= 1e-8);
        }
    }
    CHECK(valid_cases > 10);
}

TEST_CASE("scaling law h_p(tP) = t^(1-2p) h_p(P)") {
    RandomPolygonGenerator gen(5);
    const ConvexPolygon p = gen.next(5, 8);
    for (int e : {1, 2}) {
        const double base = cheeger_closed_form(p, e).constant;
        for (double t : {0.5, 2.0, 7.0}) {
            const double expect = std::pow(t, 1.0 - 2.0 * e) * base;
            CHECK(cheeger_closed_form(scaled(p, t), e).constant ==
                  doctest::Approx(expect).epsilon(1e-10));
        }
    }
}

TEST_CASE("oracle is monotone under inclusion") {
    const auto sq = unit_square();
    const ConvexPolygon small = translated(scaled(sq, 0.6), {0.2, 0.2});
    const ConvexPolygon hex = translated(scaled(regular_ngon(6, 0.3), 1.0), {0.5, 0.5});
    for (double e : {1.0, 2.0}) {
        const double h_outer = cheeger_oracle(sq, e).constant;
        CHECK(cheeger_oracle(small, e).constant >= h_outer);
        CHECK(cheeger_oracle(hex, e).constant >= h_outer);
    }
}

TEST_CASE("phi and zeta") {
    CHECK(phi(4.0, 4.0) == doctest::Approx(3.88882522113227319).epsilon(1e-13));

    // Hexagon point of the admissible region gives gamma(6).
    const double x6 = 2.0 * std::sqrt(6.0 * std::tan(kPi / 6.0));
    const double y6 = 6.0 * std::tan(kPi / 6.0);
    CHECK(phi(x6, y6) == doctest::Approx(gamma_n(6)).epsilon(1e-13));

    // On the circumscribed boundary y = x^2/4, Phi collapses to zeta.
    for (double x : {3.6, 4.0, 5.5, 8.0}) {
        CHECK(phi(x, x * x / 4.0) == doctest::Approx(zeta(x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(phi(3.0, 4.0), std::domain_error);   // x^2 < 4y
    CHECK_THROWS_AS(phi(10.0, 3.0), std::domain_error);  // y < pi
}

TEST_CASE("phi monotone nonincreasing in y (finite differences)") {
    for (int i = 0; i < 40; ++i) {
        const double x = 3.6 + 0.2 * i;
        const double y_max = x * x / 4.0;
        for (int j = 1; j <= 10; ++j) {
            const double y = kPi + (y_max - kPi) * j / 11.0;
            const double d = 1e-5;
            const double fd = (phi(x, y + d) - phi(x, y - d)) / (2.0 * d);
            CHECK(fd <= 1e-9);
        }
    }
}

TEST_CASE("zeta nondecreasing for x >= 2 sqrt(pi)") {
    double prev = zeta(2.0 * std::sqrt(kPi));
    for (int i = 1; i <= 200; ++i) {
        const double x = 2.0 * std::sqrt(kPi) + 0.05 * i;
        const double z = zeta(x);
        CHECK(z >= prev * (1.0 - 1e-13));
        prev = z;
    }
}

TEST_CASE("gamma_n values and tail") {
    CHECK(gamma_n(3) == doctest::Approx(4.31761117855440499).epsilon(1e-14));
    CHECK(gamma_n(4) == doctest::Approx(3.88882522113227319).epsilon(1e-14));
    CHECK(gamma_n(6) == doctest::Approx(3.67844962254509886).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_n(2), std::invalid_argument);

    // Large-n tail decreases toward the disk value 2 sqrt(pi).
    const double disk = 2.0 * std::sqrt(kPi);
    CHECK(gamma_n(4096) == doctest::Approx(disk).epsilon(1e-6));
    double prev = gamma_n(3);
    for (int n = 4; n <= 64; ++n) {
        CHECK(gamma_n(n) < prev);
        CHECK(gamma_n(n) > disk);
        prev = gamma_n(n);
    }
}

TEST_CASE("gamma^(2/5) strictly decreasing and midpoint-convex") {
    auto g25 = [](int n) { return std::pow(gamma_n(n), 0.4); };
    for (int n = 3; n <= 62; ++n) {
        CHECK(g25(n + 1) < g25(n));
        CHECK(g25(n) + g25(n + 2) >= 2.0 * g25(n + 1) * (1.0 - 1e-13));
    }
}

TEST_CASE("gamma matches |P|^(3/2) h2 for regular polygons") {
    for (int n : {3, 4, 5, 6, 8, 12}) {
        const ConvexPolygon p = regular_ngon(n, 1.7);
        const double a = area(p);
        const double val = a * std::sqrt(a) * cheeger_closed_form(p, 2).constant;
        CHECK(val == doctest::Approx(gamma_n(n)).epsilon(1e-12));
    }
}

TEST_CASE("fk_deficit") {
    for (int n : {3, 4, 5, 6}) {
        CHECK(std::abs(fk_deficit(regular_ngon(n, 1.0))) <= 1e-10);
    }

    // Perturbing one vertex of the square outward makes the deficit positive.
    const ConvexPolygon bumped =
        ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1.05, 1.05}, {0, 1}});
    CHECK(fk_deficit(bumped) > 1e-4);

    RandomPolygonGenerator gen(9);
    for (int i = 0; i < 25; ++i) {
        CHECK(fk_deficit(gen.next(3, 10)) >= -1e-10);
    }
}

TEST_CASE("hex_constants") {
    const HexConstants hc = hex_constants();
    CHECK(hc.h1 == doctest::Approx(3.63366356910971523).epsilon(1e-13));
    CHECK(hc.h2 == doctest::Approx(3.67844962254509886).epsilon(1e-13));
    CHECK(hc.h2 == doctest::Approx(gamma_n(6)).epsilon(1e-13));
    CHECK(hc.h2 > hc.h1);
}
