#include "robinhex/robin1d.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace robinhex;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("interval eigenvalue values") {
    CHECK(interval_eigenvalue(0.0) == 0.0);
    CHECK(interval_eigenvalue(1.0) == doctest::Approx(1.7070529755509225).epsilon(1e-12));
    CHECK(interval_eigenvalue(10.0) == doctest::Approx(6.9046781811170939).epsilon(1e-12));
    CHECK(interval_eigenvalue(0.001) == doctest::Approx(0.0019996667111068784).epsilon(1e-12));
    CHECK(interval_eigenvalue(-1.0) == doctest::Approx(-2.3820978778908408).epsilon(1e-12));
    CHECK(interval_eigenvalue(-10.0) == doctest::Approx(-100.01814515039793).epsilon(1e-12));
    CHECK(interval_eigenvalue(-0.001) == doctest::Approx(-0.0020003333777820107).epsilon(1e-12));

    // Dirichlet limit.
    const double big = interval_eigenvalue(1e6);
    CHECK(std::abs(big - kPi * kPi) / (kPi * kPi) <= 1e-4);
}

TEST_CASE("defining-relation residuals") {
    for (double a : {1e-3, 1.0, 10.0, 1e6}) {
        CHECK(interval_eigenvalue_residual(a, interval_eigenvalue(a)) <= 1e-12);
    }
    for (double a : {-1e-3, -1.0, -10.0}) {
        CHECK(interval_eigenvalue_residual(a, interval_eigenvalue(a)) <= 1e-12);
    }
    // The tan form holds too away from the Dirichlet regime.
    for (double a : {1e-3, 1.0, 10.0}) {
        const double l = interval_eigenvalue(a);
        CHECK(std::abs(std::sqrt(l) * std::tan(0.5 * std::sqrt(l)) - a) <= 1e-11);
    }
}

TEST_CASE("eigenvalue branch ranges and monotonicity") {
    double prev = interval_eigenvalue(-20.0);
    for (double a = -19.0; a <= 20.0; a += 0.5) {
        const double l = interval_eigenvalue(a);
        CHECK(l > prev);
        if (a > 0.0) {
            CHECK(l > 0.0);
            CHECK(l < kPi * kPi);
        }
        if (a < 0.0) CHECK(l < 0.0);
        prev = l;
    }
}

TEST_CASE("scaling consistency") {
    for (double w : {0.3, 1.0, 2.5}) {
        for (double beta : {0.5, 1.0, 4.0}) {
            CHECK(interval_eigenvalue_scaled(w, beta) ==
                  doctest::Approx(interval_eigenvalue(w * beta) / (w * w)).epsilon(1e-14));
        }
    }
}

TEST_CASE("interval torsion") {
    CHECK(interval_torsion(6.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(1.0 / interval_torsion(6.0) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(interval_torsion(1e9) == doctest::Approx(1.0 / 12.0).epsilon(1e-8));
    CHECK_THROWS_AS(interval_torsion(0.0), std::invalid_argument);
    CHECK_THROWS_AS(interval_torsion(-1.0), std::invalid_argument);

    // tau^-1(I, alpha) <= 2*alpha with a deficit that grows with alpha.
    double prev_deficit = 0.0;
    for (double a : {0.01, 0.1, 1.0, 10.0}) {
        const double deficit = 2.0 * a - 1.0 / interval_torsion(a);
        CHECK(deficit >= prev_deficit);
        CHECK(deficit >= 0.0);
        prev_deficit = deficit;
    }

    // Small-width torsion limit: tau^-1(I, w*beta)/w -> 2*beta.
    for (double beta : {1.0, 5.0}) {
        for (double w : {1e-2, 1e-3, 1e-4}) {
            const double ratio = 1.0 / interval_torsion(w * beta) / w;
            CHECK(std::abs(ratio - 2.0 * beta) / (2.0 * beta) <= w * beta);
        }
    }
}

TEST_CASE("small width eigenvalue limit") {
    const auto seq1 = small_width_eig_limit(1.0, {1.0, 1e-1, 1e-2, 1e-3});
    CHECK(seq1.front() == doctest::Approx(1.7070529755509225).epsilon(1e-12));
    CHECK(std::abs(seq1.back() - 2.0) / 2.0 <= 0.01);

    const auto seq5 = small_width_eig_limit(5.0, {1e-3, 1e-4});
    CHECK(std::abs(seq5.back() - 10.0) / 10.0 <= 0.005);

    // Approach to the limit is monotone along decreasing widths.
    for (std::size_t i = 1; i < seq1.size(); ++i) {
        CHECK(std::abs(seq1[i] - 2.0) < std::abs(seq1[i - 1] - 2.0));
    }
}
