#include <doctest.h>

#include <cmath>
#include <random>

#include "minsurf/elliptic.hpp"

using namespace minsurf;

namespace {

// Independent oracle: the lattice sum over Z + iZ, resummed row by row
// (sum_m 1/(w - m)^2 = pi^2/sin^2(pi w)); purely trigonometric, no Laurent
// series or duplication involved.
Complex wp_oracle(Complex z) {
    const double pi = M_PI;
    auto row = [&](Complex w) {
        const Complex s = std::sin(pi * w);
        return pi * pi / (s * s);
    };
    Complex acc = row(z);
    for (int n = 1; n < 40; ++n) {
        acc += row(z - Complex{0.0, static_cast<double>(n)});
        acc += row(z + Complex{0.0, static_cast<double>(n)});
    }
    double c = pi * pi / 3.0;
    for (int n = 1; n < 40; ++n) {
        const double sh = std::sinh(pi * n);
        c -= 2.0 * pi * pi / (sh * sh);
    }
    return acc - c;
}

Complex wp_prime_oracle(Complex z) {
    const double pi = M_PI;
    auto row = [&](Complex w) {
        const Complex s = std::sin(pi * w);
        const Complex c = std::cos(pi * w);
        return -2.0 * pi * pi * pi * c / (s * s * s);
    };
    Complex acc = row(z);
    for (int n = 1; n < 40; ++n) {
        acc += row(z - Complex{0.0, static_cast<double>(n)});
        acc += row(z + Complex{0.0, static_cast<double>(n)});
    }
    return acc;
}

// Raw truncated double sum; slow convergence, used only to pin the cached
// constant at coarse tolerance through a second, dumber route.
double e1_raw_double_sum(int N) {
    const Complex z{0.5, 0.0};
    Complex acc = 1.0 / (z * z);
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            if (m == 0 && n == 0) continue;
            const Complex w{static_cast<double>(m), static_cast<double>(n)};
            acc += 1.0 / ((z - w) * (z - w)) - 1.0 / (w * w);
        }
    return acc.real();
}

Complex random_torus_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.05, 0.95);
    while (true) {
        const Complex z{u(rng), u(rng)};
        bool clear = true;
        const Complex torsion[4] = {{0.5, 0.0}, {0.0, 0.5}, {0.5, 0.5}, {0.0, 0.0}};
        for (const auto& t : torsion)
            if (std::abs(z - t) < 0.05) clear = false;
        if (clear) return z;
    }
}

EllipticFunction costa_gauss(int j, Complex sigma, const SquareTorus& T) {
    // sigma / (wp^j wp'), written inside the class.
    return ell_reciprocal(ell_mul(EllipticFunction::wp_power(j), EllipticFunction::wp_prime(), T), T)
        .scaled(sigma);
}

} // namespace

TEST_CASE("lemniscatic constant matches the raw lattice sum") {
    const double a = lemniscatic_e1();
    CHECK(a == doctest::Approx(e1_raw_double_sum(80)).epsilon(1e-4));
    // Half-period values sum to zero by construction: e2 = 0, e3 = -e1.
    const SquareTorus T = SquareTorus::unit();
    CHECK(T.e(1) + T.e(2) + T.e(3) == 0.0);
    CHECK(T.g2() == doctest::Approx(4.0 * a * a));
}

TEST_CASE("wp agrees with the row-resummed lattice sum") {
    const SquareTorus T = SquareTorus::unit();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const Complex z = random_torus_point(rng);
        const auto w = T.wp(z);
        const Complex po = wp_oracle(z);
        const Complex dpo = wp_prime_oracle(z);
        CHECK(std::abs(w.p - po) <= 1e-9 * std::abs(po));
        CHECK(std::abs(w.dp - dpo) <= 1e-8 * std::max(1.0, std::abs(dpo)));
    }
}

TEST_CASE("wp near the origin has leading term 1/z^2") {
    const SquareTorus T = SquareTorus::unit();
    const Complex z{1e-3, 0.0};
    CHECK(std::abs(z * z * T.wp(z).p - 1.0) < 1e-6);
}

TEST_CASE("wp at the real half-period equals a") {
    const SquareTorus T = SquareTorus::unit();
    CHECK(T.wp({0.5, 0.0}).p.real() == doctest::Approx(T.a()).epsilon(1e-10));
    CHECK(std::abs(T.wp({0.5, 0.0}).dp) < 1e-7);
    // Other half-periods: e2 = 0 and e3 = -a.
    CHECK(std::abs(T.wp({0.5, 0.5}).p) < 1e-9);
    CHECK(T.wp({0.0, 0.5}).p.real() == doctest::Approx(-T.a()).epsilon(1e-10));
}

TEST_CASE("wp periodicity") {
    const SquareTorus T = SquareTorus::unit();
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        const Complex z = random_torus_point(rng);
        const Complex a = T.wp(z).p;
        const Complex b = T.wp(z + Complex{1.0, 0.0}).p;
        const Complex c = T.wp(z + Complex{0.0, 1.0}).p;
        CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
        CHECK(std::abs(a - c) <= 1e-9 * std::abs(a));
    }
}

TEST_CASE("curve equation wp'^2 = 4wp^3 - g2 wp") {
    const SquareTorus T = SquareTorus::unit();
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const Complex z = random_torus_point(rng);
        const auto w = T.wp(z);
        const Complex lhs = w.dp * w.dp;
        const Complex rhs = 4.0 * w.p * w.p * w.p - T.g2() * w.p;
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(std::abs(lhs), std::abs(rhs)));
    }
}

TEST_CASE("scaled torus keeps the curve equation") {
    const SquareTorus T = SquareTorus::with_parameter(1.0);
    CHECK(T.a() == doctest::Approx(1.0));
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
        const Complex z = random_torus_point(rng) * T.omega1();
        const auto w = T.wp(z);
        const Complex lhs = w.dp * w.dp;
        const Complex rhs = 4.0 * w.p * w.p * w.p - 4.0 * w.p;
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("divisor of wp") {
    const SquareTorus T = SquareTorus::unit();
    auto d = ell_divisor(EllipticFunction::wp(), T);
    CHECK(d.degree() == 0);
    CHECK(d.order_at(TorusPoint::half_period(2)) == 2);
    CHECK(d.order_at(TorusPoint::lattice()) == -2);
    CHECK(d.entries.size() == 2);
}

TEST_CASE("divisor of wp'") {
    const SquareTorus T = SquareTorus::unit();
    auto d = ell_divisor(EllipticFunction::wp_prime(), T);
    CHECK(d.degree() == 0);
    for (int i = 1; i <= 3; ++i) CHECK(d.order_at(TorusPoint::half_period(i)) == 1);
    CHECK(d.order_at(TorusPoint::lattice()) == -3);
}

TEST_CASE("divisor of sigma/(wp wp')") {
    const SquareTorus T = SquareTorus::unit();
    auto g = costa_gauss(1, {2.0, 1.0}, T);
    auto d = ell_divisor(g, T);
    CHECK(d.degree() == 0);
    CHECK(d.order_at(TorusPoint::lattice()) == 5);
    CHECK(d.order_at(TorusPoint::half_period(2)) == -3);
    CHECK(d.order_at(TorusPoint::half_period(1)) == -1);
    CHECK(d.order_at(TorusPoint::half_period(3)) == -1);
}

TEST_CASE("degrees of the torus family") {
    const SquareTorus T = SquareTorus::unit();
    CHECK(ell_degree(EllipticFunction::wp(), T) == 2);
    for (int j = 1; j <= 6; ++j)
        CHECK(ell_degree(costa_gauss(j, {1.0, 0.0}, T), T) == 2 * j + 3);
}

TEST_CASE("derivatives inside the class") {
    const SquareTorus T = SquareTorus::unit();
    SUBCASE("wp -> wp'") {
        auto d = ell_derivative(EllipticFunction::wp(), T);
        CHECK(d.eps() == 1);
        CHECK(d.r().is_constant());
    }
    SUBCASE("wp^2 -> 2 wp wp'") {
        auto d = ell_derivative(ell_mul(EllipticFunction::wp(), EllipticFunction::wp(), T), T);
        std::mt19937_64 rng(2);
        const Complex z = random_torus_point(rng);
        const auto w = T.wp(z);
        CHECK(std::abs(d.eval(z, T) - 2.0 * w.p * w.dp) <= 1e-8 * std::abs(2.0 * w.p * w.dp));
    }
    SUBCASE("wp' -> 6 wp^2 - g2/2") {
        auto d = ell_derivative(EllipticFunction::wp_prime(), T);
        CHECK(d.eps() == 0);
        std::mt19937_64 rng(3);
        const Complex z = random_torus_point(rng);
        const auto w = T.wp(z);
        const Complex expect = 6.0 * w.p * w.p - T.g2() / 2.0;
        CHECK(std::abs(d.eval(z, T) - expect) <= 1e-8 * std::abs(expect));
    }
}

TEST_CASE("class derivative matches finite differences") {
    const SquareTorus T = SquareTorus::unit();
    std::mt19937_64 rng(17);
    std::vector<EllipticFunction> fns = {
        EllipticFunction::wp(),
        EllipticFunction::wp_prime(),
        costa_gauss(1, {0.3, 0.7}, T),
        ell_mul(EllipticFunction::wp(), EllipticFunction::wp_prime(), T),
    };
    for (const auto& f : fns) {
        const auto df = ell_derivative(f, T);
        for (int i = 0; i < 6; ++i) {
            const Complex z = random_torus_point(rng);
            const double h = 1e-5;
            const Complex fd = (f.eval(z + h, T) - f.eval(z - h, T)) / (2.0 * h);
            const Complex dv = df.eval(z, T);
            CHECK(std::abs(fd - dv) <= 1e-6 * std::max(1.0, std::abs(dv)));
        }
    }
}

TEST_CASE("torus ramification totals") {
    const SquareTorus T = SquareTorus::unit();
    SUBCASE("wp: total 4 at the 2-torsion points") {
        auto r = ell_ramification(EllipticFunction::wp(), T);
        CHECK(r.degree() == 4);
        for (int i = 1; i <= 3; ++i) CHECK(r.order_at(TorusPoint::half_period(i)) == 1);
        CHECK(r.order_at(TorusPoint::lattice()) == 1);
    }
    SUBCASE("wp': total 6") {
        CHECK(ell_ramification(EllipticFunction::wp_prime(), T).degree() == 6);
    }
    SUBCASE("sigma/(wp wp'): total 10") {
        CHECK(ell_ramification(costa_gauss(1, {1.0, 0.0}, T), T).degree() == 10);
    }
}

TEST_CASE("divisor degree vanishes across a suite of class members") {
    const SquareTorus T = SquareTorus::unit();
    std::vector<EllipticFunction> fns = {
        EllipticFunction::wp(),
        EllipticFunction::wp_prime(),
        EllipticFunction::wp_power(3),
        EllipticFunction::wp_power(-2),
        costa_gauss(1, {1.0, 2.0}, T),
        costa_gauss(2, {0.5, 0.0}, T),
        costa_gauss(3, {1.0, 0.0}, T),
        ell_mul(EllipticFunction::wp_power(2), EllipticFunction::wp_prime(), T),
        ell_add(EllipticFunction::wp_power(2), EllipticFunction::wp().scaled({-3.0, 1.0})),
        ell_sub(EllipticFunction::wp_power(-1), EllipticFunction::constant({1.0, 1.0})),
    };
    for (const auto& f : fns) {
        CHECK(ell_divisor(f, T).degree() == 0);
        CHECK(ell_ramification(f, T).degree() == 2 * ell_degree(f, T));
    }
}

TEST_CASE("torus fibers") {
    const SquareTorus T = SquareTorus::unit();
    auto g = costa_gauss(1, {1.5, 0.5}, T);
    SUBCASE("fiber over 0 sits at the lattice point") {
        auto fb = ell_fiber(g, SpherePoint::finite(0.0), T);
        REQUIRE(fb.size() == 1);
        CHECK(fb[0].point.kind() == TorusPoint::Kind::Lattice);
        CHECK(fb[0].multiplicity == 5);
    }
    SUBCASE("fiber over infinity sits at the half-periods") {
        auto fb = ell_fiber(g, SpherePoint::infinity(), T);
        int total = 0;
        for (const auto& fp : fb) total += fp.multiplicity;
        CHECK(total == 5);
        bool hp2 = false;
        for (const auto& fp : fb)
            if (fp.point.kind() == TorusPoint::Kind::HalfPeriod && fp.point.index() == 2) {
                hp2 = true;
                CHECK(fp.multiplicity == 3);
            }
        CHECK(hp2);
    }
    SUBCASE("generic fibers have d points with consistent branch values") {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 5; ++i) {
            const Complex b{0.3 + 0.1 * i, -0.2 + 0.05 * i};
            auto fb = ell_fiber(g, SpherePoint::finite(b), T);
            int total = 0;
            for (const auto& fp : fb) {
                total += fp.multiplicity;
                REQUIRE(fp.point.kind() == TorusPoint::Kind::Generic);
                const auto v = ell_value_at(g, fp.point, T);
                REQUIRE(v.is_finite());
                CHECK(std::abs(v.value() - b) <= 1e-6 * std::max(1.0, std::abs(b)));
            }
            CHECK(total == 5);
        }
    }
}

TEST_CASE("values at torus points by order arithmetic") {
    const SquareTorus T = SquareTorus::unit();
    auto g = costa_gauss(2, {1.0, 0.0}, T);
    CHECK(same_point(ell_value_at(g, TorusPoint::lattice(), T), SpherePoint::finite(0.0)));
    CHECK(ell_value_at(g, TorusPoint::half_period(1), T).is_infinity());
    CHECK(ell_value_at(g, TorusPoint::half_period(2), T).is_infinity());
    CHECK(same_point(ell_value_at(EllipticFunction::wp(), TorusPoint::half_period(1), T),
                     SpherePoint::finite(T.a()), 1e-6));
}

TEST_CASE("lattice point evaluation is rejected") {
    const SquareTorus T = SquareTorus::unit();
    CHECK_THROWS_AS(T.wp({0.0, 0.0}), numeric_error);
    CHECK_THROWS_AS(T.wp({1.0, 1.0}), numeric_error);
}
